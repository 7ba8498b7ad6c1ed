#pragma once

#include <stdexcept>
#include <string>

namespace aro {

/// Machine-readable error codes surfaced through exceptions and the CLI.
enum class Errc {
  MalformedProblem,
  NumericalFailure,
  DimensionMismatch,
  InfeasibleModel,
  UncoverableComponent,
  TooLarge,
  RecourseInfeasible,
  ConditionOneViolated,
  RoundingExhausted,
  SamplingExhausted,
  NotPermutationInvariant,
  DegenerateColumn,
  InvalidSpec,
  MethodMismatch,
  TimeLimit,
  IoError,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedProblem: return "MalformedProblem";
    case Errc::NumericalFailure: return "NumericalFailure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InfeasibleModel: return "InfeasibleModel";
    case Errc::UncoverableComponent: return "UncoverableComponent";
    case Errc::TooLarge: return "TooLarge";
    case Errc::RecourseInfeasible: return "RecourseInfeasible";
    case Errc::ConditionOneViolated: return "ConditionOneViolated";
    case Errc::RoundingExhausted: return "RoundingExhausted";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::NotPermutationInvariant: return "NotPermutationInvariant";
    case Errc::DegenerateColumn: return "DegenerateColumn";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::MethodMismatch: return "MethodMismatch";
    case Errc::TimeLimit: return "TimeLimit";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace aro
