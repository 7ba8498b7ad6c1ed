#pragma once

#include <string>

#include "aro/instances.hpp"
#include "aro/model.hpp"

namespace aro {

/// Instance document:
///   {"m": int, "n": int, "A": [[..]], "B": [[..]], "c": [..], "d": [..],
///    "X": {"F": [[..]], "g": [..], "upper": [..] | null},
///    "U": {"type": "budget" | "intersection" | "polyhedral", ...}}
/// Matrices are row-major arrays of rows; all numbers decimal.
std::string problem_to_json(const GeneratedProblem& gp);
GeneratedProblem problem_from_json(const std::string& text);

void save_problem(const GeneratedProblem& gp, const std::string& path);
GeneratedProblem load_problem(const std::string& path);

}  // namespace aro
