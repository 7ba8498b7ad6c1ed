#pragma once

#include <cstdint>
#include <string>

#include "aro/model.hpp"

namespace aro {

enum class Family { GaussianU1, GaussianU2, LotSizing };

Family family_from_string(const std::string& name);
const char* family_name(Family f);

struct GenSpec {
  Family family = Family::GaussianU1;
  int m = 0;
  std::uint64_t seed = 0;
};

struct GeneratedProblem {
  TwoStageInstance instance;
  UncertaintySet set;
};

/// Random dense instances with A = B = I + G (G folded-normal scaled by
/// 1/sqrt(m)), unit costs, X the nonnegative orthant, paired with either the
/// cardinality-style set U1 or the weighted budget set U2.
GeneratedProblem gen_gaussian(const GenSpec& spec);

/// Bipartite lot-sizing family with zero-cost arcs from the first node half
/// to the second, unit capacities and budget k = m/2.  The recourse matrix
/// has -1 entries, so b_nonnegative is false.
GeneratedProblem gen_lot_sizing(int m);

GeneratedProblem generate(const GenSpec& spec);

}  // namespace aro
