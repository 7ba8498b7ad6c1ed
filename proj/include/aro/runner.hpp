#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aro/instances.hpp"
#include "aro/model.hpp"

namespace aro::runner {

struct RunRecord {
  std::string instance_id;
  std::string method;
  std::string status;  // "Optimal" or a machine-readable error code
  double objective = std::numeric_limits<double>::quiet_NaN();
  double time_s = 0.0;
  std::string certificate_json;  // method-specific fields, empty when absent
  std::string error_detail;
};

/// Dispatches one solve.  Methods: affine, fast, adjustable, static,
/// construct, construct-disjoint.  The static method covers the pointwise
/// maximum of the set (the all-ones target).  The construct methods obtain
/// (x*, OPT) from the adjustable oracle first.
RunRecord run_method(const GeneratedProblem& gp, const std::string& instance_id,
                     const std::string& method, double time_cap_s);

std::string record_to_json(const RunRecord& rec);

struct BenchRow {
  std::string family;
  int m = 0;
  std::optional<double> t_aff_s;
  std::optional<double> t_alg_s;
  std::optional<double> ratio_mean;
  std::optional<double> ratio_max;
  int seeds = 0;
  std::string error;
};

/// One row per (family, m); per-seed tasks run in a pool of `jobs` workers.
/// Seed i of a cell uses base_seed + i.  Failures annotate the row instead of
/// aborting the sweep.
std::vector<BenchRow> run_bench(const std::vector<Family>& families,
                                const std::vector<int>& m_list, int seeds_per_m,
                                std::uint64_t base_seed, double time_cap_s, int jobs);

/// Header: family,m,T_aff_s,T_alg_s,ratio_mean,ratio_max,seeds,error
std::string bench_csv(const std::vector<BenchRow>& rows);

struct GapDemoRow {
  int m = 0;
  double z_ar = 0.0;
  double z_aff = 0.0;
  double expected_aff = 0.0;  // m/2 - 1
};

std::vector<GapDemoRow> gap_demo(const std::vector<int>& m_list);

}  // namespace aro::runner
