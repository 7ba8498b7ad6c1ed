#include "aro/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "aro/adjustable.hpp"
#include "aro/affine.hpp"
#include "aro/construct.hpp"
#include "aro/fastaffine.hpp"

namespace aro::runner {

namespace {

using nlohmann::json;

bool log_enabled() {
  const char* v = std::getenv("ARO_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::fputs((msg + "\n").c_str(), stderr);
}

lp::LpOptions options_with_cap(double time_cap_s) {
  lp::LpOptions opts;
  if (time_cap_s > 0.0) {
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(time_cap_s));
  }
  return opts;
}

json certificate_for_budget_construction(const construct::ConstructResult& res,
                                         const PolicyReport& rep) {
  json cert;
  cert["beta"] = res.state.beta;
  cert["opt"] = res.state.opt;
  cert["inexpensive_count"] = res.state.inexpensive.size();
  cert["static_cost"] = res.state.static_cost;
  cert["linear_cost_bound"] = res.state.linear_cost_bound;
  cert["worst_case_objective"] = rep.worst_case_objective;
  cert["max_violation"] =
      std::max(rep.max_constraint_violation, rep.max_nonnegativity_violation);
  return cert;
}

}  // namespace

RunRecord run_method(const GeneratedProblem& gp, const std::string& instance_id,
                     const std::string& method, double time_cap_s) {
  RunRecord rec;
  rec.instance_id = instance_id;
  rec.method = method;
  const auto opts = options_with_cap(time_cap_s);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (method == "affine") {
      auto res = affine::solve_optimal_affine(gp.instance, gp.set, opts);
      rec.objective = res.z_aff;
      rec.status = "Optimal";
    } else if (method == "fast") {
      if (!gp.instance.b_nonnegative) {
        throw Error(Errc::MethodMismatch, "fast affine needs a nonnegative recourse matrix");
      }
      auto res = fastaffine::solve_fast_affine(gp.instance, gp.set, opts);
      rec.objective = res.z_alg;
      rec.status = "Optimal";
    } else if (method == "adjustable") {
      auto res = adjustable::solve_adjustable(gp.instance, gp.set, opts);
      rec.objective = res.z_ar;
      rec.status = "Optimal";
      json cert;
      cert["master_rounds"] = res.master_rounds;
      rec.certificate_json = cert.dump();
    } else if (method == "static") {
      auto res = adjustable::solve_static(gp.instance, Vector::Ones(gp.instance.m()), opts);
      rec.objective = res.cost;
      rec.status = "Optimal";
    } else if (method == "construct") {
      if (!gp.set.is_budget()) {
        throw Error(Errc::MethodMismatch, "construct needs a single budget set");
      }
      auto adj = adjustable::solve_adjustable(gp.instance, gp.set, opts);
      auto res = construct::construct_affine_budget(gp.instance, gp.set, adj.x_star, adj.z_ar);
      auto rep = evaluate_policy(gp.instance, gp.set, res.policy);
      rec.objective = rep.worst_case_objective;
      rec.status = "Optimal";
      rec.certificate_json = certificate_for_budget_construction(res, rep).dump();
    } else if (method == "construct-disjoint") {
      const auto* inter = gp.set.as_intersection();
      if (inter == nullptr || !inter->disjoint) {
        throw Error(Errc::MethodMismatch, "construct-disjoint needs disjoint budgeted blocks");
      }
      auto adj = adjustable::solve_adjustable(gp.instance, gp.set, opts);
      auto res = construct::construct_affine_disjoint(gp.instance, gp.set, adj.x_star);
      auto rep = evaluate_policy(gp.instance, gp.set, res.policy);
      rec.objective = rep.worst_case_objective;
      rec.status = "Optimal";
      json cert;
      cert["beta"] = res.state.beta;
      cert["nu_L"] = res.state.nu_L;
      cert["opt"] = adj.z_ar;
      cert["inexpensive_count"] = res.state.inexpensive.size();
      cert["static_cost"] = res.state.static_cost;
      cert["linear_cost_bound"] = res.state.linear_cost_bound;
      cert["worst_case_objective"] = rep.worst_case_objective;
      cert["max_violation"] =
          std::max(rep.max_constraint_violation, rep.max_nonnegativity_violation);
      rec.certificate_json = cert.dump();
    } else {
      throw Error(Errc::MethodMismatch, "unknown method '" + method + "'");
    }
  } catch (const Error& e) {
    rec.status = errc_name(e.code);
    rec.error_detail = e.what();
  }
  rec.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::string record_to_json(const RunRecord& rec) {
  json doc;
  doc["instance"] = rec.instance_id;
  doc["method"] = rec.method;
  if (std::isfinite(rec.objective)) {
    std::ostringstream oss;
    oss.precision(9);
    oss << rec.objective;
    doc["objective"] = json::parse(oss.str());
  } else {
    doc["objective"] = nullptr;
  }
  doc["time_s"] = std::round(rec.time_s * 1000.0) / 1000.0;
  doc["status"] = rec.status;
  if (!rec.certificate_json.empty()) doc["certificate"] = json::parse(rec.certificate_json);
  if (!rec.error_detail.empty()) doc["error"] = rec.error_detail;
  return doc.dump(2) + "\n";
}

std::vector<BenchRow> run_bench(const std::vector<Family>& families,
                                const std::vector<int>& m_list, int seeds_per_m,
                                std::uint64_t base_seed, double time_cap_s, int jobs) {
  struct Task {
    size_t row;
    Family family;
    int m;
    std::uint64_t seed;
  };
  struct TaskResult {
    bool ok = false;
    std::string error;
    double t_aff = 0.0, t_alg = 0.0, ratio = 0.0;
  };

  std::vector<BenchRow> rows;
  std::vector<Task> tasks;
  for (const Family f : families) {
    for (const int m : m_list) {
      BenchRow row;
      row.family = family_name(f);
      row.m = m;
      row.seeds = seeds_per_m;
      for (int s = 0; s < seeds_per_m; ++s) {
        tasks.push_back({rows.size(), f, m, base_seed + static_cast<std::uint64_t>(s)});
      }
      rows.push_back(std::move(row));
    }
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const Task& task = tasks[t];
      TaskResult& out = results[t];
      try {
        const auto gp = generate({task.family, task.m, task.seed});
        const auto opts = options_with_cap(time_cap_s);
        auto aff = affine::solve_optimal_affine(gp.instance, gp.set, opts);
        auto alg = fastaffine::solve_fast_affine(gp.instance, gp.set, opts);
        out.t_aff = aff.solve_time_s;
        out.t_alg = alg.solve_time_s;
        out.ratio = alg.z_alg / aff.z_aff;
        out.ok = true;
        log_line("bench " + std::string(family_name(task.family)) + " m=" +
                 std::to_string(task.m) + " seed=" + std::to_string(task.seed) +
                 " ratio=" + std::to_string(out.ratio));
      } catch (const Error& e) {
        out.error = errc_name(e.code);
      } catch (const std::exception& e) {
        out.error = e.what();
      }
    }
  };
  const int nworkers = std::max(1, jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nworkers - 1));
  for (int i = 1; i < nworkers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<int> counts(rows.size(), 0);
  std::vector<double> t_aff(rows.size(), 0.0), t_alg(rows.size(), 0.0);
  std::vector<double> rsum(rows.size(), 0.0), rmax(rows.size(), 0.0);
  for (size_t t = 0; t < tasks.size(); ++t) {
    const size_t r = tasks[t].row;
    if (!results[t].ok) {
      if (rows[r].error.empty()) rows[r].error = results[t].error;
      continue;
    }
    ++counts[r];
    t_aff[r] += results[t].t_aff;
    t_alg[r] += results[t].t_alg;
    rsum[r] += results[t].ratio;
    rmax[r] = std::max(rmax[r], results[t].ratio);
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (counts[r] == rows[r].seeds && rows[r].error.empty()) {
      rows[r].t_aff_s = t_aff[r] / counts[r];
      rows[r].t_alg_s = t_alg[r] / counts[r];
      rows[r].ratio_mean = rsum[r] / counts[r];
      rows[r].ratio_max = rmax[r];
    } else if (rows[r].error.empty()) {
      rows[r].error = "incomplete";
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,m,T_aff_s,T_alg_s,ratio_mean,ratio_max,seeds,error\n";
  auto fmt_time = [](const std::optional<double>& v) {
    if (!v) return std::string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return std::string(buf);
  };
  auto fmt_ratio = [](const std::optional<double>& v) {
    if (!v) return std::string();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", *v);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    out << r.family << ',' << r.m << ',' << fmt_time(r.t_aff_s) << ',' << fmt_time(r.t_alg_s)
        << ',' << fmt_ratio(r.ratio_mean) << ',' << fmt_ratio(r.ratio_max) << ',' << r.seeds
        << ',' << r.error << '\n';
  }
  return out.str();
}

std::vector<GapDemoRow> gap_demo(const std::vector<int>& m_list) {
  std::vector<GapDemoRow> rows;
  for (const int m : m_list) {
    const auto gp = gen_lot_sizing(m);
    GapDemoRow row;
    row.m = m;
    row.z_ar = adjustable::solve_adjustable(gp.instance, gp.set).z_ar;
    row.z_aff = affine::solve_optimal_affine(gp.instance, gp.set).z_aff;
    row.expected_aff = m / 2.0 - 1.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aro::runner
