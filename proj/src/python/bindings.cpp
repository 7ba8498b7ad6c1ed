#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aro/adjustable.hpp"
#include "aro/affine.hpp"
#include "aro/construct.hpp"
#include "aro/covering.hpp"
#include "aro/fastaffine.hpp"
#include "aro/json_io.hpp"
#include "aro/reduce.hpp"
#include "aro/runner.hpp"

namespace py = pybind11;
using namespace aro;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-stage adjustable robust optimization over budgeted uncertainty sets";

  py::register_exception<Error>(m, "AroError");

  py::class_<FirstStageSet>(m, "FirstStageSet")
      .def(py::init<>())
      .def_readwrite("F", &FirstStageSet::F)
      .def_readwrite("g", &FirstStageSet::g)
      .def_readwrite("upper", &FirstStageSet::upper)
      .def_property_readonly("is_cone", &FirstStageSet::is_cone)
      .def_static("nonnegative_orthant", &FirstStageSet::nonnegative_orthant);

  py::class_<TwoStageInstance>(m, "TwoStageInstance")
      .def(py::init<>())
      .def_readwrite("A", &TwoStageInstance::A)
      .def_readwrite("B", &TwoStageInstance::B)
      .def_readwrite("b_nonnegative", &TwoStageInstance::b_nonnegative)
      .def_readwrite("c", &TwoStageInstance::c)
      .def_readwrite("d", &TwoStageInstance::d)
      .def_readwrite("first_stage_set", &TwoStageInstance::first_stage_set)
      .def_property_readonly("m", &TwoStageInstance::m)
      .def_property_readonly("n", &TwoStageInstance::n)
      .def("validate", &TwoStageInstance::validate);

  py::class_<UncertaintySet>(m, "UncertaintySet")
      .def_static("budget", &UncertaintySet::budget)
      .def_static("clt", &UncertaintySet::clt)
      .def_static("polyhedral", &UncertaintySet::polyhedral)
      .def_static(
          "intersection",
          [](Eigen::Index mm, const std::vector<std::pair<std::vector<int>, Vector>>& blocks) {
            std::vector<BudgetBlock> bs;
            for (const auto& [sup, w] : blocks) bs.push_back({sup, w});
            return UncertaintySet::intersection(mm, std::move(bs));
          })
      .def_property_readonly("dim", &UncertaintySet::dim)
      .def("contains", &UncertaintySet::contains, py::arg("h"), py::arg("tol") = 1e-9);

  py::class_<AffinePolicy>(m, "AffinePolicy")
      .def(py::init<>())
      .def_readwrite("x", &AffinePolicy::x)
      .def_readwrite("P", &AffinePolicy::P)
      .def_readwrite("q", &AffinePolicy::q);

  py::class_<PolicyReport>(m, "PolicyReport")
      .def_readonly("worst_case_objective", &PolicyReport::worst_case_objective)
      .def_readonly("max_constraint_violation", &PolicyReport::max_constraint_violation)
      .def_readonly("max_nonnegativity_violation", &PolicyReport::max_nonnegativity_violation)
      .def_readonly("objective_witness", &PolicyReport::objective_witness)
      .def_readonly("constraint_witness", &PolicyReport::constraint_witness);

  m.def("as_polyhedron", &as_polyhedron);
  m.def(
      "max_linear",
      [](const UncertaintySet& u, const Vector& a) {
        auto res = max_linear(u, a);
        return py::make_tuple(res.value, res.argmax);
      },
      py::arg("set"), py::arg("a"));
  m.def("evaluate_policy", &evaluate_policy, py::arg("instance"), py::arg("set"),
        py::arg("policy"));

  py::class_<GeneratedProblem>(m, "GeneratedProblem")
      .def_readwrite("instance", &GeneratedProblem::instance)
      .def_readwrite("set", &GeneratedProblem::set);

  m.def(
      "generate",
      [](const std::string& family, int mm, std::uint64_t seed) {
        return generate({family_from_string(family), mm, seed});
      },
      py::arg("family"), py::arg("m"), py::arg("seed") = 0);
  m.def("load_problem", &load_problem);
  m.def("save_problem", &save_problem);
  m.def("problem_to_json", &problem_to_json);

  py::class_<affine::AffineSolveResult>(m, "AffineSolveResult")
      .def_readonly("z_aff", &affine::AffineSolveResult::z_aff)
      .def_readonly("policy", &affine::AffineSolveResult::policy)
      .def_readonly("solve_time_s", &affine::AffineSolveResult::solve_time_s)
      .def_readonly("lp_iterations", &affine::AffineSolveResult::lp_iterations);
  m.def(
      "solve_optimal_affine",
      [](const TwoStageInstance& inst, const UncertaintySet& u) {
        return affine::solve_optimal_affine(inst, u);
      },
      py::arg("instance"), py::arg("set"));

  py::class_<fastaffine::FastAffineResult>(m, "FastAffineResult")
      .def_readonly("z_alg", &fastaffine::FastAffineResult::z_alg)
      .def_readonly("policy", &fastaffine::FastAffineResult::policy)
      .def_readonly("solve_time_s", &fastaffine::FastAffineResult::solve_time_s)
      .def_readonly("alpha", &fastaffine::FastAffineResult::alpha);
  m.def(
      "solve_fast_affine",
      [](const TwoStageInstance& inst, const UncertaintySet& u) {
        return fastaffine::solve_fast_affine(inst, u);
      },
      py::arg("instance"), py::arg("set"));

  py::class_<adjustable::AdjustableResult>(m, "AdjustableResult")
      .def_readonly("z_ar", &adjustable::AdjustableResult::z_ar)
      .def_readonly("x_star", &adjustable::AdjustableResult::x_star)
      .def_readonly("worst_scenario", &adjustable::AdjustableResult::worst_scenario);
  m.def(
      "solve_adjustable",
      [](const TwoStageInstance& inst, const UncertaintySet& u) {
        return adjustable::solve_adjustable(inst, u);
      },
      py::arg("instance"), py::arg("set"));
  m.def(
      "solve_static",
      [](const TwoStageInstance& inst, const Vector& target) {
        auto res = adjustable::solve_static(inst, target);
        return py::make_tuple(res.x, res.y, res.cost);
      },
      py::arg("instance"), py::arg("target"));

  py::class_<construct::ConstructResult>(m, "ConstructResult")
      .def_readonly("policy", &construct::ConstructResult::policy)
      .def_property_readonly("beta",
                             [](const construct::ConstructResult& r) { return r.state.beta; })
      .def_property_readonly(
          "inexpensive",
          [](const construct::ConstructResult& r) { return r.state.inexpensive; })
      .def_property_readonly(
          "static_cost",
          [](const construct::ConstructResult& r) { return r.state.static_cost; })
      .def_property_readonly("linear_cost_bound", [](const construct::ConstructResult& r) {
        return r.state.linear_cost_bound;
      });
  m.def("construct_affine_budget", &construct::construct_affine_budget, py::arg("instance"),
        py::arg("set"), py::arg("x_star"), py::arg("opt"));

  py::class_<reduce::ReduceResult>(m, "ReduceResult")
      .def_readonly("surrogate", &reduce::ReduceResult::surrogate)
      .def_property_readonly(
          "scales",
          [](const reduce::ReduceResult& r) {
            return py::make_tuple(r.cert.inner_scale, r.cert.outer_scale);
          })
      .def_property_readonly("surrogate_weights", [](const reduce::ReduceResult& r) {
        return r.cert.surrogate_weights;
      });
  m.def("reduce_average", &reduce::reduce_average, py::arg("set"));
  m.def("reduce_permutation_invariant", &reduce::reduce_permutation_invariant, py::arg("set"),
        py::arg("rng_seed"), py::arg("max_retries") = 200);

  m.def(
      "run_method",
      [](const GeneratedProblem& gp, const std::string& id, const std::string& method,
         double cap) { return runner::record_to_json(runner::run_method(gp, id, method, cap)); },
      py::arg("problem"), py::arg("instance_id"), py::arg("method"),
      py::arg("time_cap_s") = 300.0);
}
