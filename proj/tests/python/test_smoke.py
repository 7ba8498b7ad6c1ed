"""Python binding smoke tests: the main operations round-trip end to end."""

import json
import math

import numpy as np
import pytest

import aro


def test_generate_and_solve_identity_chain():
    gp = aro.generate("gaussian_u1", 6, seed=3)
    assert gp.instance.m == 6
    adj = aro.solve_adjustable(gp.instance, gp.set)
    aff = aro.solve_optimal_affine(gp.instance, gp.set)
    fast = aro.solve_fast_affine(gp.instance, gp.set)
    tol = 1e-6 * (1.0 + abs(fast.z_alg))
    assert adj.z_ar <= aff.z_aff + tol
    assert aff.z_aff <= fast.z_alg + tol


def test_policy_evaluation_reports_violations():
    gp = aro.generate("gaussian_u2", 5, seed=1)
    aff = aro.solve_optimal_affine(gp.instance, gp.set)
    rep = aro.evaluate_policy(gp.instance, gp.set, aff.policy)
    assert rep.max_constraint_violation <= 1e-6
    assert rep.max_nonnegativity_violation <= 1e-6
    assert rep.worst_case_objective == pytest.approx(aff.z_aff, rel=1e-6, abs=1e-6)


def test_lot_sizing_gap_values():
    gp = aro.generate("lot_sizing", 4)
    assert abs(aro.solve_adjustable(gp.instance, gp.set).z_ar) <= 1e-6
    assert aro.solve_optimal_affine(gp.instance, gp.set).z_aff == pytest.approx(1.0, abs=1e-5)


def test_max_linear_and_sets():
    u = aro.UncertaintySet.budget(np.array([0.5, 0.75]))
    value, argmax = aro.max_linear(u, np.array([1.0, 1.0]))
    assert value == pytest.approx(5.0 / 3.0)
    assert u.contains(np.asarray(argmax))
    R, r = aro.as_polyhedron(u)
    assert np.asarray(R).shape == (3, 2)
    assert np.allclose(np.asarray(r), 1.0)


def test_json_round_trip(tmp_path):
    gp = aro.generate("gaussian_u1", 4, seed=9)
    path = tmp_path / "instance.json"
    aro.save_problem(gp, str(path))
    back = aro.load_problem(str(path))
    assert aro.problem_to_json(back) == aro.problem_to_json(gp)


def test_construction_bound():
    gp = aro.generate("gaussian_u1", 5, seed=4)
    adj = aro.solve_adjustable(gp.instance, gp.set)
    res = aro.construct_affine_budget(gp.instance, gp.set, adj.x_star, adj.z_ar)
    rep = aro.evaluate_policy(gp.instance, gp.set, res.policy)
    assert rep.max_constraint_violation <= 1e-6
    assert rep.worst_case_objective <= (1.0 + 2.0 * res.beta) * adj.z_ar + 1e-6


def test_reduce_average_scales():
    u = aro.UncertaintySet.intersection(
        2, [([0], np.array([1.0])), ([1], np.array([1.0]))]
    )
    res = aro.reduce_average(u)
    assert res.scales == pytest.approx((0.5, 1.0))
    assert np.allclose(np.asarray(res.surrogate_weights), 0.5)


def test_run_method_record_schema():
    gp = aro.generate("gaussian_u1", 4, seed=2)
    rec = json.loads(aro.run_method(gp, "inmem", "affine", 60.0))
    assert rec["status"] == "Optimal"
    assert rec["method"] == "affine"
    assert math.isfinite(rec["objective"])


def test_errors_surface_as_python_exceptions():
    gp = aro.generate("lot_sizing", 4)
    with pytest.raises(aro.AroError):
        aro.solve_fast_affine(gp.instance, gp.set)
