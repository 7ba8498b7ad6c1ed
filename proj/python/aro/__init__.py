"""Two-stage adjustable robust optimization over budgeted uncertainty sets."""

from aro._core import (  # noqa: F401
    AffinePolicy,
    AffineSolveResult,
    AdjustableResult,
    AroError,
    ConstructResult,
    FastAffineResult,
    FirstStageSet,
    GeneratedProblem,
    PolicyReport,
    ReduceResult,
    TwoStageInstance,
    UncertaintySet,
    as_polyhedron,
    construct_affine_budget,
    evaluate_policy,
    generate,
    load_problem,
    max_linear,
    problem_to_json,
    reduce_average,
    reduce_permutation_invariant,
    run_method,
    save_problem,
    solve_adjustable,
    solve_fast_affine,
    solve_optimal_affine,
    solve_static,
)

__all__ = [
    "AffinePolicy",
    "AffineSolveResult",
    "AdjustableResult",
    "AroError",
    "ConstructResult",
    "FastAffineResult",
    "FirstStageSet",
    "GeneratedProblem",
    "PolicyReport",
    "ReduceResult",
    "TwoStageInstance",
    "UncertaintySet",
    "as_polyhedron",
    "construct_affine_budget",
    "evaluate_policy",
    "generate",
    "load_problem",
    "max_linear",
    "problem_to_json",
    "reduce_average",
    "reduce_permutation_invariant",
    "run_method",
    "save_problem",
    "solve_adjustable",
    "solve_fast_affine",
    "solve_optimal_affine",
    "solve_static",
]
