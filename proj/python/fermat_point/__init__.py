"""Weighted Fermat point (weighted 1-median) solvers for L1, L2, Lp and planar L-infinity."""

from ._core import (
    AnchorSet,
    AnchorTest,
    FermatError,
    LinfSolution,
    NormSpec,
    SolutionBox,
    SolveResult,
    SolveStatus,
    TraceRecord,
    __version__,
    anchor_optimality_test,
    distance,
    finite_diff_gradient,
    from_manhattan,
    gradient_lp,
    grid_minimize,
    lp_map,
    objective,
    solve_l1,
    solve_l2,
    solve_linf_2d,
    solve_lp,
    to_manhattan,
    varignon_energy,
    weighted_centroid,
    weighted_median,
    weiszfeld_map,
)

__all__ = [
    "AnchorSet",
    "AnchorTest",
    "FermatError",
    "LinfSolution",
    "NormSpec",
    "SolutionBox",
    "SolveResult",
    "SolveStatus",
    "TraceRecord",
    "__version__",
    "anchor_optimality_test",
    "distance",
    "finite_diff_gradient",
    "from_manhattan",
    "gradient_lp",
    "grid_minimize",
    "lp_map",
    "objective",
    "solve_l1",
    "solve_l2",
    "solve_linf_2d",
    "solve_lp",
    "to_manhattan",
    "varignon_energy",
    "weighted_centroid",
    "weighted_median",
    "weiszfeld_map",
]
