"""Storage-retrieval tradeoff toolkit for private information retrieval.

The package computes achievable (storage, download) cost pairs for PIR
systems, runs and verifies two XOR-based protocol constructions over GF(2)
together with their round-robin extensions, solves a relaxed entropic linear
program with an exact rational simplex, evaluates explicit recursive lower
bounds, and assembles everything into envelope and ratio curves.

All numeric results are exact rationals; no floating point enters any bound
or cost computation.
"""

from .points import (
    SystemParams,
    TradeoffPoint,
    baseline_costs,
    cyclic_transform_point,
    gmds_points,
    mds_points,
    prop3_points,
    sun_jafar_point,
    two_approx_check,
    uncoded_points,
)
from .envelope import (
    EnvelopeCurve,
    HalfPlane,
    halfplane_envelope,
    lower_hull,
    ratio_curve,
)
from .bounds import (
    BoundResult,
    CoefficientVector,
    check_feasible,
    d_from_c,
    dunderline_b,
    jstar,
    lower_bound_halfplanes,
    certificate_coefficients,
    flat_bound,
    tilde_b,
)
from .protocols import (
    BudgetExceeded,
    CostReport,
    build_construction_a,
    build_construction_b,
    cyclic_compose,
    measure_costs,
    verify_correctness,
    verify_privacy,
)
from .entlp import build_lp, lp_bound, solve_exact

__version__ = "0.1.0"

__all__ = [
    "SystemParams",
    "TradeoffPoint",
    "baseline_costs",
    "sun_jafar_point",
    "mds_points",
    "uncoded_points",
    "gmds_points",
    "prop3_points",
    "cyclic_transform_point",
    "two_approx_check",
    "HalfPlane",
    "EnvelopeCurve",
    "lower_hull",
    "halfplane_envelope",
    "ratio_curve",
    "CoefficientVector",
    "BoundResult",
    "d_from_c",
    "check_feasible",
    "jstar",
    "dunderline_b",
    "tilde_b",
    "certificate_coefficients",
    "flat_bound",
    "lower_bound_halfplanes",
    "BudgetExceeded",
    "CostReport",
    "build_construction_a",
    "build_construction_b",
    "cyclic_compose",
    "verify_correctness",
    "verify_privacy",
    "measure_costs",
    "build_lp",
    "solve_exact",
    "lp_bound",
    "__version__",
]
