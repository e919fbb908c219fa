"""Assembly of upper (achievable) and lower (converse) curves for a system."""

from dataclasses import dataclass
from fractions import Fraction

from .bounds import lower_bound_halfplanes
from .entlp import lp_bound
from .envelope import (
    EnvelopeCurve,
    HalfPlane,
    RatioCurve,
    halfplane_envelope,
    hull_vertices,
    lower_hull,
    ratio_curve,
)
from .points import (
    SystemParams,
    baseline_costs,
    gmds_points,
    mds_points,
    prop3_points,
    uncoded_points,
)

STANDARD_FAMILIES = ("mds", "uncoded", "gmds", "prop3")

_FAMILY_FN = {
    "mds": mds_points,
    "uncoded": uncoded_points,
    "gmds": gmds_points,
    "prop3": prop3_points,
}


def family_points(p: SystemParams, family: str):
    try:
        return _FAMILY_FN[family](p)
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None


def all_achievable_points(p: SystemParams):
    pts = []
    for fam in STANDARD_FAMILIES:
        pts.extend(family_points(p, fam))
    return pts


def upper_curve(p: SystemParams) -> EnvelopeCurve:
    """Lower hull of every closed-form family."""
    return lower_hull(all_achievable_points(p))


def lower_curve(
    p: SystemParams,
    alpha_lo: Fraction,
    alpha_hi: Fraction,
    grid: int,
    lp_refine: bool = False,
) -> tuple[EnvelopeCurve, list[HalfPlane]]:
    """Half-plane envelope of the explicit certificates.

    With `lp_refine`, each (N-m, m)-weighted certificate value is replaced
    by the entropic-LP optimum for the same weights (never smaller than the
    closed form; the max of two valid bounds is still valid).
    """
    hps = lower_bound_halfplanes(p.n, p.k)
    if lp_refine:
        refined = []
        for hp in hps:
            if hp.label.startswith("explicit(") and hp.cb > 0:
                lv = lp_bound(p.n, p.k, hp.ca, hp.cb)
                refined.append(
                    HalfPlane(hp.ca, hp.cb, max(hp.rhs, lv), hp.label + "+lp")
                )
            else:
                refined.append(hp)
        hps = refined
    return halfplane_envelope(hps, alpha_lo, alpha_hi, grid), hps


@dataclass(frozen=True)
class CurveReport:
    params: SystemParams
    alphas: tuple[Fraction, ...]
    beta_upper: tuple[Fraction, ...]
    beta_lower: tuple[Fraction, ...]
    ratios: tuple[Fraction, ...]
    max_ratio: Fraction
    argmax_alpha: Fraction
    halfplanes: tuple[HalfPlane, ...]
    hull: tuple  # labeled hull vertices


def curve_report(
    p: SystemParams,
    grid: int = 200,
    alpha_lo: Fraction | None = None,
    alpha_hi: Fraction | None = None,
    lp_refine: bool = False,
) -> CurveReport:
    """Grid-sampled upper/lower/ratio data over [alpha0, K] by default."""
    alpha0, _ = baseline_costs(p)
    lo = Fraction(alpha_lo) if alpha_lo is not None else alpha0
    hi = Fraction(alpha_hi) if alpha_hi is not None else Fraction(p.k)
    upper = upper_curve(p)
    lower, hps = lower_curve(p, lo, hi, grid, lp_refine=lp_refine)
    rc: RatioCurve = ratio_curve(upper, lower, grid)
    alphas = tuple(a for a, _ in rc.entries)
    return CurveReport(
        params=p,
        alphas=alphas,
        beta_upper=tuple(upper.beta_at(a) for a in alphas),
        beta_lower=tuple(lower.beta_at(a) for a in alphas),
        ratios=tuple(r for _, r in rc.entries),
        max_ratio=rc.max_ratio,
        argmax_alpha=rc.argmax_alpha,
        halfplanes=tuple(hps),
        hull=tuple(hull_vertices(all_achievable_points(p))),
    )
