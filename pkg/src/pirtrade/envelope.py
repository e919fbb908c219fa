"""Envelope and ratio curve assembly over exact rationals.

A bound curve is piecewise linear between exact vertices.  Upper (achievable)
curves come from the lower convex hull of point families; lower (converse)
curves come from maximizing half-plane certificates over an exact alpha grid.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .points import TradeoffPoint
from .rational import exact_grid


@dataclass(frozen=True)
class HalfPlane:
    """The certificate ca*alpha + cb*beta >= rhs with ca, cb >= 0."""

    ca: Fraction
    cb: Fraction
    rhs: Fraction
    label: str = ""

    def __post_init__(self):
        if self.ca < 0 or self.cb < 0:
            raise ValueError("half-plane weights must be nonnegative")
        if self.ca == 0 and self.cb == 0:
            raise ValueError("half-plane needs a nonzero weight")

    def holds(self, alpha: Fraction, beta: Fraction) -> bool:
        return self.ca * alpha + self.cb * beta >= self.rhs

    def beta_bound(self, alpha: Fraction) -> Fraction:
        if self.cb == 0:
            raise ValueError("alpha-cut has no beta bound")
        return Fraction(self.rhs - self.ca * alpha, self.cb)


class EnvelopeCurve:
    """Vertices (alpha, beta): alpha strictly increasing, beta non-increasing,
    slopes non-decreasing (convex).  Evaluation interpolates exactly."""

    def __init__(self, vertices):
        vs = tuple((Fraction(a), Fraction(b)) for a, b in vertices)
        if not vs:
            raise ValueError("curve needs at least one vertex")
        for (a0, b0), (a1, b1) in zip(vs, vs[1:]):
            if a1 <= a0:
                raise ValueError("vertex alphas must strictly increase")
            if b1 > b0:
                raise ValueError("vertex betas must not increase")
        for (a0, b0), (a1, b1), (a2, b2) in zip(vs, vs[1:], vs[2:]):
            # slope(v0,v1) <= slope(v1,v2), cross-multiplied
            if (b1 - b0) * (a2 - a1) > (b2 - b1) * (a1 - a0):
                raise ValueError("curve must be convex")
        self.vertices = vs

    @property
    def alpha_min(self) -> Fraction:
        return self.vertices[0][0]

    @property
    def alpha_max(self) -> Fraction:
        return self.vertices[-1][0]

    def beta_at(self, alpha: Fraction) -> Fraction:
        alpha = Fraction(alpha)
        if alpha < self.alpha_min or alpha > self.alpha_max:
            raise ValueError(f"alpha {alpha} outside curve domain")
        vs = self.vertices
        lo, hi = 0, len(vs) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if vs[mid][0] < alpha:
                lo = mid + 1
            else:
                hi = mid
        a1, b1 = vs[lo]
        if a1 == alpha:
            return b1
        a0, b0 = vs[lo - 1]
        return b0 + (b1 - b0) * (alpha - a0) / (a1 - a0)

    def covers(self, pt: TradeoffPoint) -> bool:
        """True if the point lies on or above the curve (flat extension past
        the right end; nothing lies left of the domain for hull inputs)."""
        if pt.alpha > self.alpha_max:
            return pt.beta >= self.vertices[-1][1]
        return pt.beta >= self.beta_at(pt.alpha)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"EnvelopeCurve({len(self.vertices)} vertices)"


def _merge_ties(points) -> list[TradeoffPoint]:
    merged: dict[tuple[Fraction, Fraction], list[str]] = {}
    for p in points:
        merged.setdefault((p.alpha, p.beta), []).append(p.label)
    out = []
    for (a, b), labels in merged.items():
        uniq = sorted(set(filter(None, labels)))
        out.append(TradeoffPoint(a, b, "|".join(uniq)))
    out.sort(key=lambda p: (p.alpha, p.beta))
    return out


def _remove_dominated(points: list[TradeoffPoint]) -> list[TradeoffPoint]:
    # strict domination: <= in both coordinates and < in at least one
    kept = []
    for p in points:
        dominated = any(
            q.alpha <= p.alpha
            and q.beta <= p.beta
            and (q.alpha < p.alpha or q.beta < p.beta)
            for q in points
            if q is not p
        )
        if not dominated:
            kept.append(p)
    kept.sort(key=lambda p: p.alpha)
    return kept


def hull_vertices(points) -> list[TradeoffPoint]:
    """Vertices of the lower-left convex envelope, labels preserved.

    Exact duplicates are merged (labels joined); dominated points are
    dropped; interior collinear points are dropped.
    """
    pts = _remove_dominated(_merge_ties(points))
    if not pts:
        raise ValueError("need at least one point")
    stack: list[TradeoffPoint] = []
    for p in pts:
        while len(stack) >= 2:
            o, a = stack[-2], stack[-1]
            # keep only strictly increasing slopes
            cross = (a.alpha - o.alpha) * (p.beta - a.beta) - (
                a.beta - o.beta
            ) * (p.alpha - a.alpha)
            if cross <= 0:
                stack.pop()
            else:
                break
        stack.append(p)
    return stack


def lower_hull(points) -> EnvelopeCurve:
    """Lower convex envelope of achievable points as a curve."""
    verts = hull_vertices(points)
    return EnvelopeCurve([(p.alpha, p.beta) for p in verts])


def halfplane_envelope(
    halfplanes,
    alpha_lo: Fraction,
    alpha_hi: Fraction,
    grid: int,
) -> EnvelopeCurve:
    """Pointwise best lower bound on beta over an exact alpha grid.

    Half-planes with cb > 0 contribute beta >= (rhs - ca*alpha)/cb; pure
    alpha-cuts (cb = 0) clamp the left end of the domain.
    """
    hps = list(halfplanes)
    if not hps:
        raise ValueError("need at least one half-plane")
    if grid < 2:
        raise ValueError("grid needs at least 2 points")
    lo, hi = Fraction(alpha_lo), Fraction(alpha_hi)
    sloped = []
    for hp in hps:
        if hp.cb > 0:
            sloped.append(hp)
        else:
            lo = max(lo, Fraction(hp.rhs, hp.ca))
    if not sloped:
        raise ValueError("no half-plane bounds beta")
    if lo >= hi:
        raise ValueError("alpha domain is empty after alpha-cuts")
    verts = [
        (alpha, max(hp.beta_bound(alpha) for hp in sloped))
        for alpha in exact_grid(lo, hi, grid)
    ]
    return EnvelopeCurve(verts)


@dataclass(frozen=True)
class RatioCurve:
    entries: tuple[tuple[Fraction, Fraction], ...]  # (alpha, upper/lower)
    max_ratio: Fraction = field(default=Fraction(0))
    argmax_alpha: Fraction = field(default=Fraction(0))


def ratio_curve(upper: EnvelopeCurve, lower: EnvelopeCurve, grid: int) -> RatioCurve:
    """Pointwise upper/lower ratio over the shared alpha domain."""
    lo = max(upper.alpha_min, lower.alpha_min)
    hi = min(upper.alpha_max, lower.alpha_max)
    if lo >= hi:
        raise ValueError("curves do not share an alpha interval")
    entries = []
    best = None
    best_alpha = None
    for alpha in exact_grid(lo, hi, grid):
        bu = upper.beta_at(alpha)
        bl = lower.beta_at(alpha)
        if bl <= 0:
            raise ValueError("lower curve must be strictly positive")
        r = Fraction(bu, bl)
        entries.append((alpha, r))
        if best is None or r > best:
            best, best_alpha = r, alpha
    return RatioCurve(tuple(entries), best, best_alpha)
