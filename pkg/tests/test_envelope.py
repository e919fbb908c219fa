from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pirtrade.envelope import (
    EnvelopeCurve,
    HalfPlane,
    halfplane_envelope,
    hull_vertices,
    lower_hull,
    ratio_curve,
)
from pirtrade.points import SystemParams, TradeoffPoint, gmds_points
from pirtrade.rational import exact_grid


def pt(a, b, label="p"):
    return TradeoffPoint(F(a), F(b), label)


def test_halfplane_validation():
    with pytest.raises(ValueError):
        HalfPlane(F(-1), F(1), F(0))
    with pytest.raises(ValueError):
        HalfPlane(F(0), F(0), F(1))


def test_hull_singleton():
    curve = lower_hull([pt(1, 2)])
    assert curve.vertices == ((F(1), F(2)),)


def test_hull_drops_dominated():
    verts = hull_vertices([pt(1, 2, "a"), pt(2, 1, "b"), pt(3, 3, "c")])
    assert [(v.alpha, v.beta) for v in verts] == [(1, 2), (2, 1)]


def test_hull_merges_tied_labels():
    verts = hull_vertices([pt(1, 1, "a"), pt(1, 1, "b")])
    assert len(verts) == 1 and verts[0].label == "a|b"


def test_hull_drops_interior_collinear():
    verts = hull_vertices([pt(1, 3), pt(2, 2), pt(3, 1)])
    assert [(v.alpha, v.beta) for v in verts] == [(1, 3), (3, 1)]


def test_hull_gmds_53_brute_force():
    pts = gmds_points(SystemParams(5, 3))
    curve = lower_hull(pts)
    # brute force: every point on/above, vertices are input points
    coords = {(p.alpha, p.beta) for p in pts}
    assert set(curve.vertices) <= coords
    for p in pts:
        assert curve.covers(p)
    # convexity by pairwise slope check
    vs = curve.vertices
    for (a0, b0), (a1, b1), (a2, b2) in zip(vs, vs[1:], vs[2:]):
        assert (b1 - b0) * (a2 - a1) < (b2 - b1) * (a1 - a0)


def test_hull_rejects_empty():
    with pytest.raises(ValueError):
        lower_hull([])


positive_fraction = st.fractions(
    min_value=F(1, 10), max_value=F(10), max_denominator=40
)


@settings(deadline=None, max_examples=200)
@given(
    st.lists(
        st.tuples(positive_fraction, positive_fraction),
        min_size=1,
        max_size=12,
    )
)
def test_hull_properties(coords):
    pts = [TradeoffPoint(a, b, f"p{i}") for i, (a, b) in enumerate(coords)]
    curve = lower_hull(pts)
    # vertices are input coordinates
    assert set(curve.vertices) <= {(p.alpha, p.beta) for p in pts}
    # strictly increasing alpha, non-increasing beta (curve validates convexity)
    alphas = [a for a, _ in curve.vertices]
    betas = [b for _, b in curve.vertices]
    assert alphas == sorted(set(alphas))
    assert all(x >= y for x, y in zip(betas, betas[1:]))
    # every input point lies on or above
    for p in pts:
        assert curve.covers(p)


def test_envelope_curve_validation():
    with pytest.raises(ValueError):
        EnvelopeCurve([(F(1), F(1)), (F(1), F(0))])  # alpha not increasing
    with pytest.raises(ValueError):
        EnvelopeCurve([(F(1), F(1)), (F(2), F(2))])  # beta increases
    with pytest.raises(ValueError):
        # slopes decrease: concave
        EnvelopeCurve([(F(0), F(4)), (F(1), F(3)), (F(2), F(0))])


def test_halfplane_envelope_constant():
    curve = halfplane_envelope(
        [HalfPlane(F(0), F(1), F(31, 125))], F(3, 5), F(3), 5
    )
    assert all(b == F(31, 125) for _, b in curve.vertices)


def test_halfplane_envelope_knee():
    hps = [
        HalfPlane(F(4), F(1), F(3)),
        HalfPlane(F(0), F(1), F(31, 125)),
    ]
    curve = halfplane_envelope(hps, F(3, 5), F(3), 13)
    knee = F(3 - F(31, 125), 4)  # where 4a + b = 3 meets b = 31/125
    for alpha, beta in curve.vertices:
        want = max(3 - 4 * alpha, F(31, 125))
        assert beta == want
        if alpha >= knee:
            assert beta == F(31, 125)


def test_halfplane_envelope_grid_oracle():
    from pirtrade.bounds import lower_bound_halfplanes

    hps = lower_bound_halfplanes(5, 3)
    lo, hi = F(3, 5), F(3)
    curve = halfplane_envelope(hps, lo, hi, 21)
    sloped = [h for h in hps if h.cb > 0]
    for alpha in exact_grid(lo, hi, 21):
        want = max((h.rhs - h.ca * alpha) / h.cb for h in sloped)
        assert curve.beta_at(alpha) == want


def test_halfplane_envelope_alpha_cut_clamps_domain():
    hps = [
        HalfPlane(F(1), F(0), F(2)),  # alpha >= 2
        HalfPlane(F(0), F(1), F(1)),
    ]
    curve = halfplane_envelope(hps, F(1), F(4), 5)
    assert curve.alpha_min == F(2)


def test_halfplane_envelope_rejects_empty():
    with pytest.raises(ValueError):
        halfplane_envelope([], F(0), F(1), 5)


def test_ratio_identity_and_scaling():
    up = EnvelopeCurve([(F(1), F(4)), (F(2), F(2)), (F(4), F(1))])
    rc = ratio_curve(up, up, 7)
    assert all(r == 1 for _, r in rc.entries)
    assert rc.max_ratio == 1
    half = EnvelopeCurve([(a, b / 2) for a, b in up.vertices])
    rc2 = ratio_curve(up, half, 7)
    assert all(r == 2 for _, r in rc2.entries)
    assert rc2.max_ratio == 2


def test_ratio_rejects_disjoint_domains():
    a = EnvelopeCurve([(F(0), F(2)), (F(1), F(1))])
    b = EnvelopeCurve([(F(2), F(2)), (F(3), F(1))])
    with pytest.raises(ValueError):
        ratio_curve(a, b, 5)
