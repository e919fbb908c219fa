import random
from fractions import Fraction as F

import pytest

from pirtrade.bounds import dunderline_b
from pirtrade.entlp import (
    LinearConstraint,
    LpProblem,
    VarId,
    all_variables,
    build_lp,
    constraint_census,
    dump_lp,
    enumerate_structural,
    enumerate_submodular,
    lp_bound,
    solve_exact,
)
from pirtrade.points import SystemParams, baseline_costs


def beta0(n, k):
    return baseline_costs(SystemParams(n, k))[1]


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("k", range(1, 5))
def test_variable_census(n, k):
    assert len(all_variables(n, k)) == k * (n + 1) * (n + 2)


def test_submodular_example_row():
    # region sizes (0,0,1,0,0,0,1,0) give 2*y1(1,0) >= y1(2,0) + y1(0,0)
    rows = enumerate_submodular(2, 1)
    want = {
        (VarId("y", 1, 0, 0), F(-1)),
        (VarId("y", 1, 1, 0), F(2)),
        (VarId("y", 1, 2, 0), F(-1)),
    }
    assert any(set(r.terms) == want for r in rows)


def test_submodular_tuple_count_bound():
    # far fewer rows than the raw (N+1)^8 tuple bound
    rows = enumerate_submodular(2, 2)
    assert 0 < len(rows) < 3 * (2 + 1) ** 8


def test_submodular_sides():
    rows = enumerate_submodular(3, 2)
    sides = {(t[0][0].side, t[0][0].k) for t in (r.terms for r in rows)}
    assert sides == {("x", 1), ("y", 1), ("y", 2)}


def test_structural_decodable_set_n2_k2():
    rows = [r for r in enumerate_structural(2, 2) if r.tag == "decodable"]
    got = {(r.terms[0][0], r.terms[1][0]) for r in rows}
    want = {
        (VarId("y", k, a, 2 - a), VarId("x", k, a, 2 - a))
        for k in (1, 2)
        for a in (0, 1)
    }
    assert got == want
    assert all(r.rhs == 1 and r.sense == ">=" for r in rows)


def test_structural_han_range_excludes_b_equal_n():
    rows = [r for r in enumerate_structural(3, 1) if r.tag == "han"]
    bs = {r.terms[0][0].b for r in rows}
    assert bs == {1, 2}
    for r in rows:
        coeff = dict(r.terms)[VarId("y", r.terms[0][0].k, 0, 3)]
        assert coeff == -F(r.terms[0][0].b, 3)


def test_structural_families_present():
    tags = {r.tag for r in enumerate_structural(3, 2)}
    assert tags == {
        "monotone", "decodable", "han", "privacy", "invariance",
        "boundary", "nonneg",
    }


def test_build_lp_eliminates_boundary():
    lp = build_lp(2, 2, F(0), F(1))
    assert lp.census_variables == 24
    assert len(lp.variables) == 18  # x_K block substituted away
    assert all(not (v.side == "x" and v.k == 2) for v in lp.variables)
    for row in lp.constraints:
        assert row.tag != "boundary"
        for v, _ in row.terms:
            assert not (v.side == "x" and v.k == 2)


def test_build_lp_rejects_bad_weights():
    with pytest.raises(ValueError):
        build_lp(2, 2, F(-1), F(1))
    with pytest.raises(ValueError):
        build_lp(2, 2, F(0), F(0))


def test_k1_degenerate_system():
    lp = build_lp(2, 1, F(0), F(1))
    assert all(v.side == "y" for v in lp.variables)
    assert lp_bound(2, 1, F(0), F(1)) == F(1, 2)


@pytest.mark.parametrize(
    "n,k,expect",
    [(2, 2, F(3, 4)), (3, 2, F(4, 9)), (3, 3, F(13, 27)), (4, 2, F(5, 16))],
)
def test_lp_meets_capacity_floor(n, k, expect):
    assert expect == beta0(n, k)
    assert lp_bound(n, k, F(0), F(1)) == expect


def test_lp_linearity_in_weights():
    assert lp_bound(3, 2, F(0), F(3)) == 3 * lp_bound(3, 2, F(0), F(1))


def test_lp_weighted_examples():
    # storage-heavy weighting reaches the m=1 bound exactly
    assert lp_bound(3, 2, F(2), F(1)) == F(2)
    assert lp_bound(2, 2, F(1), F(1)) == F(2)


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_lp_dominates_explicit_bound(n, k):
    for m in range(1, n + 1):
        lhs = lp_bound(n, k, F(n - m), F(m))
        assert lhs >= dunderline_b(n, k, m), (n, k, m)


def test_canonicalization_preserves_optimum():
    rng = random.Random(7)
    for n, k in [(2, 2), (3, 2), (3, 3)]:
        for _ in range(5):
            a0 = F(rng.randint(0, 4), rng.randint(1, 3))
            b0 = F(rng.randint(1, 4), rng.randint(1, 3))
            full = solve_exact(build_lp(n, k, a0, b0, canonicalize=False))
            dedup = solve_exact(build_lp(n, k, a0, b0, canonicalize=True))
            assert full.value == dedup.value


def test_solution_certificate_exact():
    lp = build_lp(3, 2, F(1), F(2))
    sol = solve_exact(lp)
    assert sol.status == "optimal"
    x = sol.assignment
    for row in lp.constraints:
        lhs = sum(coef * x[v] for v, coef in row.terms)
        if row.sense == ">=":
            assert lhs >= row.rhs
        else:
            assert lhs == row.rhs
    assert all(val >= 0 for val in x.values())
    obj = sum(coef * x[v] for v, coef in lp.objective)
    assert obj == sol.value


def test_contradictory_row_infeasible():
    lp = build_lp(2, 2, F(0), F(1))
    bad = LinearConstraint(
        ((VarId("y", 1, 0, 1), F(-1)),), ">=", F(1), "mutation"
    )
    mutated = LpProblem(
        lp.n, lp.k, lp.variables, lp.constraints + (bad,), lp.objective,
        lp.census_variables,
    )
    assert solve_exact(mutated).status == "infeasible"


def test_census_and_dump():
    lp = build_lp(2, 2, F(0), F(1))
    census = constraint_census(lp)
    assert census["decodable"] == 4
    assert census["privacy"] == 2
    assert census["invariance"] == 2
    text = dump_lp(lp)
    assert text.startswith("\\ relaxed entropic LP: N=2 K=2\nMinimize\n obj: y_1_0_1\n")
    assert "Subject To" in text and text.rstrip().endswith("End")
    assert "decodable" in text
    # exact rationals rendered as p/q
    assert "1/2 y_1_0_2" in text
