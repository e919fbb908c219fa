from fractions import Fraction as F

from pirtrade import simplex
from pirtrade.simplex import EQ, GE, INFEASIBLE, OPTIMAL, UNBOUNDED, solve_min


def test_single_bound():
    r = solve_min(1, [(0, F(1))], [([(0, F(1))], GE, F(3))])
    assert (r.status, r.value, r.x) == (OPTIMAL, F(3), [F(3)])


def test_equality_row():
    r = solve_min(
        2,
        [(0, F(1)), (1, F(1))],
        [
            ([(0, F(1)), (1, F(1))], GE, F(2)),
            ([(0, F(1)), (1, F(-1))], EQ, F(0)),
        ],
    )
    assert r.status == OPTIMAL
    assert r.value == F(2)
    assert r.x == [F(1), F(1)]


def test_infeasible():
    r = solve_min(
        1, [(0, F(1))],
        [([(0, F(1))], GE, F(1)), ([(0, F(-1))], GE, F(0))],
    )
    assert r.status == INFEASIBLE
    assert r.value is None and r.x is None


def test_unbounded():
    r = solve_min(1, [(0, F(-1))], [([(0, F(1))], GE, F(1))])
    assert r.status == UNBOUNDED


def test_negative_objective_needs_phase1():
    r = solve_min(1, [(0, F(-1))], [([(0, F(-1))], GE, F(-5))])
    assert (r.status, r.value, r.x) == (OPTIMAL, F(-5), [F(5)])


def test_two_var_max_style():
    # min -x - 2y s.t. x + y <= 4, x <= 3
    r = solve_min(
        2,
        [(0, F(-1)), (1, F(-2))],
        [
            ([(0, F(-1)), (1, F(-1))], GE, F(-4)),
            ([(0, F(-1))], GE, F(-3)),
        ],
    )
    assert (r.status, r.value) == (OPTIMAL, F(-8))
    assert r.x == [F(0), F(4)]


def test_rational_coefficients_exact():
    # min x s.t. (2/3)x >= 5/7  ->  x = 15/14
    r = solve_min(1, [(0, F(1))], [([(0, F(2, 3))], GE, F(5, 7))])
    assert r.value == F(15, 14)


def test_certificate_satisfies_constraints():
    rows = [
        ([(0, F(3)), (1, F(1, 2))], GE, F(7, 3)),
        ([(0, F(1)), (1, F(-1))], GE, F(-2)),
        ([(1, F(1)), (0, F(1))], EQ, F(2)),
    ]
    r = solve_min(2, [(0, F(2)), (1, F(5, 2))], rows)
    assert r.status == OPTIMAL
    x = r.x
    for terms, sense, rhs in rows:
        lhs = sum(coef * x[i] for i, coef in terms)
        assert lhs == rhs if sense == EQ else lhs >= rhs
    assert all(v >= 0 for v in x)
    assert 2 * x[0] + F(5, 2) * x[1] == r.value


def test_zero_objective_feasibility_probe():
    r = solve_min(1, [], [([(0, F(1))], GE, F(4))])
    assert r.status == OPTIMAL
    assert r.value == 0
    assert r.x[0] >= 4


def test_scalar_backend_is_exact():
    # whichever backend is active must round-trip rationals exactly
    assert simplex._to_frac(simplex._scalar(31, 125)) == F(31, 125)
