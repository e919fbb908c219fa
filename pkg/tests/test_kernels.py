"""Both kernel lanes must agree operation-by-operation and end-to-end."""

from fractions import Fraction as F

import pytest

import pirtrade._kernels as kernels
from pirtrade._kernels import pure
from pirtrade.entlp import build_lp, solve_exact

try:
    from pirtrade._kernels import _speed
except ImportError:
    _speed = None

needs_speed = pytest.mark.skipif(_speed is None, reason="compiled kernels not built")

LANES = [pure] + ([_speed] if _speed is not None else [])


def _sample_state():
    binv = [
        [F(1), F(1, 2), F(0)],
        [F(-2, 3), F(1), F(5)],
        [F(0), F(7, 3), F(1)],
    ]
    xb = [F(3), F(0), F(4, 7)]
    t = [F(2), F(1, 3), F(-1)]
    return binv, xb, t


@needs_speed
def test_axpy_matches():
    a = [F(1), F(2), F(3)]
    b = [F(1), F(2), F(3)]
    src = [F(0), F(1, 3), F(-2)]
    pure.axpy(a, F(5, 2), src)
    _speed.axpy(b, F(5, 2), src)
    assert a == b


@needs_speed
def test_gather_axpy_matches():
    binv, _, _ = _sample_state()
    a = [F(0)] * 3
    b = [F(0)] * 3
    pure.gather_axpy(a, binv, 1, F(3, 7))
    _speed.gather_axpy(b, binv, 1, F(3, 7))
    assert a == b


@needs_speed
def test_sparse_dot_matches():
    y = [F(1, 3), F(0), F(5)]
    entries = [(0, F(3)), (2, F(1, 5))]
    assert pure.sparse_dot(y, entries) == _speed.sparse_dot(y, entries) == F(2)
    assert pure.sparse_dot(y, []) == _speed.sparse_dot(y, []) == 0


@needs_speed
def test_pivot_update_matches():
    b1, x1, t1 = _sample_state()
    b2, x2, t2 = _sample_state()
    pure.pivot_update(b1, x1, list(t1), 0)
    _speed.pivot_update(b2, x2, list(t2), 0)
    assert b1 == b2 and x1 == x2


@pytest.mark.parametrize("lane", LANES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_lp_same_result_per_lane(lane):
    lp = build_lp(3, 2, F(1), F(2))
    sol = solve_exact(lp, kernels=lane)
    assert sol.status == "optimal"
    assert sol.value == F(11, 6)


def test_selected_lane_is_sane():
    assert kernels.IMPLEMENTATION in ("pure", "cython")
