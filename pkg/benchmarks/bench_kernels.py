#!/usr/bin/env python3
"""Benchmark the compiled simplex kernels against the pure-Python fallback.

Runs a micro benchmark of the pivot kernel and an end-to-end entropic LP
solve with each lane.  Usage:

    python benchmarks/bench_kernels.py [--n 4] [--k 2] [--repeat 3]
"""

import argparse
import time
from fractions import Fraction as F

from pirtrade._kernels import pure
from pirtrade.entlp import build_lp, solve_exact
from pirtrade.simplex import SCALAR_BACKEND, _scalar

try:
    from pirtrade._kernels import _speed
except ImportError:
    _speed = None


def micro_pivot(kern, size=120, rounds=40):
    # same scalar type the solver uses, so the numbers match the real runs
    binv = [
        [_scalar(i * size + j + 1, i + j + 1) for j in range(size)]
        for i in range(size)
    ]
    xb = [_scalar(i + 1, 3) for i in range(size)]
    t0 = time.perf_counter()
    for r in range(rounds):
        t = [_scalar(i - r, 7) for i in range(size)]
        t[r % size] = _scalar(3, 2)
        kern.pivot_update(binv, xb, t, r % size)
    return time.perf_counter() - t0


def end_to_end(kern, n, k, repeat):
    lp = build_lp(n, k, F(1), F(2))
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        sol = solve_exact(lp, kernels=kern)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
        value = sol.value
    return best, value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    lanes = [("pure", pure)]
    if _speed is not None:
        lanes.append(("cython", _speed))
    else:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
    print(f"scalar backend: {SCALAR_BACKEND}")

    print(f"{'lane':8} {'pivot kernel':>14} {'LP(N={0},K={1})'.format(args.n, args.k):>16}")
    results = {}
    for name, kern in lanes:
        tp = micro_pivot(kern)
        te, value = end_to_end(kern, args.n, args.k, args.repeat)
        results[name] = (tp, te, value)
        print(f"{name:8} {tp:>12.3f}s {te:>14.3f}s   optimum {value}")
    if len(results) == 2:
        tp_p, te_p, v_p = results["pure"]
        tp_c, te_c, v_c = results["cython"]
        assert v_p == v_c, "lanes disagree"
        print(f"{'speedup':8} {tp_p / tp_c:>13.2f}x {te_p / te_c:>13.2f}x   (identical optima)")


if __name__ == "__main__":
    main()
