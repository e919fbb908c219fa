"""Exact linear programming over rationals.

`solve_min` minimizes c.x over sparse rows with senses ">=" / "==" and
x >= 0.  The LPs this package builds have far more rows than variables, so
the revised primal simplex runs on the dual, whose basis has one element per
primal variable; the optimal primal assignment is read off the final simplex
multipliers.  Bland's rule is used for both the entering and leaving choice,
so the method terminates despite heavy degeneracy.  Scalars are gmpy2.mpq
when available (identical semantics, faster), Fraction otherwise.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels

try:
    from gmpy2 import mpq as _scalar

    SCALAR_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _scalar = Fraction

    SCALAR_BACKEND = "fractions"

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

GE = ">="
EQ = "=="


class IterationLimitError(Exception):
    pass


@dataclass
class LpOutcome:
    status: str
    value: Fraction | None
    x: list[Fraction] | None
    iterations: int
    rows: int
    columns: int


def _to_frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(int(v.numerator), int(v.denominator))


class _DualTableau:
    """Revised simplex state for max g.z s.t. M z = q, z >= 0."""

    def __init__(self, n_rows, columns, gains, q, kernels):
        self.m = n_rows
        self.cols = columns  # sparse [(row, scalar), ...] per column
        self.g = gains
        self.q = q
        self.k = kernels
        self.iterations = 0
        self.basis = [-1] * n_rows
        self.in_basis = [False] * len(columns)
        self.binv = [
            [_scalar(1) if i == j else _scalar(0) for j in range(n_rows)]
            for i in range(n_rows)
        ]
        self.xb = list(q)

    def set_basis(self, cols_by_row):
        # only valid at construction time, when each chosen column is a
        # signed unit vector for its row
        for i, j in enumerate(cols_by_row):
            self.basis[i] = j
            self.in_basis[j] = True
            (row, val), = self.cols[j]
            assert row == i
            if val != 1:
                self.binv[i][i] = 1 / val
                self.xb[i] = self.xb[i] / val

    def multipliers(self, g):
        y = [_scalar(0)] * self.m
        for i in range(self.m):
            gb = g[self.basis[i]]
            if gb:
                self.k.axpy(y, gb, self.binv[i])
        return y

    def ftran(self, col):
        t = [_scalar(0)] * self.m
        for row, val in col:
            self.k.gather_axpy(t, self.binv, row, val)
        return t

    def run(self, g, allowed, limit):
        """Bland-rule simplex to optimality; returns OPTIMAL or UNBOUNDED."""
        while True:
            self.iterations += 1
            if self.iterations > limit:
                raise IterationLimitError(f"exceeded {limit} pivots")
            y = self.multipliers(g)
            enter = -1
            for j in range(len(self.cols)):
                if self.in_basis[j] or not allowed[j]:
                    continue
                if g[j] - self.k.sparse_dot(y, self.cols[j]) > 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            t = self.ftran(self.cols[enter])
            leave = -1
            best = None
            for i in range(self.m):
                ti = t[i]
                if ti > 0:
                    ratio = self.xb[i] / ti
                    if (
                        leave < 0
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        leave, best = i, ratio
            if leave < 0:
                return UNBOUNDED
            self.pivot(enter, leave, t)

    def pivot(self, enter, leave_row, t):
        self.k.pivot_update(self.binv, self.xb, t, leave_row)
        self.in_basis[self.basis[leave_row]] = False
        self.basis[leave_row] = enter
        self.in_basis[enter] = True

    def objective_value(self, g):
        total = _scalar(0)
        for i in range(self.m):
            gb = g[self.basis[i]]
            if gb:
                total = total + gb * self.xb[i]
        return total


def solve_min(
    n_vars: int,
    objective,
    constraints,
    iteration_limit: int = 500_000,
    kernels=None,
) -> LpOutcome:
    """Minimize sum(coef * x[idx]) subject to constraints, x >= 0.

    `objective` is a sparse list of (index, Fraction); each constraint is
    (terms, sense, rhs) with sparse integer-indexed terms and sense ">="
    or "==".  Returns exact optimum, a primal assignment satisfying every
    constraint exactly, or an infeasible/unbounded verdict.
    """
    kernels = kernels or _kernels
    c = [_scalar(0)] * n_vars
    for idx, coef in objective:
        c[idx] = c[idx] + _scalar(coef.numerator, coef.denominator)

    sign = [1 if v >= 0 else -1 for v in c]
    q = [v if s > 0 else -v for v, s in zip(c, sign)]

    columns = []
    gains = []

    def add_column(terms, gain):
        col = []
        for idx, coef in terms:
            s = _scalar(coef.numerator, coef.denominator)
            if sign[idx] < 0:
                s = -s
            if s:
                col.append((idx, s))
        columns.append(col)
        gains.append(_scalar(gain.numerator, gain.denominator))

    for terms, sense, rhs in constraints:
        add_column(terms, rhs)
        if sense == EQ:
            add_column([(i, -v) for i, v in terms], -rhs)
        elif sense != GE:
            raise ValueError(f"unknown sense {sense!r}")

    n_real = len(columns)
    slack_of_row = []
    for v in range(n_vars):
        slack_of_row.append(len(columns))
        columns.append([(v, _scalar(sign[v]))])
        gains.append(_scalar(0))

    art_rows = [v for v in range(n_vars) if sign[v] < 0]
    art_of_row = {}
    for v in art_rows:
        art_of_row[v] = len(columns)
        columns.append([(v, _scalar(1))])
        gains.append(_scalar(0))

    tab = _DualTableau(n_vars, columns, gains, q, kernels)
    tab.set_basis(
        [art_of_row.get(v, slack_of_row[v]) for v in range(n_vars)]
    )

    is_artificial = [False] * len(columns)
    for j in art_of_row.values():
        is_artificial[j] = True
    allowed = [not a for a in is_artificial]

    if art_rows:
        phase1 = [_scalar(0)] * len(columns)
        for j in art_of_row.values():
            phase1[j] = _scalar(-1)
        status = tab.run(phase1, [True] * len(columns), iteration_limit)
        assert status == OPTIMAL  # phase-1 objective is bounded above by 0
        if tab.objective_value(phase1) != 0:
            return _resolve_infeasible_dual(
                n_vars, n_real, columns, gains, sign, kernels,
                iteration_limit, tab.iterations,
            )
        _drive_out_artificials(tab, is_artificial, slack_of_row)

    status = tab.run(gains, allowed, iteration_limit)
    if status == UNBOUNDED:
        return LpOutcome(
            INFEASIBLE, None, None, tab.iterations, n_vars, len(columns)
        )
    y = tab.multipliers(gains)
    x = [_to_frac(sign[v] * y[v]) for v in range(n_vars)]
    value = _to_frac(tab.objective_value(gains))
    return LpOutcome(OPTIMAL, value, x, tab.iterations, n_vars, len(columns))


def _drive_out_artificials(tab, is_artificial, slack_of_row):
    for i in range(tab.m):
        if not is_artificial[tab.basis[i]]:
            continue
        # xb[i] is zero here; any nonzero pivot keeps feasibility.  Slack
        # columns are signed unit vectors, so their ftran images span the
        # space and one of them must be nonzero at position i.
        for j in slack_of_row:
            if tab.in_basis[j]:
                continue
            t = tab.ftran(tab.cols[j])
            if t[i]:
                tab.pivot(j, i, t)
                break
        else:  # pragma: no cover - unreachable, see comment above
            raise AssertionError("could not remove artificial from basis")


def _resolve_infeasible_dual(
    n_vars, n_real, columns, gains, sign, kernels, limit, spent
):
    """Dual infeasible: the primal is unbounded or infeasible.

    Probe with the homogeneous dual (rhs 0): if the real objective stays
    bounded (at 0) over that cone the primal is feasible, hence unbounded;
    an improving ray certifies primal infeasibility.
    """
    q0 = [_scalar(0)] * n_vars
    tab = _DualTableau(n_vars, columns, gains, q0, kernels)
    tab.set_basis([n_real + v for v in range(n_vars)])
    # artificial columns are not part of the dual cone
    allowed = [j < n_real + n_vars for j in range(len(columns))]
    status = tab.run(gains, allowed, limit)
    total = spent + tab.iterations
    if status == OPTIMAL:
        return LpOutcome(UNBOUNDED, None, None, total, n_vars, len(columns))
    return LpOutcome(INFEASIBLE, None, None, total, n_vars, len(columns))
