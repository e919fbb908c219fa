"""Relaxed entropic linear program over symmetrized entropy terms.

Variables x_k(a, b) and y_k(a, b) stand for normalized conditional entropies
of a stored-set of size `a` together with an answer-set of size `b`, with the
first k (resp. k-1) messages conditioned away; symmetry lets set identities
collapse to sizes.  Seven constraint families bound them: submodularity
(8-parameter form), monotonicity, decodability, an averaging (Han-type)
inequality, privacy, invariance, and the boundary pinning x_K to zero, plus
explicit nonnegativity rows.  Minimizing a0*y_1(1,0) + b0*y_1(0,1) under
these constraints lower-bounds a0*alpha + b0*beta for every achievable point.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import simplex
from .rational import format_exact


@dataclass(frozen=True, order=True)
class VarId:
    side: str  # "x" or "y"
    k: int
    a: int
    b: int

    @property
    def name(self) -> str:
        return f"{self.side}_{self.k}_{self.a}_{self.b}"

    def __str__(self):
        return f"{self.side}{self.k}({self.a},{self.b})"


@dataclass(frozen=True)
class LinearConstraint:
    terms: tuple[tuple[VarId, Fraction], ...]
    sense: str  # ">=" or "=="
    rhs: Fraction
    tag: str


@dataclass(frozen=True)
class LpProblem:
    n: int
    k: int
    variables: tuple[VarId, ...]
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[tuple[VarId, Fraction], ...]
    census_variables: int  # including boundary variables before elimination


@dataclass(frozen=True)
class LpSolution:
    status: str
    value: Fraction | None
    assignment: dict | None
    iterations: int
    rows: int
    columns: int


def all_variables(n: int, k: int) -> list[VarId]:
    """Full census, boundary variables included: K(N+1)(N+2) entries."""
    out = []
    for side in ("x", "y"):
        for kk in range(1, k + 1):
            for a in range(n + 1):
                for b in range(n - a + 1):
                    out.append(VarId(side, kk, a, b))
    return out


def _tuples_sum_le(count: int, total: int):
    if count == 0:
        yield ()
        return
    for head in range(total + 1):
        for rest in _tuples_sum_le(count - 1, total - head):
            yield (head,) + rest


def _submodular_patterns(n: int, canonicalize: bool):
    """(a,b)->coefficient patterns of the 8-parameter submodular rows.

    The disjoint-region sizes (a..h) determine the four terms; swapping the
    two (set, answer-set) pairs maps (a,b,c,d,e,f,g,h) to (a,d,g,b,e,h,c,f)
    and yields the same inequality, so only the lexicographic representative
    is kept.  Rows whose positive and negative sides coincide are dropped.
    """
    seen = set()
    out = []
    for tup in _tuples_sum_le(8, n):
        a, b, c, d, e, f, g, h = tup
        if canonicalize:
            mirror = (a, d, g, b, e, h, c, f)
            if mirror < tup:
                continue
        terms: dict[tuple[int, int], int] = {}
        for pair, w in (
            ((a + b + c, d + e + f), 1),
            ((a + g + d, b + e + h), 1),
            ((a + b + c + d + g, e + f + h), -1),
            ((a, b + d + e), -1),
        ):
            terms[pair] = terms.get(pair, 0) + w
        terms = {p: w for p, w in terms.items() if w}
        if not terms:
            continue
        pat = tuple(sorted(terms.items()))
        if canonicalize:
            if pat in seen:
                continue
            seen.add(pat)
        out.append(pat)
    return out


def enumerate_submodular(n: int, k: int, canonicalize: bool = True):
    """Submodular rows for the x side (k in [1:K-1]) and y side (k in [1:K])."""
    if n < 2:
        raise ValueError("need N >= 2")
    pats = _submodular_patterns(n, canonicalize)
    rows = []
    sides = [("x", kk) for kk in range(1, k)] + [("y", kk) for kk in range(1, k + 1)]
    for side, kk in sides:
        for pat in pats:
            terms = tuple(
                (VarId(side, kk, a, b), Fraction(w)) for (a, b), w in pat
            )
            rows.append(LinearConstraint(terms, ">=", Fraction(0), "submodular"))
    return rows


def enumerate_structural(n: int, k: int):
    """Monotone, decodable, Han, privacy, invariance, boundary, nonneg rows."""
    if n < 2 or k < 1:
        raise ValueError("need N >= 2 and K >= 1")
    one = Fraction(1)
    rows = []

    def add(terms, sense, rhs, tag):
        rows.append(LinearConstraint(tuple(terms), sense, rhs, tag))

    sides = [("x", kk) for kk in range(1, k)] + [("y", kk) for kk in range(1, k + 1)]
    for side, kk in sides:
        for a in range(n):
            for b in range(1, n - a + 1):
                add(
                    [(VarId(side, kk, a, b), one), (VarId(side, kk, a, b - 1), -one)],
                    ">=", Fraction(0), "monotone",
                )
    for kk in range(1, k + 1):
        for a in range(n):
            add(
                [(VarId("y", kk, a, n - a), one), (VarId("x", kk, a, n - a), -one)],
                ">=", Fraction(1), "decodable",
            )
    for kk in range(1, k + 1):
        for b in range(1, n):
            add(
                [(VarId("y", kk, 0, b), one), (VarId("y", kk, 0, n), -Fraction(b, n))],
                ">=", Fraction(0), "han",
            )
    for kk in range(1, k):
        for a in range(n):
            add(
                [(VarId("x", kk, a, 1), one), (VarId("y", kk + 1, a, 1), -one)],
                "==", Fraction(0), "privacy",
            )
        for a in range(1, n + 1):
            add(
                [(VarId("x", kk, a, 0), one), (VarId("y", kk + 1, a, 0), -one)],
                "==", Fraction(0), "invariance",
            )
    for a in range(n + 1):
        for b in range(n - a + 1):
            add([(VarId("x", k, a, b), one)], "==", Fraction(0), "boundary")
    for var in all_variables(n, k):
        add([(var, one)], ">=", Fraction(0), "nonneg")
    return rows


def build_lp(
    n: int, k: int, a0: Fraction, b0: Fraction, canonicalize: bool = True
) -> LpProblem:
    """Assemble the LP; boundary variables are substituted away."""
    a0, b0 = Fraction(a0), Fraction(b0)
    if a0 < 0 or b0 < 0:
        raise ValueError("objective weights must be nonnegative")
    if a0 == 0 and b0 == 0:
        raise ValueError("objective weights cannot both be zero")
    census = all_variables(n, k)
    active = tuple(v for v in census if not (v.side == "x" and v.k == k))

    def is_boundary(v: VarId) -> bool:
        return v.side == "x" and v.k == k

    constraints = []
    for row in enumerate_submodular(n, k, canonicalize) + enumerate_structural(n, k):
        if row.tag == "boundary":
            continue
        terms = tuple(t for t in row.terms if not is_boundary(t[0]))
        if not terms:
            continue  # only nonneg rows of boundary variables land here
        constraints.append(
            LinearConstraint(terms, row.sense, row.rhs, row.tag)
        )

    objective = []
    if a0:
        objective.append((VarId("y", 1, 1, 0), a0))
    if b0:
        objective.append((VarId("y", 1, 0, 1), b0))
    return LpProblem(
        n, k, active, tuple(constraints), tuple(objective), len(census)
    )


def constraint_census(lp: LpProblem) -> dict[str, int]:
    census: dict[str, int] = {}
    for row in lp.constraints:
        census[row.tag] = census.get(row.tag, 0) + 1
    return census


def solve_exact(lp: LpProblem, kernels=None) -> LpSolution:
    """Exact optimum via the rational simplex.

    Plain nonnegativity rows are enforced natively by the solver's variable
    domain and duplicate rows are submitted once; neither changes the
    feasible region.
    """
    index = {v: i for i, v in enumerate(lp.variables)}
    rows = []
    seen = set()
    for row in lp.constraints:
        if (
            row.tag == "nonneg"
            and len(row.terms) == 1
            and row.terms[0][1] == 1
            and row.rhs == 0
            and row.sense == ">="
        ):
            continue
        terms = tuple(sorted((index[v], coef) for v, coef in row.terms))
        key = (terms, row.sense, row.rhs)
        if key in seen:
            continue
        seen.add(key)
        rows.append((list(terms), row.sense, row.rhs))
    outcome = simplex.solve_min(
        len(lp.variables),
        [(index[v], coef) for v, coef in lp.objective],
        rows,
        kernels=kernels,
    )
    assignment = None
    if outcome.status == simplex.OPTIMAL:
        assignment = {v: outcome.x[i] for v, i in index.items()}
    return LpSolution(
        outcome.status,
        outcome.value,
        assignment,
        outcome.iterations,
        outcome.rows,
        outcome.columns,
    )


def lp_bound(n: int, k: int, a0: Fraction, b0: Fraction) -> Fraction:
    """Exact optimal value of the LP: a lower bound on a0*alpha + b0*beta."""
    sol = solve_exact(build_lp(n, k, a0, b0))
    if sol.status != simplex.OPTIMAL:
        raise RuntimeError(f"entropic LP did not solve to optimality: {sol.status}")
    return sol.value


def dump_lp(lp: LpProblem) -> str:
    """Text dump in LP exchange style, exact rationals rendered as p/q."""
    def term_str(first, var, coef):
        sign = "-" if coef < 0 else "+"
        mag = format_exact(abs(coef))
        lead = "" if (first and sign == "+") else f"{sign} "
        coefpart = "" if mag == "1" else f"{mag} "
        return f"{lead}{coefpart}{var.name}"

    lines = [f"\\ relaxed entropic LP: N={lp.n} K={lp.k}", "Minimize"]
    obj = " ".join(
        term_str(i == 0, v, coef) for i, (v, coef) in enumerate(lp.objective)
    )
    lines.append(f" obj: {obj}")
    lines.append("Subject To")
    for i, row in enumerate(lp.constraints):
        body = " ".join(
            term_str(j == 0, v, coef) for j, (v, coef) in enumerate(row.terms)
        )
        op = ">=" if row.sense == ">=" else "="
        lines.append(f" {row.tag}_{i}: {body} {op} {format_exact(row.rhs)}")
    lines.append("Bounds")
    lines.append("\\ all variables >= 0 (default)")
    lines.append("End")
    return "\n".join(lines) + "\n"
