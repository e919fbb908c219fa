"""Closed-form achievable (alpha, beta) point families and transforms.

alpha is the average stored symbols per server, beta the expected downloaded
symbols per server, both normalized by message length.  Every family here is
a closed form; executable protocols live in `protocols`.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SystemParams:
    """An (N, K) system: N servers, K equal-length messages."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one server")
        if self.k < 1:
            raise ValueError("need at least one message")


@dataclass(frozen=True)
class TradeoffPoint:
    """An achievable (alpha, beta) pair with a provenance label."""

    alpha: Fraction
    beta: Fraction
    label: str = ""

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("tradeoff points have positive alpha and beta")

    def weighted_cost(self, ca: Fraction, cb: Fraction) -> Fraction:
        return ca * self.alpha + cb * self.beta

    def scaled(self, factor: Fraction, label: str) -> "TradeoffPoint":
        return TradeoffPoint(self.alpha * factor, self.beta * factor, label)


def baseline_costs(p: SystemParams) -> tuple[Fraction, Fraction]:
    """Minimal costs at the unconstrained extremes.

    alpha0 = K/N is the least storage that still determines every message;
    beta0 = sum_{i=1..K} N^-i is the least download with unlimited storage.
    """
    alpha0 = Fraction(p.k, p.n)
    beta0 = sum(Fraction(1, p.n**i) for i in range(1, p.k + 1))
    return alpha0, beta0


def sun_jafar_point(p: SystemParams) -> TradeoffPoint:
    """Full replication, capacity-achieving download: (K, beta0)."""
    _, beta0 = baseline_costs(p)
    return TradeoffPoint(Fraction(p.k), beta0, label=f"sun-jafar(N={p.n})")


def mds_points(p: SystemParams) -> list[TradeoffPoint]:
    """MDS-coded storage family, one point per code dimension T in [1:N]."""
    _require_two_servers(p)
    n, k = p.n, p.k
    pts = []
    for t in range(1, n + 1):
        alpha = Fraction(k, t)
        beta = Fraction(1, n) * sum(Fraction(t, n) ** i for i in range(k))
        pts.append(TradeoffPoint(alpha, beta, label=f"mds(T={t})"))
    return pts


def uncoded_points(p: SystemParams) -> list[TradeoffPoint]:
    """Uncoded (replicated segment) storage family, T in [1:N]."""
    _require_two_servers(p)
    n, k = p.n, p.k
    pts = []
    for t in range(1, n + 1):
        alpha = Fraction(k * t, n)
        beta = Fraction(1, n) * sum(Fraction(1, t**i) for i in range(k))
        pts.append(TradeoffPoint(alpha, beta, label=f"uncoded(T={t})"))
    return pts


def gmds_points(p: SystemParams) -> list[TradeoffPoint]:
    """Generalized MDS family over pairs T1 <= T2 in [1:N]."""
    _require_two_servers(p)
    n, k = p.n, p.k
    pts = []
    for t1 in range(1, n + 1):
        for t2 in range(t1, n + 1):
            alpha = Fraction(k * t2, n * t1)
            beta = Fraction(1, n) * sum(Fraction(t1, t2) ** i for i in range(k))
            pts.append(TradeoffPoint(alpha, beta, label=f"gmds(T1={t1},T2={t2})"))
    return pts


def prop3_points(p: SystemParams) -> list[TradeoffPoint]:
    """Points reached by round-robin placement of the two XOR constructions.

    (a) the two-server compressed code spread over N servers;
    (b) for each divisor T of K with K/T + 1 <= N, the grouped-parity code
        on K/T + 1 servers spread over N.
    """
    n, k = p.n, p.k
    if n < 2 or k < 2:
        raise ValueError("round-robin family needs N >= 2 and K >= 2")
    pts = []
    factor_a = Fraction(2, n)
    pts.append(
        TradeoffPoint(
            factor_a * (Fraction(2 * k - 1, 2)),
            factor_a * Fraction(2**k - 1, 2**k),
            label="prop3(a)",
        )
    )
    for t in range(1, k + 1):
        if k % t:
            continue
        if k // t + 1 > n:
            continue
        factor_b = Fraction(k // t + 1, n)
        pts.append(
            TradeoffPoint(
                factor_b * t,
                factor_b * Fraction(2**t - 1, 2**t),
                label=f"prop3(b,T={t})",
            )
        )
    return pts


def cyclic_transform_point(
    pt: TradeoffPoint, base_n: int, m: int
) -> TradeoffPoint:
    """Scale an (base_n, K) point onto m >= base_n servers by base_n/m.

    Round-robin reuse of the base code across m servers divides both costs
    by the same factor; the label records the composition.
    """
    if base_n < 1:
        raise ValueError("base server count must be positive")
    if m < base_n:
        raise ValueError("can only spread a code over at least base_n servers")
    factor = Fraction(base_n, m)
    return pt.scaled(factor, label=f"cyclic({pt.label},{base_n}->{m})")


@dataclass(frozen=True)
class TwoApproxReport:
    point: TradeoffPoint
    alpha0: Fraction
    beta0: Fraction
    dominated_by_2x: bool


def two_approx_check(p: SystemParams) -> TwoApproxReport:
    """Check that doubling both baseline costs lands above an achievable point.

    The witness is the uncoded point at T=2: its alpha equals 2*alpha0
    exactly and its beta is strictly below 2*beta0 for every N >= 2.
    """
    _require_two_servers(p)
    alpha0, beta0 = baseline_costs(p)
    point = uncoded_points(p)[1]  # T = 2
    ok = point.alpha == 2 * alpha0 and point.beta < 2 * beta0
    return TwoApproxReport(point, alpha0, beta0, ok)


def _require_two_servers(p: SystemParams):
    if p.n < 2:
        raise ValueError("family requires N >= 2")
