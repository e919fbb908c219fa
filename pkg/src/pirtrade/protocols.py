"""Executable XOR retrieval protocols over GF(2).

A protocol fixes per-server storage (lists of XOR combos of message symbols),
a uniform key space driving the query plan, and a decoder.  Two base
constructions are provided:

* construction A (two servers): server 1 stores every message, server 2
  stores the pairwise sums W1^Wk and can therefore form any even-size XOR;
  the requested message is split into a random combo and its complement,
  with the even-parity combo always routed to server 2 (the storage there
  cannot produce odd-parity combos).

* construction B (K = T*(N-1)): servers 1..N-1 store disjoint groups of T
  messages, server N stores the T cross-group parity sums; queries apply a
  random bit pattern to every group, flipped in one position for the target
  group, and the answers XOR to the requested message.

`cyclic_compose` spreads any base protocol over M >= N servers round-robin,
scaling both costs by N/M exactly.

Verification is exhaustive and exact: correctness enumerates every message
assignment, key, and target; privacy compares exact per-server query
distributions across targets.  Enumerations above a configurable budget
refuse to run rather than silently sampling.
"""

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

Combo = frozenset  # of (message index 1..K, symbol position 0..L-1)

DEFAULT_BUDGET = 2**24
BUDGET_ENV = "PIRTRADE_VERIFY_BUDGET"


class BudgetExceeded(Exception):
    """Raised when an exhaustive enumeration would exceed the budget."""

    def __init__(self, required, budget):
        super().__init__(
            f"enumeration of {required} cases exceeds budget {budget}"
        )
        self.required = required
        self.budget = budget


def resolve_budget(budget=None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def combo_of(indices, positions=0) -> Combo:
    """Build a combo of (message, position) pairs; `indices` are 1-based."""
    if isinstance(positions, int):
        return frozenset((k, positions) for k in indices)
    return frozenset(zip(indices, positions))


def combo_str(combo: Combo, msg_len: int = 1) -> str:
    """Render like the storage/retrieval tables: "a^c", with position
    suffixes once messages span multiple symbols; the empty combo is ∅."""
    if not combo:
        return "∅"

    def sym(k, pos):
        name = chr(ord("a") + k - 1) if k <= 26 else f"w{k}"
        return name if msg_len == 1 else f"{name}{pos + 1}"

    return "^".join(sym(k, pos) for k, pos in sorted(combo))


@dataclass(frozen=True)
class CostReport:
    alpha_bar: Fraction
    beta_bar: Fraction
    storage_per_server: tuple[int, ...]
    expected_len_per_server: tuple[Fraction, ...]


class Protocol:
    """Common behaviour; subclasses fill in storage, keys, queries, decode.

    Queries are per-server tuples of combos; an empty combo means "send
    nothing" and contributes zero to the answer length.  Answers align with
    the query combos (empty combo -> bit 0).
    """

    name = "protocol"
    n_servers: int
    n_messages: int
    msg_len: int
    storage: tuple[tuple[Combo, ...], ...]
    key_count: int

    def iter_keys(self):
        raise NotImplementedError

    def queries(self, k, key):
        raise NotImplementedError

    def decode(self, k, key, answers) -> tuple[int, ...]:
        raise NotImplementedError

    # -- exact statistics ---------------------------------------------------

    def expected_answer_lengths(self, k, budget=None) -> list[Fraction]:
        """Exact per-server expected answer length for target k."""
        budget = resolve_budget(budget)
        if self.key_count > budget:
            raise BudgetExceeded(self.key_count, budget)
        totals = [0] * self.n_servers
        for key in self.iter_keys():
            for s, combos in enumerate(self.queries(k, key)):
                totals[s] += sum(1 for c in combos if c)
        return [Fraction(t, self.key_count) for t in totals]

    def query_distribution(self, k, server, budget=None) -> dict:
        """Exact distribution of the query value seen by one server."""
        budget = resolve_budget(budget)
        if self.key_count > budget:
            raise BudgetExceeded(self.key_count, budget)
        counts = Counter(
            self.queries(k, key)[server - 1] for key in self.iter_keys()
        )
        return {q: Fraction(c, self.key_count) for q, c in counts.items()}

    # -- GF(2) helpers ------------------------------------------------------

    def _mask(self, combo: Combo) -> int:
        return sum(1 << ((k - 1) * self.msg_len + pos) for k, pos in combo)

    def _storage_basis(self, server) -> list[int]:
        basis = []
        for combo in self.storage[server - 1]:
            v = _reduce(self._mask(combo), basis)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return basis


def _reduce(v: int, basis: list[int]) -> int:
    for b in basis:
        if v ^ b < v:
            v ^= b
    return v


class TableProtocol(Protocol):
    """Protocol given by explicit storage, key list, and query/decode rules."""

    def __init__(self, name, n_servers, n_messages, msg_len, storage, keys,
                 query_fn, decode_fn):
        self.name = name
        self.n_servers = n_servers
        self.n_messages = n_messages
        self.msg_len = msg_len
        self.storage = tuple(tuple(s) for s in storage)
        self._keys = tuple(keys)
        self.key_count = len(self._keys)
        self._query_fn = query_fn
        self._decode_fn = decode_fn

    def iter_keys(self):
        return iter(self._keys)

    def queries(self, k, key):
        return self._query_fn(k, key)

    def decode(self, k, key, answers):
        return self._decode_fn(k, key, answers)


def _xor_all_decode(k, key, answers):
    bit = 0
    for server_bits in answers:
        for b in server_bits:
            bit ^= b
    return (bit,)


def build_construction_a(k_count: int) -> TableProtocol:
    """Two-server compressed code: costs (K - 1/2, (2^K - 1)/2^K)."""
    if k_count < 1:
        raise ValueError("need at least one message")
    kc = k_count
    storage = (
        tuple(combo_of([j]) for j in range(1, kc + 1)),
        tuple(combo_of([1, j]) for j in range(2, kc + 1)),
    )
    keys = range(2**kc)

    def query(k, v):
        chosen = frozenset(j for j in range(1, kc + 1) if (v >> (j - 1)) & 1)
        x = combo_of(chosen)
        y = combo_of(chosen ^ {k})
        if len(x) % 2 == 0:
            odd, even = y, x
        else:
            odd, even = x, y
        return ((odd,), (even,))

    return TableProtocol(
        f"construction-a(K={kc})", 2, kc, 1, storage, keys, query,
        _xor_all_decode,
    )


def build_construction_b(n: int, t: int) -> TableProtocol:
    """Grouped storage with one parity server: costs (T, (2^T - 1)/2^T)."""
    if n < 2:
        raise ValueError("need at least two servers")
    if t < 1:
        raise ValueError("group size must be positive")
    kc = t * (n - 1)
    groups = [
        tuple(range(t * (s - 1) + 1, t * s + 1)) for s in range(1, n)
    ]
    parity = [
        combo_of([t * j + i for j in range(n - 1)]) for i in range(1, t + 1)
    ]
    storage = tuple(
        tuple(combo_of([msg]) for msg in grp) for grp in groups
    ) + (tuple(parity),)
    keys = range(2**t)

    def pattern_bits(v):
        return [i for i in range(1, t + 1) if (v >> (i - 1)) & 1]

    def query(k, v):
        grp = (k - 1) // t + 1
        pos = (k - 1) % t + 1
        vp = v ^ (1 << (pos - 1))
        out = []
        for s in range(1, n):
            bits = pattern_bits(v if s == grp else vp)
            out.append((combo_of([t * (s - 1) + i for i in bits]),))
        par = frozenset().union(*(parity[i - 1] for i in pattern_bits(vp))) \
            if pattern_bits(vp) else frozenset()
        out.append((par,))
        return tuple(out)

    return TableProtocol(
        f"construction-b(N={n},T={t})", n, kc, 1, storage, keys, query,
        _xor_all_decode,
    )


class CyclicProtocol(Protocol):
    """Round-robin placement of a base (N, K) protocol over M >= N servers.

    Message m-th slices are served by an independent copy of the base code
    whose server role r sits on physical server ((m + r - 1) mod M) + 1; the
    composite key is the tuple of independent base keys.
    """

    def __init__(self, base: Protocol, m_servers: int):
        if m_servers < base.n_servers:
            raise ValueError("composite needs at least base.n_servers servers")
        self.base = base
        self.name = f"cyclic({base.name},M={m_servers})"
        self.n_servers = m_servers
        self.n_messages = base.n_messages
        self.msg_len = m_servers * base.msg_len
        self.key_count = base.key_count**m_servers
        self._hosted = [[] for _ in range(m_servers)]  # (subcode, role)
        for sub in range(1, m_servers + 1):
            for role in range(1, base.n_servers + 1):
                self._hosted[self._phys(sub, role) - 1].append((sub, role))
        for lst in self._hosted:
            lst.sort()
        self.storage = tuple(
            tuple(
                self._remap(combo, sub)
                for sub, role in hosted
                for combo in base.storage[role - 1]
            )
            for hosted in self._hosted
        )

    def _phys(self, sub, role):
        return (sub + role - 1) % self.n_servers + 1

    def _remap(self, combo, sub):
        lb = self.base.msg_len
        return frozenset((k, (sub - 1) * lb + pos) for k, pos in combo)

    def iter_keys(self):
        return itertools.product(tuple(self.base.iter_keys()),
                                 repeat=self.n_servers)

    def queries(self, k, key):
        out = []
        for hosted in self._hosted:
            combos = []
            for sub, role in hosted:
                for combo in self.base.queries(k, key[sub - 1])[role - 1]:
                    combos.append(self._remap(combo, sub))
            out.append(tuple(combos))
        return tuple(out)

    def decode(self, k, key, answers):
        # split each server's answer run back into per-subcode slices
        per_sub = {sub: [None] * self.base.n_servers
                   for sub in range(1, self.n_servers + 1)}
        for s, hosted in enumerate(self._hosted):
            at = 0
            for sub, role in hosted:
                width = len(self.base.queries(k, key[sub - 1])[role - 1])
                per_sub[sub][role - 1] = tuple(answers[s][at:at + width])
                at += width
        lb = self.base.msg_len
        bits = [0] * self.msg_len
        for sub in range(1, self.n_servers + 1):
            piece = self.base.decode(k, key[sub - 1], tuple(per_sub[sub]))
            bits[(sub - 1) * lb:sub * lb] = piece
        return tuple(bits)

    def expected_answer_lengths(self, k, budget=None):
        # independence of the sub-keys lets the expectation split exactly
        base_el = self.base.expected_answer_lengths(k, budget=budget)
        return [
            sum(base_el[role - 1] for _, role in hosted)
            for hosted in self._hosted
        ]

    def query_distribution(self, k, server, budget=None):
        budget = resolve_budget(budget)
        hosted = self._hosted[server - 1]
        dist = {(): Fraction(1)}
        for sub, role in hosted:
            part = self.base.query_distribution(k, role, budget=budget)
            nxt = {}
            for prefix, p in dist.items():
                for q, pq in part.items():
                    val = prefix + tuple(self._remap(c, sub) for c in q)
                    nxt[val] = nxt.get(val, Fraction(0)) + p * pq
            if len(nxt) > budget:
                raise BudgetExceeded(len(nxt), budget)
            dist = nxt
        return dist


def cyclic_compose(base: Protocol, m_servers: int) -> CyclicProtocol:
    return CyclicProtocol(base, m_servers)


# -- verification and measurement -------------------------------------------


def verify_correctness(p: Protocol, budget=None) -> bool:
    """Exhaustively check the decoder recovers the target message.

    Answers are produced through each server's stored combos: a query combo
    outside the GF(2) span of a server's storage cannot be answered and
    fails the check (this is what catches corrupted layouts).
    """
    budget = resolve_budget(budget)
    kl = p.n_messages * p.msg_len
    required = 2**kl * p.key_count * p.n_messages
    if required > budget:
        raise BudgetExceeded(required, budget)
    bases = [p._storage_basis(s) for s in range(1, p.n_servers + 1)]
    for k in range(1, p.n_messages + 1):
        lo = (k - 1) * p.msg_len
        for key in p.iter_keys():
            qs = p.queries(k, key)
            masks = []
            for s, combos in enumerate(qs):
                row = []
                for combo in combos:
                    m = p._mask(combo)
                    if _reduce(m, bases[s]):
                        return False  # not computable from stored content
                    row.append(m)
                masks.append(row)
            for w in range(2**kl):
                answers = tuple(
                    tuple((m & w).bit_count() & 1 for m in row)
                    for row in masks
                )
                got = p.decode(k, key, answers)
                want = tuple((w >> (lo + i)) & 1 for i in range(p.msg_len))
                if tuple(got) != want:
                    return False
    return True


def verify_privacy(p: Protocol, budget=None) -> bool:
    """Exact per-server query distributions must not depend on the target."""
    budget = resolve_budget(budget)
    for s in range(1, p.n_servers + 1):
        ref = p.query_distribution(1, s, budget=budget)
        for k in range(2, p.n_messages + 1):
            if p.query_distribution(k, s, budget=budget) != ref:
                return False
    return True


def measure_costs(p: Protocol, budget=None) -> CostReport:
    """Exact costs: alpha from the layout, beta from the key expectation.

    The per-target download must agree across targets (it does for every
    private protocol); a mismatch raises instead of averaging it away.
    """
    n, length = p.n_servers, p.msg_len
    sizes = tuple(len(s) for s in p.storage)
    alpha = Fraction(sum(sizes), n * length)
    first = p.expected_answer_lengths(1, budget=budget)
    for k in range(2, p.n_messages + 1):
        if p.expected_answer_lengths(k, budget=budget) != first:
            raise ValueError("download cost depends on the target message")
    beta = Fraction(sum(first), n * length)
    return CostReport(alpha, beta, sizes, tuple(first))


# -- table rendering ---------------------------------------------------------


def _render_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    def fmt(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(header), sep] + [fmt(r) for r in rows])


def storage_table(p: Protocol) -> str:
    """Columns are servers, rows storage slots, cells combo expressions."""
    depth = max(len(s) for s in p.storage)
    header = [f"S_{s}" for s in range(1, p.n_servers + 1)]
    rows = [
        [
            combo_str(p.storage[s][i], p.msg_len) if i < len(p.storage[s]) else "∅"
            for s in range(p.n_servers)
        ]
        for i in range(depth)
    ]
    return _render_table(header, rows)


def retrieval_table(p: Protocol, k: int, budget=None) -> str:
    """Rows are distinct query rows with exact probabilities, columns servers."""
    budget = resolve_budget(budget)
    if p.key_count > budget:
        raise BudgetExceeded(p.key_count, budget)
    counts = Counter()
    order = []
    for key in p.iter_keys():
        row = tuple(
            ",".join(combo_str(c, p.msg_len) for c in combos) if combos else "∅"
            for combos in p.queries(k, key)
        )
        if row not in counts:
            order.append(row)
        counts[row] += 1
    header = ["prob"] + [f"server {s}" for s in range(1, p.n_servers + 1)]
    rows = [
        [str(Fraction(counts[row], p.key_count))] + list(row) for row in order
    ]
    return _render_table(header, rows)
