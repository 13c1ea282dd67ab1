"""Upper bounds on the size of the largest k-plex extending a search state.

Every bound works on a scratch copy of the candidate bitset and repeatedly
extracts a vertex subset ``I`` together with an upper bound ``ub`` on how many
of its vertices can join ``S``. Extractions are compared by their ``dise``
ratio ``|I| / ub`` using integer cross-multiplication.

Scan order is fixed: candidates by non-ascending slack (``k - delta``), ties by
vertex id. The second relaxation rule scans ascending slack instead.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .graph import iter_bits
from .kplex import SearchState


class BoundKind(str, enum.Enum):
    GCB = "gcb"
    NORULES = "norules"
    RELAXGCB = "relaxgcb"
    DISEPUB = "disepub"
    GCBPUB = "gcbpub"
    RELAXPUB = "relaxpub"

    @classmethod
    def parse(cls, name: "str | BoundKind") -> "BoundKind":
        if isinstance(name, cls):
            return name
        key = name.strip().lower()
        if key == "tisub-norules":
            key = "norules"
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(b.value for b in cls)
            raise ValueError(f"unknown bound {name!r} (choose from {choices})") from None


@dataclass(frozen=True)
class Extraction:
    verts: int  # bitset
    ub: int
    kind: str  # "coloring" or "partition"
    seed: int = 0  # maximal independent set before relaxation (coloring only)
    rule1: int = 0
    rule2: int = 0

    @property
    def size(self) -> int:
        return self.verts.bit_count()

    @property
    def vertices(self) -> list[int]:
        return list(iter_bits(self.verts))

    def beats(self, other: "Extraction") -> bool:
        """Strictly larger dise, or equal dise and strictly larger extraction."""
        a, b = self.size * other.ub, other.size * self.ub
        return a > b or (a == b and self.size > other.size)


@dataclass(frozen=True)
class BoundResult:
    value: int
    color_wins: int = 0
    partition_wins: int = 0


def compute_tisub(slacks: Iterable[int]) -> int:
    """Largest ``i`` such that the i-th largest slack is at least ``i`` (0 if none)."""
    best = 0
    for i, s in enumerate(sorted(slacks, reverse=True), start=1):
        if s < i:
            break
        best = i
    return best


def canonical_order(st: SearchState, C: int | None = None) -> list[int]:
    delta = st.delta
    return sorted(iter_bits(st.C if C is None else C), key=lambda v: (delta[v], v))


def _greedy_independent_set(adj, order: list[int], C: int) -> int:
    I = 0
    for v in order:
        if C >> v & 1 and not adj[v] & I:
            I |= 1 << v
    return I


def try_color(st: SearchState, C: int | None = None, order: list[int] | None = None,
              rules: bool = True, order_asc: list[int] | None = None) -> Extraction:
    """Extract a maximal independent set, bound it by TISUB, then relax it.

    ``C`` is the working candidate bitset (defaults to ``st.C``), ``order`` its
    canonical scan order (may contain vertices outside ``C``) and
    ``order_asc`` the ascending-slack order used by the second rule. With
    ``rules=False`` the bare independent set and its TISUB are returned.
    """
    if C is None:
        C = st.C
    if not C:
        raise ValueError("try_color needs a nonempty candidate set")
    if order is None:
        order = canonical_order(st, C)
    if order_asc is None and rules:
        order_asc = _rule2_order(order, st.delta)
    adj = st.g.adj
    k = st.k
    delta = st.delta

    I = _greedy_independent_set(adj, order, C)
    seed = I
    ub = compute_tisub(k - delta[v] for v in iter_bits(I))
    if not rules:
        return Extraction(I, ub, "coloring", seed=seed)

    # rule 1: admit v while the loose-or-conflict count stays within ub
    lc = 0
    for v in iter_bits(I):
        if k - delta[v] > ub:
            lc |= 1 << v
    n_lc = lc.bit_count()
    rule1 = 0
    if n_lc < ub:
        rest = C & ~I
        for v in order:
            if not rest >> v & 1:
                continue
            cv = (1 << v) | (adj[v] & I & ~lc)
            if n_lc + cv.bit_count() <= ub:
                I |= 1 << v
                rule1 |= 1 << v
                lc |= cv
                n_lc = lc.bit_count()
                if n_lc == ub:
                    break

    # rule 2: admit low-slack v with few neighbours in the (growing) set
    rule2 = 0
    for v in order_asc:
        if not C >> v & 1 or I >> v & 1:
            continue
        s = k - delta[v]
        if s >= ub:
            continue
        if (adj[v] & I).bit_count() <= ub - s:
            I |= 1 << v
            rule2 |= 1 << v
    return Extraction(I, ub, "coloring", seed=seed, rule1=rule1, rule2=rule2)


def _rule2_order(order: list[int], delta) -> list[int]:
    # ascending slack, ties by id
    return sorted(order, key=lambda v: (-delta[v], v))


def gcb_extraction(st: SearchState, C: int, order: list[int]) -> Extraction:
    I = _greedy_independent_set(st.g.adj, order, C)
    return Extraction(I, min(I.bit_count(), st.k), "coloring", seed=I)


def compute_gcb(st: SearchState) -> BoundResult:
    """Sequential greedy colouring; each colour class contributes ``min(|I|, k)``."""
    C = st.C
    order = canonical_order(st, C)
    total = len(st.S)
    while C:
        ext = gcb_extraction(st, C, order)
        C &= ~ext.verts
        total += ext.ub
    return BoundResult(total)


def relax_coloring(st: SearchState, rules: bool = True) -> BoundResult:
    C = st.C
    order = canonical_order(st, C)
    order_asc = _rule2_order(order, st.delta)
    total = len(st.S)
    while C:
        ext = try_color(st, C, order, rules=rules, order_asc=order_asc)
        C &= ~ext.verts
        total += ext.ub
    return BoundResult(total)


def relax_coloring_norules(st: SearchState) -> BoundResult:
    return relax_coloring(st, rules=False)


def select_partition(st: SearchState, C: int | None = None) -> Extraction | None:
    """Pick ``C \\ N(u)`` over ``u`` in ``S`` maximising ``|I| / min(|I|, slack(u))``."""
    if C is None:
        C = st.C
    adj = st.g.adj
    k = st.k
    delta = st.delta
    best = None
    best_size = best_ub = 0
    for u in st.S:
        s = k - delta[u]
        if s <= 0:
            continue
        I = C & ~adj[u]
        size = I.bit_count()
        if not size:
            continue
        ub = min(size, s)
        if best is None:
            better = True
        else:
            a, b = size * best_ub, best_size * ub
            better = a > b or (a == b and size > best_size)
        if better:
            best, best_size, best_ub = I, size, ub
    if best is None:
        return None
    return Extraction(best, best_ub, "partition")


def compute_disepub(st: SearchState) -> BoundResult:
    C = st.C
    total = len(st.S)
    while C:
        ext = select_partition(st, C)
        if ext is None:
            break
        C &= ~ext.verts
        total += ext.ub
    # leftover vertices are adjacent to all of S
    return BoundResult(total + C.bit_count())


def select_ub(st: SearchState, gcb_coloring: bool = False) -> BoundResult:
    """Seesaw between the colouring and the partition extraction, keeping the better each round."""
    C = st.C
    order = canonical_order(st, C)
    order_asc = _rule2_order(order, st.delta)
    total = len(st.S)
    color_wins = partition_wins = 0
    while C:
        if gcb_coloring:
            ext_c = gcb_extraction(st, C, order)
        else:
            ext_c = try_color(st, C, order, order_asc=order_asc)
        ext_p = select_partition(st, C)
        if ext_p is None or not ext_p.beats(ext_c):
            chosen = ext_c
            color_wins += 1
        else:
            chosen = ext_p
            partition_wins += 1
        C &= ~chosen.verts
        total += chosen.ub
    return BoundResult(total, color_wins, partition_wins)


def compute_gcbpub(st: SearchState) -> BoundResult:
    return select_ub(st, gcb_coloring=True)


def compute_bound(st: SearchState, kind: BoundKind | str) -> BoundResult:
    kind = BoundKind.parse(kind)
    if kind is BoundKind.GCB:
        return compute_gcb(st)
    if kind is BoundKind.NORULES:
        return relax_coloring_norules(st)
    if kind is BoundKind.RELAXGCB:
        return relax_coloring(st)
    if kind is BoundKind.DISEPUB:
        return compute_disepub(st)
    if kind is BoundKind.GCBPUB:
        return compute_gcbpub(st)
    return select_ub(st)
