"""k-plex membership and the mutable branch-and-bound search state."""
from __future__ import annotations

from typing import Iterable

from .graph import Graph, iter_bits, to_mask


def is_kplex(g: Graph, verts: Iterable[int], k: int) -> bool:
    """True iff every ``v`` in ``verts`` has at most ``k`` non-neighbours in ``verts`` (itself included)."""
    mask = to_mask(verts)
    size = mask.bit_count()
    for v in iter_bits(mask):
        if size - (g.adj[v] & mask).bit_count() > k:
            return False
    return True


class SearchState:
    """Partial k-plex ``S``, candidate bitset ``C`` and cached non-neighbour counts.

    ``delta[v]`` is ``|S \\ N(v)|`` for every vertex of the graph, so for
    ``v`` in ``S`` it counts ``v`` itself. Mutations go through
    :meth:`add_to_s` / :meth:`filter_candidates`, each returning a token that
    :meth:`undo` consumes in LIFO order.
    """

    __slots__ = ("g", "k", "S", "C", "delta", "lb")

    def __init__(self, g: Graph, k: int, candidates: Iterable[int] | int | None = None, lb: int = 0):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.g = g
        self.k = k
        self.S: list[int] = []
        if candidates is None:
            self.C = g.all_mask
        elif isinstance(candidates, int):
            self.C = candidates
        else:
            self.C = to_mask(candidates)
        self.delta = [0] * g.n
        self.lb = lb

    @classmethod
    def from_sets(cls, g: Graph, k: int, S: Iterable[int], C: Iterable[int]) -> "SearchState":
        """Build a state with ``S`` already placed (no hygiene filtering applied)."""
        S = list(S)
        st = cls(g, k, to_mask(C) & ~to_mask(S))
        for v in S:
            st.C |= 1 << v  # add_to_s expects v in C
            st.add_to_s(v)
        return st

    @property
    def s_mask(self) -> int:
        return to_mask(self.S)

    def slack(self, v: int) -> int:
        return self.k - self.delta[v]

    def add_to_s(self, v: int) -> tuple[int, int]:
        assert self.C >> v & 1, f"vertex {v} is not a candidate"
        old_c = self.C
        self.C &= ~(1 << v)
        self.S.append(v)
        delta = self.delta
        for w in iter_bits(~self.g.adj[v] & self.g.all_mask):
            delta[w] += 1
        assert delta[v] <= self.k, "adding the vertex breaks the k-plex"
        return v, old_c

    def filter_candidates(self) -> tuple[int, int]:
        """Drop candidates that cannot join ``S`` on their own."""
        old_c = self.C
        k = self.k
        delta = self.delta
        adj = self.g.adj
        c = old_c
        for u in self.S:
            if delta[u] == k:
                c &= adj[u]
        for v in iter_bits(c):
            if delta[v] + 1 > k:
                c ^= 1 << v
        self.C = c
        return -1, old_c

    def undo(self, token: tuple[int, int]) -> None:
        v, old_c = token
        if v >= 0:
            popped = self.S.pop()
            assert popped == v
            delta = self.delta
            for w in iter_bits(~self.g.adj[v] & self.g.all_mask):
                delta[w] -= 1
        self.C = old_c

    def copy(self) -> "SearchState":
        other = SearchState.__new__(SearchState)
        other.g, other.k, other.lb = self.g, self.k, self.lb
        other.S, other.C, other.delta = list(self.S), self.C, list(self.delta)
        return other


def delta_slack(st: SearchState, v: int) -> int:
    """``k - delta(S, v)`` from the cached counts."""
    return st.k - st.delta[v]


def add_to_s(st: SearchState, v: int) -> tuple[int, int]:
    return st.add_to_s(v)


def filter_candidates(st: SearchState) -> tuple[int, int]:
    return st.filter_candidates()


def recompute_delta(g: Graph, S: Iterable[int]) -> list[int]:
    """From-scratch ``|S \\ N(v)|`` for every vertex; reference for the cached array."""
    s_mask = to_mask(S)
    size = s_mask.bit_count()
    return [size - (g.adj[v] & s_mask).bit_count() for v in range(g.n)]
