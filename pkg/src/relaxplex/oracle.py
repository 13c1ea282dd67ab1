"""Exhaustive reference answers for small instances.

Deliberately shares nothing with the bounds or the solver beyond ``is_kplex``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, to_mask
from .kplex import is_kplex

MAX_ORACLE_VERTICES = 25
MAX_EXTENSION_CANDIDATES = 20


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: tuple[int, ...]


def _fits(adj, members: list[int], v: int, k: int) -> bool:
    """Can ``v`` join the k-plex ``members``?"""
    size = len(members) + 1
    mask = to_mask(members) | (1 << v)
    for u in members + [v]:
        if size - (adj[u] & mask).bit_count() > k:
            return False
    return True


def _search(adj, k: int, chosen: list[int], rest: list[int], best: list):
    if len(chosen) > best[0]:
        best[0] = len(chosen)
        best[1] = tuple(sorted(chosen))
    if not rest or len(chosen) + len(rest) <= best[0]:
        return
    v, tail = rest[0], rest[1:]
    if _fits(adj, chosen, v, k):
        chosen.append(v)
        _search(adj, k, chosen, tail, best)
        chosen.pop()
    _search(adj, k, chosen, tail, best)


def max_kplex_bruteforce(g: Graph, k: int) -> OracleResult:
    """Maximum k-plex by include/exclude enumeration over vertex ids."""
    if g.n > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle limited to {MAX_ORACLE_VERTICES} vertices, got {g.n}")
    if k < 1:
        raise ValueError("k must be >= 1")
    best = [0, ()]
    _search(g.adj, k, [], list(range(g.n)), best)
    return OracleResult(best[0], best[1])


def max_extension_bruteforce(g: Graph, k: int, S: Iterable[int], C: Iterable[int]) -> int:
    """``|S|`` plus the most vertices of ``C`` that can join ``S`` keeping a k-plex."""
    S = sorted(set(S))
    C = sorted(set(C))
    if len(C) > MAX_EXTENSION_CANDIDATES:
        raise ValueError(f"oracle limited to {MAX_EXTENSION_CANDIDATES} candidates, got {len(C)}")
    if set(S) & set(C):
        raise ValueError("S and C must be disjoint")
    if not is_kplex(g, S, k):
        raise ValueError("S is not a k-plex")
    best = [len(S), tuple(S)]
    _search(g.adj, k, list(S), C, best)
    return best[0]


def max_subset_provided(g: Graph, k: int, S: Iterable[int], I: Iterable[int]) -> int:
    """Most vertices of ``I`` that can be added to ``S`` together."""
    S = list(S)
    return max_extension_bruteforce(g, k, S, I) - len(S)
