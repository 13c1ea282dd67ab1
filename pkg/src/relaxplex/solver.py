"""Branch-and-bound search for a maximum k-plex."""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import BoundKind, BoundResult, compute_bound
from .graph import Graph, degeneracy_order, induced_subgraph, iter_bits
from .kplex import SearchState, is_kplex
from .oracle import max_extension_bruteforce

DEFAULT_CUTOFF = 1800.0

NodeHook = Callable[[SearchState, BoundResult], None]


@dataclass(frozen=True)
class SolveReport:
    best: tuple[int, ...]
    size: int
    optimal: bool
    nodes: int
    bound_calls: int
    color_wins: int
    partition_wins: int
    elapsed: float
    heuristic_size: int = 0
    reduced_n: int = 0

    @property
    def status(self) -> str:
        return "optimal" if self.optimal else "timeout"


class _Timeout(Exception):
    pass


def heuristic_lb(g: Graph, k: int, deadline: float | None = None) -> list[int]:
    """Greedy k-plex from every start vertex, in reverse degeneracy order.

    Each start is extended by the feasible vertex with the fewest non-neighbours
    in the current set (ties: higher degree, then lower id). Stops early once
    ``deadline`` (a ``time.monotonic`` value) passes, after at least one start.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return []
    order, _ = degeneracy_order(g)
    adj, deg, full = g.adj, g.degrees, g.all_mask
    best: list[int] = []
    for start in reversed(order):
        if best and deadline is not None and time.monotonic() > deadline:
            break
        # a k-plex larger than best through start needs deg(start) >= len(best) + 1 - k
        if deg[start] + k <= len(best):
            continue
        members = [start]
        delta = [0] * g.n
        for w in iter_bits(~adj[start] & full):
            delta[w] += 1
        cand = full & ~(1 << start)
        while True:
            for u in members:
                if delta[u] == k:
                    cand &= adj[u]
            pick = -1
            pick_key = None
            for v in iter_bits(cand):
                if delta[v] + 1 > k:
                    cand ^= 1 << v
                    continue
                key = (delta[v], -deg[v], v)
                if pick_key is None or key < pick_key:
                    pick, pick_key = v, key
            if pick < 0:
                break
            members.append(pick)
            cand &= ~(1 << pick)
            for w in iter_bits(~adj[pick] & full):
                delta[w] += 1
        if len(members) > len(best):
            best = members
    return sorted(best)


def peel(g: Graph, k: int, lb: int) -> list[int]:
    """Vertices surviving iterated removal of every ``v`` with ``deg(v) + k <= lb``."""
    deg = list(g.degrees)
    alive = g.all_mask
    queue = [v for v in range(g.n) if deg[v] + k <= lb]
    removed = 0
    for v in queue:
        removed |= 1 << v
    while queue:
        v = queue.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive & ~removed):
            deg[u] -= 1
            if deg[u] + k <= lb:
                removed |= 1 << u
                queue.append(u)
    return list(iter_bits(alive & ~removed))


class _Search:
    def __init__(self, g: Graph, k: int, kind: BoundKind, lb: int, deadline: float,
                 node_hook: Optional[NodeHook]):
        self.g = g
        self.kind = kind
        self.st = SearchState(g, k, lb=lb)
        self.deadline = deadline
        self.node_hook = node_hook
        self.best: list[int] = []
        self.nodes = 0
        self.bound_calls = 0
        self.color_wins = 0
        self.partition_wins = 0

    def _pick_branch_vertex(self) -> int:
        st = self.st
        adj, delta, C = self.g.adj, st.delta, st.C
        pick, pick_key = -1, None
        for v in iter_bits(C):
            # most constrained first: smallest slack, then fewest candidate neighbours
            key = (-delta[v], (adj[v] & C).bit_count(), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        return pick

    def run(self) -> None:
        st = self.st
        saved_c = st.C
        try:
            while True:
                self.nodes += 1
                if time.monotonic() > self.deadline:
                    raise _Timeout
                st.filter_candidates()
                size = len(st.S)
                if size > st.lb:
                    st.lb = size
                    self.best = list(st.S)
                if size + st.C.bit_count() <= st.lb:
                    return
                res = compute_bound(st, self.kind)
                self.bound_calls += 1
                self.color_wins += res.color_wins
                self.partition_wins += res.partition_wins
                if self.node_hook is not None:
                    self.node_hook(st, res)
                if res.value <= st.lb:
                    return
                v = self._pick_branch_vertex()
                token = st.add_to_s(v)
                try:
                    self.run()
                finally:
                    st.undo(token)
                # exclude branch continues in this frame
                st.C &= ~(1 << v)
        finally:
            st.C = saved_c


def solve(g: Graph, k: int, bound: BoundKind | str = BoundKind.RELAXPUB,
          cutoff: float | None = DEFAULT_CUTOFF, node_hook: Optional[NodeHook] = None) -> SolveReport:
    """Find a maximum k-plex of ``g``; ``cutoff`` is wall-clock seconds (None for no limit).

    On timeout the best k-plex found so far is returned with ``optimal=False``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    kind = BoundKind.parse(bound)
    t0 = time.monotonic()
    deadline = float("inf") if cutoff is None else t0 + cutoff
    if g.n == 0:
        return SolveReport((), 0, True, 0, 0, 0, 0, time.monotonic() - t0)

    best = heuristic_lb(g, k, deadline)
    heuristic_size = len(best)
    survivors = peel(g, k, len(best))
    sub, old_ids = induced_subgraph(g, survivors)
    search = _Search(sub, k, kind, len(best), deadline, node_hook)
    optimal = True
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * sub.n + 1000))
    try:
        search.run()
    except _Timeout:
        optimal = False
    finally:
        sys.setrecursionlimit(limit)
    if len(search.best) > len(best):
        best = sorted(old_ids[v] for v in search.best)
    assert is_kplex(g, best, k)
    return SolveReport(
        best=tuple(best),
        size=len(best),
        optimal=optimal,
        nodes=search.nodes,
        bound_calls=search.bound_calls,
        color_wins=search.color_wins,
        partition_wins=search.partition_wins,
        elapsed=time.monotonic() - t0,
        heuristic_size=heuristic_size,
        reduced_n=sub.n,
    )


def omega_upper_check(g: Graph, k: int, bound: BoundKind | str, samples: int) -> bool:
    """Solve ``g`` and compare the bound against exhaustive search at up to ``samples`` nodes."""
    if g.n > 16:
        raise ValueError("omega_upper_check is limited to graphs with at most 16 vertices")
    failures = []
    seen = [0]

    def hook(st: SearchState, res: BoundResult) -> None:
        if seen[0] >= samples:
            return
        seen[0] += 1
        truth = max_extension_bruteforce(st.g, st.k, st.S, iter_bits(st.C))
        if res.value < truth:
            failures.append((tuple(st.S), st.C, res.value, truth))

    solve(g, k, bound, cutoff=None, node_hook=hook)
    return not failures
