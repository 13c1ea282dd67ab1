"""Undirected simple graphs with bitset adjacency, plus instance parsers.

Adjacency rows are plain Python ints used as bitsets: bit ``u`` of ``adj[v]``
is set iff ``u`` and ``v`` are adjacent.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Sequence, Union

Source = Union[str, bytes, IO[str], IO[bytes]]


class GraphParseError(ValueError):
    """Raised when an instance file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    # original vertex ids from the input file, if any
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    degrees: tuple[int, ...] = field(init=False)
    m: int = field(init=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        degs = tuple(row.bit_count() for row in self.adj)
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "m", sum(degs) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[int] | None = None) -> "Graph":
        """Build a graph on vertices ``0..n-1``. Self-loops and duplicates are ignored."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    def label(self, v: int) -> int:
        """Id of ``v`` as written in the source file (1-based when unlabelled)."""
        return self.labels[v] if self.labels is not None else v + 1

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.n} {self.m}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        return source.decode()
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode() if isinstance(data, bytes) else data


def parse_dimacs(source: Source) -> Graph:
    """Parse a DIMACS ``.clq`` instance (1-based ``e u v`` lines after a ``p edge n m`` header)."""
    n = None
    edges = []
    for lineno, raw in enumerate(io.StringIO(_read_text(source)), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed problem line {raw.strip()!r}", lineno)
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise GraphParseError(f"malformed problem line {raw.strip()!r}", lineno) from None
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
        elif tag == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise GraphParseError(f"malformed edge line {raw.strip()!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(f"malformed edge line {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError("vertex id out of range", lineno)
            if u == v:
                raise GraphParseError("self-loop not allowed in DIMACS input", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unexpected token {tag!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge' line")
    return Graph.from_edges(n, edges)


def parse_edgelist(source: Source) -> Graph:
    """Parse a whitespace-separated edge list; ``%``/``#`` lines are comments.

    Arbitrary non-negative ids are compacted to ``0..n-1`` in order of first
    appearance. Self-loops are dropped.
    """
    ids: dict[int, int] = {}
    edges = []
    for lineno, raw in enumerate(io.StringIO(_read_text(source)), start=1):
        line = raw.strip()
        if not line or line[0] in "%#":
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphParseError(f"expected two vertex ids, got {line!r}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise GraphParseError(f"negative vertex id in {line!r}", lineno)
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        edges.append((u, v))
    if not edges:
        raise GraphParseError("no edges")
    return Graph.from_edges(len(ids), edges, labels=list(ids))


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        return "dimacs" if tokens[0] == "p" else "edgelist"
    return "edgelist"


def parse_graph(source: Source, fmt: str = "auto") -> Graph:
    text = _read_text(source)
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(path, fmt: str = "auto") -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read(), fmt)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Return the min-degree removal order and the degeneracy of ``g``.

    Ties are broken by the smallest vertex id.
    """
    deg = list(g.degrees)
    alive = g.all_mask
    order = []
    degeneracy = 0
    # bucket queue keyed by current degree, each bucket a bitset
    buckets = [0] * (max(deg, default=0) + 1)
    for v, d in enumerate(deg):
        buckets[d] |= 1 << v
    d = 0
    for _ in range(g.n):
        d = max(d - 1, 0)
        while not buckets[d]:
            d += 1
        bucket = buckets[d]
        v = (bucket & -bucket).bit_length() - 1
        buckets[d] ^= 1 << v
        alive ^= 1 << v
        order.append(v)
        degeneracy = max(degeneracy, d)
        for u in iter_bits(g.adj[v] & alive):
            du = deg[u]
            buckets[du] ^= 1 << u
            buckets[du - 1] |= 1 << u
            deg[u] = du - 1
    return order, degeneracy


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g[keep]`` relabelled to ``0..len(keep)-1`` and the new-to-old id map."""
    old_ids: Sequence[int] = sorted(set(keep))
    pos = {v: i for i, v in enumerate(old_ids)}
    keep_mask = to_mask(old_ids)
    adj = []
    for v in old_ids:
        row = 0
        for u in iter_bits(g.adj[v] & keep_mask):
            row |= 1 << pos[u]
        adj.append(row)
    labels = None if g.labels is None else tuple(g.labels[v] for v in old_ids)
    return Graph(len(old_ids), tuple(adj), labels), list(old_ids)
