"""Graph representation on bitmask vertex sets, plus edge-list parsing.

Vertices are integers 0..n-1 and every vertex subset is a plain Python int
used as a bitmask (bit v set <=> vertex v in the set).  Capacity is capped
at 64 vertices: one machine word per set keeps all subset operations O(1),
and the enumeration engines are compute-bound long before a wider
representation would pay off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError

MAX_VERTICES = 64

#: A vertex subset encoded as a bitmask.  Purely documentary alias.
VertexSet = int


def bit(v: int) -> int:
    return 1 << v


def iter_vertices(mask: VertexSet) -> Iterator[int]:
    """Yield the vertices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: VertexSet) -> list[int]:
    return list(iter_vertices(mask))


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: vertex count plus per-vertex neighbour masks.

    ``adj[v]`` is the open neighbourhood of ``v``.  Instances are immutable
    and hashable, so they are safe to share across workers and usable as
    cache keys.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {self.n}")
            if row & bit(v):
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_vertices(row):
                if not self.adj[u] & bit(v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edge list with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in iter_vertices(self.adj[u]) if u < v]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        return cls(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line is ``n m``; the following m non-comment lines
    are ``u v`` with 0-based endpoints.  Lines starting with ``#`` and blank
    lines are skipped.  Duplicate edges are tolerated (they collapse to one).
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().lstrip("﻿")
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected header 'n m', got {line!r}")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header field in {line!r}") from None
            if not 1 <= n <= MAX_VERTICES:
                raise ParseError(f"line {lineno}: vertex count {n} outside [1, {MAX_VERTICES}]")
            if m < 0:
                raise ParseError(f"line {lineno}: negative edge count {m}")
            header = (n, m)
            continue
        if len(edges) >= header[1]:
            raise ParseError(f"line {lineno}: unexpected data after {header[1]} edges")
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected edge 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex index out of range in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if header is None:
        raise ParseError("line 1: empty input, expected header 'n m'")
    if len(edges) != header[1]:
        raise ParseError(f"expected {header[1]} edges, found only {len(edges)}")
    return Graph.from_edges(header[0], edges)


def open_neighborhood(g: Graph, members: VertexSet) -> VertexSet:
    """Union of adj[v] over v in the set (members themselves may appear)."""
    nb = 0
    for v in iter_vertices(members):
        nb |= g.adj[v]
    return nb


def closed_neighborhood(g: Graph, members: VertexSet) -> VertexSet:
    return members | open_neighborhood(g, members)


def a_value(g: Graph, members: VertexSet) -> int:
    """Number of vertices outside the closed neighbourhood of the set."""
    return g.n - closed_neighborhood(g, members).bit_count()


def is_independent(g: Graph, members: VertexSet) -> bool:
    return not members & open_neighborhood(g, members)


def is_connected(g: Graph) -> bool:
    """Single connected component, by bitmask BFS from vertex 0."""
    visited = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in iter_vertices(frontier):
            reach |= g.adj[v]
        frontier = reach & ~visited
        visited |= frontier
    return visited == g.full_mask


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep``, relabelled to 0..k-1.

    Returns the subgraph together with ``old`` where ``old[i]`` is the
    original label of the subgraph's vertex ``i`` (increasing order).
    """
    if keep & ~g.full_mask:
        raise ValueError("keep mask mentions vertices outside the graph")
    if not keep:
        raise ValueError("induced subgraph needs at least one vertex")
    old = tuple(iter_vertices(keep))
    new_index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in iter_vertices(g.adj[v] & keep):
            row |= bit(new_index[u])
        adj.append(row)
    return Graph(len(old), tuple(adj)), old
