"""Bitset graph representation.

A graph of order n (1 <= n <= 62) is stored as n integer rows; bit u of
row v is set iff uv is an edge.  Vertex sets are plain ints used as
bitmasks over [0, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62

VertexSet = int


class GraphError(ValueError):
    pass


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match order")
        full = self.full
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Trusted internal constructor; skips the symmetry scan.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in members(self.adj[v] >> (v + 1) << (v + 1)):
                yield v, u

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for order {G.n}")


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def open_neighborhood(G: Graph, v: int) -> VertexSet:
    _check_vertex(G, v)
    return G.adj[v]


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    _check_vertex(G, v)
    return G.adj[v] | 1 << v


def closed_neighborhoods(G: Graph) -> list[VertexSet]:
    return [row | 1 << v for v, row in enumerate(G.adj)]


def universal_vertices(G: Graph) -> VertexSet:
    full = G.full
    mask = 0
    for v, row in enumerate(G.adj):
        if row | 1 << v == full:
            mask |= 1 << v
    return mask


def is_complete(G: Graph) -> bool:
    return universal_vertices(G) == G.full


def is_connected(G: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in members(frontier):
            reach |= G.adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == G.full


def complement(G: Graph) -> Graph:
    full = G.full
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def join_graphs(F: Graph, H: Graph) -> Graph:
    """Disjoint union of F and H plus every F-H edge.

    F keeps its labels; H's vertices are shifted up by ``F.n``.
    """
    n = F.n + H.n
    if n > MAX_ORDER:
        raise GraphError(f"join has order {n} > {MAX_ORDER}")
    f_mask = F.full
    h_mask = H.full << F.n
    rows = [row | h_mask for row in F.adj]
    rows += [(row << F.n) | f_mask for row in H.adj]
    return Graph(n, tuple(rows))


def induced_subgraph(G: Graph, keep: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``, relabelled by ascending original index.

    Returns the graph and the map new index -> original vertex.
    """
    if keep == 0:
        raise GraphError("cannot induce a subgraph on no vertices")
    if keep & ~G.full:
        raise GraphError("keep set has vertices outside the graph")
    order = members(keep)
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        rows.append(vertex_set(position[u] for u in members(G.adj[v] & keep)))
    return Graph(len(order), tuple(rows)), order


def remove_vertices(G: Graph, drop: VertexSet) -> tuple[Graph, list[int]]:
    return induced_subgraph(G, G.full & ~drop)
