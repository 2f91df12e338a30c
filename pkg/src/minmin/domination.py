"""Domination predicates and a small exact domination-number solver."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, VertexSet, members


def dominated_by(G: Graph, S: VertexSet) -> VertexSet:
    """Union of closed neighbourhoods N[v] over v in S."""
    cover = S
    for v in members(S):
        cover |= G.adj[v]
    return cover


def is_dominating_set(G: Graph, S: VertexSet) -> bool:
    # The empty set never dominates: every graph here has n >= 1.
    return dominated_by(G, S) == G.full


def undominated_vertices(G: Graph, S: VertexSet) -> VertexSet:
    return G.full & ~dominated_by(G, S)


def minimum_dominating_set(G: Graph) -> VertexSet:
    """First minimum dominating set by (cardinality, bitmask value)."""
    closed = [row | 1 << v for v, row in enumerate(G.adj)]
    full = G.full
    for k in range(1, G.n + 1):
        best = None
        for combo in combinations(range(G.n), k):
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover == full:
                mask = sum(1 << v for v in combo)
                if best is None or mask < best:
                    best = mask
        if best is not None:
            return best
    raise AssertionError("the full vertex set always dominates")


def domination_number(G: Graph) -> int:
    return bin(minimum_dominating_set(G)).count("1")
