"""Named graphs with fixed, documented labelings.

Labelings (0-indexed):

* path n: v0 - v1 - ... - v(n-1).
* cycle n: path plus the edge v(n-1) v0.
* star r: centre v0, leaves v1..vr.
* complete_multipartite sizes: parts take consecutive index ranges in the
  order given, e.g. [2, 3] -> parts {0,1} and {2,3,4}.
* petersen: outer 5-cycle v0..v4, inner pentagram v5..v9 (v(5+i) adjacent
  to v(5+(i+2) mod 5)), spokes v(i) - v(i+5).
* heawood: incidence graph of the Fano plane.  Points are v0..v6, lines are
  v7..v13; line v(7+j) is the point set {j, j+1, j+3} (mod 7).
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError, build_graph, join_graphs

KINDS = ("path", "cycle", "complete", "star", "complete_multipartite",
         "petersen", "heawood", "empty")


def empty(n: int) -> Graph:
    return build_graph(n, [])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(r: int) -> Graph:
    """K_{1,r} with the centre at vertex 0."""
    if r < 1:
        raise GraphError("star needs r >= 1")
    return build_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    part = []
    for idx, s in enumerate(sizes):
        part += [idx] * s
    n = len(part)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if part[i] != part[j]])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return build_graph(10, edges)


def heawood() -> Graph:
    edges = []
    for j in range(7):
        for d in (0, 1, 3):
            edges.append(((j + d) % 7, 7 + j))
    return build_graph(14, edges)


def generate(kind: str, *params: int) -> Graph:
    """Build a named graph.

    ``complete_multipartite`` takes the part sizes as its parameters; every
    other parametrised kind takes a single integer.
    """
    if kind == "petersen":
        _arity(kind, params, 0)
        return petersen()
    if kind == "heawood":
        _arity(kind, params, 0)
        return heawood()
    if kind == "complete_multipartite":
        return complete_multipartite(params)
    builders = {"path": path, "cycle": cycle, "complete": complete,
                "star": star, "empty": empty}
    if kind not in builders:
        raise GraphError(f"unknown graph kind {kind!r}; choose from {', '.join(KINDS)}")
    _arity(kind, params, 1)
    return builders[kind](params[0])


def _arity(kind: str, params: Sequence[int], want: int) -> None:
    if len(params) != want:
        raise GraphError(f"{kind} takes {want} parameter(s), got {len(params)}")


K1 = empty(1)
K2 = complete(2)
K2_BAR = empty(2)


def add_universal(H: Graph) -> Graph:
    return join_graphs(K1, H)


def add_nonadjacent_pair(H: Graph) -> Graph:
    return join_graphs(K2_BAR, H)
