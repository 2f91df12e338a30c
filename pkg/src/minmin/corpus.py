"""Graph corpora: exhaustive labelled enumeration, graph6 files, named families."""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from . import generators
from .graph import Graph, is_connected, universal_vertices
from .graph6 import Graph6Error, graph6_decode
from .recognizers import family_M_derivations

EXHAUSTIVE_MAX = 7  # 2^21 labelled graphs at n = 7


class CorpusError(ValueError):
    pass


def _filter(name: str) -> Callable[[Graph], bool]:
    if name == "all":
        return lambda G: True
    if name == "connected":
        return is_connected
    if name == "no_universal":
        return lambda G: universal_vertices(G) == 0
    if name.startswith("min_degree"):
        try:
            d = int(name.partition("=")[2])
        except ValueError:
            raise CorpusError(f"bad filter {name!r}; use min_degree=<d>") from None
        return lambda G: min(G.degrees()) == d
    if name == "tree":
        return lambda G: G.m == G.n - 1 and is_connected(G)
    raise CorpusError(f"unknown filter {name!r}")


def enumerate_labeled_graphs(n: int, filters: str | Sequence[str] = "all") -> Iterator[Graph]:
    """Every labelled simple graph on n vertices, in edge-bitmask order.

    Bit t of the edge mask is the t-th vertex pair in graph6 order
    (0,1), (0,2), (1,2), (0,3), ...  ``filters`` are ANDed; ``min_degree=d``
    keeps graphs whose minimum degree is exactly d.
    """
    if not 1 <= n <= EXHAUSTIVE_MAX:
        raise CorpusError(f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_MAX}")
    if isinstance(filters, str):
        filters = [f for f in filters.split(",") if f]
    preds = [_filter(f) for f in filters if f != "all"]
    pairs = [(1 << i, 1 << j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        t = 0
        m = mask
        while m:
            if m & 1:
                bi, bj = pairs[t]
                rows[bi.bit_length() - 1] |= bj
                rows[bj.bit_length() - 1] |= bi
            m >>= 1
            t += 1
        G = Graph._unchecked(n, tuple(rows))
        if all(p(G) for p in preds):
            yield G


TREE_MAX = 10


def _prufer_tree(n: int, seq: Sequence[int]) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    rows = [0] * n

    def link(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for v in seq:
        leaf = heapq.heappop(leaves)
        link(leaf, v)
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    link(heapq.heappop(leaves), heapq.heappop(leaves))
    return Graph._unchecked(n, tuple(rows))


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labelled trees, decoded from Pruefer sequences.

    Same set as the labelled corpus filtered by ``tree`` but reachable for
    n beyond the exhaustive cap.
    """
    if not 2 <= n <= TREE_MAX:
        raise CorpusError(f"tree enumeration supports 2 <= n <= {TREE_MAX}")
    for seq in product(range(n), repeat=n - 2):
        yield _prufer_tree(n, seq)


@dataclass(frozen=True)
class NumberedGraph:
    line: int
    graph: Graph


def ingest_graph6_file(path: str | os.PathLike) -> Iterator[NumberedGraph]:
    """Decode a graph6 file line by line; ">>" lines are headers, blanks skipped."""
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or (line.startswith(">>") and not line.startswith(">>graph6<<")):
                continue
            if line == ">>graph6<<":
                continue
            try:
                G = graph6_decode(line)
            except Graph6Error as exc:
                where = "" if exc.position is None else f", byte {exc.position}"
                raise CorpusError(f"{os.fspath(path)}:{lineno}{where}: {exc}") from exc
            yield NumberedGraph(lineno, G)


def _range(text: str) -> range:
    lo, sep, hi = text.partition("-")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise CorpusError(f"bad order range {text!r}") from None


_NAMED_RANGES: dict[str, Callable[[int], Graph]] = {
    "path": generators.path,
    "cycle": generators.cycle,
    "star": generators.star,
    "complete": generators.complete,
    "empty": generators.empty,
}


def open_corpus(source: str) -> Iterator[Graph]:
    """Graphs described by a corpus source string.

    * ``labeled:<n or lo-hi>[:<filter>[,<filter>...]]``
    * ``path:<lo-hi>``, ``cycle:...``, ``star:...``, ``complete:...``, ``empty:...``
    * ``trees:<lo-hi>`` (labelled trees, n >= 2)
    * ``named:petersen,heawood``
    * ``family_m:<max order>``
    * ``file:<path>`` or a bare path to a graph6 file
    """
    kind, _, rest = source.partition(":")
    if kind == "labeled":
        orders, _, filt = rest.partition(":")
        return (G for n in _range(orders)
                for G in enumerate_labeled_graphs(n, filt or "all"))
    if kind in _NAMED_RANGES:
        build = _NAMED_RANGES[kind]
        return (build(k) for k in _range(rest))
    if kind == "trees":
        return (T for n in _range(rest) for T in enumerate_labeled_trees(n))
    if kind == "named":
        return (generators.generate(name) for name in rest.split(","))
    if kind == "family_m":
        return (d.build() for d in family_M_derivations(int(rest)))
    path = rest if kind == "file" else source
    if not os.path.exists(path):
        raise CorpusError(f"unknown corpus {source!r}")
    return (ng.graph for ng in ingest_graph6_file(path))

