"""Structural fast paths for c_min.

Every predicate here is only meaningful inside its hypotheses (no universal
vertex, minimum degree two, connectivity, ...).  The predicates refuse
out-of-scope input rather than guessing, and :func:`cmin_dispatch` checks
scope before applying each one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Sequence

from .coalition import (
    CminResult,
    CPartitionCertificate,
    Method,
    cmin_bruteforce,
    is_c_partition,
)
from .generators import K1, K2, K2_BAR
from .graph import (
    Graph,
    VertexSet,
    build_graph,
    closed_neighborhoods,
    is_complete,
    is_connected,
    join_graphs,
    members,
    popcount,
    remove_vertices,
    universal_vertices,
)
from .partitions import SetPartition

GE4_DEGREE_CAP = 20
DISPATCH_CHECK_ORDER = 9


class RecognizerError(ValueError):
    pass


def _require_no_universal(G: Graph) -> None:
    if universal_vertices(G):
        raise RecognizerError("graph has a universal vertex")


# ----------------------------------------------------------------------------
# Universal-vertex reduction

@dataclass(frozen=True)
class ReductionTrace:
    stripped: int
    residual: Graph
    mapping: tuple[int, ...]  # residual vertex -> original vertex


def strip_universal(G: Graph) -> ReductionTrace:
    """Remove every universal vertex.  c_min(G) = c_min(residual) + stripped."""
    if is_complete(G):
        raise RecognizerError("complete graphs have no residual; c_min(K_n) = n")
    uni = universal_vertices(G)
    residual, mapping = remove_vertices(G, uni)
    return ReductionTrace(popcount(uni), residual, tuple(mapping))


# ----------------------------------------------------------------------------
# Threshold predicates (graphs without a universal vertex)

def test_cmin_eq_2(G: Graph) -> int | None:
    """Least v whose closed neighbourhood does not dominate, if any.

    Such a v exists iff c_min(G) = 2, witnessed by {N[v], V - N[v]}.
    """
    _require_no_universal(G)
    full = G.full
    closed = closed_neighborhoods(G)
    for v in range(G.n):
        cover = 0
        for u in members(closed[v]):
            cover |= closed[u]
        if cover != full:
            return v
    return None


def test_cmin_ge_3(G: Graph) -> bool:
    return test_cmin_eq_2(G) is None


def ge4_violation(G: Graph, degree_cap: int = GE4_DEGREE_CAP) -> tuple[int, VertexSet, VertexSet] | None:
    """A vertex v and a split {P, Q} of N[v] with neither part dominating.

    Returns (v, P, Q) with v in P, or None if every split of every closed
    neighbourhood has a dominating part.  Cost is 2^deg(v) per vertex.
    """
    _require_no_universal(G)
    if G.n and G.max_degree() > degree_cap:
        raise RecognizerError(f"maximum degree {G.max_degree()} exceeds cap {degree_cap}")
    full = G.full
    closed = closed_neighborhoods(G)
    for v in range(G.n):
        # v is pinned to P, so each unordered split is visited once.
        others = members(G.adj[v])
        d = len(others)
        for pick in range(1 << d):
            P = 1 << v
            cover_p = closed[v]
            Q = 0
            cover_q = 0
            for idx, u in enumerate(others):
                if pick >> idx & 1:
                    Q |= 1 << u
                    cover_q |= closed[u]
                else:
                    P |= 1 << u
                    cover_p |= closed[u]
            if Q and cover_p != full and cover_q != full:
                return v, P, Q
    return None


def test_cmin_ge_4(G: Graph, degree_cap: int = GE4_DEGREE_CAP) -> bool:
    return ge4_violation(G, degree_cap) is None


# ----------------------------------------------------------------------------
# Family M: closure of {K1, K2, K2bar} under K1 + H and K2bar + H

class MBase(str, Enum):
    K1 = "K1"
    K2 = "K2"
    K2BAR = "K2bar"


class MStep(str, Enum):
    ADD_K1 = "AddK1"
    ADD_K2BAR = "AddK2bar"


_BASE_GRAPHS = {MBase.K1: K1, MBase.K2: K2, MBase.K2BAR: K2_BAR}


@dataclass(frozen=True)
class MDerivation:
    base: MBase
    steps: tuple[MStep, ...] = ()  # in application order, starting from the base

    def build(self) -> Graph:
        G = _BASE_GRAPHS[self.base]
        for step in self.steps:
            G = join_graphs(K1 if step is MStep.ADD_K1 else K2_BAR, G)
        return G

    @property
    def order(self) -> int:
        return (1 if self.base is MBase.K1 else 2) + sum(
            1 if s is MStep.ADD_K1 else 2 for s in self.steps)

    def text(self) -> str:
        out = self.base.value
        for step in self.steps:
            out = ("K1" if step is MStep.ADD_K1 else "K2bar") + " + " + (
                out if " " not in out else f"({out})")
        return out

    def to_json(self) -> dict[str, Any]:
        return {"base": self.base.value, "steps": [s.value for s in self.steps]}


def _base_of(G: Graph) -> MBase | None:
    if G.n == 1:
        return MBase.K1
    if G.n == 2:
        return MBase.K2 if G.adj[0] else MBase.K2BAR
    return None


def is_family_M(G: Graph) -> MDerivation | None:
    """Peel K1 or K2bar layers off G until a base graph remains.

    A universal vertex is peeled before a pair, lowest indices first.
    """
    peeled: list[MStep] = []
    while True:
        base = _base_of(G)
        if base is not None:
            return MDerivation(base, tuple(reversed(peeled)))
        full = G.full
        uni = universal_vertices(G)
        if uni:
            v = members(uni)[0]
            G, _ = remove_vertices(G, 1 << v)
            peeled.append(MStep.ADD_K1)
            continue
        pair = None
        for v in range(G.n):
            missing = full & ~(G.adj[v] | 1 << v)
            if popcount(missing) != 1:
                continue
            w = members(missing)[0]
            if w > v and G.adj[w] | 1 << w | 1 << v == full:
                pair = 1 << v | 1 << w
                break
        if pair is None:
            return None
        G, _ = remove_vertices(G, pair)
        peeled.append(MStep.ADD_K2BAR)


def family_M_derivations(max_order: int) -> Iterable[MDerivation]:
    """Every base/step sequence whose graph has order <= max_order."""
    def extend(der: MDerivation):
        yield der
        for step, add in ((MStep.ADD_K1, 1), (MStep.ADD_K2BAR, 2)):
            if der.order + add <= max_order:
                yield from extend(MDerivation(der.base, der.steps + (step,)))

    for base in MBase:
        if (1 if base is MBase.K1 else 2) <= max_order:
            yield from extend(MDerivation(base))


def property_star(G: Graph) -> bool:
    """Every two distinct non-universal vertices together dominate G."""
    closed = closed_neighborhoods(G)
    full = G.full
    rest = members(full & ~universal_vertices(G))
    for a, u in enumerate(rest):
        for w in rest[a + 1:]:
            if closed[u] | closed[w] != full:
                return False
    return True


# ----------------------------------------------------------------------------
# Family F: degree-2 vertex v, N(v) = {x, y}, x !~ y, x and y joined to U

@dataclass(frozen=True)
class FWitness:
    v: int
    x: int
    y: int
    U: VertexSet

    def to_json(self) -> dict[str, Any]:
        return {"v": self.v, "x": self.x, "y": self.y, "U": members(self.U)}


def is_family_F(G: Graph) -> FWitness | None:
    full = G.full
    for v in range(G.n):
        if popcount(G.adj[v]) != 2:
            continue
        x, y = members(G.adj[v])
        if G.adj[x] >> y & 1:
            continue
        U = full & ~(1 << v | 1 << x | 1 << y)
        if U and G.adj[x] & U == U and G.adj[y] & U == U:
            return FWitness(v, x, y, U)
    return None


def generate_family_F(u_order: int, u_edges: Iterable[Sequence[int]] = ()) -> Graph:
    """F-graph with v = 0, x = 1, y = 2 and U = {3, ..., 2 + u_order}."""
    if u_order < 1:
        raise RecognizerError("U must be nonempty")
    edges = [(0, 1), (0, 2)]
    for u in range(3, 3 + u_order):
        edges += [(1, u), (2, u)]
    for a, b in u_edges:
        if not (0 <= a < u_order and 0 <= b < u_order) or a == b:
            raise RecognizerError(f"invalid U edge ({a}, {b})")
        edges.append((3 + a, 3 + b))
    G = build_graph(3 + u_order, edges)
    assert is_family_F(G) is not None
    return G


# ----------------------------------------------------------------------------
# Closed formulas

def cmin_formula_cycle(n: int) -> int:
    if n < 3:
        raise RecognizerError("cycles need n >= 3")
    if n == 4:
        return 4
    if n in (3, 5):
        return 3
    return 2


def is_tree(G: Graph) -> bool:
    return G.m == G.n - 1 and is_connected(G)


def is_cycle(G: Graph) -> bool:
    return G.n >= 3 and all(d == 2 for d in G.degrees()) and is_connected(G)


def cmin_formula_tree(T: Graph) -> int:
    if not is_tree(T):
        raise RecognizerError("not a tree")
    if T.n < 2:
        raise RecognizerError("trivial tree")
    if T.n >= 3 and universal_vertices(T):
        return 3
    return 2


# ----------------------------------------------------------------------------
# Dispatcher

def _certify(G: Graph, blocks: Iterable[VertexSet]) -> CPartitionCertificate:
    cert = is_c_partition(G, SetPartition(G.n, tuple(blocks)))
    if cert is None:
        raise AssertionError("fast path produced a partition that is not a c-partition")
    return cert


def _residual_cmin(G: Graph) -> tuple[int | None, Method, list[VertexSet] | None, str]:
    """c_min of a graph with no universal vertex; returns (value, method, blocks, note)."""
    n, full = G.n, G.full
    closed = closed_neighborhoods(G)
    connected = is_connected(G)
    if is_tree(G):
        v = test_cmin_eq_2(G)
        return cmin_formula_tree(G), Method.FORMULA, [closed[v], full & ~closed[v]], "tree formula"
    if is_cycle(G):
        value = cmin_formula_cycle(n)
        if value == 2:
            v = test_cmin_eq_2(G)
            blocks = [closed[v], full & ~closed[v]]
        elif value == 4:
            blocks = [1 << v for v in range(n)]
        else:  # C_5; C_3 is complete and never reaches here
            v, P, Q = ge4_violation(G)
            blocks = [P, Q, full & ~(P | Q)]
        return value, Method.FORMULA, blocks, f"cycle formula n={n}"
    degrees = G.degrees()
    if min(degrees) == 1:
        x = degrees.index(1)
        pair = closed[x]
        return 2, Method.RECOGNIZER, [pair, full & ~pair], f"pendant vertex {x}"
    v = test_cmin_eq_2(G)
    if v is not None:
        return 2, Method.RECOGNIZER, [closed[v], full & ~closed[v]], f"N[{v}] does not dominate"
    if connected and n >= 3 and property_star(G):
        return n, Method.RECOGNIZER, [1 << u for u in range(n)], "family M (property star)"
    if min(degrees) == 2:
        w = is_family_F(G)
        if w is not None:
            return 4, Method.RECOGNIZER, [1 << w.v, 1 << w.x, 1 << w.y, w.U], (
                f"family F v={w.v} x={w.x} y={w.y}")
    if max(degrees) <= GE4_DEGREE_CAP:
        hit = ge4_violation(G)
        if hit is not None:
            v, P, Q = hit
            return 3, Method.RECOGNIZER, [P, Q, full & ~(P | Q)], f"split of N[{v}]"
    res = cmin_bruteforce(G)
    blocks = list(res.certificate.partition.blocks) if res.certificate else None
    return res.value, Method.BRUTE_FORCE, blocks, "brute force"


def cmin_dispatch(G: Graph, check: bool = True) -> CminResult:
    """c_min(G) through the cheapest applicable characterisation.

    With ``check`` set, graphs of order <= 9 are re-solved by brute force and
    any disagreement raises AssertionError.
    """
    trace: list[str] = []
    if is_complete(G):
        trace.append("complete graph")
        result = CminResult(G.n, Method.FORMULA, _certify(G, [1 << v for v in range(G.n)]), trace)
    else:
        red = strip_universal(G)
        if red.stripped:
            trace.append(f"stripped {red.stripped} universal vertices")
        value, method, blocks, note = _residual_cmin(red.residual)
        trace.append(note)
        if value is None:
            result = CminResult(None, method, None, trace)
        else:
            lifted = [sum(1 << red.mapping[u] for u in members(b)) for b in blocks]
            lifted += [1 << u for u in members(universal_vertices(G))]
            cert = _certify(G, lifted)
            if red.stripped:
                method = Method.REDUCTION
            result = CminResult(value + red.stripped, method, cert, trace)
    if result.certificate is not None:
        assert result.certificate.order == result.value
    if check and G.n <= DISPATCH_CHECK_ORDER:
        oracle = cmin_bruteforce(G).value
        if oracle != result.value:
            raise AssertionError(f"dispatch gave {result.value}, brute force {oracle}")
    return result
