"""Coalitions, c-partitions, minimality and exact brute-force solvers.

A c-partition is a vertex partition in which every block is either a
single vertex that dominates the graph, or is non-dominating and has a
non-dominating partner block whose union with it dominates.

The minmin coalition number c_min(G) is the least order of a minimal
c-partition.  Merging two blocks of a c-partition whose union does not
dominate yields another c-partition, so every c-partition can be coarsened
to a minimal one with fewer or equal blocks.  Hence c_min(G) is the least
order of *any* c-partition, and the brute-force search below only needs to
ascend k and stop at the first hit.  The returned witness is still checked
with :func:`is_minimal_c_partition`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator

from .domination import dominated_by, is_dominating_set
from .graph import Graph, VertexSet, popcount
from .partitions import SetPartition, coarsenings, is_refinement


class CoalitionError(ValueError):
    pass


class Method(str, Enum):
    BRUTE_FORCE = "brute_force"
    FORMULA = "formula"
    REDUCTION = "reduction"
    RECOGNIZER = "recognizer"


@dataclass(frozen=True)
class Justification:
    """Why a block qualifies: a dominating singleton, or a coalition partner."""

    partner: int | None = None

    @property
    def singleton(self) -> bool:
        return self.partner is None

    def to_json(self) -> dict[str, Any]:
        if self.partner is None:
            return {"type": "singleton"}
        return {"type": "coalition", "with": self.partner}


@dataclass(frozen=True)
class CPartitionCertificate:
    partition: SetPartition
    justify: tuple[Justification, ...]

    @property
    def order(self) -> int:
        return len(self.partition)

    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "blocks": self.partition.block_texts(),
            "justify": [j.to_json() for j in self.justify],
        }

    @classmethod
    def from_json(cls, n: int, data: dict[str, Any]) -> "CPartitionCertificate":
        original = [_mask(b) for b in data["blocks"]]
        partition = SetPartition(n, tuple(original))
        # Blocks are re-sorted canonically; remap partner indices to match.
        where = {mask: i for i, mask in enumerate(partition.blocks)}
        justify = [None] * len(original)
        for mask, j in zip(original, data["justify"]):
            if j["type"] == "singleton":
                justify[where[mask]] = Justification()
            elif j["type"] == "coalition":
                justify[where[mask]] = Justification(where[original[j["with"]]])
            else:
                raise CoalitionError(f"unknown justification {j['type']!r}")
        if len(data["blocks"]) != data.get("order", len(data["blocks"])):
            raise CoalitionError("certificate order does not match its block count")
        return cls(partition, tuple(justify))


def _mask(text: str) -> VertexSet:
    mask = 0
    for tok in text.split():
        mask |= 1 << int(tok)
    return mask


@dataclass
class CminResult:
    """Outcome of a c_min / C computation.

    ``value`` is None when the graph has no c-partition at all.
    """

    value: int | None
    method: Method
    certificate: CPartitionCertificate | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def exists(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "method": self.method.value,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "trace": list(self.trace),
        }


def is_coalition(G: Graph, X: VertexSet, Y: VertexSet) -> bool:
    if X == 0 or Y == 0:
        raise CoalitionError("coalition sets must be nonempty")
    if X & Y:
        raise CoalitionError("coalition sets must be disjoint")
    return (not is_dominating_set(G, X) and not is_dominating_set(G, Y)
            and is_dominating_set(G, X | Y))


def _justify(G: Graph, P: SetPartition) -> tuple[list[Justification], int | None]:
    """Justifications for the qualifying prefix and the first failing block."""
    full = G.full
    cover = [dominated_by(G, b) for b in P.blocks]
    out = []
    for i, b in enumerate(P.blocks):
        if cover[i] == full:
            if popcount(b) == 1:
                out.append(Justification())
                continue
            return out, i
        for j, c in enumerate(cover):
            if j != i and c != full and cover[i] | c == full:
                out.append(Justification(j))
                break
        else:
            return out, i
    return out, None


def is_c_partition(G: Graph, P: SetPartition) -> CPartitionCertificate | None:
    if P.n != G.n:
        raise CoalitionError(f"partition is on {P.n} vertices, graph has {G.n}")
    justify, failed = _justify(G, P)
    if failed is not None:
        return None
    return CPartitionCertificate(P, tuple(justify))


def first_failing_block(G: Graph, P: SetPartition) -> int | None:
    """Index of the first block that is neither a dominating singleton nor in a coalition."""
    return _justify(G, P)[1]


def certificate_is_valid(G: Graph, cert: CPartitionCertificate) -> bool:
    """Re-check a certificate directly against the definitions."""
    P = cert.partition
    if P.n != G.n or len(cert.justify) != len(P.blocks):
        return False
    for i, (block, why) in enumerate(zip(P.blocks, cert.justify)):
        if why.partner is None:
            if popcount(block) != 1 or not is_dominating_set(G, block):
                return False
        else:
            j = why.partner
            if not 0 <= j < len(P.blocks) or j == i:
                return False
            if not is_coalition(G, block, P.blocks[j]):
                return False
    return True


def merge_blocks(G: Graph, P: SetPartition, i: int, j: int) -> SetPartition:
    if is_c_partition(G, P) is None:
        raise CoalitionError("input is not a c-partition")
    if i == j or not (0 <= i < len(P) and 0 <= j < len(P)):
        raise CoalitionError(f"bad block indices {i}, {j}")
    union = P.blocks[i] | P.blocks[j]
    if is_dominating_set(G, union):
        raise CoalitionError(f"blocks {i} and {j} together dominate the graph")
    rest = tuple(b for k, b in enumerate(P.blocks) if k not in (i, j))
    merged = SetPartition(P.n, rest + (union,))
    assert is_c_partition(G, merged) is not None
    assert merged != P and is_refinement(merged, P)
    return merged


def is_minimal_c_partition(G: Graph, P: SetPartition) -> bool:
    if is_c_partition(G, P) is None:
        raise CoalitionError("input is not a c-partition")
    return not any(A != P and is_c_partition(G, A) is not None for A in coarsenings(P))


def search_c_partitions(G: Graph, k: int) -> Iterator[tuple[VertexSet, ...]]:
    """Block masks of every k-block c-partition, in growth-string order.

    Depth-first over vertex assignments.  A branch is cut as soon as some
    block with two or more vertices dominates the graph: domination is
    closed under supersets, so such a block can never qualify.
    """
    n, full = G.n, G.full
    if not 1 <= k <= n:
        return
    closed = [row | 1 << v for v, row in enumerate(G.adj)]
    blocks = [0] * k
    cover = [0] * k

    def qualifies() -> bool:
        for b in range(k):
            cb = cover[b]
            if cb == full:
                continue  # dominating singleton; larger ones were pruned
            for c in range(k):
                cc = cover[c]
                if c != b and cc != full and cb | cc == full:
                    break
            else:
                return False
        return True

    def rec(i: int, used: int) -> Iterator[tuple[VertexSet, ...]]:
        if i == n:
            if used == k and qualifies():
                yield tuple(blocks)
            return
        if used + n - i < k:
            return
        nv = closed[i]
        bit = 1 << i
        for b in range(used):
            saved = cover[b]
            grown = saved | nv
            if grown == full:
                continue
            blocks[b] |= bit
            cover[b] = grown
            yield from rec(i + 1, used)
            blocks[b] ^= bit
            cover[b] = saved
        if used < k:
            blocks[used] = bit
            cover[used] = nv
            yield from rec(i + 1, used + 1)
            blocks[used] = cover[used] = 0

    yield from rec(0, 0)


def c_partitions(G: Graph, k: int | None = None) -> Iterator[CPartitionCertificate]:
    """Every c-partition of G (of order k if given), with certificates."""
    orders = range(1, G.n + 1) if k is None else (k,)
    for order in orders:
        for blocks in search_c_partitions(G, order):
            cert = is_c_partition(G, SetPartition(G.n, blocks))
            assert cert is not None
            yield cert


def _first(G: Graph, k: int) -> CPartitionCertificate | None:
    blocks = next(search_c_partitions(G, k), None)
    if blocks is None:
        return None
    cert = is_c_partition(G, SetPartition(G.n, blocks))
    assert cert is not None
    return cert


def cmin_bruteforce(G: Graph, max_order: int | None = None) -> CminResult:
    """c_min(G) by ascending block count with early exit.

    ``max_order`` stops the ascent early; the result then has value None if
    no c-partition of order <= max_order exists.
    """
    top = G.n if max_order is None else min(G.n, max_order)
    for k in range(1, top + 1):
        cert = _first(G, k)
        if cert is not None:
            assert is_minimal_c_partition(G, cert.partition)
            return CminResult(k, Method.BRUTE_FORCE, cert,
                              [f"first c-partition found at order {k}"])
    return CminResult(None, Method.BRUTE_FORCE, None,
                      [f"no c-partition of order <= {top}"])


def coalition_number_bruteforce(G: Graph) -> CminResult:
    """C(G): the largest order of a c-partition, by descending search."""
    for k in range(G.n, 0, -1):
        cert = _first(G, k)
        if cert is not None:
            return CminResult(k, Method.BRUTE_FORCE, cert,
                              [f"largest c-partition has order {k}"])
    return CminResult(None, Method.BRUTE_FORCE, None, ["no c-partition"])
