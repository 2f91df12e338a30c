"""Set partitions of {0..n-1} as tuples of block bitmasks.

Partitions are enumerated through restricted growth strings: a[0] = 0 and
a[i] <= 1 + max(a[:i]).  Enumeration is lexicographic in the growth string.
The partition count for n is the Bell number, so full enumeration is only
practical for n up to about 12 (Bell(12) = 4213597).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import VertexSet, members, vertex_set


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        seen = 0
        for b in self.blocks:
            if b == 0:
                raise PartitionError("empty block")
            if b & seen:
                raise PartitionError("blocks overlap")
            seen |= b
        if seen != (1 << self.n) - 1:
            raise PartitionError(f"blocks do not cover [0, {self.n})")
        # Canonical order: ascending minimum element.
        ordered = tuple(sorted(self.blocks, key=lambda b: b & -b))
        if ordered != self.blocks:
            object.__setattr__(self, "blocks", ordered)

    @classmethod
    def from_lists(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        return cls(n, tuple(vertex_set(b) for b in blocks))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        k = max(rgs) + 1 if rgs else 0
        blocks = [0] * k
        for v, b in enumerate(rgs):
            blocks[b] |= 1 << v
        return cls(len(rgs), tuple(blocks))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SetPartition":
        """Parse the "0 1|2 3" text form."""
        try:
            lists = [[int(tok) for tok in part.split()] for part in text.split("|")]
        except ValueError as exc:
            raise PartitionError(f"bad partition text {text!r}") from exc
        if n is None:
            n = 1 + max(v for b in lists for v in b)
        return cls.from_lists(n, lists)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_lists(self) -> list[list[int]]:
        return [members(b) for b in self.blocks]

    def block_texts(self) -> list[str]:
        return [" ".join(map(str, b)) for b in self.block_lists()]

    def text(self) -> str:
        return "|".join(self.block_texts())

    def rgs(self) -> list[int]:
        out = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for v in members(b):
                out[v] = idx
        return out

    def __str__(self) -> str:
        return self.text()


def restricted_growth_strings(n: int, k: int | None = None) -> Iterator[list[int]]:
    """Growth strings of length n (with exactly k distinct values if given)."""
    if n < 1:
        raise PartitionError("n must be >= 1")
    if k is not None and not 1 <= k <= n:
        raise PartitionError(f"block count {k} outside [1, {n}]")
    a = [0] * n

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == n:
            if k is None or used == k:
                yield list(a)
            return
        if k is not None and used + (n - i) < k:
            return
        top = used if k is None else min(used, k - 1)
        for b in range(top + 1):
            a[i] = b
            yield from rec(i + 1, max(used, b + 1))

    yield from rec(1, 1)


def enumerate_partitions(n: int, k: int | None = None) -> Iterator[SetPartition]:
    for rgs in restricted_growth_strings(n, k):
        yield SetPartition.from_rgs(rgs)


def coarsenings(P: SetPartition) -> Iterator[SetPartition]:
    """Every partition that P refines, P itself included.

    Each one is the union of P's blocks grouped by a partition of the block
    indices, so there are Bell(len(P)) of them.
    """
    r = len(P.blocks)
    for rgs in restricted_growth_strings(r):
        merged = [0] * (max(rgs) + 1)
        for idx, g in enumerate(rgs):
            merged[g] |= P.blocks[idx]
        yield SetPartition(P.n, tuple(merged))


def is_refinement(A: SetPartition, B: SetPartition) -> bool:
    """True iff B refines A: every block of B lies inside a block of A."""
    if A.n != B.n:
        raise PartitionError(f"ground sets differ ({A.n} vs {B.n} elements)")
    return all(any(b & ~a == 0 for a in A.blocks) for b in B.blocks)


def is_proper_refinement(A: SetPartition, B: SetPartition) -> bool:
    return A != B and is_refinement(A, B)
