"""Naive reference implementations, independent of the bitset code paths.

Graphs here are plain dicts {vertex: set(neighbours)}.
"""

from __future__ import annotations

from itertools import combinations


def adjacency(G) -> dict[int, set[int]]:
    return {v: {u for u in range(G.n) if G.adj[v] >> u & 1} for v in range(G.n)}


def dominates(adj: dict[int, set[int]], S) -> bool:
    S = set(S)
    return all(v in S or adj[v] & S for v in adj)


def set_partitions(items: list):
    """All set partitions of ``items`` by inserting the first element everywhere."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def is_c_partition(adj, blocks) -> bool:
    for i, b in enumerate(blocks):
        if dominates(adj, b):
            if len(b) == 1:
                continue
            return False
        if not any(j != i and not dominates(adj, c) and dominates(adj, list(b) + list(c))
                   for j, c in enumerate(blocks)):
            return False
    return True


def cmin(adj) -> int | None:
    orders = [len(p) for p in set_partitions(sorted(adj)) if is_c_partition(adj, p)]
    return min(orders) if orders else None


def coalition_number(adj) -> int | None:
    orders = [len(p) for p in set_partitions(sorted(adj)) if is_c_partition(adj, p)]
    return max(orders) if orders else None


def domination_number(adj) -> int:
    for k in range(1, len(adj) + 1):
        if any(dominates(adj, S) for S in combinations(adj, k)):
            return k
    raise AssertionError


def bell_numbers(limit: int) -> list[int]:
    """Bell(0..limit) by the Bell triangle."""
    row = [1]
    out = [1]
    for _ in range(limit):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        out.append(row[0])
    return out


def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
