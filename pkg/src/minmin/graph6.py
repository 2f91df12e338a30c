"""graph6 codec restricted to single-byte orders (1 <= n <= 62)."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


def _pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def graph6_decode(text: str) -> Graph:
    data = text.strip("\r\n")
    offset = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        offset = len(HEADER)
    if not data:
        raise Graph6Error("empty graph6 string", offset)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} at position {pos + offset} is not a graph6 byte",
                              pos + offset)
    n = ord(data[0]) - 63
    if n == 63:
        raise Graph6Error(f"multi-byte orders are not supported (n > {MAX_ORDER})", offset)
    if n < 1:
        raise Graph6Error("order 0 graphs are not supported", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"order {n} needs {nbytes} data bytes, got {len(body)}",
                          offset + 1 + min(len(body), nbytes))
    rows = [0] * n
    bits = iter(_pairs(n))
    for pos, ch in enumerate(body):
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            pair = next(bits, None)
            if pair is None:
                if bit:
                    raise Graph6Error(f"nonzero padding in byte {pos + offset + 1}",
                                      pos + offset + 1)
                continue
            if bit:
                i, j = pair
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def graph6_encode(G: Graph) -> str:
    out = [chr(63 + G.n)]
    value = 0
    count = 0
    for i, j in _pairs(G.n):
        value = value << 1 | (G.adj[i] >> j & 1)
        count += 1
        if count == 6:
            out.append(chr(63 + value))
            value = count = 0
    if count:
        out.append(chr(63 + (value << (6 - count))))
    return "".join(out)
