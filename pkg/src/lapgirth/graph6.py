"""graph6 encoding: order prefix, then the upper triangle column by column, 6 bits per byte offset by 63."""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    n = g.order
    bits = [g.has_edge(i, j) for j in range(1, n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(chr(63 + value))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
        start = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", start)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", start + i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 4 and s[1] != "~":
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    else:
        raise Graph6Error("unsupported or truncated order header", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for order {n}, found {len(body)}", start + pos + min(len(body), nbytes))
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend(value >> (5 - b) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", start + pos + nbytes - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)
