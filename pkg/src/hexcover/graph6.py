"""graph6 encoding for graphs on at most 62 vertices."""

from __future__ import annotations

from .graph import Graph, build_graph


class Graph6Error(ValueError):
    pass


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    if n > 62:
        raise Graph6Error(f"graph6 header supports n <= 62, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def decode_graph6(s: bytes | str) -> Graph:
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.rstrip(b"\n")
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not (63 <= c <= 126) for c in s):
        raise Graph6Error("byte out of graph6 range 63..126")
    n = s[0] - 63
    if n > 62:
        raise Graph6Error("multi-byte size headers are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after graph6 data")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)
