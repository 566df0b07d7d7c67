"""graph6 encoding and decoding (bit-exact with the nauty format)."""
from __future__ import annotations

from .errors import Graph6Error
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.n
    rows = g.rows
    bits = []
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            bits.append(rj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        b = bits[k:k + 6]
        out.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"character {ch!r} outside the graph6 range")
        data.append(c)
    if data[0] == 63:
        if len(data) < 4:
            raise Graph6Error("truncated vertex-count header")
        if data[1] == 63:
            raise Graph6Error(f"graphs beyond {MAX_VERTICES} vertices are not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
