"""graph6 encoding, short form only (n <= 62).

Size byte ``n + 63``, then the upper triangle read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups,
each offset by 63. Pad bits in the last group are zero.
"""
from __future__ import annotations

from .errors import Graph6Error, Graph6LengthError, Graph6PaddingError, SizeError
from .graph import MAX_VERTICES, Graph


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise SizeError(f"graph6 short form holds at most {MAX_VERTICES} vertices")
    # column j contributes x(0,j) .. x(j-1,j): its low j bits, least significant first
    bits = "".join(format(g.rows[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, g.n))
    bits += "0" * (-len(bits) % 6)
    return chr(g.n + 63) + "".join(chr(int(bits[p:p + 6], 2) + 63) for p in range(0, len(bits), 6))


def decode_graph6(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip("\n")
    if s.startswith(">>graph6<<"):
        raise Graph6Error("graph6 header lines are not supported")
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        bad = next(ch for ch, c in zip(s, codes) if not 0 <= c <= 63)
        raise Graph6Error(f"byte {bad!r} outside the graph6 range 63..126")
    n = codes[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise SizeError("graph6 string describes an empty graph")
    data = codes[1:]
    if len(data) != _data_length(n):
        raise Graph6LengthError(f"n={n} needs {_data_length(n)} data bytes, got {len(data)}")
    nbits = n * (n - 1) // 2
    pad = 6 * len(data) - nbits
    if data and data[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    bits = "".join(format(c, "06b") for c in data)
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        col = int(bits[pos:pos + j][::-1], 2)
        pos += j
        rows[j] |= col
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= 1 << j
            col ^= low
    return Graph._trusted(n, tuple(rows))


def unescape_latex(s: str) -> str:
    """Undo TeX escaping (\\_, \\{, \\}) in graph6 text."""
    return s.replace("\\_", "_").replace("\\{", "{").replace("\\}", "}")
