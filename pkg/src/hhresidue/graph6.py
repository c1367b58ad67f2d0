"""graph6 codec: the printable-ASCII encoding of labeled simple graphs.

The order n is one byte chr(n+63) for n <= 62, or '~' plus three bytes
(18 bits, big-endian) for 63 <= n <= 258047. The upper triangle of the
adjacency matrix follows in column-major pair order (0,1),(0,2),(1,2),
(0,3),..., packed six bits per byte (first pair most significant), each
byte offset by 63, with zero padding to a byte boundary. Encoding is exact
for the labeled graph (not isomorph-canonical) and round-trips bit for bit.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"
_MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position in the
    original string."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional '>>graph6<<' prefix is
    stripped)."""
    base = 0
    s = text
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code} outside graph6 range 63..126", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n = vals[0]
        idx = 1
    else:
        if len(s) >= 2 and vals[1] == 63:
            raise Graph6Error(f"orders above {_MAX_N} are not supported", base + 1)
        if len(s) < 4:
            raise Graph6Error("truncated extended order field", base + len(s))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        if n <= 62:
            raise Graph6Error("non-minimal order encoding", base)
        idx = 4
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    have = len(vals) - idx
    if have != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for order {n}, found {have}",
            base + min(len(s), idx + need),
        )
    edges = []
    pairs_done = 0
    i, j = 0, 1  # current pair, column-major order
    for k in range(need):
        val = vals[idx + k]
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if pairs_done < npairs:
                if bit:
                    edges.append((i, j))
                pairs_done += 1
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bits", base + idx + k)
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode the labeled graph; inverse of :func:`parse_graph6`."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= _MAX_N:
        head = "~" + chr((n >> 12) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError(f"orders above {_MAX_N} are not supported")
    adj = g.adj
    chars = []
    acc = 0
    filled = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        chars.append(chr((acc << (6 - filled)) + 63))
    return head + "".join(chars)
