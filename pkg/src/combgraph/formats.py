"""graph6 and edge-list parsing and serialization.

graph6 is the interchange format: a size prefix followed by the
column-major upper-triangle adjacency bits, six bits per printable
character offset by 63.  The short size form covers n <= 62, the '~'
long form larger graphs.
"""

from __future__ import annotations

from .core import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph6 or edge-list input."""


def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Parse a single graph6 token (an optional '>>graph6<<' header is
    stripped)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    if not s:
        raise FormatError("empty graph6 input")
    data = []
    for ch in s:
        code = ord(ch)
        if code < 63 or code > 126:
            raise FormatError(f"malformed graph6 character {ch!r}")
        data.append(code - 63)
    if data[0] < 63:
        n = data[0]
        payload = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        payload = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        payload = data[8:]
    else:
        raise FormatError("truncated graph6 size prefix")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(payload) < need:
        raise FormatError(
            f"truncated graph6 payload: need {need} characters, got {len(payload)}"
        )
    if len(payload) > need:
        raise FormatError("trailing characters after graph6 payload")
    bits = []
    for d in payload:
        bits.extend((d >> k) & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise FormatError("nonzero padding bits in graph6 payload")
    pairs = _pair_order(n)
    edges = [pairs[k] for k in range(npairs) if bits[k]]
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Serialize to graph6; the short size form is used for n <= 62."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(
            chr(((n >> k) & 63) + 63) for k in (12, 6, 0)
        )
    else:
        prefix = "~~" + "".join(
            chr(((n >> k) & 63) + 63) for k in (30, 24, 18, 12, 6, 0)
        )
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pair_order(n)]
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k : k + 6]:
            val = (val << 1) | bit
        chars.append(chr(val + 63))
    return prefix + "".join(chars)


def parse_edgelist(text: str) -> Graph:
    """Parse the human-authoring format: a header line "n m" followed by m
    lines "u v" with 0-based indices.  Blank lines and '#' comments are
    ignored."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"non-numeric header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, got {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"non-numeric edge {line!r}") from exc
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except Exception as exc:
        raise FormatError(str(exc)) from exc


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
