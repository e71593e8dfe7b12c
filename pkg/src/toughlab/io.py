"""Text formats: graph6, 1-based edge lists, and DOT (write only)."""

from __future__ import annotations

import re
from typing import Iterable

from .graph import MAX_ORDER, Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Malformed graph text."""


def _upper_triangle(n: int) -> Iterable[tuple[int, int]]:
    # graph6 bit order: column by column over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + (n >> shift & 63)) for shift in (12, 6, 0)]
    bits = [g.adj[i] >> j & 1 for i, j in _upper_triangle(n)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return (GRAPH6_HEADER if header else "") + "".join(out)


def read_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise FormatError(f"graph6 string contains characters outside '?'..'~': {s!r}")
    values = [ord(ch) - 63 for ch in s]
    if values[0] < 63:
        n, body = values[0], values[1:]
    elif len(values) >= 4 and values[1] < 63:
        n = values[1] << 12 | values[2] << 6 | values[3]
        body = values[4:]
    else:
        raise FormatError("graph6 header for orders above 258047 is not supported")
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"graph6 order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6} for n={n}")
    bits = [(v >> (5 - b)) & 1 for v in body for b in range(6)]
    if any(bits[nbits:]):
        raise FormatError("graph6 padding bits are not zero")
    edges = [ij for ij, bit in zip(_upper_triangle(n), bits) if bit]
    return Graph.from_edges(n, edges)


_ORDER_COMMENT = re.compile(r"#\s*n\s*[=:]?\s*(\d+)\s*$")


def write_edgelist(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edgelist(text: str, one_based: bool = True, n: int | None = None) -> Graph:
    """Parse one edge per line. ``#`` starts a comment; a ``# n=N`` line fixes the order
    so isolated vertices survive a round trip."""
    offset = 1 if one_based else 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared = n
    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _ORDER_COMMENT.match(raw.strip())
        if m and declared is None:
            declared = int(m.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two vertex labels, got {line!r}")
        try:
            u, v = (int(p) - offset for p in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex label in {line!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: vertex label below {offset}")
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u + offset}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u + offset} {v + offset}")
        seen.add(key)
        edges.append(key)
    order = declared if declared is not None else max((v for e in edges for v in e), default=-1) + 1
    if order < 1:
        raise FormatError("edge list describes no vertices")
    if order > MAX_ORDER:
        raise FormatError(f"order {order} exceeds {MAX_ORDER}")
    for u, v in edges:
        if v >= order:
            raise FormatError(f"vertex {v + offset} out of range for n={order}")
    return Graph.from_edges(order, edges)


def write_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v + 1};" for v in range(g.n)]
    lines += [f"  {u + 1} -- {v + 1};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(GRAPH6_HEADER):
            return "graph6"
        if line.startswith("#") or line.split()[0].lstrip("-").isdigit():
            return "edgelist"
        return "graph6"
    raise FormatError("empty input")


def read_graph(text: str) -> Graph:
    """Read graph6 (first nonblank line) or an edge list, whichever the text is."""
    if detect_format(text) == "graph6":
        first = next(line for line in text.splitlines() if line.strip())
        return read_graph6(first)
    return read_edgelist(text)


WRITERS = {"graph6": write_graph6, "edgelist": write_edgelist, "dot": write_dot}


def write_graph(g: Graph, fmt: str) -> str:
    try:
        writer = WRITERS[fmt]
    except KeyError:
        raise FormatError(f"unknown format {fmt!r}; expected one of {sorted(WRITERS)}") from None
    text = writer(g)
    return text if text.endswith("\n") else text + "\n"
