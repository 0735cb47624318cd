"""Reading and writing graphs: graph6, edge lists, and spec expressions.

Spec expressions name a graph by a left-associative chain of atoms joined
by ``*`` (lexicographic product)::

    atom := C<int> | K<int> | E<int> | P<int> | g6:<graph6> | @<path>
    expr := atom | expr * atom

``E<n>`` is the edgeless graph on ``n`` vertices. A file referenced with
``@`` holds either an edge list (first line ``n <count>``) or a single
graph6 line.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graph import Graph, GraphError, complete, cycle, empty, lex_product, path

_G6_MIN, _G6_MAX = 63, 126
_G6_SMALL_LIMIT = 62
_G6_LARGE_LIMIT = 258047


class Graph6Error(ValueError):
    pass


class EdgeListError(ValueError):
    pass


class GraphSpecError(ValueError):
    """Spec expression error; ``offset`` is the byte offset of the fault."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} (at offset {offset})")

    def annotated(self) -> str:
        """Error message with a caret under the faulting position."""
        if not self.text:
            return str(self)
        return f"{self}\n  {self.text}\n  {' ' * self.offset}^"


# graph6

def _g6_chars(data: bytes | str) -> bytes:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("graph6 data must be ASCII") from exc
    data = data.strip()
    for k, c in enumerate(data):
        if not _G6_MIN <= c <= _G6_MAX:
            raise Graph6Error(f"byte {c!r} at position {k} outside 63..126")
    return data


def write_graph6(g: Graph) -> bytes:
    n = g.vertex_count
    if n <= _G6_SMALL_LIMIT:
        header = [n + 63]
    elif n <= _G6_LARGE_LIMIT:
        header = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        raise Graph6Error(f"graph6 cannot encode {n} vertices")
    bits = [g.rows[i] >> j & 1 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        body.append(chunk + 63)
    return bytes(header + body)


def parse_graph6(data: bytes | str) -> Graph:
    raw = _g6_chars(data)
    if not raw:
        raise Graph6Error("empty graph6 string")
    if raw[0] != 126:
        n, body = raw[0] - 63, raw[1:]
    elif len(raw) >= 4 and raw[1] != 126:
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
        if n <= _G6_SMALL_LIMIT:
            raise Graph6Error(f"non-canonical long header for {n} vertices")
    else:
        raise Graph6Error("malformed length header")
    if n < 1:
        raise Graph6Error("graph6 encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for {n} vertices, got {len(body)}")
    value = 0
    for c in body:
        value = value << 6 | (c - 63)
    pad = len(body) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


# edge lists

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise EdgeListError(f"line {lineno}: expected 'n <count>' header")
            n = _int_token(tokens[1], lineno)
            if n < 1:
                raise EdgeListError(f"line {lineno}: vertex count must be positive")
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v'")
        u, v = (_int_token(t, lineno) for t in tokens)
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: vertex index out of range for n={n}")
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EdgeListError(f"line {lineno}: {tok!r} is not an integer") from None


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph_file(path: str | Path) -> Graph:
    text = Path(path).read_text()
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.split()[0] == "n":
            return parse_edge_list(text)
        return parse_graph6(stripped)
    raise ValueError(f"{path}: no graph found")


# spec expressions

_FAMILIES = {"C": cycle, "K": complete, "E": empty, "P": path}
_INT_RE = re.compile(r"[0-9]+")


def parse_spec(s: str) -> Graph:
    """Graph denoted by a spec expression such as ``K2*C6``."""
    result = None
    pos = 0
    while True:
        start = pos
        while pos < len(s) and s[pos] == " ":
            pos += 1
        end = s.find("*", pos)
        if end < 0:
            end = len(s)
        atom = s[pos:end].rstrip(" ")
        if not atom:
            raise GraphSpecError("expected a graph atom", pos if pos < len(s) else start, s)
        g = _parse_atom(atom, pos, s)
        result = g if result is None else lex_product(result, g)
        if end == len(s):
            return result
        pos = end + 1


def _parse_atom(atom: str, offset: int, text: str) -> Graph:
    head = atom[0]
    if head in _FAMILIES:
        m = _INT_RE.fullmatch(atom, 1)
        if not m:
            bad = next((k for k in range(1, len(atom)) if not atom[k].isdigit()), len(atom))
            raise GraphSpecError(f"expected vertex count after {head!r}", offset + bad, text)
        try:
            return _FAMILIES[head](int(atom[1:]))
        except GraphError as exc:
            raise GraphSpecError(str(exc), offset, text) from None
    if atom.startswith("g6:"):
        try:
            return parse_graph6(atom[3:])
        except Graph6Error as exc:
            raise GraphSpecError(f"bad graph6: {exc}", offset + 3, text) from None
    if head == "@":
        try:
            return read_graph_file(atom[1:])
        except (OSError, ValueError) as exc:
            raise GraphSpecError(f"cannot read {atom[1:]!r}: {exc}", offset + 1, text) from None
    raise GraphSpecError(f"unknown atom {atom!r}", offset, text)
