"""Finite simple graphs as immutable packed-bit adjacency rows.

Vertices are 0-indexed. Row ``i`` is an int whose bit ``j`` is set iff
``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise GraphError("graphs need at least one vertex")
        if len(self.rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(self.rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {i} references vertices beyond {n - 1}")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphError("graphs need at least one vertex")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise GraphError(f"row {i} has length {len(line)}, expected {n}")
            rows.append(sum(1 << j for j, x in enumerate(line) if x))
        return cls(n, tuple(rows))

    @property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        n = self.vertex_count
        return tuple(tuple(bool(row >> j & 1) for j in range(n)) for row in self.rows)

    def matrix(self) -> list[list[int]]:
        """Adjacency as a 0/1 integer matrix."""
        n = self.vertex_count
        return [[row >> j & 1 for j in range(n)] for row in self.rows]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.vertex_count) for j in _bits(self.rows[i]) if i < j]

    def __len__(self):
        return self.vertex_count

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, edges={self.edges()})"


def _check_vertex(g: Graph, i: int):
    if not 0 <= i < g.vertex_count:
        raise GraphError(f"vertex {i} out of range for graph on {g.vertex_count} vertices")


def complement(g: Graph) -> Graph:
    full = (1 << g.vertex_count) - 1
    return Graph(g.vertex_count, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows)))


def neighbors(g: Graph, i: int) -> set[int]:
    _check_vertex(g, i)
    return set(_bits(g.rows[i]))


def co_neighbors(g: Graph, i: int) -> set[int]:
    """Vertices that are neither ``i`` nor adjacent to it."""
    _check_vertex(g, i)
    full = (1 << g.vertex_count) - 1
    return set(_bits(full & ~g.rows[i] & ~(1 << i)))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.vertex_count):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def regularity(g: Graph) -> int | None:
    """Common vertex degree, or None when the graph is not regular."""
    degs = set(g.degrees)
    return degs.pop() if len(degs) == 1 else None


def lex_product(x: Graph, y: Graph) -> Graph:
    """Lexicographic product: a copy of ``x`` at every vertex of ``y``.

    Vertex ``(i, a)`` with ``i`` in ``x`` and ``a`` in ``y`` sits at flat index
    ``a * p + i`` (``p = |x|``), so block ``a`` of the adjacency matrix is the
    copy of ``x`` over ``a``. Two vertices are adjacent iff they lie in the
    same block and are adjacent in ``x``, or their blocks are adjacent in ``y``.
    """
    p, n = x.vertex_count, y.vertex_count
    block = (1 << p) - 1
    rows = []
    for a in range(n):
        across = 0
        for b in _bits(y.rows[a]):
            across |= block << (b * p)
        for i in range(p):
            rows.append(across | (x.rows[i] << (a * p)))
    return Graph(p * n, tuple(rows))


def disjoint_copies(x: Graph, n: int) -> Graph:
    """``n`` disjoint copies of ``x``."""
    return lex_product(x, empty(n))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``i -> perm[i]``."""
    n = g.vertex_count
    if sorted(perm) != list(range(n)):
        raise GraphError("relabeling must be a permutation of the vertex set")
    rows = [0] * n
    for i in range(n):
        mask = 0
        for j in _bits(g.rows[i]):
            mask |= 1 << perm[j]
        rows[perm[i]] = mask
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    return complement(empty(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, 2**(n choose 2) of them."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[k] for k in _bits(mask)])


def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < density])


def random_regular(n: int, d: int, rng: random.Random, tries: int = 1000) -> Graph:
    """Uniform-ish random ``d``-regular graph via the pairing model with rejection."""
    if not 0 <= d < n or (n * d) % 2:
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    if d > n // 2:
        # dense case: sample the complement, which rejects far less often
        return complement(random_regular(n, n - 1 - d, rng, tries))
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[::2], stubs[1::2]):
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph.from_edges(n, edges)
    raise GraphError(f"pairing model failed to produce a {d}-regular graph on {n} vertices")
