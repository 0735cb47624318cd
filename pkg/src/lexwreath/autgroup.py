"""Automorphism groups of small graphs.

The search follows the usual individualize-and-refine scheme: equitable
colour refinement on ordered partitions, individualizing the first vertex
of the first non-singleton cell along the leftmost path. Coset
representatives for each level of the stabilizer chain are found by a
backtracking search for a single extension, skipping targets already in
the orbit of the known generators. The resulting generators are fed to a
deterministic Schreier-Sims routine that yields the chain, the exact order
and membership tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .graph import Graph, GraphError, lex_product, _bits

BRUTE_FORCE_LIMIT = 8


class BruteForceLimitError(ValueError):
    """Refusal to enumerate n! permutations above the configured cap."""


class Permutation(tuple):
    """Bijection on ``0..n-1`` stored as its image array."""

    def __new__(cls, images: Iterable[int]):
        self = super().__new__(cls, images)
        if sorted(self) != list(range(len(self))):
            raise ValueError(f"not a permutation: {list(self)}")
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def then(self, other: Sequence[int]) -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(other[i] for i in self)

    def __mul__(self, other):
        return self.then(other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __repr__(self):
        return f"Permutation({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"


def _check_length(g: Graph, sigma: Sequence[int]):
    if len(sigma) != g.vertex_count:
        raise GraphError(f"permutation of length {len(sigma)} for graph on {g.vertex_count} vertices")


# membership characterizations

def preserves_edges(g: Graph, sigma: Sequence[int]) -> bool:
    """Edge test: ``sigma`` maps the neighbourhood of every ``i`` onto that of ``sigma(i)``."""
    _check_length(g, sigma)
    return _preserves(g.rows, sigma)


def _preserves(rows: Sequence[int], sigma: Sequence[int]) -> bool:
    for i, row in enumerate(rows):
        img = 0
        for j in _bits(row):
            img |= 1 << sigma[j]
        if img != rows[sigma[i]]:
            return False
    return True


def permutation_matrix(sigma: Sequence[int]) -> list[list[int]]:
    """``P[i][j] = 1`` iff ``sigma(j) = i``."""
    n = len(sigma)
    p = [[0] * n for _ in range(n)]
    for j, i in enumerate(sigma):
        p[i][j] = 1
    return p


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def commutes_with_adjacency(g: Graph, sigma: Sequence[int]) -> bool:
    """Matrix test: ``d P == P d`` for the permutation matrix of ``sigma``."""
    _check_length(g, sigma)
    d = g.matrix()
    p = permutation_matrix(sigma)
    return _matmul(d, p) == _matmul(p, d)


def is_automorphism(g: Graph, sigma: Sequence[int]) -> bool:
    _check_length(g, sigma)
    if sorted(sigma) != list(range(g.vertex_count)):
        raise GraphError(f"not a permutation: {list(sigma)}")
    return commutes_with_adjacency(g, sigma)


def relation_equivalence_check(g: Graph, sigma: Sequence[int]) -> bool:
    """Evaluate three relation systems for the permutation matrix of ``sigma``.

    (1) ``d u = u d``; (2) for all i, j the sum of ``u[k][j]`` over the
    co-neighbours k of i equals the sum of ``u[i][k]`` over the co-neighbours
    k of j; (3) whenever ``i ~ j`` and ``k !~ l``, ``u[i][k] u[j][l] = 0`` and
    ``u[k][i] u[l][j] = 0``. Returns True iff all three verdicts agree.
    """
    _check_length(g, sigma)
    n = g.vertex_count
    u = permutation_matrix(sigma)
    d = g.matrix()
    rel1 = _matmul(d, u) == _matmul(u, d)

    co = [[k for k in range(n) if k != i and not d[i][k]] for i in range(n)]
    rel2 = all(
        sum(u[k][j] for k in co[i]) == sum(u[i][k] for k in co[j])
        for i in range(n) for j in range(n)
    )

    # "k !~ l" includes k == l. Only k, l in the supports of the relevant
    # rows/columns of u can give a nonzero product, so the scan is restricted
    # to those.
    row_support = [[k for k in range(n) if u[i][k]] for i in range(n)]
    col_support = [[k for k in range(n) if u[k][i]] for i in range(n)]
    rel3 = not any(
        not d[k][l]
        for i in range(n) for j in range(n) if d[i][j]
        for support in (row_support, col_support)
        for k in support[i] for l in support[j]
    )
    return rel1 == rel2 == rel3


# stabilizer chains

def _then(a: tuple, b: tuple) -> tuple:
    return tuple(map(b.__getitem__, a))


def _inv(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    # point -> element mapping the base point to it, and its inverse
    trans: dict = field(default_factory=dict)
    inv: dict = field(default_factory=dict)
    # (point, generator index) pairs whose Schreier generator already sifts
    checked: set = field(default_factory=set)

    def extend(self, identity):
        """Grow the orbit under all current generators.

        Existing representatives are never replaced, so Schreier generators
        checked earlier stay valid.
        """
        if not self.trans:
            self.trans = {self.point: identity}
            self.inv = {self.point: identity}
        queue = list(self.trans)
        for x in queue:
            ux = self.trans[x]
            for s in self.gens:
                y = s[x]
                if y not in self.trans:
                    u = _then(ux, s)
                    self.trans[y] = u
                    self.inv[y] = _inv(u)
                    queue.append(y)


def _sift(levels: list[_Level], h: tuple, start: int) -> tuple[tuple, int]:
    for k in range(start, len(levels)):
        lvl = levels[k]
        u_inv = lvl.inv.get(h[lvl.point])
        if u_inv is None:
            return h, k
        h = _then(h, u_inv)
    return h, len(levels)


def _schreier_sims(degree: int, gens: list[tuple], base: Sequence[int] = ()) -> list[_Level]:
    identity = tuple(range(degree))
    gens = [g for g in gens if g != identity]
    levels = [_Level(b) for b in base]

    def first_moved(h):
        return next(i for i in range(degree) if h[i] != i)

    for g in gens:
        if all(g[l.point] == l.point for l in levels):
            levels.append(_Level(first_moved(g)))
    for k, lvl in enumerate(levels):
        lvl.gens = [g for g in gens if all(g[levels[j].point] == levels[j].point for j in range(k))]
        lvl.extend(identity)

    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        restart = None
        for x, ux in list(lvl.trans.items()):
            for k, s in enumerate(lvl.gens):
                if (x, k) in lvl.checked:
                    continue
                schreier = _then(_then(ux, s), lvl.inv[s[x]])
                h, j = _sift(levels, schreier, i + 1)
                if h == identity:
                    lvl.checked.add((x, k))
                    continue
                if j == len(levels):
                    levels.append(_Level(first_moved(h)))
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(h)
                    levels[l].extend(identity)
                restart = j
                break
            if restart is not None:
                break
        if restart is None:
            i -= 1
        else:
            i = restart
    return [l for l in levels if len(l.trans) > 1 or l.gens]


@dataclass(frozen=True)
class PermGroup:
    """Permutation group given by generators and a stabilizer chain."""

    degree: int
    generators: tuple[Permutation, ...]
    base: tuple[int, ...]
    transversals: tuple[dict, ...]
    order: int

    @classmethod
    def from_generators(cls, degree: int, generators: Iterable[Sequence[int]],
                        base: Sequence[int] = ()) -> "PermGroup":
        gens = [Permutation(g) for g in generators]
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of length {len(g)} in group of degree {degree}")
        levels = _schreier_sims(degree, [tuple(g) for g in gens], base)
        order = math.prod(len(l.trans) for l in levels)
        return cls(degree, tuple(gens), tuple(l.point for l in levels),
                   tuple(dict(l.trans) for l in levels), order)

    def __contains__(self, perm: Sequence[int]) -> bool:
        if len(perm) != self.degree:
            return False
        h = tuple(perm)
        for b, trans in zip(self.base, self.transversals):
            u = trans.get(h[b])
            if u is None:
                return False
            h = _then(h, _inv(u))
        return all(i == j for i, j in enumerate(h))

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                if g[x] not in seen:
                    seen.add(g[x])
                    queue.append(g[x])
        return seen

    def elements(self) -> Iterable[Permutation]:
        """Every element, by walking the chain. Only sensible for small orders."""
        # g = u_m then ... then u_1 then u_0, one representative per level
        def walk(k, acc):
            if k == len(self.base):
                yield Permutation(acc)
                return
            for u in self.transversals[k].values():
                yield from walk(k + 1, _then(u, acc))
        yield from walk(0, tuple(range(self.degree)))


def group_order(g: PermGroup) -> int:
    return math.prod(len(t) for t in g.transversals)


# refinement search

def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by the vector of neighbour counts into every cell; the
    pieces are ordered by that vector, so the procedure commutes with
    relabeling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {}
            for v in c:
                key = tuple(map(int.bit_count, map(rows[v].__and__, masks)))
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(c)
            else:
                changed = True
                out.extend(sig[k] for k in sorted(sig))
        cells = out
    return cells


def _invariant(rows: Sequence[int], cells: list[list[int]]) -> tuple:
    masks = [sum(1 << v for v in c) for c in cells]
    return tuple(tuple(map(int.bit_count, map(rows[c[0]].__and__, masks))) for c in cells)


def _individualize(rows, cells, ci, v):
    c = cells[ci]
    rest = [w for w in c if w != v]
    return _refine(rows, cells[:ci] + [[v], rest] + cells[ci + 1:])


def _target_cell(cells) -> int | None:
    return next((k for k, c in enumerate(cells) if len(c) > 1), None)


@dataclass(frozen=True)
class AutSearch:
    """Result of the refinement search, before the chain is rebuilt."""

    base: tuple[int, ...]
    generators: tuple[Permutation, ...]
    orbit_sizes: tuple[int, ...]
    nodes: int

    @property
    def order(self) -> int:
        return math.prod(self.orbit_sizes)


def search_automorphisms(g: Graph) -> AutSearch:
    rows = g.rows
    n = g.vertex_count
    cells = _refine(rows, [list(range(n))])
    path = []  # (cells, invariant, target cell index, chosen vertex)
    while (ci := _target_cell(cells)) is not None:
        v = cells[ci][0]
        path.append((cells, _invariant(rows, cells), ci, v))
        cells = _individualize(rows, cells, ci, v)
    first_leaf = [c[0] for c in cells]
    invariants = [p[1] for p in path] + [_invariant(rows, cells)]
    shapes = [[len(c) for c in p[0]] for p in path] + [[1] * n]
    base = [p[3] for p in path]

    gens: list[tuple] = []
    nodes = 0

    def extend(depth, cells):
        nonlocal nodes
        nodes += 1
        if [len(c) for c in cells] != shapes[depth] or _invariant(rows, cells) != invariants[depth]:
            return None
        ci = _target_cell(cells)
        if ci is None:
            sigma = [0] * n
            for a, c in zip(first_leaf, cells):
                sigma[a] = c[0]
            return tuple(sigma) if _preserves(rows, sigma) else None
        for w in cells[ci]:
            found = extend(depth + 1, _individualize(rows, cells, ci, w))
            if found is not None:
                return found
        return None

    orbit_sizes = [1] * len(path)
    for level in reversed(range(len(path))):
        cells, _, ci, b = path[level]
        stab = [s for s in gens if all(s[base[j]] == base[j] for j in range(level))]
        orbit = _orbit(b, stab)
        for t in cells[ci]:
            if t in orbit:
                continue
            found = extend(level + 1, _individualize(rows, cells, ci, t))
            if found is not None:
                gens.append(found)
                stab.append(found)
                orbit = _orbit(b, stab)
        orbit_sizes[level] = len(orbit)
    return AutSearch(tuple(base), tuple(Permutation(s) for s in gens), tuple(orbit_sizes), nodes)


def _orbit(point: int, gens: Sequence[tuple]) -> set[int]:
    seen = {point}
    queue = [point]
    for x in queue:
        for s in gens:
            if s[x] not in seen:
                seen.add(s[x])
                queue.append(s[x])
    return seen


def automorphism_group(g: Graph) -> PermGroup:
    found = search_automorphisms(g)
    group = PermGroup.from_generators(g.vertex_count, found.generators, found.base)
    if group.order != found.order:
        raise AssertionError(
            f"stabilizer chain order {group.order} disagrees with search order {found.order}")
    return group


# brute force oracle

def brute_force_automorphisms(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> list[Permutation]:
    """All automorphisms by trying every permutation, in lexicographic order."""
    n = g.vertex_count
    if n > limit:
        raise BruteForceLimitError(f"refusing brute force on {n} vertices (limit {limit})")
    return [Permutation(p) for p in permutations(range(n)) if _preserves(g.rows, p)]


def brute_force_isomorphism(g: Graph, h: Graph, limit: int = BRUTE_FORCE_LIMIT) -> Permutation | None:
    """Some ``sigma`` with ``i ~ j`` in g iff ``sigma(i) ~ sigma(j)`` in h, or None."""
    n = g.vertex_count
    if n != h.vertex_count or g.edge_count != h.edge_count:
        return None
    if n > limit:
        raise BruteForceLimitError(f"refusing brute force on {n} vertices (limit {limit})")
    for p in permutations(range(n)):
        if all(h.rows[p[i]] == sum(1 << p[j] for j in _bits(g.rows[i])) for i in range(n)):
            return Permutation(p)
    return None


# wreath products

def wreath_embedding_order(x: Graph, y: Graph) -> int:
    """Order of Aut(x) wr Aut(y), acting on the vertices of ``lex_product(x, y)``."""
    return automorphism_group(x).order ** y.vertex_count * automorphism_group(y).order


def wreath_embedding_generators(x: Graph, y: Graph) -> list[Permutation]:
    """Generators of the image of Aut(x) wr Aut(y) inside Aut(x∘y).

    Vertex ``(i, a)`` lives at ``a * p + i``; a tuple ``(s_1..s_n, t)`` acts by
    ``(i, a) -> (s_a(i), t(a))``. Each Aut(x) generator is placed on every
    block separately, and each Aut(y) generator permutes whole blocks.
    """
    p, n = x.vertex_count, y.vertex_count
    out = []
    for s in automorphism_group(x).generators:
        for a in range(n):
            img = list(range(p * n))
            for i in range(p):
                img[a * p + i] = a * p + s[i]
            out.append(Permutation(img))
    for t in automorphism_group(y).generators:
        out.append(Permutation(t[a] * p + i for a in range(n) for i in range(p)))
    return out


def wreath_group(x: Graph, y: Graph) -> PermGroup:
    return PermGroup.from_generators(x.vertex_count * y.vertex_count,
                                     wreath_embedding_generators(x, y))


def is_wreath_decomposition(x: Graph, y: Graph) -> bool:
    """True iff Aut(x∘y) is exactly the embedded wreath product, by order."""
    return automorphism_group(lex_product(x, y)).order == wreath_embedding_order(x, y)
