import random
from itertools import combinations

from hypothesis import settings, strategies as st

from lexwreath.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_perm(draw, min_n=1, max_n=6):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.vertex_count)))
    return g, perm


def brute_isomorphic(g, h):
    """Independent isomorphism oracle on 0/1 matrices."""
    from itertools import permutations
    if g.vertex_count != h.vertex_count:
        return False
    a, b = g.matrix(), h.matrix()
    n = g.vertex_count
    return any(all(a[i][j] == b[p[i]][p[j]] for i in range(n) for j in range(n))
               for p in permutations(range(n)))


def seeded(seed=0):
    return random.Random(seed)
