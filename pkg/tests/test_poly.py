from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lexwreath.poly import (
    T, IntPolynomial, gcd_degree, have_common_root, poly_gcd, pseudo_remainder, scale_negate,
    shift_reflect, subresultant_prs,
)

t = sympy.symbols("t")


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coefficients)) or [0], t)


def euclid_gcd_degree(f, g):
    """Independent oracle: Euclid over the rationals."""
    a = [Fraction(c) for c in f.coefficients]
    b = [Fraction(c) for c in g.coefficients]
    while b:
        while len(a) >= len(b) and a:
            q = a[-1] / b[-1]
            shift = len(a) - len(b)
            for k, c in enumerate(b):
                a[shift + k] -= q * c
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


polys = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(IntPolynomial).filter(bool)


def test_arithmetic():
    p = IntPolynomial([-1, 0, 1])
    assert p == (T - 1) * (T + 1)
    assert p(3) == 8
    assert (T ** 3).degree == 3
    assert IntPolynomial([0, 0]).degree == -1
    assert str(IntPolynomial([-2, -3, 0, 1])) == "t^3 - 3*t - 2"
    assert IntPolynomial.from_roots([2, -1, -1]) == IntPolynomial([-2, -3, 0, 1])
    assert p.multiplicity(1) == 1
    assert IntPolynomial.from_roots([0, 0, 3]).multiplicity(0) == 2


@pytest.mark.parametrize("p, c, expected", [
    (IntPolynomial([-1, 0, 1]), 1, IntPolynomial([0, -2, 1])),
    (T, 0, T),
    (T - 3, 3, T),
])
def test_shift_reflect(p, c, expected):
    assert shift_reflect(p, c) == expected


@pytest.mark.parametrize("p, m, expected", [
    (IntPolynomial([-1, 0, 1]), 2, IntPolynomial([-4, 0, 1])),
    (T, 5, T),
    (T + 1, 3, T - 3),
])
def test_scale_negate(p, m, expected):
    assert scale_negate(p, m) == expected


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.integers(-4, 4), st.integers(1, 4))
def test_root_maps(roots, c, m):
    p = IntPolynomial.from_roots(roots)
    assert shift_reflect(p, c) == IntPolynomial.from_roots([c - r for r in roots])
    assert scale_negate(p, m) == IntPolynomial.from_roots([-m * r for r in roots])


@pytest.mark.parametrize("f, g, expected", [
    (IntPolynomial([-4, 0, 1]), T - 2, True),
    (IntPolynomial([1, 0, 1]), IntPolynomial([-1, 0, 1]), False),
    (IntPolynomial.from_roots([2, -1, -1]), IntPolynomial([2, -3, 1]), True),
])
def test_have_common_root(f, g, expected):
    assert have_common_root(f, g) == expected


def test_common_root_rejects_zero():
    with pytest.raises(ValueError):
        have_common_root(IntPolynomial(), T)


@given(polys, polys)
def test_gcd_degree_matches_oracles(f, g):
    expected = euclid_gcd_degree(f, g)
    assert gcd_degree(f, g) == expected
    assert to_sympy(poly_gcd(f, g)).degree() == sympy.gcd(to_sympy(f), to_sympy(g)).degree()


@given(polys, polys, polys)
def test_gcd_of_products(f, g, h):
    assert gcd_degree(f * h, g * h) >= h.degree
    common = poly_gcd(f * h, g * h)
    assert common.degree == euclid_gcd_degree(f * h, g * h)


@given(polys, polys)
def test_prs_matches_sympy_subresultants(f, g):
    if f.degree < g.degree:
        f, g = g, f
    ours = subresultant_prs(f, g)
    theirs = sympy.subresultants(to_sympy(f).as_expr(), to_sympy(g).as_expr(), t)
    assert len(ours) == len(theirs)
    for a, b in zip(ours, theirs):
        assert sympy.expand(to_sympy(a).as_expr() - b) == 0


@given(polys, polys.filter(lambda p: p.degree >= 1))
def test_pseudo_remainder_identity(a, b):
    r = pseudo_remainder(a, b)
    assert r.degree < b.degree
    k = max(a.degree - b.degree + 1, 0)
    q, rr = sympy.div(to_sympy(a) * b.leading ** k, to_sympy(b))
    assert rr == to_sympy(r) or (not r and rr.is_zero)
