import numpy as np
import pytest
import sympy
from hypothesis import given

from lexwreath.graph import complete, cycle, empty, is_connected, path, random_regular, regularity
from lexwreath.poly import IntPolynomial, T
from lexwreath.spectral import (
    SpectralVerdict, char_poly, excluded_differences, float_set_distance, float_spectrum,
    spectral_condition,
)

from conftest import graphs, seeded


def test_char_poly_examples():
    assert char_poly(empty(3)) == T ** 3
    assert char_poly(complete(3)) == IntPolynomial([-2, -3, 0, 1])
    assert char_poly(complete(2)) == IntPolynomial([-1, 0, 1])


@given(graphs(max_n=7))
def test_char_poly_matches_sympy(g):
    t = sympy.symbols("t")
    expected = sympy.Poly(sympy.Matrix(g.matrix()).charpoly(t).as_expr(), t).all_coeffs()
    assert list(reversed(char_poly(g).coefficients)) == [int(c) for c in expected]


@given(graphs(max_n=8))
def test_char_poly_invariants(g):
    p = char_poly(g)
    n = g.vertex_count
    assert p.degree == n and p.leading == 1
    if n >= 2:
        assert p.coefficients[n - 1] == 0
        assert p.coefficients[n - 2] == -g.edge_count
    scale = max(abs(c) for c in p.coefficients)
    for lam in float_spectrum(g):
        assert abs(p(lam)) < 1e-6 * scale


@given(graphs(max_n=8))
def test_float_spectrum_matches_numpy(g):
    ours = float_spectrum(g)
    ref = np.linalg.eigvalsh(np.array(g.matrix(), dtype=float))
    assert np.allclose(ours, ref, atol=1e-9)


def test_float_spectrum_examples():
    assert np.allclose(float_spectrum(complete(3)), [-1, -1, 2], atol=1e-9)
    assert float_spectrum(empty(4)) == [0, 0, 0, 0]
    assert np.allclose(float_spectrum(cycle(6)), [-2, -1, -1, 1, 1, 2], atol=1e-9)


def test_perron_root_simple_for_connected_regular():
    rng = seeded(11)
    for _ in range(40):
        n = rng.randint(2, 8)
        d = rng.choice([d for d in range(1, n) if n * d % 2 == 0])
        g = random_regular(n, d, rng)
        if is_connected(g):
            assert char_poly(g).multiplicity(d) == 1
            assert excluded_differences(g).degree == n - 1


def test_spectral_condition_examples():
    v = spectral_condition(complete(2), cycle(6))
    assert v.applicable and not v.holds
    assert v.witness == pytest.approx(2.0)
    v = spectral_condition(cycle(5), complete(2))
    assert v.applicable and v.holds
    assert float_set_distance(cycle(5), complete(2)) > 1e-6
    v = spectral_condition(path(3), complete(2))
    assert not v.applicable and not v.holds and "X is not regular" in v.reason
    assert not spectral_condition(empty(2), cycle(4)).applicable


def test_single_vertex_x_is_vacuous():
    v = spectral_condition(empty(1), cycle(5))
    assert v.applicable and v.holds


def test_verdict_invariant():
    with pytest.raises(ValueError):
        SpectralVerdict(applicable=False, holds=True)
    v = spectral_condition(complete(3), cycle(6))
    assert SpectralVerdict.from_dict(v.to_dict()) == v
