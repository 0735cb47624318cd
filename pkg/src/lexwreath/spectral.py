"""Exact and floating-point adjacency spectra, and the spectral sufficient
condition for the wreath decomposition of a lexicographic product."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, _bits, is_connected, regularity
from .poly import T, IntPolynomial, have_common_root, scale_negate, shift_reflect

JACOBI_TOL = 1e-12


def char_poly(g: Graph) -> IntPolynomial:
    """det(tI - A) by Faddeev-LeVerrier over the integers.

    With ``M_0 = 0`` and ``c_n = 1``: ``M_k = A M_{k-1} + c_{n-k+1} I`` and
    ``c_{n-k} = -tr(A M_k) / k``; the division is always exact for an
    integer matrix. ``A M`` is formed by summing rows of ``M`` over each
    vertex's neighbours.
    """
    n = g.vertex_count
    nbrs = [list(_bits(row)) for row in g.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = m
        m = []
        for i in range(n):
            row = [0] * n
            for j in nbrs[i]:
                pj = prev[j]
                for c in range(n):
                    row[c] += pj[c]
            row[i] += coeffs[n - k + 1]
            m.append(row)
        trace = sum(m[j][i] for i in range(n) for j in nbrs[i])
        q, r = divmod(-trace, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


def float_spectrum(g: Graph, tol: float = JACOBI_TOL, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of the adjacency matrix, ascending, by cyclic Jacobi rotations."""
    a = np.array(g.matrix(), dtype=float)
    n = len(a)
    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diag(a)))
        if n < 2 or off.max() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return sorted(float(x) for x in np.diag(a))


@dataclass(frozen=True)
class SpectralVerdict:
    applicable: bool
    holds: bool
    witness: float | None = None
    reason: str | None = None
    x_char_poly: IntPolynomial | None = None
    y_char_poly: IntPolynomial | None = None

    def __post_init__(self):
        if self.holds and not self.applicable:
            raise ValueError("a verdict outside its hypotheses cannot hold")

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "holds": self.holds,
            "witness": self.witness,
            "reason": self.reason,
            "x_char_poly": self.x_char_poly.to_strings() if self.x_char_poly is not None else None,
            "y_char_poly": self.y_char_poly.to_strings() if self.y_char_poly is not None else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SpectralVerdict":
        polys = {k: IntPolynomial.from_strings(d[k]) if d.get(k) is not None else None
                 for k in ("x_char_poly", "y_char_poly")}
        return cls(d["applicable"], d["holds"], d.get("witness"), d.get("reason"), **polys)


def excluded_differences(x: Graph) -> IntPolynomial:
    """Polynomial whose roots are ``lambda_1 - lambda_i`` for ``i != 1``.

    ``x`` must be regular and connected, so the valence is a simple root of
    the characteristic polynomial; exactly one factor ``t`` is removed.
    """
    valence = regularity(x)
    if valence is None or not is_connected(x):
        raise ValueError("needs a connected regular graph")
    shifted = shift_reflect(char_poly(x), valence)
    if shifted.multiplicity(0) != 1:
        raise AssertionError("valence of a connected regular graph must be a simple eigenvalue")
    return shifted.exquo(T)


def spectral_condition(x: Graph, y: Graph) -> SpectralVerdict:
    """Decide exactly whether {lambda_1 - lambda_i : i != 1} and {-|x| mu_j} are disjoint.

    Here lambda ranges over the adjacency spectrum of ``x`` (lambda_1 its
    valence) and mu over that of ``y``. Only meaningful when both graphs are
    regular and ``x`` is connected; otherwise the verdict is not applicable.
    """
    problems = []
    if regularity(x) is None:
        problems.append("X is not regular")
    if regularity(y) is None:
        problems.append("Y is not regular")
    if not is_connected(x):
        problems.append("X is not connected")
    if problems:
        return SpectralVerdict(False, False, reason="; ".join(problems))

    px, py = char_poly(x), char_poly(y)
    left = excluded_differences(x)
    right = scale_negate(py, x.vertex_count)
    if not have_common_root(left, right):
        return SpectralVerdict(True, True, x_char_poly=px, y_char_poly=py)
    return SpectralVerdict(True, False, witness=_approximate_witness(x, y),
                           reason="eigenvalue sets intersect",
                           x_char_poly=px, y_char_poly=py)


def _difference_sets(x: Graph, y: Graph) -> tuple[list[float], list[float]]:
    lam = float_spectrum(x)
    valence = lam.pop()  # largest is the Perron value
    left = [valence - v for v in lam]
    right = [-x.vertex_count * m for m in float_spectrum(y)]
    return left, right


def _approximate_witness(x: Graph, y: Graph) -> float | None:
    left, right = _difference_sets(x, y)
    if not left or not right:
        return None
    best = min(((abs(a - b), a) for a in left for b in right))
    return round(best[1], 12)


def float_set_distance(x: Graph, y: Graph) -> float:
    """Minimum distance between the two eigenvalue sets, by floating spectra."""
    left, right = _difference_sets(x, y)
    if not left or not right:
        return math.inf
    return min(abs(a - b) for a in left for b in right)
