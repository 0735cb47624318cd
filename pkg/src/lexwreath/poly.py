"""Dense univariate polynomials over the integers, coefficients ascending."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self):
        return bool(self.coefficients)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(k * c for c in self.coefficients)

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        g = self.content()
        if g == 0:
            return self
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coefficients)

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a divisor with leading coefficient +-1."""
        if divisor.leading not in (1, -1):
            raise ArithmeticError("divisor must have unit leading coefficient")
        rem = list(self.coefficients)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] * divisor.leading
            quot[k - d] = q
            if q:
                for j, c in enumerate(divisor.coefficients):
                    rem[k - d + j] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def exquo(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_monic(divisor)
        if r:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def multiplicity(self, root: int) -> int:
        """Multiplicity of an integer root."""
        if not self:
            raise ArithmeticError("zero polynomial")
        lin = IntPolynomial([-root, 1])
        k, p = 0, self
        while True:
            q, r = p.divmod_monic(lin)
            if r:
                return k
            k, p = k + 1, q

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coefficients) if k)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "IntPolynomial":
        return cls(int(s) for s in items)

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body + mono))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = IntPolynomial([0, 1])


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    return IntPolynomial([x])


def _sign_normalized(p: IntPolynomial) -> IntPolynomial:
    return -p if p.leading < 0 else p


def shift_reflect(p: IntPolynomial, c: int) -> IntPolynomial:
    """Polynomial whose roots are ``c - r`` for each root ``r`` of ``p``.

    This is ``p(c - t)`` up to sign; the sign is chosen to make the
    leading coefficient positive (monic when ``p`` is monic).
    """
    acc = IntPolynomial()
    step = IntPolynomial([c, -1])
    for a in reversed(p.coefficients):
        acc = acc * step + a
    return _sign_normalized(acc)


def scale_negate(p: IntPolynomial, m: int) -> IntPolynomial:
    """Polynomial whose roots are ``-m * r`` for each root ``r`` of ``p``.

    Computed as ``m**deg(p) * p(-t/m)`` with the sign normalized.
    """
    if m < 1:
        raise ValueError(f"scale factor must be positive, got {m}")
    d = p.degree
    out = IntPolynomial((-1) ** k * m ** (d - k) * a for k, a in enumerate(p.coefficients))
    return _sign_normalized(out)


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``lc(b)**(deg a - deg b + 1) * a`` reduced modulo ``b``, integers only."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    rem = list(a.coefficients)
    db, lb = b.degree, b.leading
    if a.degree < db:
        return a
    # one multiplication by lc(b) per step: deg(a) - deg(b) + 1 in total
    for k in range(len(rem) - 1, db - 1, -1):
        lead = rem[k]
        rem = [lb * c for c in rem]
        if lead:
            for j, c in enumerate(b.coefficients):
                rem[k - db + j] -= lead * c
    return IntPolynomial(rem[:db])


def subresultant_prs(f: IntPolynomial, g: IntPolynomial) -> list[IntPolynomial]:
    """Subresultant polynomial remainder sequence of ``f`` and ``g``.

    Requires ``deg f >= deg g`` and both nonzero. Every division in the
    recurrence is exact, so coefficients stay integral and grow at most
    polynomially.
    """
    if not f or not g:
        raise ValueError("subresultant PRS needs nonzero polynomials")
    if f.degree < g.degree:
        f, g = g, f
    seq = [f, g]
    d = f.degree - g.degree
    beta = (-1) ** (d + 1)
    psi = -1
    while True:
        a, b = seq[-2], seq[-1]
        r = pseudo_remainder(a, b)
        if not r:
            return seq
        seq.append(IntPolynomial(_exact_div(c, beta) for c in r.coefficients))
        d_prev = d
        d = b.degree - seq[-1].degree
        lc = b.leading
        # psi <- (-lc)^d_prev / psi^(d_prev - 1); unchanged when d_prev == 0
        if d_prev:
            psi = _exact_div((-lc) ** d_prev, psi ** (d_prev - 1))
        beta = -lc * psi ** d


def gcd_degree(f: IntPolynomial, g: IntPolynomial) -> int:
    """Degree of gcd(f, g) over the rationals."""
    if not f or not g:
        raise ValueError("gcd_degree needs nonzero polynomials")
    if f.degree == 0 or g.degree == 0:
        return 0
    return subresultant_prs(f, g)[-1].degree


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the integers, positive leading coefficient."""
    if f.degree == 0 or g.degree == 0:
        return IntPolynomial([1])
    return subresultant_prs(f, g)[-1].primitive()


def have_common_root(f: IntPolynomial, g: IntPolynomial) -> bool:
    """True iff ``f`` and ``g`` share a complex root."""
    if not f or not g:
        raise ValueError("common-root test needs nonzero polynomials")
    return gcd_degree(f, g) > 0
