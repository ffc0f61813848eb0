"""Exact integer arithmetic: generalized binomial coefficients, Laurent
polynomials, and constant-term extraction for the eigenvalue generating
functions.

Everything here is integer-exact.  Division only ever happens inside
``math.comb``; no floats, no rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError

__all__ = [
    "binomial",
    "LaurentPoly",
    "ClosedFormSeries",
    "kleitman_even_series",
    "kleitman_odd_series",
    "consecutive_series",
    "constant_term",
]


def binomial(a: int, b: int) -> int:
    """Generalized binomial coefficient C(a, b) for any integer ``a`` and ``b >= 0``.

    Defined by the falling factorial a(a-1)...(a-b+1) / b!, so C(a, b) = 0 for
    0 <= a < b, and C(a, b) = (-1)^b C(b-a-1, b) for negative ``a``.
    """
    if b < 0:
        raise DomainError(f"lower index must be non-negative, got {b}")
    if a < 0:
        value = math.comb(b - a - 1, b)
        return -value if b & 1 else value
    return math.comb(a, b)


@dataclass(frozen=True)
class LaurentPoly:
    """Dense Laurent polynomial; ``coeffs[j]`` multiplies x**(low + j).

    Normalized so the first and last coefficients are nonzero; the zero
    polynomial is ``(low=0, coeffs=())``.  Arithmetic is exact convolution.
    """

    low: int
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, low: int, coeffs: Iterable[int]) -> "LaurentPoly":
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            return cls(0, ())
        return cls(low + start, tuple(cs[start:end]))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        if coefficient == 0:
            return cls(0, ())
        return cls(exponent, (coefficient,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        if not self.coeffs:
            return 0
        return self.low + len(self.coeffs) - 1

    def coeff(self, exponent: int) -> int:
        j = exponent - self.low
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for j, c in enumerate(self.coeffs):
            out[self.low + j - low] += c
        for j, c in enumerate(other.coeffs):
            out[other.low + j - low] += c
        return LaurentPoly.make(low, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a:
                for k, b in enumerate(other.coeffs):
                    out[j + k] += a * b
        return LaurentPoly.make(self.low + other.low, out)

    def scaled(self, factor: int) -> "LaurentPoly":
        if factor == 0:
            return LaurentPoly.zero()
        return LaurentPoly(self.low, tuple(factor * c for c in self.coeffs))


def _binomial_expansion(sign: int, m: int) -> LaurentPoly:
    """(1 + sign*x)**m for m >= 0, as an exact polynomial."""
    coeffs = []
    for j in range(m + 1):
        c = binomial(m, j)
        if sign < 0 and j & 1:
            c = -c
        coeffs.append(c)
    return LaurentPoly.make(0, coeffs)


def _reciprocal_expansion(sign: int, m: int, floor_exp: int) -> LaurentPoly:
    """(1 + sign*x)**(-m) expanded around x = infinity, truncated below ``floor_exp``.

    The expansion (valid for |x| > 1) runs over exponents -m, -m-1, ...; the
    coefficient of x**(-m-l) is sign^(m+l) (-1)^l C(m-1+l, l).  Terms with
    exponent below ``floor_exp`` cannot reach exponent zero once multiplied by
    the polynomial part and are dropped.
    """
    if m <= 0:
        raise DomainError("reciprocal expansion needs a positive power")
    if floor_exp > -m:
        return LaurentPoly.zero()
    coeffs = []
    for e in range(floor_exp, -m + 1):
        ell = -m - e
        c = binomial(m - 1 + ell, ell)
        if sign > 0:
            if ell & 1:
                c = -c
        else:
            if m & 1:
                c = -c
        coeffs.append(c)
    return LaurentPoly.make(floor_exp, coeffs)


def _product_constant_term(a: int, b: int, shift: int) -> int:
    """Constant term of x**shift (1+x)**a (1-x)**b, expanded around x = infinity.

    At most one of ``a``, ``b`` may be negative; the negative factor is
    expanded as a truncated series, truncation window [-D, 0] with D the total
    degree of the polynomial part.
    """
    if a < 0 and b < 0:
        raise DomainError(
            "both factors have negative exponents; the closed form is not a "
            "valid Laurent expansion around infinity"
        )
    window = shift + max(a, 0) + max(b, 0)
    fa = _binomial_expansion(1, a) if a >= 0 else _reciprocal_expansion(1, -a, -window)
    fb = _binomial_expansion(-1, b) if b >= 0 else _reciprocal_expansion(-1, -b, -window)
    return (fa * fb).coeff(-shift)


@dataclass(frozen=True)
class ClosedFormSeries:
    """Parameters of one of the three closed-form generating functions whose
    constant term is the eigenvalue of multiplicity C(n, i)."""

    kind: str  # "kleitman-even" | "kleitman-odd" | "consecutive"
    t: int
    s: int = 0


def kleitman_even_series(t: int) -> ClosedFormSeries:
    if t < 0:
        raise DomainError("t must be non-negative")
    return ClosedFormSeries("kleitman-even", t)


def kleitman_odd_series(t: int) -> ClosedFormSeries:
    if t < 0:
        raise DomainError("t must be non-negative")
    return ClosedFormSeries("kleitman-odd", t)


def consecutive_series(s: int, t: int) -> ClosedFormSeries:
    if not 0 <= s < t:
        raise DomainError(f"need 0 <= s < t, got s={s}, t={t}")
    return ClosedFormSeries("consecutive", t, s)


def constant_term(series: ClosedFormSeries, n: int, i: int) -> int:
    """Evaluate the constant term of the closed form for dimension ``n`` and
    Fourier level ``i``, exactly.

    kleitman-even:  (-1)^(t+1) (1+x)^(n-i-t) (1-x)^(i-t-1)
    kleitman-odd:   (-1)^(t+1) (1+x)^(n-i-t-1) (1-x)^(i-t-1)
    consecutive:    (-1)^(t-s+1) sum_{j=s}^{t} C(t,j) (1+x)^(n-i-j+s)
                    (1-x)^(i-j+s-1) x^(2(j-s))
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if not 0 <= i <= n:
        raise DomainError(f"level i must lie in 0..{n}, got {i}")
    t, s = series.t, series.s
    if series.kind == "kleitman-even":
        sign = -1 if t % 2 == 0 else 1
        summands = [(sign, n - i - t, i - t - 1, 0)]
    elif series.kind == "kleitman-odd":
        sign = -1 if t % 2 == 0 else 1
        summands = [(sign, n - i - t - 1, i - t - 1, 0)]
    elif series.kind == "consecutive":
        sign = -1 if (t - s) % 2 == 0 else 1
        summands = [
            (sign * binomial(t, j), n - i - j + s, i - j + s - 1, 2 * (j - s))
            for j in range(s, t + 1)
        ]
    else:
        raise DomainError(f"unknown series kind {series.kind!r}")
    return sum(coef * _product_constant_term(a, b, shift)
               for coef, a, b, shift in summands if coef)
