"""Truncated formal power series over an exact coefficient ring.

Two coefficient rings are supported: exact rationals (``Fraction``) and
:class:`~bellkit.polyalgebra.Polynomial` (with rational coefficients).  A
series knows its truncation order ``N`` explicitly and holds exactly
``N + 1`` coefficients; combining series of different orders keeps the
smaller one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    InvalidExponent,
    IrrationalPower,
    ZeroFirstCoefficient,
    ZeroLeadingCoefficient,
)
from .polyalgebra import Polynomial


def _lift(coeffs: Sequence) -> tuple:
    if any(isinstance(c, Polynomial) for c in coeffs):
        return tuple(c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in coeffs)
    return tuple(Fraction(c) for c in coeffs)


class TruncatedSeries:
    """c0 + c1 x + ... + cN x^N  (mod x^(N+1))."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = _lift(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_polynomial_valued(self) -> bool:
        return isinstance(self.coeffs[0], Polynomial)

    def zero_element(self):
        return Polynomial.zero() if self.is_polynomial_valued else Fraction(0)

    def one(self) -> TruncatedSeries:
        one = Polynomial.one() if self.is_polynomial_valued else Fraction(1)
        return TruncatedSeries([one], self.order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries([self[i] + other[i] for i in range(n + 1)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries([self[i] - other[i] for i in range(n + 1)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return cauchy_product(self, other)
        return TruncatedSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def derivative(self) -> TruncatedSeries:
        """Formal derivative; the result is known only through order N - 1."""
        if self.order == 0:
            return TruncatedSeries([self.zero_element()])
        return TruncatedSeries([i * self[i] for i in range(1, self.order + 1)])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def cauchy_product(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """c_n = sum_{i=0}^{n} a_i b_{n-i}, through the smaller truncation order."""
    order = min(a.order, b.order)
    # skip zero coefficients; Bell-type series are sparse at the low end
    nz_a = [(i, c) for i, c in enumerate(a.coeffs[: order + 1]) if c != 0]
    nz_b = [(j, c) for j, c in enumerate(b.coeffs[: order + 1]) if c != 0]
    out = [a.zero_element() if a.is_polynomial_valued else b.zero_element()] * (order + 1)
    for i, ca in nz_a:
        for j, cb in nz_b:
            if i + j > order:
                break
            out[i + j] = out[i + j] + ca * cb
    return TruncatedSeries(out)


def direct_power(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """f**k by binary exponentiation with truncation; ``k = 0`` gives 1."""
    if k < 0:
        raise InvalidExponent("direct_power needs a non-negative integer exponent")
    result, base = f.one(), f
    while k:
        if k & 1:
            result = cauchy_product(result, base)
        k >>= 1
        if k:
            base = cauchy_product(base, base)
    return result


def _exact_root(a: int, q: int) -> int | None:
    """Integer r >= 0 with r**q == a, or None."""
    if a < 0:
        return None
    if a < 2:
        return a
    r = int(round(a ** (1.0 / q))) if a.bit_length() < 1000 else 1 << (a.bit_length() // q + 1)
    # Newton iteration from above settles on floor(a ** (1/q))
    r = max(r, 1)
    while r ** q > a:
        r = ((q - 1) * r + a // r ** (q - 1)) // q
    while (r + 1) ** q <= a:
        r += 1
    return r if r ** q == a else None


def exact_power(x: Fraction, k: Fraction) -> Fraction:
    """x**k as an exact rational, or raise :class:`IrrationalPower`."""
    x, k = Fraction(x), Fraction(k)
    p, q = k.numerator, k.denominator
    if q == 1:
        return x ** p
    sign = 1
    if x < 0:
        if q % 2 == 0:
            raise IrrationalPower(f"({x}) ** ({k}) is not real")
        sign, x = -1, -x
    num, den = _exact_root(x.numerator, q), _exact_root(x.denominator, q)
    if num is None or den is None:
        raise IrrationalPower(f"({x}) ** ({k}) is not rational")
    return (sign * Fraction(num, den)) ** p


def power_coeffs_general(f: TruncatedSeries, k) -> TruncatedSeries:
    """Coefficients of f**k for any rational exponent, requiring f0 != 0.

    Uses the log-derivative recurrence
    ``n f0 g_n = sum_{a=1}^{n} (a (k + 1) - n) f_a g_{n-a}``
    starting from ``g_0 = f0**k``.
    """
    k = Fraction(k)
    f0 = f[0]
    if f0 == 0:
        raise ZeroLeadingCoefficient("f0 = 0; use power_coeffs_zero_constant")
    g = [exact_power(f0, k)]
    for n in range(1, f.order + 1):
        s = sum(((a * (k + 1) - n) * f[a] * g[n - a] for a in range(1, n + 1)), Fraction(0))
        g.append(s / (n * f0))
    return TruncatedSeries(g)


def power_coeffs_zero_constant(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """Coefficients of f**k when f0 = 0, f1 != 0 and k is a positive integer.

    ``g_n = 0`` for ``n < k``, ``g_k = f1**k`` and for ``n > k``::

        g_n = 1 / ((n - k) f1) * sum_{a=1}^{n-k} ((a + 1)(k + 1) - (n + 1)) f_{a+1} g_{n-a}

    Works over rationals and over polynomial coefficients; in the latter
    case the division by ``f1`` is an exact monomial division.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidExponent(f"exponent must be a positive integer, got {k!r}")
    if f[0] != 0:
        raise ValueError("f0 must be zero; use power_coeffs_general")
    if f.order < 1:
        return TruncatedSeries([f.zero_element()])
    f1 = f[1]
    if f1 == 0:
        raise ZeroFirstCoefficient("f1 = 0")
    zero = f.zero_element()
    g = [zero] * (f.order + 1)
    if k <= f.order:
        g[k] = f1 ** k
    for n in range(k + 1, f.order + 1):
        s = zero
        for a in range(1, n - k + 1):
            w = (a + 1) * (k + 1) - (n + 1)
            if w and f[a + 1] != 0:
                s = s + w * f[a + 1] * g[n - a]
        g[n] = s / ((n - k) * f1)
    return TruncatedSeries(g)
