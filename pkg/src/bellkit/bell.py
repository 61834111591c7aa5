"""Partial Bell polynomials B(n, k) by five independent algorithms.

========================  =============================================
``partition``             sum over partitions of n into exactly k parts
``recurrence``            recurrence in n at fixed k (divides by x1)
``convolution``           addition formula in k, default split (k-1, 1)
``closed_form``           (k-1)-fold nested binomial sum
``series_oracle``         n!/k! [t^n] (sum_m x_m t^m / m!)^k
========================  =============================================

All five return identical :class:`~bellkit.polyalgebra.Polynomial` values.
Outside ``n >= k >= 1`` the conventions are B(0, 0) = 1, B(n, 0) = 0 for
n >= 1 and B(n, k) = 0 for k > n; only the series oracle accepts those
indices directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .errors import InvalidIndex, InvalidSplit
from .polyalgebra import Polynomial, div_by_var, scale
from .series import TruncatedSeries, direct_power, power_coeffs_zero_constant


class AlgorithmId(str, enum.Enum):
    PARTITION = "partition"
    RECURRENCE = "recurrence"
    CONVOLUTION = "convolution"
    CLOSED_FORM = "closed_form"
    SERIES_ORACLE = "series_oracle"

    def __str__(self):
        return self.value


ALGORITHMS = tuple(AlgorithmId)


@dataclass(frozen=True)
class Partition:
    """Multiplicities ``counts[a - 1] = l_a`` of each part size ``a``."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum((a + 1) * c for a, c in enumerate(self.counts))

    @property
    def k(self) -> int:
        return sum(self.counts)

    @property
    def parts(self) -> tuple[int, ...]:
        """The parts themselves, largest first."""
        return tuple(a + 1 for a in reversed(range(len(self.counts))) for _ in range(self.counts[a]))


def _require(n: int, k: int, min_k: int = 1) -> None:
    if not (isinstance(n, int) and isinstance(k, int)):
        raise InvalidIndex(f"indices must be integers, got n={n!r}, k={k!r}")
    if k < min_k or n < k:
        raise InvalidIndex(f"need n >= k >= {min_k}, got n={n}, k={k}")


def enumerate_partitions(n: int, k: int) -> list[Partition]:
    """All partitions of n into exactly k parts, lexicographic on the counts.

    Each partition is a vector (l_1, ..., l_{n-k+1}) with
    ``sum(l_a) == k`` and ``sum(a * l_a) == n``.
    """
    _require(n, k)
    m = n - k + 1
    out: list[Partition] = []
    counts = [0] * m

    def dfs(a: int, parts_left: int, sum_left: int) -> None:
        # a is the 1-based part size being assigned
        if a > m:
            if parts_left == 0 and sum_left == 0:
                out.append(Partition(tuple(counts)))
            return
        for c in range(parts_left + 1):
            r, s = parts_left - c, sum_left - a * c
            if s < 0:
                break
            # the remaining r parts must fit in sizes a+1..m
            if r * (a + 1) > s or s > r * m:
                continue
            counts[a - 1] = c
            dfs(a + 1, r, s)
        counts[a - 1] = 0

    dfs(1, k, n)
    return out


def bell_partition(n: int, k: int) -> Polynomial:
    """Sum of n! / prod(l_a! (a!)**l_a) * prod(x_a**l_a) over partitions."""
    _require(n, k)
    fn = factorial(n)
    terms = []
    for p in enumerate_partitions(n, k):
        denom = 1
        for a, c in enumerate(p.counts, start=1):
            if c:
                denom *= factorial(c) * factorial(a) ** c
        terms.append((p.counts, fn // denom))
    return Polynomial(terms)


def bell_recurrence(n: int, k: int) -> Polynomial:
    """Recurrence in n at fixed k, starting from B(k, k) = x1**k.

    For m > k::

        B(m, k) = 1/x1 * 1/(m - k) * sum_{a=1}^{m-k} C(m, a) ((k + 1) - (m + 1)/(a + 1)) x_{a+1} B(m - a, k)

    The bracket is rational, so the sum is formed over rational
    coefficients; the division by x1 must be exact and the final division
    by (m - k) must land on integers.
    """
    _require(n, k)
    row = {k: Polynomial.var(1) ** k}
    for m in range(k + 1, n + 1):
        total = Polynomial.zero()
        for a in range(1, m - k + 1):
            bracket = (k + 1) - Fraction(m + 1, a + 1)
            c = comb(m, a) * bracket
            if c:
                total = total + Polynomial.var(a + 1, c) * row[m - a]
        row[m] = scale(div_by_var(total, 1), Fraction(1, m - k))
    return row[n]


def bell_convolution(n: int, k: int, split: tuple[int, int] | None = None) -> Polynomial:
    """Addition formula in k.

    ``B(n, k1 + k2) = k1! k2! / (k1 + k2)! * sum_{a=0}^{n} C(n, a) B(a, k1) B(n - a, k2)``

    The inner values are themselves built with the default split
    ``(j - 1, 1)`` down to B(m, 1) = x_m.  Results are cached only for the
    duration of this call.
    """
    _require(n, k)
    if split is None:
        if k == 1:
            return Polynomial.var(n)
        split = (k - 1, 1)
    k1, k2 = split
    if k1 < 1 or k2 < 1 or k1 + k2 != k:
        raise InvalidSplit(f"split {split!r} does not partition k={k} into two positive parts")

    cache: dict[tuple[int, int], Polynomial] = {}

    def get(m: int, j: int) -> Polynomial:
        if j == 0:
            return Polynomial.one() if m == 0 else Polynomial.zero()
        if m < j:
            return Polynomial.zero()
        if j == 1:
            return Polynomial.var(m)
        key = (m, j)
        if key not in cache:
            cache[key] = combine(m, j - 1, 1)
        return cache[key]

    def combine(m: int, j1: int, j2: int) -> Polynomial:
        total = Polynomial.zero()
        for a in range(j1, m - j2 + 1):
            total = total + comb(m, a) * (get(a, j1) * get(m - a, j2))
        return scale(total, Fraction(factorial(j1) * factorial(j2), factorial(j1 + j2)))

    return combine(n, k1, k2)


def binomial_chains(n: int, k: int, with_parts: bool = True) -> Iterator[tuple[int, tuple[int, ...] | None]]:
    """Walk the index lattice n > a_1 > a_2 > ... > a_{k-1} >= 1.

    Level j runs ``a_j`` from ``k - j`` up to ``a_{j-1} - 1`` (with
    ``a_0 = n``).  Yields ``(C(n, a_1) C(a_1, a_2) ... C(a_{k-2}, a_{k-1}), parts)``
    where ``parts = (n - a_1, a_1 - a_2, ..., a_{k-2} - a_{k-1}, a_{k-1})``.
    The nesting depth is ``k - 1`` and is driven by an explicit index
    vector.  Pass ``with_parts=False`` to get ``None`` instead of parts.
    """
    if k < 1 or n < k:
        return
    if k == 1:
        yield 1, ((n,) if with_parts else None)
        return
    depth = k - 1
    binom = [[comb(r, s) for s in range(r + 1)] for r in range(n + 1)]
    a = [n] + [0] * depth
    w = [1] + [0] * depth
    j = 1
    a[1] = k - 2
    while j:
        a[j] += 1
        if a[j] >= a[j - 1]:
            j -= 1
            continue
        w[j] = w[j - 1] * binom[a[j - 1]][a[j]]
        if j < depth:
            j += 1
            a[j] = k - j - 1
            continue
        if with_parts:
            yield w[j], tuple(a[i - 1] - a[i] for i in range(1, k)) + (a[depth],)
        else:
            yield w[j], None


def bell_closed_form(n: int, k: int) -> Polynomial:
    """Nested binomial sum over the (k-1)-deep lattice, divided by k!.

    Each lattice point contributes its binomial chain times the product
    x_{n-a_1} x_{a_1-a_2} ... x_{a_{k-1}}.  B(n, 1) = x_n is the base case.
    """
    _require(n, k)
    if k == 1:
        return Polynomial.var(n)
    size = n - k + 1
    acc: dict[tuple[int, ...], int] = {}
    for w, parts in binomial_chains(n, k):
        counts = [0] * size
        for p in parts:
            counts[p - 1] += 1
        key = tuple(counts)
        acc[key] = acc.get(key, 0) + w
    return scale(Polynomial(acc.items()), Fraction(1, factorial(k)))


def bell_generating_series(n: int) -> TruncatedSeries:
    """sum_{m=1}^{n} x_m t^m / m!  as a polynomial-valued series of order n."""
    return TruncatedSeries([Polynomial.zero()] + [Polynomial.var(m, Fraction(1, factorial(m))) for m in range(1, n + 1)])


def bell_series_oracle(n: int, k: int) -> Polynomial:
    """n! [t^n] (1/k!) (sum_m x_m t^m / m!)**k via repeated Cauchy products."""
    _require(n, k, min_k=0)
    g = direct_power(bell_generating_series(n), k)
    return scale(g[n], Fraction(factorial(n), factorial(k)))


def bell_series_recurrence(n: int, k: int) -> Polynomial:
    """B(n, k) = n!/k! g_n(k) with g computed by the f0 = 0 power recurrence.

    Same series as :func:`bell_series_oracle`, but the power is taken with
    :func:`~bellkit.series.power_coeffs_zero_constant` over polynomial
    coefficients instead of by multiplication.
    """
    _require(n, k)
    g = power_coeffs_zero_constant(bell_generating_series(n), k)
    return scale(g[n], Fraction(factorial(n), factorial(k)))


_DISPATCH = {
    AlgorithmId.PARTITION: bell_partition,
    AlgorithmId.RECURRENCE: bell_recurrence,
    AlgorithmId.CONVOLUTION: bell_convolution,
    AlgorithmId.CLOSED_FORM: bell_closed_form,
    AlgorithmId.SERIES_ORACLE: bell_series_oracle,
}


def bell(n: int, k: int, algo: AlgorithmId | str = AlgorithmId.CLOSED_FORM) -> Polynomial:
    """B(n, k) computed with the named algorithm."""
    return _DISPATCH[AlgorithmId(algo)](n, k)
