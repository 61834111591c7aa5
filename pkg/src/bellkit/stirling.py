"""Stirling numbers of the second kind, S(n, k), by four independent routes."""

from __future__ import annotations

import enum
from math import comb, factorial

from .bell import AlgorithmId, bell, binomial_chains
from .errors import InvalidIndex, NonIntegerResult, UnsupportedK
from .polyalgebra import evaluate_at_ones


class StirlingMethod(str, enum.Enum):
    EXPLICIT = "explicit"
    NESTED = "nested"
    CLOSED = "closed"
    BELL = "bell"

    def __str__(self):
        return self.value


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise InvalidIndex(f"need n, k >= 0, got n={n}, k={k}")


def stirling_explicit(n: int, k: int) -> int:
    """(1/k!) sum_{a=0}^{k} (-1)**(k-a) C(k, a) a**n, with S(0, 0) = 1."""
    _check(n, k)
    if k > n:
        return 0
    # 0**0 == 1 in Python, which gives S(0, 0) = 1 without a special case
    total = sum((-1) ** (k - a) * comb(k, a) * a ** n for a in range(k + 1))
    q, r = divmod(total, factorial(k))
    if r:
        raise NonIntegerResult(f"alternating sum {total} for S({n},{k}) not divisible by {k}!")
    return q


def stirling_nested(n: int, k: int) -> int:
    """Nested binomial sum over n > a_1 > ... > a_{k-1} >= 1, divided by k!.

    Shares its lattice walker with :func:`bellkit.bell.bell_closed_form`;
    the product of variables is replaced by 1.
    """
    _check(n, k)
    if k < 2:
        raise InvalidIndex("the nested form needs k >= 2; S(n, 1) = 1")
    if k > n:
        return 0
    total = sum(w for w, _ in binomial_chains(n, k, with_parts=False))
    q, r = divmod(total, factorial(k))
    if r:
        raise NonIntegerResult(f"nested sum {total} for S({n},{k}) not divisible by {k}!")
    return q


_CLOSED = {
    2: (2, [1, -2]),
    3: (6, [1, -3, 3]),
    4: (24, [1, -4, 6, -4]),
    5: (120, [1, -5, 10, -10, 5]),
    6: (720, [1, -6, 15, -20, 15, -6]),
}


def stirling_closed_small(n: int, k: int) -> int:
    """Closed forms for k = 2..6, e.g. S(n, 3) = (3**n - 3 * 2**n + 3) / 6.

    Each is (1/k!) times a signed sum of j**n for j = k, k-1, ..., 1; the
    tabulated integers are those signed weights.
    """
    if k not in _CLOSED:
        raise UnsupportedK(f"closed forms exist for k = 2..6 only, got k={k}")
    if n < k:
        raise InvalidIndex(f"need n >= k, got n={n}, k={k}")
    denom, weights = _CLOSED[k]
    total = sum(c * (k - i) ** n for i, c in enumerate(weights))
    q, r = divmod(total, denom)
    if r:
        raise NonIntegerResult(f"closed form for S({n},{k}) not integral")
    return q


def stirling_from_bell(n: int, k: int) -> int:
    """B(n, k)(1, 1, ..., 1) using the closed-form Bell algorithm."""
    if k < 1 or n < k:
        raise InvalidIndex(f"need n >= k >= 1, got n={n}, k={k}")
    value = evaluate_at_ones(bell(n, k, AlgorithmId.CLOSED_FORM))
    if not isinstance(value, int):
        raise NonIntegerResult(f"B({n},{k}) at all ones is {value}")
    return value


_DISPATCH = {
    StirlingMethod.EXPLICIT: stirling_explicit,
    StirlingMethod.NESTED: stirling_nested,
    StirlingMethod.CLOSED: stirling_closed_small,
    StirlingMethod.BELL: stirling_from_bell,
}


def stirling(n: int, k: int, method: StirlingMethod | str = StirlingMethod.EXPLICIT) -> int:
    return _DISPATCH[StirlingMethod(method)](n, k)
