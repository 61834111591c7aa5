"""Exact sparse multivariate polynomials in the variables x1, x2, ...

Coefficients are Python integers (arbitrary precision) or, for the
intermediate values of some algorithms, :class:`fractions.Fraction`.
A fraction whose denominator is 1 is always stored as an ``int``, so a
polynomial with integral coefficients compares equal however it was built.

Variables are indexed from 1.  Internally a monomial is the dense tuple of
its exponents ``(l1, l2, ..., lm)`` with trailing zeros removed; that tuple
is never exposed directly except through :attr:`Monomial.dense`.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import zip_longest
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import MissingVariable, NonIntegerResult, NotDivisible, ZeroPolynomial

Scalar = Union[int, Fraction]


def _norm(c) -> Scalar:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


def _strip(dense: Iterable[int]) -> tuple[int, ...]:
    dense = list(dense)
    while dense and dense[-1] == 0:
        dense.pop()
    return tuple(dense)


class Monomial:
    """x1**l1 * x2**l2 * ... with non-negative exponents.

    Monomials are ordered by their exponent vectors: ascending exponent of
    x1, then of x2, and so on.  This is the canonical term order used for
    display and serialization.
    """

    __slots__ = ("_dense",)

    def __init__(self, dense: Iterable[int] = ()):
        dense = _strip(dense)
        if any(e < 0 for e in dense):
            raise ValueError("negative exponent")
        self._dense = dense

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> Monomial:
        """Build from a map ``{variable index (1-based): exponent}``."""
        if not exponents:
            return cls()
        if min(exponents) < 1:
            raise ValueError("variable indices start at 1")
        dense = [0] * max(exponents)
        for alpha, e in exponents.items():
            dense[alpha - 1] = int(e)
        return cls(dense)

    @classmethod
    def var(cls, alpha: int) -> Monomial:
        return cls.from_exponents({alpha: 1})

    @property
    def dense(self) -> tuple[int, ...]:
        return self._dense

    @property
    def exponents(self) -> dict[int, int]:
        """Sparse view ``{alpha: l_alpha}`` without zero exponents."""
        return {i + 1: e for i, e in enumerate(self._dense) if e}

    @property
    def degree(self) -> int:
        return sum(self._dense)

    @property
    def weight(self) -> int:
        return sum((i + 1) * e for i, e in enumerate(self._dense))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(_dense_mul(self._dense, other._dense))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._dense == other._dense

    def __lt__(self, other: Monomial) -> bool:
        return self._dense < other._dense

    def __hash__(self):
        return hash(self._dense)

    def __repr__(self):
        return f"Monomial({self.exponents})"


def _dense_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip_longest(a, b, fillvalue=0))


class Polynomial:
    """Immutable sparse polynomial in canonical form.

    No zero coefficient is ever stored and equal monomials are merged, so
    ``==`` is mathematical equality.  The zero polynomial has no terms.

    Supports ``+``, ``-``, ``*`` with polynomials and exact scalars, ``/``
    by an exact scalar or by a single-term polynomial (exact division), and
    non-negative integer powers.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[tuple[int, ...], Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            key = mono.dense if isinstance(mono, Monomial) else _strip(mono)
            acc[key] = acc.get(key, 0) + c
        self._terms = {m: _norm(c) for m, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        # trusted constructor: keys already stripped, no zeros, normalized
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def one(cls) -> Polynomial:
        return cls.constant(1)

    @classmethod
    def constant(cls, c) -> Polynomial:
        c = _norm(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, alpha: int, coeff=1) -> Polynomial:
        """The polynomial ``coeff * x_alpha``."""
        return cls({Monomial.var(alpha): coeff})

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType({Monomial(m): c for m, c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in canonical order."""
        return [(Monomial(m), self._terms[m]) for m in sorted(self._terms)]

    def coefficients(self) -> list[Scalar]:
        return [self._terms[m] for m in sorted(self._terms)]

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono.dense, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def variables(self) -> set[int]:
        return {i + 1 for m in self._terms for i, e in enumerate(m) if e}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .render import render_text

        return f"Polynomial({render_text(self)!r})"

    # arithmetic

    @staticmethod
    def _coerce(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _times_scalar(self, other)
        if isinstance(other, Polynomial):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return _times_scalar(self, Fraction(1) / other)
        if isinstance(other, Polynomial):
            return _div_by_term(self, other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        result, base = Polynomial.one(), self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    """Canonical sum of two polynomials."""
    if len(p._terms) < len(q._terms):
        p, q = q, p
    acc = dict(p._terms)
    for m, c in q._terms.items():
        s = acc.get(m, 0) + c
        if s:
            acc[m] = _norm(s)
        else:
            acc.pop(m, None)
    return Polynomial._raw(acc)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product in canonical form."""
    acc: dict[tuple[int, ...], Scalar] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = _dense_mul(m1, m2)
            acc[m] = acc.get(m, 0) + c1 * c2
    return Polynomial._raw({m: _norm(c) for m, c in acc.items() if c})


def _times_scalar(p: Polynomial, r) -> Polynomial:
    r = _norm(r)
    if r == 0:
        return Polynomial.zero()
    return Polynomial._raw({m: _norm(c * r) for m, c in p._terms.items()})


def scale(p: Polynomial, r) -> Polynomial:
    """Multiply every coefficient by ``r``; the result must stay integral.

    Raises :class:`NonIntegerResult` otherwise.  Use ``p * r`` for plain
    rational scaling.
    """
    out = _times_scalar(p, r)
    for m, c in out._terms.items():
        if not isinstance(c, int):
            raise NonIntegerResult(
                f"coefficient {p._terms[m]} * {r} = {c} of {Monomial(m)!r} is not an integer"
            )
    return out


def div_by_var(p: Polynomial, alpha: int) -> Polynomial:
    """Divide exactly by ``x_alpha``; every term must contain it."""
    i = alpha - 1
    acc = {}
    for m, c in p._terms.items():
        if len(m) <= i or m[i] == 0:
            raise NotDivisible(f"term {c}*{Monomial(m)!r} is not divisible by x{alpha}")
        acc[_strip(m[:i] + (m[i] - 1,) + m[i + 1:])] = c
    return Polynomial._raw(acc)


def _div_by_term(p: Polynomial, d: Polynomial) -> Polynomial:
    if len(d._terms) != 1:
        raise NotDivisible("exact division is only defined for a single-term divisor")
    ((dm, dc),) = d._terms.items()
    acc = {}
    for m, c in p._terms.items():
        if len(m) < len(dm) or any(a < b for a, b in zip(m, dm)):
            raise NotDivisible(f"term {c}*{Monomial(m)!r} is not divisible by {d!r}")
        q = list(m)
        for i, b in enumerate(dm):
            q[i] -= b
        acc[_strip(q)] = _norm(Fraction(c) / dc)
    return Polynomial._raw(acc)


def evaluate(p: Polynomial, assignment: Mapping[int, Scalar]) -> Scalar:
    """Exact value of ``p`` with ``x_alpha = assignment[alpha]``."""
    total = Fraction(0)
    powers: dict[tuple[int, int], Scalar] = {}
    for m, c in p._terms.items():
        term = Fraction(c)
        for i, e in enumerate(m):
            if not e:
                continue
            key = (i + 1, e)
            if key not in powers:
                try:
                    powers[key] = Fraction(assignment[i + 1]) ** e
                except KeyError:
                    raise MissingVariable(f"no value for x{i + 1}") from None
            term *= powers[key]
        total += term
    return _norm(total)


def evaluate_at_ones(p: Polynomial) -> Scalar:
    return _norm(sum(p._terms.values(), Fraction(0)))


class Irregular(enum.Enum):
    """Marker returned by :func:`degree_weight` when terms disagree."""

    INHOMOGENEOUS = "inhomogeneous"
    ANISOBARIC = "anisobaric"


def degree_weight(p: Polynomial) -> tuple[int | Irregular, int | Irregular]:
    """Common total degree and weight of all terms of ``p``."""
    if p.is_zero():
        raise ZeroPolynomial("degree and weight of the zero polynomial are undefined")
    degrees = {sum(m) for m in p._terms}
    weights = {sum((i + 1) * e for i, e in enumerate(m)) for m in p._terms}
    degree = degrees.pop() if len(degrees) == 1 else Irregular.INHOMOGENEOUS
    weight = weights.pop() if len(weights) == 1 else Irregular.ANISOBARIC
    return degree, weight
