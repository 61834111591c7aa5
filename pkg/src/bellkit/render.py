"""Text, LaTeX and JSON renderings of polynomials, all in canonical term order."""

from __future__ import annotations

import json
from fractions import Fraction

from .polyalgebra import Monomial, Polynomial


def _signed_join(pieces: list[tuple[bool, str]]) -> str:
    out = ""
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out


def render_text(p: Polynomial) -> str:
    """Plain text such as ``378*x1^5*x2^2 + 84*x1^6*x3``."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono, c in p.sorted_terms():
        factors = [f"x{a}" if e == 1 else f"x{a}^{e}" for a, e in mono.exponents.items()]
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        pieces.append((c < 0, "*".join(factors)))
    return _signed_join(pieces)


def render_latex(p: Polynomial) -> str:
    """LaTeX such as ``378 x_{1}^{5} x_{2}^{2} + 84 x_{1}^{6} x_{3}``."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono, c in p.sorted_terms():
        factors = [f"x_{{{a}}}" if e == 1 else f"x_{{{a}}}^{{{e}}}" for a, e in mono.exponents.items()]
        mag = abs(c)
        if isinstance(mag, Fraction):
            factors.insert(0, f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}")
        elif mag != 1 or not factors:
            factors.insert(0, str(mag))
        pieces.append((c < 0, " ".join(factors)))
    return _signed_join(pieces)


def to_json_obj(p: Polynomial, n: int | None = None, k: int | None = None) -> dict:
    """JSON-ready dict; coefficients are decimal strings so no width is lost."""
    obj = {}
    if n is not None:
        obj["n"] = n
    if k is not None:
        obj["k"] = k
    obj["terms"] = [
        {"coeff": str(c), "exps": {str(a): e for a, e in mono.exponents.items()}}
        for mono, c in p.sorted_terms()
    ]
    return obj


def from_json_obj(obj: dict) -> Polynomial:
    terms = []
    for t in obj["terms"]:
        mono = Monomial.from_exponents({int(a): int(e) for a, e in t["exps"].items()})
        terms.append((mono, Fraction(t["coeff"])))
    return Polynomial(terms)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_json(p: Polynomial, n: int | None = None, k: int | None = None) -> str:
    return dumps(to_json_obj(p, n, k))


def canonical_bytes(p: Polynomial) -> bytes:
    """Byte string identifying ``p`` exactly; the basis for report digests."""
    return dumps(to_json_obj(p)["terms"]).encode()


def parse_text(s: str) -> Polynomial:
    """Inverse of :func:`render_text` (integer or ``a/b`` coefficients)."""
    s = s.strip()
    if s == "0":
        return Polynomial.zero()
    terms = []
    for tok in s.replace(" - ", " + -").split(" + "):
        tok = tok.strip()
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("-")
        coeff = Fraction(1)
        exps: dict[int, int] = {}
        for factor in tok.split("*"):
            if factor.startswith("x"):
                var, _, e = factor[1:].partition("^")
                exps[int(var)] = exps.get(int(var), 0) + (int(e) if e else 1)
            else:
                coeff *= Fraction(factor)
        terms.append((Monomial.from_exponents(exps), sign * coeff))
    return Polynomial(terms)
