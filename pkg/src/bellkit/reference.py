"""Published listing of B(n, 7) for n = 8..13, in its original term order.

Used by ``bellkit verify`` and the test-suite as fixed external values.
"""

from __future__ import annotations

from .polyalgebra import Polynomial
from .render import parse_text

PUBLISHED_B7 = {
    8: "28*x1^6*x2",
    9: "378*x1^5*x2^2 + 84*x1^6*x3",
    10: "3150*x1^4*x2^3 + 2520*x1^5*x2*x3 + 210*x1^6*x4",
    11: "17325*x1^3*x2^4 + 34650*x1^4*x2^2*x3 + 4620*x1^5*x3^2 + 6930*x1^5*x2*x4 + 462*x1^6*x5",
    12: (
        "62370*x1^2*x2^5 + 277200*x1^3*x2^3*x3 + 138600*x1^4*x2*x3^2 + 103950*x1^4*x2^2*x4"
        " + 27720*x1^5*x3*x4 + 16632*x1^5*x2*x5 + 924*x1^6*x6"
    ),
    13: (
        "135135*x1*x2^6 + 1351350*x1^2*x2^4*x3 + 1801800*x1^3*x2^2*x3^2 + 200200*x1^4*x3^3"
        " + 900900*x1^3*x2^3*x4 + 900900*x1^4*x2*x3*x4 + 45045*x1^5*x4^2 + 270270*x1^4*x2^2*x5"
        " + 72072*x1^5*x3*x5 + 36036*x1^5*x2*x6 + 1716*x1^6*x7"
    ),
}


def published(n: int, k: int = 7) -> Polynomial | None:
    if k != 7 or n not in PUBLISHED_B7:
        return None
    return parse_text(PUBLISHED_B7[n])
