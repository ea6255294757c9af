"""Primitive feedback polynomials used to plant benchmark and test instances."""
from __future__ import annotations

from .lfsr import FeedbackPolynomial, parse_polynomial

# One primitive polynomial per degree; tests/test_lfsr.py checks the periods.
PRIMITIVE = {
    2: "1+x+x^2",
    3: "1+x+x^3",
    4: "1+x+x^4",
    5: "1+x^2+x^5",
    6: "1+x+x^6",
    7: "1+x+x^7",
    8: "1+x^2+x^3+x^4+x^8",
    9: "1+x^4+x^9",
    10: "1+x^3+x^10",
    11: "1+x^2+x^11",
    12: "1+x+x^4+x^6+x^12",
    13: "1+x+x^3+x^4+x^13",
    14: "1+x+x^6+x^10+x^14",
    15: "1+x+x^15",
    16: "1+x+x^3+x^12+x^16",
}


def primitive(degree: int) -> FeedbackPolynomial:
    try:
        return parse_polynomial(PRIMITIVE[degree])
    except KeyError:
        raise ValueError(f"no primitive polynomial tabulated for degree {degree}") from None
