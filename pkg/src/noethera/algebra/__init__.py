from .rings import (
    QQ, ZZ, Integers, IntegersMod, NotInvertible, Poly, PrimeField, Rationals,
    Ring, RingMismatch, TruncatedPoly, eval_comb, factorize,
)
from .syntax import ParseError, format_element, format_ring, parse_element, parse_ring

__all__ = [
    "QQ", "ZZ", "Integers", "IntegersMod", "NotInvertible", "Poly", "PrimeField",
    "Rationals", "Ring", "RingMismatch", "TruncatedPoly", "eval_comb", "factorize",
    "ParseError", "format_element", "format_ring", "parse_element", "parse_ring",
    "poly_view",
]


def poly_view(ring, f):
    """(degree, leading coefficient) of a possibly padded coefficient list.

    The zero polynomial has degree -1 and leading coefficient ``None``.
    """
    f = ring.normalize(f)
    if not f:
        return -1, None
    return len(f) - 1, f[-1]
