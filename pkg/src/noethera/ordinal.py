"""Ordinals below omega^omega in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing natural exponents and positive coefficients, so that
``((2, 3), (1, 1), (0, 4))`` is w^2*3 + w + 4.  Because the representation is
canonical, ordinal comparison is plain lexicographic comparison of the term
tuples.

``BOTTOM`` sits below every ordinal; it stands for the "-1" bound attached to
zero elements and to lists that are already good.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence, Tuple, Union

__all__ = [
    "Ordinal", "BOTTOM", "ZERO", "ONE", "OMEGA", "OrdinalParseError",
    "cmp", "nat_sum", "nat_prod", "ord_sum", "left_sub",
    "omega_power", "encode_tuple", "decode_tuple",
    "parse_ordinal", "format_ordinal",
]

Term = Tuple[int, int]


class OrdinalParseError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


@total_ordering
class _Bottom:
    """The element below every ordinal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("BOTTOM")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (Ordinal, int)):
            return True
        return NotImplemented

    def __repr__(self):
        return "BOTTOM"

    __str__ = __repr__

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


def _as_ordinal(x) -> "Ordinal":
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal.from_int(x)
    raise TypeError(f"not an ordinal: {x!r}")


@total_ordering
@dataclass(frozen=True, eq=False)
class Ordinal:
    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        terms = tuple((int(e), int(c)) for e, c in self.terms)
        prev = None
        for e, c in terms:
            if e < 0 or c < 1:
                raise ValueError(f"bad CNF term w^{e}*{c}")
            if prev is not None and e >= prev:
                raise ValueError("CNF exponents must strictly decrease")
            prev = e
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((0, n),)) if n else cls(())

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "Ordinal":
        """Build from unordered, possibly repeated terms by merging coefficients."""
        acc = {}
        for e, c in terms:
            if c:
                acc[e] = acc.get(e, 0) + c
        return cls(tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True)))

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0] == 0

    def degree(self) -> int:
        """Leading exponent; -1 for zero."""
        return self.terms[0][0] if self.terms else -1

    def coefficient(self, e: int) -> int:
        for ee, c in self.terms:
            if ee == e:
                return c
        return 0

    def __int__(self):
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __eq__(self, other):
        if isinstance(other, Ordinal):
            return self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self == Ordinal.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __lt__(self, other):
        if other is BOTTOM:
            return False
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms < other.terms

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"

    def __str__(self):
        return format_ordinal(self)


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal(((1, 1),))


def omega_power(e: int, c: int = 1) -> Ordinal:
    return Ordinal(((e, c),)) if c else ZERO


def cmp(a, b) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    if a == b:
        return 0
    return -1 if a < b else 1


def nat_sum(a, b) -> Ordinal:
    a, b = _as_ordinal(a), _as_ordinal(b)
    return Ordinal.from_terms(a.terms + b.terms)


def nat_prod(a, b) -> Ordinal:
    a, b = _as_ordinal(a), _as_ordinal(b)
    return Ordinal.from_terms(
        (e + f, c * d) for e, c in a.terms for f, d in b.terms
    )


def ord_sum(a, b) -> Ordinal:
    """Ordinary (left-absorbing) ordinal addition ``a + b``."""
    a, b = _as_ordinal(a), _as_ordinal(b)
    if b.is_zero():
        return a
    lead, coeff = b.terms[0]
    head = [t for t in a.terms if t[0] > lead]
    coeff += a.coefficient(lead)
    return Ordinal(tuple(head) + ((lead, coeff),) + b.terms[1:])


def left_sub(a, g) -> Ordinal:
    """The unique ``d`` with ``a + d == g``; requires ``a <= g``."""
    a, g = _as_ordinal(a), _as_ordinal(g)
    if g < a:
        raise ValueError(f"left_sub: {a} exceeds {g}")
    at, gt = a.terms, g.terms
    for i, (ge, gc) in enumerate(gt):
        if i >= len(at):
            return Ordinal(gt[i:])
        ae, ac = at[i]
        if (ae, ac) == (ge, gc):
            continue
        if ge > ae:
            return Ordinal(gt[i:])
        # same exponent, larger coefficient in g
        return Ordinal(((ge, gc - ac),) + gt[i + 1:])
    return ZERO


def encode_tuple(exps: Sequence[int]) -> Ordinal:
    """(e0, ..., e_{n-1}) -> w^{n-1}*e_{n-1} + ... + e0."""
    if any(e < 0 for e in exps):
        raise ValueError("tuple entries must be natural numbers")
    return Ordinal(tuple((i, e) for i, e in reversed(list(enumerate(exps))) if e))


def decode_tuple(n: int, o) -> Tuple[int, ...]:
    """Inverse of :func:`encode_tuple` on ordinals below w^n."""
    o = _as_ordinal(o)
    if o.degree() >= n:
        raise ValueError(f"{o} is not below w^{n}")
    out = [0] * n
    for e, c in o.terms:
        out[e] = c
    return tuple(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``w^2*3 + w + 4``-style text; terms may come in any order.

    The lone text ``-1`` denotes BOTTOM, mirroring :func:`format_ordinal`.
    """
    if text.strip() == "-1":
        return BOTTOM
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("nat", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append((m.group(2), None, m.start(2)))
    tokens.append(("end", None, len(text)))
    pos = 0

    def expect(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            raise OrdinalParseError(f"expected {kind}, found {what}", text, tok[2])
        pos += 1
        return tok

    def term():
        nonlocal pos
        tok = tokens[pos]
        if tok[0] == "nat":
            pos += 1
            return (0, tok[1])
        if tok[0] == "w":
            pos += 1
            exp, coeff = 1, 1
            if tokens[pos][0] == "^":
                pos += 1
                exp = expect("nat")[1]
            if tokens[pos][0] == "*":
                pos += 1
                t = expect("nat")
                if t[1] == 0:
                    raise OrdinalParseError("coefficient must be positive", text, t[2])
                coeff = t[1]
            return (exp, coeff)
        what = "end of input" if tok[0] == "end" else repr(tok[0])
        raise OrdinalParseError(f"expected term, found {what}", text, tok[2])

    terms = [term()]
    while tokens[pos][0] == "+":
        pos += 1
        terms.append(term())
    expect("end")
    return Ordinal.from_terms(terms)


def format_ordinal(o) -> str:
    if o is BOTTOM:
        return "-1"
    o = _as_ordinal(o)
    if o.is_zero():
        return "0"
    parts = []
    for e, c in o.terms:
        if e == 0:
            parts.append(str(c))
            continue
        s = "w" if e == 1 else f"w^{e}"
        if c != 1:
            s += f"*{c}"
        parts.append(s)
    return " + ".join(parts)


OrdinalExt = Union[Ordinal, _Bottom]
