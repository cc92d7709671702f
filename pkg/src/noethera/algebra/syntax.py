"""Text grammar for rings and their elements.

Rings::

    ring  := atom suffix*
    atom  := "Z" | "Q" | "GF(" p ")" | "Z/" m
    suffix := "[" var ("," var)* "]" | "[" var "]/(" var "^" n ")"

Elements are evaluated directly in a ring by recursive descent::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | power
    power  := atom ("^" nat)?
    atom   := nat ["/" nat] | var | "(" expr ")"
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .rings import (
    Integers, IntegersMod, NotInvertible, Poly, PrimeField, Rationals, Ring,
    TruncatedPoly,
)

__all__ = ["ParseError", "parse_ring", "format_ring", "parse_element", "format_element"]


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class Token(NamedTuple):
    kind: str  # "nat", "name", a punctuation character, or "end"
    value: object
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> List[Token]:
    out = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            out.append(Token("nat", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("name", m.group(2), m.start(2)))
        else:
            out.append(Token(m.group(3), None, m.start(3)))
    out.append(Token("end", None, len(text)))
    return out


class _Cursor:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek
        raise ParseError(message, self.text, tok.pos)

    def expect(self, kind, what=None) -> Token:
        tok = self.peek
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.value if tok.value is not None else tok.kind)
            self.fail(f"expected {what or repr(kind)}, found {found}")
        return self.next()


def parse_ring(text: str) -> Ring:
    cur = _Cursor(text)
    tok = cur.expect("name", "ring name")
    if tok.value == "Z":
        if cur.peek.kind == "/":
            cur.next()
            m = cur.expect("nat", "modulus")
            if m.value < 1:
                cur.fail("modulus must be positive", m)
            ring = IntegersMod(m.value)
        else:
            ring = Integers()
    elif tok.value == "Q":
        ring = Rationals()
    elif tok.value == "GF":
        cur.expect("(")
        p = cur.expect("nat", "prime")
        try:
            ring = PrimeField(p.value)
        except ValueError as exc:
            cur.fail(str(exc), p)
        cur.expect(")")
    else:
        cur.fail(f"unknown ring {tok.value!r}", tok)
    while cur.peek.kind == "[":
        cur.next()
        names = [cur.expect("name", "variable")]
        while cur.peek.kind == ",":
            cur.next()
            names.append(cur.expect("name", "variable"))
        cur.expect("]")
        if cur.peek.kind == "/":
            slash = cur.next()
            if len(names) != 1:
                cur.fail("truncation needs exactly one variable", slash)
            cur.expect("(")
            v = cur.expect("name", "variable")
            if v.value != names[0].value:
                cur.fail(f"truncation variable must be {names[0].value!r}", v)
            cur.expect("^")
            n = cur.expect("nat", "truncation degree")
            cur.expect(")")
            try:
                ring = TruncatedPoly(ring, n.value, v.value)
            except ValueError as exc:
                cur.fail(str(exc), slash)
        else:
            for name in names:
                try:
                    ring = Poly(ring, name.value)
                except ValueError as exc:
                    cur.fail(str(exc), name)
    cur.expect("end", "end of input")
    return ring


def format_ring(ring: Ring) -> str:
    if isinstance(ring, Integers):
        return "Z"
    if isinstance(ring, Rationals):
        return "Q"
    if isinstance(ring, PrimeField):
        return f"GF({ring.modulus})"
    if isinstance(ring, IntegersMod):
        return f"Z/{ring.modulus}"
    if isinstance(ring, TruncatedPoly):
        return f"{format_ring(ring.base)}[{ring.var}]/({ring.var}^{ring.n})"
    if isinstance(ring, Poly):
        names = []
        while isinstance(ring, Poly):
            names.append(ring.var)
            ring = ring.base
        return f"{format_ring(ring)}[{','.join(reversed(names))}]"
    raise TypeError(f"unknown ring {ring!r}")


def parse_element(text: str, ring: Ring):
    cur = _Cursor(text)
    gens = ring.generators()

    def expr():
        acc = term()
        while cur.peek.kind in ("+", "-"):
            op = cur.next().kind
            rhs = term()
            acc = ring.add(acc, rhs) if op == "+" else ring.sub(acc, rhs)
        return acc

    def term():
        acc = factor()
        while cur.peek.kind == "*":
            cur.next()
            acc = ring.mul(acc, factor())
        return acc

    def factor():
        if cur.peek.kind == "-":
            cur.next()
            return ring.neg(factor())
        return power()

    def power():
        base = atom()
        if cur.peek.kind == "^":
            cur.next()
            n = cur.expect("nat", "natural exponent")
            return ring.pow(base, n.value)
        return base

    def atom():
        tok = cur.peek
        if tok.kind == "nat":
            cur.next()
            if cur.peek.kind == "/":
                cur.next()
                den = cur.expect("nat", "denominator")
                if den.value == 0:
                    cur.fail("zero denominator", den)
                try:
                    return ring.from_fraction(Fraction(tok.value, den.value))
                except NotInvertible as exc:
                    cur.fail(str(exc), tok)
            return ring.from_int(tok.value)
        if tok.kind == "name":
            cur.next()
            if tok.value not in gens:
                cur.fail(f"unknown variable {tok.value!r} for ring {format_ring(ring)}", tok)
            return gens[tok.value]
        if tok.kind == "(":
            cur.next()
            val = expr()
            cur.expect(")")
            return val
        found = "end of input" if tok.kind == "end" else repr(tok.kind)
        cur.fail(f"expected number, variable or '(', found {found}")

    value = expr()
    cur.expect("end", "end of input")
    return value


def format_element(x, ring: Ring) -> str:
    return ring.format(x)
