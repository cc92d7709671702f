"""Ring descriptors and exact element arithmetic.

Elements are plain Python values interpreted by their descriptor:

* ``Integers``: ``int``
* ``Rationals``: ``fractions.Fraction`` (``int`` accepted on input)
* ``PrimeField(p)`` / ``IntegersMod(m)``: ``int`` residue in ``[0, m)``
* ``Poly(base, var)`` / ``TruncatedPoly(base, n, var)``: tuple of base
  elements, lowest degree first, with no trailing zeros.  The zero
  polynomial is ``()``.

Multivariate rings are towers: ``Z[x,y]`` is ``Poly(Poly(Integers(), "x"), "y")``
and the outermost variable is the last one.  Products keep the left/right
order of their operands, so nothing below assumes commutativity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

__all__ = [
    "Ring", "Integers", "Rationals", "PrimeField", "IntegersMod", "Poly",
    "TruncatedPoly", "RingMismatch", "NotInvertible", "factorize",
    "eval_comb", "ZZ", "QQ",
]


class RingMismatch(TypeError):
    """An operand does not belong to the ring it was used with."""


class NotInvertible(ArithmeticError):
    pass


def factorize(m: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization by trial division, as ((p, e), ...) ascending."""
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class Ring:
    is_field = False

    # subclasses provide: zero, one, add, neg, mul, eq, is_zero, check,
    # from_int, from_fraction, inv, terms, variables, generators

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, x, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = self.one(), x
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def sum(self, xs):
        acc = self.zero()
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def is_unit(self, x) -> bool:
        try:
            self.inv(x)
        except NotInvertible:
            return False
        return True

    def contains(self, x) -> bool:
        try:
            self.check(x, deep=True)
        except RingMismatch:
            return False
        return True

    def format(self, x) -> str:
        """Canonical text for ``x``."""
        terms = self.terms(x)
        if not terms:
            return "0"
        out = []
        for i, (neg, body) in enumerate(terms):
            if i == 0:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def parse(self, text: str):
        from .syntax import parse_element
        return parse_element(text, self)

    def variables(self) -> Tuple[str, ...]:
        return ()

    def generators(self) -> Dict[str, object]:
        return {}

    def __str__(self):
        from .syntax import format_ring
        return format_ring(self)


@dataclass(frozen=True)
class Integers(Ring):

    def zero(self):
        return 0

    def one(self):
        return 1

    def check(self, x, deep=False):
        if not _is_int(x):
            raise RingMismatch(f"{x!r} is not an integer")

    def add(self, a, b):
        self.check(a), self.check(b)
        return a + b

    def neg(self, a):
        self.check(a)
        return -a

    def mul(self, a, b):
        self.check(a), self.check(b)
        return a * b

    def eq(self, a, b) -> bool:
        self.check(a), self.check(b)
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n):
        return int(n)

    def from_fraction(self, q: Fraction):
        if q.denominator != 1:
            raise NotInvertible(f"{q} is not an integer")
        return q.numerator

    def inv(self, a):
        self.check(a)
        if a in (1, -1):
            return a
        raise NotInvertible(f"{a} is not a unit of Z")

    def terms(self, a):
        return [] if a == 0 else [(a < 0, str(abs(a)))]


@dataclass(frozen=True)
class Rationals(Ring):
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def check(self, x, deep=False):
        if not (isinstance(x, Fraction) or _is_int(x)):
            raise RingMismatch(f"{x!r} is not a rational")

    def add(self, a, b):
        self.check(a), self.check(b)
        return Fraction(a) + b

    def neg(self, a):
        self.check(a)
        return -Fraction(a)

    def mul(self, a, b):
        self.check(a), self.check(b)
        return Fraction(a) * b

    def eq(self, a, b) -> bool:
        self.check(a), self.check(b)
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q: Fraction):
        return Fraction(q)

    def inv(self, a):
        self.check(a)
        if a == 0:
            raise NotInvertible("0 is not invertible")
        return 1 / Fraction(a)

    def terms(self, a):
        if a == 0:
            return []
        a = Fraction(a)
        body = str(abs(a.numerator)) if a.denominator == 1 else f"{abs(a.numerator)}/{a.denominator}"
        return [(a < 0, body)]


@dataclass(frozen=True)
class _Residues(Ring):
    modulus: int

    def zero(self):
        return 0

    def one(self):
        return 1 % self.modulus

    def check(self, x, deep=False):
        if not _is_int(x) or not 0 <= x < self.modulus:
            raise RingMismatch(f"{x!r} is not a residue mod {self.modulus}")

    def add(self, a, b):
        self.check(a), self.check(b)
        return (a + b) % self.modulus

    def neg(self, a):
        self.check(a)
        return -a % self.modulus

    def mul(self, a, b):
        self.check(a), self.check(b)
        return a * b % self.modulus

    def eq(self, a, b) -> bool:
        self.check(a), self.check(b)
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n):
        return int(n) % self.modulus

    def from_fraction(self, q: Fraction):
        return self.mul(self.from_int(q.numerator), self.inv(self.from_int(q.denominator)))

    def inv(self, a):
        self.check(a)
        if self.modulus == 1:
            return 0
        if gcd(a, self.modulus) != 1:
            raise NotInvertible(f"{a} is not invertible mod {self.modulus}")
        return pow(a, -1, self.modulus)

    def terms(self, a):
        return [] if a == 0 else [(False, str(a))]


@dataclass(frozen=True)
class PrimeField(_Residues):
    is_field = True

    def __post_init__(self):
        p = self.modulus
        if not _is_int(p) or p < 2 or factorize(p) != ((p, 1),):
            raise ValueError(f"GF({p}): modulus is not prime")


@dataclass(frozen=True)
class IntegersMod(_Residues):
    """Z/m; ``m == 1`` is the trivial ring."""

    factors: Tuple[Tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.modulus
        if not _is_int(m) or m < 1:
            raise ValueError(f"Z/{m}: modulus must be a positive integer")
        object.__setattr__(self, "factors", factorize(m))

    @property
    def is_field(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def omega(self, x: int) -> int:
        """Number of prime factors of gcd(x, m), counted with multiplicity."""
        x = x % self.modulus
        if x == 0:
            return sum(e for _, e in self.factors)
        total = 0
        for p, e in self.factors:
            k = 0
            while k < e and x % p == 0:
                x //= p
                k += 1
            total += k
        return total


class _PolyBase(Ring):
    """Shared dense univariate arithmetic; ``_cap`` truncates products."""

    _cap = None

    def _strip(self, coeffs) -> tuple:
        coeffs = list(coeffs)
        if self._cap is not None:
            del coeffs[self._cap:]
        z = self.base.is_zero
        while coeffs and z(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def normalize(self, coeffs: Sequence) -> tuple:
        """Accept a possibly padded coefficient list and return canonical form."""
        for c in coeffs:
            self.base.check(c, deep=True)
        if isinstance(self.base, Rationals):
            coeffs = [Fraction(c) for c in coeffs]
        return self._strip(coeffs)

    def check(self, x, deep=False):
        if not isinstance(x, tuple):
            raise RingMismatch(f"{x!r} is not a polynomial over {self.base}")
        if self._cap is not None and len(x) > self._cap:
            raise RingMismatch(f"{x!r} has too many coefficients for {self}")
        if x and self.base.is_zero(x[-1]):
            raise RingMismatch(f"{x!r} has a trailing zero; normalize it first")
        if deep:
            for c in x:
                self.base.check(c, deep=True)

    def zero(self):
        return ()

    def one(self):
        return self._strip([self.base.one()])

    def from_int(self, n):
        return self._strip([self.base.from_int(n)])

    def from_fraction(self, q):
        return self._strip([self.base.from_fraction(q)])

    def constant(self, c):
        return self._strip([c])

    def monomial(self, c, k: int):
        return self._strip([self.base.zero()] * k + [c])

    def add(self, a, b):
        self.check(a), self.check(b)
        if len(a) < len(b):
            a, b = b, a
        badd = self.base.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = badd(out[i], c)
        if len(a) == len(b):
            return self._strip(out)
        return tuple(out)

    def neg(self, a):
        self.check(a)
        bneg = self.base.neg
        return tuple(bneg(c) for c in a)

    def mul(self, a, b):
        self.check(a), self.check(b)
        if not a or not b:
            return ()
        n = len(a) + len(b) - 1
        if self._cap is not None:
            n = min(n, self._cap)
        base = self.base
        zero = base.zero()
        out = [zero] * n
        bz, badd, bmul = base.is_zero, base.add, base.mul
        for i, x in enumerate(a):
            if i >= n:
                break
            if bz(x):
                continue
            for j, y in enumerate(b):
                if i + j >= n:
                    break
                if not bz(y):
                    out[i + j] = badd(out[i + j], bmul(x, y))
        return self._strip(out)

    def scale(self, c, a):
        """Left multiplication of every coefficient of ``a`` by ``c``."""
        self.check(a)
        bmul = self.base.mul
        return self._strip([bmul(c, x) for x in a])

    def shift(self, a, k: int):
        """Multiply by var^k."""
        self.check(a)
        if not a:
            return a
        return self._strip([self.base.zero()] * k + list(a))

    def eq(self, a, b) -> bool:
        self.check(a), self.check(b)
        if len(a) != len(b):
            return False
        beq = self.base.eq
        return all(beq(x, y) for x, y in zip(a, b))

    def is_zero(self, a) -> bool:
        return len(a) == 0

    def deg(self, a) -> int:
        self.check(a)
        return len(a) - 1

    def lc(self, a):
        self.check(a)
        if not a:
            raise ValueError("the zero polynomial has no leading coefficient")
        return a[-1]

    def coeff(self, a, k: int):
        return a[k] if 0 <= k < len(a) else self.base.zero()

    def variables(self):
        return self.base.variables() + (self.var,)

    def generators(self):
        gens = {name: self.constant(g) for name, g in self.base.generators().items()}
        gens[self.var] = self.monomial(self.base.one(), 1)
        return gens

    def terms(self, a):
        out = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if self.base.is_zero(c):
                continue
            if k == 0:
                out.extend(self.base.terms(c))
                continue
            mon = self.var if k == 1 else f"{self.var}^{k}"
            ct = self.base.terms(c)
            if len(ct) == 1:
                neg, body = ct[0]
                out.append((neg, mon if body == "1" else f"{body}*{mon}"))
            else:
                out.append((False, f"({self.base.format(c)})*{mon}"))
        return out

    def _check_var(self):
        if not isinstance(self.var, str) or not self.var:
            raise ValueError("variable name required")
        if self.var in self.base.variables():
            raise ValueError(f"variable {self.var!r} repeated in ring tower")


@dataclass(frozen=True)
class Poly(_PolyBase):
    base: Ring
    var: str

    def __post_init__(self):
        self._check_var()

    @property
    def is_field(self):
        return False

    def inv(self, a):
        self.check(a)
        if len(a) != 1:
            raise NotInvertible(f"{self.format(a)} is not a unit")
        return (self.base.inv(a[0]),)

    def divmod(self, y, p):
        """Division with remainder by ``p`` whose leading coefficient is a unit."""
        self.check(y), self.check(p)
        if not p:
            raise ZeroDivisionError("division by the zero polynomial")
        base = self.base
        u = base.inv(p[-1])
        dp = len(p) - 1
        rem = list(y)
        q = [base.zero()] * max(len(y) - dp, 0)
        for k in range(len(rem) - 1, dp - 1, -1):
            c = rem[k]
            if base.is_zero(c):
                continue
            t = base.mul(c, u)
            q[k - dp] = t
            for i, pc in enumerate(p):
                rem[k - dp + i] = base.sub(rem[k - dp + i], base.mul(t, pc))
        return self._strip(q), self._strip(rem)


@dataclass(frozen=True)
class TruncatedPoly(_PolyBase):
    """K[var]/(var^n) over a field K."""

    base: Ring
    n: int
    var: str

    def __post_init__(self):
        if not self.base.is_field:
            raise ValueError(f"{self.base} is not a field; truncated polynomials need a field base")
        if not _is_int(self.n) or self.n < 1:
            raise ValueError("truncation degree must be at least 1")
        self._check_var()

    @property
    def _cap(self):
        return self.n

    def order(self, a) -> int:
        """Index of the lowest nonzero coefficient (``a`` nonzero)."""
        for i, c in enumerate(a):
            if not self.base.is_zero(c):
                return i
        raise ValueError("the zero element has no order")

    def inv(self, a):
        self.check(a)
        base = self.base
        if not a or base.is_zero(a[0]):
            raise NotInvertible(f"{self.format(a)} is not a unit")
        u = base.inv(a[0])
        out = [u]
        for k in range(1, self.n):
            s = base.zero()
            for i in range(1, min(k, len(a) - 1) + 1):
                s = base.add(s, base.mul(a[i], out[k - i]))
            out.append(base.neg(base.mul(u, s)))
        return self._strip(out)


ZZ = Integers()
QQ = Rationals()


def embed_scalar(ring: Ring, c):
    """``c`` from the bottom of a polynomial tower as a constant of ``ring``."""
    if isinstance(ring, _PolyBase):
        return ring.constant(embed_scalar(ring.base, c))
    return c


def normalizing_unit(ring: Ring, x):
    """A unit ``u`` of the tower's bottom ring (as a constant of ``ring``),
    with its inverse, such that ``u*x`` is content-free: integer coefficients
    with gcd 1 over Q, leading coefficient 1 over a prime field, positive
    leading coefficient over Z.  Other bottoms, and zero, get ``u = 1``."""
    bottom, lead, coeffs = ring, x, []

    def walk(r, y):
        if isinstance(r, _PolyBase):
            for c in y:
                walk(r.base, c)
        else:
            coeffs.append(y)

    walk(ring, x)
    while isinstance(bottom, _PolyBase):
        if not lead:
            return ring.one(), ring.one()
        bottom, lead = bottom.base, lead[-1]
    if isinstance(bottom, Rationals) and lead:
        g, l = 0, 1
        for c in coeffs:
            g = gcd(g, c.numerator)
            l = l * c.denominator // gcd(l, c.denominator)
        u = Fraction(l, g) if lead > 0 else Fraction(-l, g)
    elif isinstance(bottom, Integers) and lead:
        u = 1 if lead > 0 else -1
    elif isinstance(bottom, _Residues) and bottom.is_field and lead:
        u = bottom.inv(lead)
    else:
        return ring.one(), ring.one()
    return embed_scalar(ring, u), embed_scalar(ring, bottom.inv(u))


def eval_comb(ring: Ring, context: Sequence, comb: Sequence):
    """Sum of ``comb[i] * context[i]``; missing trailing coefficients are zero."""
    if len(comb) > len(context):
        raise ValueError(f"combination has {len(comb)} coefficients for {len(context)} elements")
    acc = ring.zero()
    for c, x in zip(comb, context):
        if not ring.is_zero(c):
            acc = ring.add(acc, ring.mul(c, x))
    return acc
