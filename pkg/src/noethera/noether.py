"""Noetherian witnesses: executable strategies for ordinal-bounded good lists.

A witness state stands for a list ``sigma`` together with an ordinal bound
``b`` such that ``sigma`` is ``b``-good.  Advancing it with an element ``x``
either proves ``sigma.x`` good (a combination of the earlier elements equal to
``x``) or returns a strictly smaller bound and the state for ``sigma.x``.
States are immutable, so one state may be advanced many times.

Base instances come from Euclidean structures: a rank function into the
ordinals and a reduction step that lowers rank modulo a pivot.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple, Union

from .algebra.rings import (
    Integers, IntegersMod, Poly, PrimeField, Rationals, Ring, TruncatedPoly,
)
from .checks import verify_good
from .ordinal import BOTTOM, OMEGA, ONE, Ordinal

__all__ = [
    "Good", "Continue", "Witness", "WitnessState", "EuclidStructure",
    "IntegerEuclid", "ResidueEuclid", "FieldEuclid", "TruncatedEuclid",
    "PolyEuclid", "EuclideanWitness", "euclid_structure", "witness_for",
    "fresh", "verify_good", "Unsupported", "Run", "run",
]


class Unsupported(ValueError):
    pass


@dataclass(frozen=True)
class Good:
    """``comb`` expresses the new element through the earlier ones."""

    comb: Tuple


@dataclass(frozen=True)
class Continue:
    bound: Ordinal
    state: "WitnessState"


Outcome = Union[Good, Continue]


class WitnessState:
    """State for a list of ``length`` elements that is ``bound``-good."""

    ring: Ring
    length: int
    bound: Ordinal

    def advance(self, x) -> Outcome:
        self.ring.check(x, deep=True)
        out = self._advance(x)
        if isinstance(out, Continue):
            if not out.bound < self.bound:
                raise AssertionError(f"bound {out.bound} does not descend below {self.bound}")
            if out.state.bound != out.bound or out.state.length != self.length + 1:
                raise AssertionError("inconsistent successor state")
        elif len(out.comb) > self.length:
            raise AssertionError("certificate longer than the list")
        return out

    def _advance(self, x) -> Outcome:
        raise NotImplementedError

    def duplicate(self) -> "WitnessState":
        return copy.copy(self)


class Witness:
    """Factory of fresh states for the empty list; ``alpha`` is its bound."""

    ring: Ring
    alpha: Ordinal

    def fresh(self) -> WitnessState:
        raise NotImplementedError


# -- Euclidean structures ---------------------------------------------------


class EuclidStructure:
    """``rank(x)`` is BOTTOM exactly for zero and stays below ``alpha``;
    ``step(p, y)`` returns ``(q, z)`` with ``z = y - q*p`` and rank(z) < rank(p)."""

    ring: Ring
    alpha: Ordinal

    def rank(self, x):
        raise NotImplementedError

    def step(self, pivot, y):
        raise NotImplementedError


class IntegerEuclid(EuclidStructure):
    alpha = OMEGA

    def __init__(self, ring=None):
        self.ring = ring or Integers()

    def rank(self, x):
        return BOTTOM if x == 0 else Ordinal.from_int(abs(x) - 1)

    def step(self, pivot, y):
        z = y % abs(pivot)
        return (y - z) // pivot, z


class FieldEuclid(EuclidStructure):
    alpha = ONE

    def __init__(self, ring):
        if not ring.is_field:
            raise Unsupported(f"{ring} is not a field")
        self.ring = ring

    def rank(self, x):
        return BOTTOM if self.ring.is_zero(x) else Ordinal()

    def step(self, pivot, y):
        return self.ring.mul(y, self.ring.inv(pivot)), self.ring.zero()


def _val(x: int, p: int, cap: int) -> int:
    k = 0
    while k < cap and x % p == 0:
        x //= p
        k += 1
    return k


def _crt(congruences):
    """Smallest k >= 0 with k = r (mod p) for each (p, r); moduli coprime."""
    k, mod = 0, 1
    for p, r in congruences:
        t = ((r - k) * pow(mod, -1, p)) % p
        k += mod * t
        mod *= p
    return k


class ResidueEuclid(EuclidStructure):
    """Z/m ranked by the number of prime factors of gcd(x, m)."""

    def __init__(self, ring: IntegersMod):
        self.ring = ring
        self.alpha = Ordinal.from_int(sum(e for _, e in ring.factors))

    def rank(self, x):
        return BOTTOM if x == 0 else Ordinal.from_int(self.ring.omega(x))

    def step(self, pivot, y):
        m = self.ring.modulus
        d = gcd(pivot, m)
        if y % d == 0:
            k = (-(y // d)) % (m // d)
        else:
            # pick k so that gcd(y + k*d, m) == gcd(y, d), prime by prime
            congruences = []
            for r, e in self.ring.factors:
                vd = _val(d, r, e)
                if vd == e or _val(y, r, e) < vd:
                    continue
                rv = r ** vd
                bad = (-(y // rv) * pow(d // rv, -1, r)) % r
                congruences.append((r, (bad + 1) % r))
            k = _crt(congruences)
        md = m // d
        q = (-k * pow(pivot // d, -1, md)) % md if md > 1 else 0
        z = (y - q * pivot) % m
        return q, z


class TruncatedEuclid(EuclidStructure):
    """K[X]/(X^n) ranked by the order of the lowest nonzero coefficient."""

    def __init__(self, ring: TruncatedPoly):
        self.ring = ring
        self.alpha = Ordinal.from_int(ring.n)

    def rank(self, x):
        return BOTTOM if not x else Ordinal.from_int(self.ring.order(x))

    def step(self, pivot, y):
        R = self.ring
        k = R.order(pivot)
        z = R.normalize(y[:k])
        rest = R.normalize(y[k:])
        unit = R.normalize(pivot[k:])
        return R.mul(rest, R.inv(unit)), z


class PolyEuclid(EuclidStructure):
    """K[X] over a field, ranked by degree."""

    alpha = OMEGA

    def __init__(self, ring: Poly):
        if not isinstance(ring, Poly) or not ring.base.is_field:
            raise Unsupported(f"{ring} is not a univariate polynomial ring over a field")
        self.ring = ring

    def rank(self, x):
        return BOTTOM if not x else Ordinal.from_int(len(x) - 1)

    def step(self, pivot, y):
        return self.ring.divmod(y, pivot)


def euclid_structure(ring: Ring) -> EuclidStructure:
    if isinstance(ring, Integers):
        return IntegerEuclid(ring)
    if isinstance(ring, IntegersMod):
        return ResidueEuclid(ring)
    if isinstance(ring, (Rationals, PrimeField)):
        return FieldEuclid(ring)
    if isinstance(ring, TruncatedPoly):
        return TruncatedEuclid(ring)
    if isinstance(ring, Poly):
        return PolyEuclid(ring)
    raise Unsupported(f"no Euclidean structure for {ring}")


# -- Euclidean -> Noetherian -----------------------------------------------


class EuclideanWitness(Witness):
    def __init__(self, structure: EuclidStructure):
        self.structure = structure
        self.ring = structure.ring
        self.alpha = structure.alpha

    def fresh(self) -> "_EuclidState":
        return _EuclidState(self, 0, self.alpha, None, ())


class _EuclidState(WitnessState):
    """Keeps one pivot in <sigma> of rank ``bound`` and its combination."""

    def __init__(self, witness, length, bound, pivot, pivot_comb):
        self.witness = witness
        self.ring = witness.ring
        self.length = length
        self.bound = bound
        self.pivot = pivot
        self.pivot_comb = pivot_comb

    def _advance(self, y):
        R, E = self.ring, self.witness.structure
        if self.pivot is None:
            if R.is_zero(y):
                return Good(())
            return Continue(E.rank(y), _EuclidState(self.witness, 1, E.rank(y), y, (R.one(),)))
        q, z = E.step(self.pivot, y)
        comb = tuple(R.mul(q, c) for c in self.pivot_comb)
        if R.is_zero(z):
            return Good(comb)
        # z = y - q*pivot over sigma.y
        comb = tuple(R.neg(c) for c in comb) + (R.one(),)
        rank = E.rank(z)
        return Continue(rank, _EuclidState(self.witness, self.length + 1, rank, z, comb))

    def __repr__(self):
        return f"<EuclidState len={self.length} bound={self.bound}>"


def witness_for(ring: Ring) -> Witness:
    """The witness the engine uses for ``ring``; polynomial rings are lifted."""
    if isinstance(ring, Poly):
        from .hilbert import LiftedWitness
        return LiftedWitness(witness_for(ring.base), ring)
    if isinstance(ring, (Integers, IntegersMod, Rationals, PrimeField, TruncatedPoly)):
        return EuclideanWitness(euclid_structure(ring))
    raise Unsupported(f"no witness for {ring}")


def fresh(ring: Ring):
    """(state for the empty list, its bound)."""
    w = witness_for(ring)
    return w.fresh(), w.alpha


@dataclass
class Run:
    """Outcome of feeding a stream to a fresh witness."""

    initial: Ordinal
    consumed: list
    trace: list  # Continue bounds
    comb: Optional[Tuple] = None  # set when the last consumed element was good
    truncated: bool = False  # stopped by max_steps with input left over

    @property
    def good(self) -> bool:
        return self.comb is not None


def run(ring: Ring, stream, max_steps: Optional[int] = None, on_step=None) -> Run:
    """Advance a fresh witness along ``stream`` until Good, exhaustion or
    ``max_steps`` elements.  ``on_step(step, x, outcome)`` sees every advance."""
    w = witness_for(ring)
    state = w.fresh()
    out = Run(w.alpha, [], [])
    for x in stream:
        if max_steps is not None and len(out.consumed) >= max_steps:
            out.truncated = True
            break
        res = state.advance(x)
        out.consumed.append(x)
        if on_step:
            on_step(len(out.consumed) - 1, x, res)
        if isinstance(res, Good):
            out.comb = res.comb
            break
        out.trace.append(res.bound)
        state = res.state
    return out
