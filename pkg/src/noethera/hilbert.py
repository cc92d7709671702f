"""Lifting a Noetherian witness from A to A[X].

A lifted state records a finite set of board points ``(d, a)`` on w x alpha.
Each point carries polynomials ``g_0 .. g_{l-1}`` of degree at most ``d``,
each with a combination proving it lies in the ideal of the list so far, and
a base-ring state certifying that their leading coefficients form an
``a``-good list.  The bound of the lifted state is the chomp size of the
point set, so a fresh state has bound w (x) alpha.

Advancing with ``f`` reduces its leading coefficient against the entry that
governs column ``deg f``.  Before each reduction the working polynomial is
scaled by a unit of the bottom ring to be content-free; this never changes a
degree or a base rank, only the size of the stored coefficients.  A
successful base reduction lowers the degree and repeats; a base ``Continue``
adds a new point strictly inside the current position, which strictly lowers
the size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Optional, Sequence, Tuple

from .algebra.rings import Poly, Ring, eval_comb, normalizing_unit
from .chomp import ConstraintSet, size
from .noether import Continue, Good, Witness, WitnessState
from .ordinal import OMEGA, Ordinal, nat_prod

__all__ = ["DescEntry", "LiftedWitness", "LiftState", "cert_substitute", "lift"]


def cert_substitute(ring: Ring, comb: Sequence, g_shift: Sequence) -> tuple:
    """Rewrite a combination over ``sigma.g`` as one over ``sigma.f``.

    ``g_shift`` gives ``g = f + sum(g_shift[i] * sigma[i])``; ``comb`` has its
    last coefficient (possibly implicit zero) on ``g``.  The length of
    ``sigma`` is ``len(g_shift)``.
    """
    n = len(g_shift)
    if len(comb) > n + 1:
        raise ValueError(f"combination has {len(comb)} coefficients for a list of {n + 1}")
    comb = tuple(comb) + (ring.zero(),) * (n + 1 - len(comb))
    last = comb[n]
    if ring.is_zero(last):
        return comb
    head = tuple(ring.add(c, ring.mul(last, e)) for c, e in zip(comb[:n], g_shift))
    return head + (last,)


@dataclass(frozen=True)
class DescEntry:
    d: int
    a: Ordinal
    witnesses: Tuple[Tuple[tuple, tuple], ...]  # (polynomial, membership comb)
    lcstate: WitnessState


class LiftedWitness(Witness):
    def __init__(self, base: Witness, ring: Poly):
        if not isinstance(ring, Poly) or ring.base != base.ring:
            raise ValueError(f"{ring} is not a polynomial ring over {base.ring}")
        self.base = base
        self.ring = ring
        self.alpha = nat_prod(OMEGA, base.alpha)

    def fresh(self) -> "LiftState":
        return LiftState(self, 0, ())


def lift(base: Witness, var: str = "X") -> LiftedWitness:
    return LiftedWitness(base, Poly(base.ring, var))


class LiftState(WitnessState):
    def __init__(self, witness: LiftedWitness, length: int, entries: Tuple[DescEntry, ...]):
        self.witness = witness
        self.ring = witness.ring
        self.length = length
        self.entries = entries
        self.bound = size(self.constraints())

    def constraints(self) -> ConstraintSet:
        return ConstraintSet(self.witness.base.alpha, frozenset((e.d, e.a) for e in self.entries))

    def _payload(self, degree: int) -> Optional[DescEntry]:
        best = None
        for e in self.entries:
            if e.d <= degree and (best is None or (e.a, -e.d) < (best.a, -best.d)):
                best = e
        return best

    def _advance(self, f):
        R = self.ring
        n = self.length
        # f = scale * cur + sum(red[i] * sigma[i]), scale a unit constant
        red = [R.zero()] * n
        cur, scale, unscale = f, R.one(), R.one()
        while cur:
            u, uinv = normalizing_unit(R, cur)
            if not R.eq(u, R.one()):
                cur, scale, unscale = R.mul(u, cur), R.mul(scale, uinv), R.mul(unscale, u)
            deg = len(cur) - 1
            entry = self._payload(deg)
            if entry is None:
                lcstate, wits = self.witness.base.fresh(), ()
            else:
                lcstate, wits = entry.lcstate.duplicate(), entry.witnesses
            out = lcstate.advance(cur[-1])
            if isinstance(out, Continue):
                return self._extend(deg, out, wits, cur, red, unscale)
            for c, (g, memb) in zip(out.comb, wits):
                if R.base.is_zero(c):
                    continue
                k = deg - (len(g) - 1)
                cur = R.sub(cur, R.shift(R.scale(c, g), k))
                red = [R.add(r, R.mul(scale, R.shift(R.scale(c, m), k)))
                       for r, m in zip_longest(red, memb, fillvalue=R.zero())]
            if len(cur) - 1 >= deg:
                raise AssertionError("leading coefficient did not cancel")
        return Good(tuple(red))

    def _extend(self, deg, out: Continue, wits, cur, red, unscale) -> Continue:
        R = self.ring
        if any(e.d == deg and e.a == out.bound for e in self.entries):
            raise AssertionError(f"point ({deg}, {out.bound}) already present")
        # cur = unscale * (f - sum(red * sigma))
        unit = (R.zero(),) * self.length + (unscale,)
        memb = cert_substitute(R, unit, [R.neg(r) for r in red])
        entry = DescEntry(deg, out.bound, wits + ((cur, memb),), out.state)
        state = LiftState(self.witness, self.length + 1, self.entries + (entry,))
        return Continue(state.bound, state)

    def audit(self, sigma: Sequence) -> list:
        """Problems with the stored entries relative to the list ``sigma``."""
        R = self.ring
        problems = []
        if len(sigma) != self.length:
            problems.append(f"list has {len(sigma)} elements, state expects {self.length}")
            return problems
        for e in self.entries:
            if e.lcstate.bound != e.a:
                problems.append(f"entry ({e.d}, {e.a}): lc state bound {e.lcstate.bound}")
            if e.lcstate.length != len(e.witnesses):
                problems.append(f"entry ({e.d}, {e.a}): lc state length {e.lcstate.length}")
            for g, memb in e.witnesses:
                if len(g) - 1 > e.d:
                    problems.append(f"entry ({e.d}, {e.a}): witness of degree {len(g) - 1}")
                if not R.eq(eval_comb(R, sigma, memb), g):
                    problems.append(f"entry ({e.d}, {e.a}): membership of {R.format(g)} fails")
        return problems

    def __repr__(self):
        pts = ", ".join(f"({e.d}, {e.a})" for e in self.entries)
        return f"<LiftState len={self.length} bound={self.bound} S={{{pts}}}>"
