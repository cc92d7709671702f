"""Krull-dimension certificates from Noetherian witnesses.

Given a witness with bound ``b`` and any map ``f`` from ordinals below some
``idx_bound > b`` into the ring, probing ``f`` at the current bound and
advancing yields a strictly decreasing run of indices whose values form a good
list.  Taking ``f`` to be the monomials of ``x_0 .. x_{n-1}``, indexed by
``w^{n-1}*e_{n-1} + ... + e_0``, turns such a run into a collapse relation:
one monomial written through monomials of larger index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .algebra.rings import Ring
from .checks import CollapseCert, Probe, monomial, verify_collapse
from .noether import Continue, WitnessState, witness_for
from .ordinal import Ordinal, decode_tuple, encode_tuple, omega_power

__all__ = [
    "HeadroomError", "ExponentBudgetExceeded", "extract_good_subsequence", "collapse", "verify_collapse",
    "lombardi_check", "LombardiResult", "CollapseCert", "Probe",
]


class HeadroomError(ValueError):
    pass


class ExponentBudgetExceeded(RuntimeError):
    """A required probe monomial has an exponent above the caller's budget."""


def probe_at_bound(bound: Ordinal, previous: Ordinal) -> Ordinal:
    return bound


def simplest_between(n: int):
    """Chooser returning the index in ``[bound, previous)`` whose exponent
    tuple has the smallest sum (ties to the smaller ordinal)."""

    def choose(bound: Ordinal, previous: Ordinal) -> Ordinal:
        t = decode_tuple(n, bound)
        best, best_key = bound, (sum(t), bound.terms)
        for j in range(n):
            up = (0,) * j + (t[j] + 1,) + t[j + 1:]
            cand = encode_tuple(up)
            key = (sum(up), cand.terms)
            if cand < previous and key < best_key:
                best, best_key = cand, key
        return best

    return choose


def extract_good_subsequence(state: WitnessState, f: Callable[[Ordinal], object],
                             idx_bound: Ordinal, choose=probe_at_bound):
    """Probe ``f`` along the descending bounds of ``state`` until good.

    Each probe index lies in ``[current bound, previous index)``;
    ``choose(bound, previous)`` picks it, by default the bound itself.
    Returns ``(indices, values, comb)`` where ``comb`` writes ``values[-1]``
    through ``values[:-1]``.
    """
    if not state.bound < idx_bound:
        raise HeadroomError(f"witness bound {state.bound} is not below the index bound {idx_bound}")
    indices, values = [], []
    previous = idx_bound
    while True:
        index = choose(state.bound, previous)
        if not (state.bound <= index < previous):
            raise ValueError(f"probe index {index} outside [{state.bound}, {previous})")
        x = f(index)
        indices.append(index)
        values.append(x)
        out = state.advance(x)
        if not isinstance(out, Continue):
            return indices, values, out.comb
        state, previous = out.state, index


def collapse(ring: Ring, elements: Sequence, witness=None, probe="simplest",
             max_exponent: Optional[int] = None) -> CollapseCert:
    """Collapse certificate for ``elements`` in a commutative ``ring``.

    ``probe="bound"`` probes exactly at each successive bound; the default
    ``"simplest"`` probes the cheapest monomial still allowed, which keeps
    exponents small when bounds have large finite parts (as over Z).
    ``max_exponent`` aborts with :class:`ExponentBudgetExceeded` instead of
    building a monomial with a larger exponent.
    """
    elements = tuple(elements)
    n = len(elements)
    for x in elements:
        ring.check(x, deep=True)
    witness = witness or witness_for(ring)
    top = omega_power(n)
    if not witness.alpha < top:
        raise HeadroomError(
            f"insufficient ordinal headroom: witness bound {witness.alpha} is not below w^{n}")

    def f(index):
        exps = decode_tuple(n, index)
        if max_exponent is not None and max(exps, default=0) > max_exponent:
            raise ExponentBudgetExceeded(f"probe {index} needs exponent {max(exps)} > {max_exponent}")
        return monomial(ring, elements, exps)

    choose = {"bound": probe_at_bound, "simplest": simplest_between(n)}[probe]
    indices, values, comb = extract_good_subsequence(witness.fresh(), f, top, choose)
    probes = tuple(Probe(i, decode_tuple(n, i), v) for i, v in zip(indices, values))
    cert = CollapseCert(ring, elements, probes, tuple(comb) + (ring.zero(),) * (len(probes) - 1 - len(comb)))
    if not verify_collapse(cert):
        raise AssertionError("engine produced an invalid collapse certificate")
    return cert


@dataclass(frozen=True)
class LombardiResult:
    status: str  # "full" or "collapse_only"
    generators: Tuple[Tuple[int, ...], ...]  # exponent vectors of the boundary generators
    comb: Optional[Tuple] = None  # cofactors on the generators when full


def boundary_exponents(exps: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    n = len(exps)
    gens = []
    for k in range(n):
        gens.append(tuple(exps[i] if i < k else (exps[k] + 1 if i == k else 0) for i in range(n)))
    return tuple(gens)


def lombardi_check(cert: CollapseCert) -> LombardiResult:
    """Try to read the collapse relation as boundary-ideal membership.

    Succeeds when every monomial carrying a nonzero coefficient is a monomial
    multiple of some boundary generator.
    """
    ring = cert.ring
    gens = boundary_exponents(cert.exponents)
    cofactors = [ring.zero() for _ in gens]
    for c, probe in zip(cert.comb, cert.probes):
        if ring.is_zero(c):
            continue
        for k, g in enumerate(gens):
            if all(t >= e for t, e in zip(probe.exponents, g)):
                quot = monomial(ring, cert.elements, [t - e for t, e in zip(probe.exponents, g)])
                cofactors[k] = ring.add(cofactors[k], ring.mul(c, quot))
                break
        else:
            return LombardiResult("collapse_only", gens)
    return LombardiResult("full", gens, tuple(cofactors))


def lombardi_holds(cert: CollapseCert, result: LombardiResult) -> bool:
    """Recheck a ``full`` result: sum(cofactor * generator) == target monomial."""
    if result.status != "full":
        return False
    ring = cert.ring
    total = ring.zero()
    for c, g in zip(result.comb, result.generators):
        total = ring.add(total, ring.mul(c, monomial(ring, cert.elements, g)))
    return ring.eq(total, monomial(ring, cert.elements, cert.exponents))
