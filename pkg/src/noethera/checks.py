"""Certificate checks that use nothing but ring arithmetic and ordinals.

This module must not import any witness code (``noether``, ``hilbert``,
``krull``); the document verifier relies on it for independence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .algebra.rings import Ring, RingMismatch, eval_comb
from .ordinal import Ordinal, decode_tuple

__all__ = ["verify_good", "monomial", "CollapseCert", "Probe", "verify_collapse", "collapse_failures"]


def verify_good(ring: Ring, sigma: Sequence, comb: Sequence) -> bool:
    """Does ``comb`` express the last element of ``sigma`` from the others?"""
    if not sigma:
        raise ValueError("a good list is nonempty")
    if len(comb) > len(sigma) - 1:
        raise ValueError(f"{len(comb)} coefficients for {len(sigma) - 1} earlier elements")
    return ring.eq(eval_comb(ring, sigma[:-1], comb), sigma[-1])


def monomial(ring: Ring, xs: Sequence, exps: Sequence[int]):
    """x0^e0 * ... * x_{n-1}^e_{n-1}, multiplied left to right."""
    acc = ring.one()
    for x, e in zip(xs, exps):
        if e:
            acc = ring.mul(acc, ring.pow(x, e))
    return acc


@dataclass(frozen=True)
class Probe:
    index: Ordinal
    exponents: Tuple[int, ...]
    value: object


@dataclass(frozen=True)
class CollapseCert:
    """A monomial of ``elements`` expressed through monomials of larger index.

    ``comb`` has one coefficient per probe except the last, and
    ``sum(comb[i] * probes[i].value) == probes[-1].value``.
    """

    ring: Ring
    elements: Tuple
    probes: Tuple[Probe, ...]
    comb: Tuple

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return self.probes[-1].exponents


def collapse_failures(cert: CollapseCert) -> List[str]:
    """Every violated obligation of ``cert``, as human-readable strings."""
    ring, n = cert.ring, len(cert.elements)
    out = []
    try:
        for x in cert.elements:
            ring.check(x, deep=True)
    except RingMismatch as exc:
        return [f"elements: {exc}"]
    if not cert.probes:
        return ["probes: empty probe list"]
    prev = None
    for i, p in enumerate(cert.probes):
        if len(p.exponents) != n or any((not isinstance(e, int)) or e < 0 for e in p.exponents):
            out.append(f"probes[{i}]: exponent tuple {p.exponents!r} is not {n} naturals")
            continue
        try:
            if decode_tuple(n, p.index) != tuple(p.exponents):
                out.append(f"probes[{i}]: index {p.index} does not encode {tuple(p.exponents)}")
        except ValueError:
            out.append(f"probes[{i}]: index {p.index} is not below w^{n}")
        if prev is not None and not p.index < prev:
            out.append(f"descent: probe index {p.index} at position {i} is not below {prev}")
        prev = p.index
        try:
            ok = ring.eq(monomial(ring, cert.elements, p.exponents), p.value)
        except RingMismatch:
            ok = False
        if not ok:
            out.append(f"probes[{i}]: stored monomial differs from the product of elements")
    if out:
        return out
    if len(cert.comb) != len(cert.probes) - 1:
        return [f"combination identity: {len(cert.comb)} coefficients for {len(cert.probes) - 1} earlier monomials"]
    try:
        for c in cert.comb:
            ring.check(c, deep=True)
        ok = verify_good(ring, [p.value for p in cert.probes], cert.comb)
    except (RingMismatch, ValueError):
        ok = False
    if not ok:
        out.append("combination identity: sum of comb * earlier monomials differs from the last monomial")
    return out


def verify_collapse(cert: CollapseCert) -> bool:
    try:
        return not collapse_failures(cert)
    except Exception:
        return False
