import random
from dataclasses import replace
from fractions import Fraction

import pytest

from conftest import rand_poly
from noethera.algebra import parse_ring
from noethera.checks import CollapseCert, Probe, collapse_failures, monomial, verify_collapse
from noethera.krull import (
    ExponentBudgetExceeded, HeadroomError, collapse, extract_good_subsequence,
    lombardi_check, lombardi_holds,
)
from noethera.noether import witness_for
from noethera.ordinal import OMEGA, Ordinal, decode_tuple, encode_tuple, omega_power, parse_ordinal


def names(indices):
    return [str(i) for i in indices]


def test_driver_field():
    Q = parse_ring("Q")
    idx, vals, comb = extract_good_subsequence(witness_for(Q).fresh(), lambda g: Fraction(5) ** int(g), OMEGA)
    assert names(idx) == ["1", "0"]
    assert comb == (Fraction(1, 5),)


def test_driver_trivial_ring():
    R = parse_ring("Z/1")
    idx, vals, comb = extract_good_subsequence(witness_for(R).fresh(), lambda g: 0, OMEGA)
    assert names(idx) == ["0"] and comb == ()


def test_driver_integers_at_bound():
    Z = parse_ring("Z")
    f = lambda g: monomial(Z, (2, 3), decode_tuple(2, g))
    idx, vals, comb = extract_good_subsequence(witness_for(Z).fresh(), f, omega_power(2))
    assert names(idx) == ["w", "2", "0"]
    assert vals == [3, 4, 1] and comb == (-1, 1)


def test_driver_headroom():
    with pytest.raises(HeadroomError):
        extract_good_subsequence(witness_for(parse_ring("Z")).fresh(), lambda g: 1, OMEGA)


def test_collapse_integers():
    Z = parse_ring("Z")
    c = collapse(Z, (2, 3), probe="bound")
    assert c.exponents == (0, 0)
    assert [p.value for p in c.probes] == [3, 4, 1] and c.comb == (-1, 1)
    assert verify_collapse(c)
    d = collapse(Z, (2, 3))
    assert verify_collapse(d) and d.exponents == (0, 0)


def test_collapse_field():
    Q = parse_ring("Q")
    c = collapse(Q, (Fraction(3, 4),))
    assert c.exponents == (0,) and c.comb == (Fraction(4, 3),)


def test_collapse_qx():
    R = parse_ring("Q[x]")
    c = collapse(R, (R.parse("x"), R.parse("x+1")), probe="bound")
    assert names(p.index for p in c.probes) == ["w", "1", "0"]
    assert c.exponents == (0, 0)
    assert [R.format(v) for v in c.comb] == ["1", "-1"]


def test_headroom_law():
    R = parse_ring("Q[x,y]")
    x, y = R.parse("x"), R.parse("y")
    with pytest.raises(HeadroomError, match="insufficient ordinal headroom"):
        collapse(R, (x, y))
    assert verify_collapse(collapse(R, (x, y, R.add(x, y))))
    with pytest.raises(HeadroomError):
        collapse(parse_ring("Z"), (2,))


def test_exponent_budget():
    Z = parse_ring("Z")
    with pytest.raises(ExponentBudgetExceeded):
        collapse(Z, (7, 1000), probe="bound", max_exponent=10)


def test_verify_rejects_mutations():
    c = collapse(parse_ring("Z"), (2, 3), probe="bound")
    assert not verify_collapse(replace(c, comb=(-1, 2)))
    swapped = (c.probes[0], c.probes[2], c.probes[1])
    assert not verify_collapse(replace(c, probes=swapped))
    assert any("descent" in f for f in collapse_failures(replace(c, probes=swapped)))
    bad = replace(c.probes[1], value=5)
    assert not verify_collapse(replace(c, probes=(c.probes[0], bad, c.probes[2])))
    wrong_index = replace(c.probes[1], index=Ordinal.from_int(3))
    assert not verify_collapse(replace(c, probes=(c.probes[0], wrong_index, c.probes[2])))
    assert not verify_collapse(replace(c, probes=()))
    assert not verify_collapse(replace(c, comb=(1,)))


def test_probe_zero_law():
    # whenever the driver probes index 0, that probe is the last one
    rng = random.Random(9)
    for text in ["Z", "Q", "Q[x]", "Z/12"]:
        R = parse_ring(text)
        for _ in range(30):
            if R.variables():
                xs = tuple(rand_poly(R, rng, deg=2, coeff=4, max_terms=2) for _ in range(2))
            else:
                xs = tuple(R.from_int(rng.randint(-9, 9)) for _ in range(2))
            c = collapse(R, xs)
            zeros = [i for i, p in enumerate(c.probes) if p.index == 0]
            assert zeros in ([], [len(c.probes) - 1])
            indices = [p.index for p in c.probes]
            assert all(b < a for a, b in zip(indices, indices[1:]))
            assert all(i < omega_power(2) for i in indices)


def test_lombardi_examples():
    Z = parse_ring("Z")
    c = collapse(Z, (2, 3), probe="bound")
    res = lombardi_check(c)
    assert res.status == "full" and res.generators == ((1, 0), (0, 1))
    assert lombardi_holds(c, res)
    R = parse_ring("Q[x]")
    c = collapse(R, (R.parse("x"), R.parse("x+1")), probe="bound")
    res = lombardi_check(c)
    assert res.status == "full" and lombardi_holds(c, res)
    # x1^5 with final tuple (3, 2): divisible by neither x0^4 nor x0^3*x1^3
    Q = parse_ring("Q")
    xs = (Fraction(1), Fraction(1))
    hand = CollapseCert(Q, xs, (
        Probe(encode_tuple((0, 5)), (0, 5), Fraction(1)),
        Probe(encode_tuple((3, 2)), (3, 2), Fraction(1)),
    ), (Fraction(1),))
    assert verify_collapse(hand)
    assert lombardi_check(hand).status == "collapse_only"
    assert not lombardi_holds(hand, lombardi_check(hand))


def test_probe_indices_are_ordinals():
    c = collapse(parse_ring("Z"), (2, 3), probe="bound")
    assert c.probes[0].index == parse_ordinal("w")
