import random
from fractions import Fraction

import pytest

from conftest import rand_poly
from noethera.algebra import (
    QQ, ZZ, Integers, IntegersMod, NotInvertible, ParseError, Poly, PrimeField,
    Rationals, RingMismatch, TruncatedPoly, eval_comb, factorize, format_ring,
    parse_element, parse_ring, poly_view,
)
from noethera.algebra.rings import normalizing_unit

DESCRIPTORS = ["Z", "Q", "GF(7)", "Z/12", "Z/36", "Q[x]", "Z[x]", "GF(5)[t]/(t^3)", "Q[x,y]", "Z/8[x]"]


def rand_elem(ring, rng):
    if ring.variables():
        if isinstance(ring, TruncatedPoly):
            return ring.normalize([ring.base.from_int(rng.randint(-9, 9)) for _ in range(rng.randint(0, 4))])
        return rand_poly(ring, rng, deg=2, coeff=6, max_terms=3)
    if isinstance(ring, Rationals):
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))
    return ring.from_int(rng.randint(-50, 50))


def test_ring_examples():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    R = parse_ring("Z/12")
    assert R.mul(7, 7) == 1
    Qx = parse_ring("Q[x]")
    assert Qx.mul(Qx.parse("x+1"), Qx.parse("x-1")) == Qx.parse("x^2-1")


def test_ring_grammar():
    assert parse_ring("Z[x,y]") == Poly(Poly(Integers(), "x"), "y")
    assert parse_ring("GF(5)[t]/(t^3)") == TruncatedPoly(PrimeField(5), 3, "t")
    assert parse_ring("Z/8") == IntegersMod(8)
    for text in DESCRIPTORS:
        assert format_ring(parse_ring(text)) == text
    for bad in ["GF(6)", "Z[x]/(x^2)", "Q[x,x]", "Q[x]/(y^2)", "R", "Z/0", "Q[x", "Q[x,y]/(x^2)"]:
        with pytest.raises(ParseError):
            parse_ring(bad)


def test_element_grammar():
    Qx = parse_ring("Q[x]")
    assert parse_element("3*x^2 - 1/2", Qx) == (Fraction(-1, 2), Fraction(0), Fraction(3))
    assert Qx.format(parse_element("3*x^2 - 1/2", Qx)) == "3*x^2 - 1/2"
    assert parse_element("-x^2", Qx) == Qx.neg(Qx.pow(Qx.parse("x"), 2))
    assert parse_element("2*(x+1)^2", Qx) == Qx.parse("2*x^2 + 4*x + 2")
    R = parse_ring("Q[x,y]")
    assert R.format(R.parse("y*x + x^2 + y^2")) == "y^2 + x*y + x^2"
    assert parse_ring("Z/12").parse("5/7") == 11  # 7 is a unit mod 12


@pytest.mark.parametrize("ring,text,pos", [
    ("Q[x]", "x +", 3), ("Q[x]", "y", 0), ("Q[x]", "x^-1", 2), ("Q", "1/0", 2),
    ("Z/12", "1/2", 0), ("Q", "(1", 2), ("Q[x]", "x x", 2),
])
def test_element_errors_carry_position(ring, text, pos):
    with pytest.raises(ParseError) as e:
        parse_element(text, parse_ring(ring))
    assert e.value.pos == pos


def test_inverse_and_mixing():
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert parse_ring("Z/12").inv(5) == 5
    for ring, x in [(ZZ, 2), (parse_ring("Z/12"), 4), (QQ, Fraction(0)), (parse_ring("Q[x]"), (0, 1))]:
        with pytest.raises((NotInvertible, ZeroDivisionError)):
            ring.inv(x)
    assert parse_ring("GF(5)[t]/(t^3)").inv((1, 1)) == (1, 4, 1)
    with pytest.raises(RingMismatch):
        ZZ.add(1, Fraction(1, 2))
    with pytest.raises(RingMismatch):
        parse_ring("Q[x]").add((Fraction(1),), ((1,),))


def test_factorize():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(97) == ((97, 1),)
    assert factorize(1) == ()


def test_poly_view():
    Qx = parse_ring("Q[x]")
    assert poly_view(Qx, ()) == (-1, None)
    assert poly_view(Qx, Qx.parse("x^2+1")) == (2, 1)
    assert poly_view(Qx, [1, 2, 0]) == (1, 2)
    with pytest.raises(ValueError):
        Qx.lc(())


def test_eval_comb_examples():
    assert eval_comb(ZZ, [4, 2], [0, 3]) == 6
    assert eval_comb(ZZ, [4, 2], []) == 0
    Qx = parse_ring("Q[x]")
    assert eval_comb(Qx, [Qx.parse("x+1"), Qx.parse("x")], [Qx.one(), Qx.from_int(-1)]) == Qx.one()
    with pytest.raises(ValueError):
        eval_comb(ZZ, [1], [1, 2])


@pytest.mark.parametrize("text", DESCRIPTORS)
def test_ring_axioms(text):
    R = parse_ring(text)
    rng = random.Random(text)
    zero, one = R.zero(), R.one()
    for _ in range(1000):
        a, b, c = (rand_elem(R, rng) for _ in range(3))
        assert R.eq(R.add(R.add(a, b), c), R.add(a, R.add(b, c)))
        assert R.eq(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)))
        assert R.eq(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)))
        assert R.eq(R.mul(R.add(a, b), c), R.add(R.mul(a, c), R.mul(b, c)))
        assert R.eq(R.add(a, zero), a) and R.eq(R.mul(a, one), a) and R.eq(R.mul(one, a), a)
        assert R.is_zero(R.add(a, R.neg(a)))
        assert R.eq(R.add(a, b), R.add(b, a))


@pytest.mark.parametrize("text", DESCRIPTORS)
def test_canonical_text(text):
    R = parse_ring(text)
    rng = random.Random(text + "fmt")
    for _ in range(300):
        a, b = rand_elem(R, rng), rand_elem(R, rng)
        assert R.parse(R.format(a)) == a
        assert R.eq(a, b) == (R.format(a) == R.format(b))


@pytest.mark.parametrize("text", ["Z", "Q[x]", "Z/36", "Q[x,y]"])
def test_eval_comb_linear(text):
    R = parse_ring(text)
    rng = random.Random(text + "lin")
    for _ in range(200):
        k = rng.randint(0, 4)
        ctx = [rand_elem(R, rng) for _ in range(k)]
        c1 = [rand_elem(R, rng) for _ in range(k)]
        c2 = [rand_elem(R, rng) for _ in range(k)]
        both = [R.add(x, y) for x, y in zip(c1, c2)]
        assert R.eq(eval_comb(R, ctx, both), R.add(eval_comb(R, ctx, c1), eval_comb(R, ctx, c2)))


def test_normalizing_unit():
    Qxy = parse_ring("Q[x,y]")
    f = Qxy.parse("-2/3*x*y + 4/9")
    u, uinv = normalizing_unit(Qxy, f)
    assert Qxy.mul(u, uinv) == Qxy.one()
    assert Qxy.format(Qxy.mul(u, f)) == "3*x*y - 2"
    Zx = parse_ring("Z[x]")
    u, _ = normalizing_unit(Zx, Zx.parse("-4*x + 2"))
    assert Zx.format(Zx.mul(u, Zx.parse("-4*x + 2"))) == "4*x - 2"
    F = parse_ring("GF(7)[x]")
    u, _ = normalizing_unit(F, F.parse("3*x + 1"))
    assert F.format(F.mul(u, F.parse("3*x + 1"))) == "x + 5"
    assert normalizing_unit(Qxy, ()) == (Qxy.one(), Qxy.one())
