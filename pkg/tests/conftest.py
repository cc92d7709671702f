import random
from pathlib import Path

import pytest

from noethera.ordinal import Ordinal

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).resolve().parent / "golden"

# criterion number -> (ok, detail), filled by the acceptance suite
ACCEPTANCE = {}


def record(n, ok, detail=""):
    ACCEPTANCE[n] = (bool(ok), detail)
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else ""))


def rand_ordinal(rng: random.Random, max_exp=4, max_terms=3, max_coeff=5) -> Ordinal:
    """Random CNF ordinal below w^(max_exp+1)."""
    exps = rng.sample(range(max_exp + 1), rng.randint(0, min(max_terms, max_exp + 1)))
    return Ordinal.from_terms([(e, rng.randint(1, max_coeff)) for e in exps])


def rand_poly(ring, rng: random.Random, deg=4, coeff=9, max_terms=4):
    """Sum of up to ``max_terms`` random terms, each variable's exponent <= deg."""
    gens = ring.generators()
    x = ring.zero()
    for _ in range(rng.randint(1, max_terms)):
        m = ring.from_int(rng.randint(-coeff, coeff))
        for v in ring.variables():
            m = ring.mul(m, ring.pow(gens[v], rng.randint(0, deg)))
        x = ring.add(x, m)
    return x


@pytest.fixture
def rng():
    return random.Random(12345)
