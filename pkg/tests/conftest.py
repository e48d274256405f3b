"""Shared fixture builders: seeded random ideals and weight vectors.

Everything is deterministic (fixed seeds) so expected values can be
frozen and reruns are reproducible.
"""

import random
from fractions import Fraction

import pytest

from vallab import MonomialIdeal, WeightVector


def rand_ideal(rng: random.Random, n: int, max_exp: int = 4,
               max_gens: int = 3, proper: bool = True) -> MonomialIdeal:
    """Random nonzero monomial ideal; ``proper`` excludes the unit ideal."""
    while True:
        count = rng.randint(1, max_gens)
        gens = []
        for _ in range(count):
            beta = tuple(rng.randint(0, max_exp) for _ in range(n))
            gens.append(beta)
        ideal = MonomialIdeal.from_exponents(gens, n)
        if not proper or not ideal.is_unit:
            return ideal


def rand_weights(rng: random.Random, n: int, max_num: int = 6,
                 max_den: int = 6, allow_zero: bool = False) -> WeightVector:
    while True:
        alpha = []
        for _ in range(n):
            if allow_zero and rng.random() < 0.25:
                alpha.append(Fraction(0))
            else:
                alpha.append(Fraction(rng.randint(1, max_num),
                                      rng.randint(1, max_den)))
        if any(a > 0 for a in alpha):
            return WeightVector.of(*alpha)


def rand_positive_weights(rng, n, max_num=6, max_den=6):
    return rand_weights(rng, n, max_num, max_den, allow_zero=False)


@pytest.fixture
def rng():
    return random.Random(20240817)


_CRITERION_LINES = []


def criterion_line(number: int, ok: bool, detail: str):
    """Record one pass/fail line per acceptance criterion."""
    status = "PASS" if ok else "FAIL"
    _CRITERION_LINES.append(
        f"acceptance criterion {number:2d}: {status} - {detail}")
    assert ok, f"acceptance criterion {number} failed: {detail}"


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERION_LINES):
            terminalreporter.write_line(line)
