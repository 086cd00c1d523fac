import random
from fractions import Fraction

import pytest

from tuttekit.arrangement import Arrangement


@pytest.fixture
def bench():
    """The four-plane benchmark: x=0, y=0, x-y=0, z=0 in Q^3.

    Labels t, u, v, w in order; {t, u, v} is the unique dependent triple.
    T = x^3 + x^2 + x*y, chi = q^3 - 4q^2 + 5q - 2.
    """
    return Arrangement(3, [([1, 0, 0], 0), ([0, 1, 0], 0),
                           ([1, -1, 0], 0), ([0, 0, 1], 0)], label="bench")


def random_arrangement(rng, max_n=7, max_d=4, allow_loops=True):
    """A random small arrangement with integer data, possibly with loops,
    duplicates, and parallel hyperplanes."""
    d = rng.randint(1, max_d)
    n = rng.randint(0, max_n)
    hs = []
    for _ in range(n):
        if allow_loops and rng.random() < 0.08:
            hs.append(([0] * d, 0))
            continue
        if hs and rng.random() < 0.15:
            hs.append(rng.choice(hs))  # duplicate
            continue
        normal = [rng.randint(-3, 3) for _ in range(d)]
        offset = rng.randint(-2, 2)
        if not any(normal):
            offset = 0  # degenerate row becomes a loop
        hs.append((normal, offset))
    return Arrangement(d, hs)


def random_poly_data(rng, nvars=3, nterms=5, max_exp=3):
    """Random exponent->coefficient dict for MultiPoly construction."""
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return terms
