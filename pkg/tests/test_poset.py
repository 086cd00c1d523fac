import random

from conftest import random_arrangement
from tuttekit.arrangement import Arrangement
from tuttekit.families import braid
from tuttekit.multipoly import MultiPoly
from tuttekit.poset import closure, intersection_poset

q = MultiPoly.variable("q")


def test_bench_poset(bench):
    poset = intersection_poset(bench)
    # 1 minimum, 4 hyperplanes, 4 rank-2 flats (xy-line merged), 1 maximum
    by_rank = {}
    for f in poset.flats:
        by_rank.setdefault(f.rank, []).append(f)
    assert len(by_rank[0]) == 1
    assert len(by_rank[1]) == 4
    assert poset.level_mobius_sums() == [1, -4, 5, -2]
    assert poset.char_poly() == q ** 3 - 4 * q ** 2 + 5 * q - 2
    poset.verify_mobius()


def test_braid3_mobius():
    # A_2: center line, 3 hyperplanes, full flat; mu = 1, -1x3, 2
    poset = intersection_poset(braid(3))
    assert poset.level_mobius_sums() == [1, -3, 2]
    assert poset.char_poly() == q ** 3 - 3 * q ** 2 + 2 * q


def test_closure():
    bench = Arrangement(3, [([1, 0, 0], 0), ([0, 1, 0], 0),
                            ([1, -1, 0], 0), ([0, 0, 1], 0)])
    assert closure(bench, frozenset({0, 1})) == frozenset({0, 1, 2})
    assert closure(bench, frozenset()) == frozenset()


def test_loops_live_in_minimum():
    arr = Arrangement(2, [([0, 0], 0), ([1, 0], 0)])
    poset = intersection_poset(arr)
    assert poset.minimum == frozenset({0})
    assert poset.char_poly() == q ** 2 - q


def test_noncentral_poset():
    # x=0, x=1: two atoms, no common flat
    arr = Arrangement(1, [([1], 0), ([1], 1)])
    poset = intersection_poset(arr)
    assert len(poset.flats) == 3
    assert poset.char_poly() == q - 2


def test_mobius_recursion_random():
    rng = random.Random(23)
    for _ in range(25):
        arr = random_arrangement(rng, max_n=6, max_d=3)
        poset = intersection_poset(arr)
        poset.verify_mobius()
