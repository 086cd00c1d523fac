import random
from fractions import Fraction

import pytest

from conftest import random_arrangement
from tuttekit.arrangement import Arrangement
from tuttekit.multipoly import MultiPoly
from tuttekit.tutte import (
    char_poly,
    coboundary_transform,
    generalized_tg_evaluate,
    scalar_invariants,
    tutte_activity,
    tutte_delcon,
    tutte_from_coboundary,
    tutte_subset,
    validate_chi_shape,
    whitney_char,
)

x = MultiPoly.variable("x")
y = MultiPoly.variable("y")
q = MultiPoly.variable("q")


def test_bench_all_engines(bench):
    want = x ** 3 + x ** 2 + x * y
    assert tutte_subset(bench).tutte == want
    assert tutte_delcon(bench).tutte == want
    assert tutte_delcon(bench, memoize=True).tutte == want
    assert tutte_activity(bench)[0].tutte == want


def test_bench_activity_certificate(bench):
    # order t < u < v < w: bases tuw -> x^3, tvw -> x^2, uvw -> x*y
    _, cert = tutte_activity(bench)
    records = {basis: (i, e) for basis, i, e in cert.records}
    assert records[(0, 1, 3)] == (3, 0)
    assert records[(0, 2, 3)] == (2, 0)
    assert records[(1, 2, 3)] == (1, 1)
    assert len(records) == 3


def test_activity_order_invariance(bench):
    rng = random.Random(3)
    base = tutte_activity(bench)[0].tutte
    for _ in range(5):
        order = list(range(bench.n))
        rng.shuffle(order)
        assert tutte_activity(bench, order)[0].tutte == base
    with pytest.raises(ValueError):
        tutte_activity(bench, [0, 0, 1, 2])


def test_empty_and_degenerate():
    empty = Arrangement(2, [])
    assert tutte_subset(empty).tutte == 1
    assert char_poly(empty) == q ** 2
    loop = Arrangement(2, [([0, 0], 0)])
    assert tutte_subset(loop).tutte == y
    assert tutte_delcon(loop).tutte == y
    assert tutte_activity(loop)[0].tutte == y
    coloop = Arrangement(1, [([1], 0)])
    assert tutte_subset(coloop).tutte == x


def test_engines_agree_random():
    rng = random.Random(17)
    for _ in range(30):
        arr = random_arrangement(rng, max_n=6, max_d=3)
        t = tutte_subset(arr).tutte
        assert tutte_delcon(arr).tutte == t
        assert tutte_delcon(arr, memoize=True).tutte == t
        assert tutte_activity(arr)[0].tutte == t


def test_whitney(bench):
    assert char_poly(bench) == q ** 3 - 4 * q ** 2 + 5 * q - 2
    assert whitney_char(bench) == char_poly(bench, check_whitney=False)


def test_char_poly_checks_whitney_for_small_n(bench):
    # the default path cross-checks the Mobius and Whitney routes
    assert char_poly(bench, check_whitney=True) == char_poly(bench)


def test_coboundary_bench(bench):
    X = MultiPoly.variable("X")
    Y = MultiPoly.variable("Y")
    cob = coboundary_transform(tutte_subset(bench).tutte, bench.rank)
    want = Y ** 4 + (X - 1) * Y ** 3 + 3 * (X - 1) * Y ** 2 \
        + (4 * X ** 2 - 9 * X + 5) * Y + (X ** 3 - 4 * X ** 2 + 5 * X - 2)
    assert cob == want


def test_coboundary_roundtrip_random():
    rng = random.Random(29)
    for _ in range(25):
        arr = random_arrangement(rng, max_n=6, max_d=3)
        t = tutte_subset(arr).tutte
        r = arr.rank
        cob = coboundary_transform(t, r)
        assert tutte_from_coboundary(cob, r) == t


def test_coboundary_rejects_wrong_rank():
    with pytest.raises(ValueError):
        coboundary_transform(x ** 3, 2)
    cob = coboundary_transform(x ** 2, 2)
    with pytest.raises(ValueError):
        tutte_from_coboundary(cob + 1, 2)


def test_scalar_invariants(bench):
    inv = scalar_invariants(bench)
    assert inv["regions"] == 12
    assert inv["bounded_regions"] == 0
    assert inv["poincare"] == 2 * q ** 3 + 5 * q ** 2 + 4 * q + 1
    assert inv["general_position_bounded"] == 2
    assert inv["beta"] == 0


def test_scalar_invariants_bounded():
    # x=0, x=1 in Q^1: 3 regions, 1 bounded
    arr = Arrangement(1, [([1], 0), ([1], 1)])
    inv = scalar_invariants(arr)
    assert inv["regions"] == 3
    assert inv["bounded_regions"] == 1
    assert inv["beta"] == 1


def test_beta_skipped_for_tiny():
    arr = Arrangement(1, [([1], 0)])
    assert scalar_invariants(arr)["beta"] is None


def test_validate_chi_shape(bench):
    report = validate_chi_shape(char_poly(bench, check_whitney=False))
    assert report["ok"]
    assert report["magnitudes"] == [1, 4, 5, 2]
    bad = q ** 2 + q + 1  # wrong signs
    assert not validate_chi_shape(bad)["ok"]


def test_universality(bench):
    # f(A) = a^(n-r) b^r T(x0/b, y0/a) for any TG-style recursion values
    rng = random.Random(31)
    for _ in range(10):
        arr = random_arrangement(rng, max_n=5, max_d=3)
        a, b = Fraction(2), Fraction(3)
        x0, y0 = Fraction(5), Fraction(7)
        t = tutte_subset(arr).tutte
        r, n = arr.rank, arr.n
        want = a ** (n - r) * b ** r * \
            t.evaluate({"x": x0 / b, "y": y0 / a})
        assert generalized_tg_evaluate(arr, a, b, x0, y0) == want
