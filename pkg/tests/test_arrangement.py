import random
from fractions import Fraction

import pytest

from conftest import random_arrangement
from tuttekit.arrangement import Arrangement, Hyperplane
from tuttekit.errors import (
    InputFormatError,
    InvalidHyperplaneError,
    LoopContractionError,
    NonCentralError,
)
from tuttekit.tutte import char_poly, tutte_subset


def test_canonical_form():
    h = Hyperplane([Fraction(1, 2), Fraction(-1, 3)], Fraction(1, 6))
    assert h.normal == (3, -2) and h.offset == 1
    h2 = Hyperplane([-2, 4], -2)
    assert h2.normal == (1, -2) and h2.offset == 1
    assert Hyperplane([0, 0], 0).is_loop
    with pytest.raises(InvalidHyperplaneError):
        Hyperplane([0, 0], 1)


def test_canonical_form_mod_p():
    h = Hyperplane([2, 4], 6, prime=5)
    assert h.normal == (1, 2) and h.offset == 3
    assert Hyperplane([3, 1], 0, prime=5) == Hyperplane([6, 2], 0, prime=5)


def test_centrality_and_rank(bench):
    assert bench.is_central()
    assert bench.rank == 3
    assert bench.rank_of({0, 1, 2}) == 2  # the dependent triple
    assert bench.rank_of({0, 1, 3}) == 3
    # parallel pair: x=0 and x=1
    arr = Arrangement(2, [([1, 0], 0), ([1, 0], 1)])
    assert not arr.is_central()
    assert arr.rank_normals() == 1  # semimatroid rank of a non-central set
    with pytest.raises(NonCentralError):
        arr.rank_of({0, 1})


def test_classify(bench):
    assert bench.classify(3) == "coloop"
    assert bench.classify(0) == "ordinary"
    arr = Arrangement(2, [([0, 0], 0), ([1, 0], 0)])
    assert arr.classify(0) == "loop"
    assert arr.classify(1) == "coloop"


def test_delete_contract(bench):
    d = bench.delete(2)
    assert d.n == 3 and d.rank == 3
    c = bench.contract(2)  # contract x-y=0: x=0 and y=0 become one hyperplane
    assert c.dim == 2
    assert c.rank == 2
    with pytest.raises(LoopContractionError):
        Arrangement(1, [([0], 0)]).contract(0)


def test_contract_drops_parallel_images():
    # contracting x=0 sends x=1 to an empty intersection: it disappears
    arr = Arrangement(2, [([1, 0], 0), ([1, 0], 1), ([0, 1], 0)])
    c = arr.contract(0)
    assert c.n == 1  # x=1 dropped, y=0 kept
    assert not c.hyperplanes[0].is_loop


def test_contract_creates_loop():
    arr = Arrangement(2, [([1, 0], 0), ([1, 0], 0)])  # duplicate hyperplane
    c = arr.contract(0)
    assert c.n == 1 and c.hyperplanes[0].is_loop


def test_cone_and_essentialize(bench):
    from tuttekit.multipoly import MultiPoly
    q = MultiPoly.variable("q")
    # coning multiplies chi by (q - 1)
    cone = bench.cone()
    assert char_poly(cone, check_whitney=False) == \
        (q - 1) * char_poly(bench, check_whitney=False)
    # essentialization divides chi by q^(d-r)
    arr = Arrangement(3, [([1, 0, 0], 0), ([1, -1, 0], 0)])
    ess = arr.essentialize()
    assert ess.dim == 2
    assert char_poly(arr, check_whitney=False) == \
        q * char_poly(ess, check_whitney=False)
    # Tutte polynomial is invariant under both
    assert tutte_subset(ess).tutte == tutte_subset(arr).tutte


def test_restrict(bench):
    sub = bench.restrict([0, 3])
    assert sub.n == 2 and sub.rank == 2


def test_semimatroid_fingerprint_order_independent(bench):
    shuffled = Arrangement(3, [bench.hyperplanes[i] for i in (3, 1, 0, 2)])
    # fingerprints need not be equal as masks differ, but sizes must match
    assert len(bench.semimatroid()) == len(shuffled.semimatroid())


def test_json_roundtrip(bench):
    again = Arrangement.from_json(bench.to_json())
    assert again.dim == bench.dim
    assert [h.key() for h in again.hyperplanes] == \
        [h.key() for h in bench.hyperplanes]
    h = Arrangement.from_json(
        '{"dim": 2, "hyperplanes": [{"normal": ["1", "-2/3"], "offset": "1/2"}]}')
    assert h.hyperplanes[0].normal == (6, -4) and h.hyperplanes[0].offset == 3
    with pytest.raises(InputFormatError):
        Arrangement.from_json("not json")
    with pytest.raises(InputFormatError):
        Arrangement.from_json('{"hyperplanes": []}')


def test_prime_field_roundtrip():
    arr = Arrangement(2, [([1, 1], 0), ([1, 2], 0)], prime=3)
    again = Arrangement.from_json(arr.to_json())
    assert again.prime == 3
    assert [h.key() for h in again.hyperplanes] == \
        [h.key() for h in arr.hyperplanes]


def test_random_contraction_preserves_tutte_identity():
    # T(A) = T(A \ h) + T(A / h) for ordinary h, on random arrangements
    rng = random.Random(5)
    done = 0
    while done < 20:
        arr = random_arrangement(rng, max_n=5, max_d=3)
        ordinary = [i for i in range(arr.n) if arr.classify(i) == "ordinary"]
        if not ordinary:
            continue
        i = rng.choice(ordinary)
        t = tutte_subset(arr).tutte
        assert t == tutte_subset(arr.delete(i)).tutte + \
            tutte_subset(arr.contract(i)).tutte
        done += 1
