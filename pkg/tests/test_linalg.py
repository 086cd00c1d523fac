import random
from fractions import Fraction

from tuttekit.linalg import clear_row, rank_int, rank_mod_p, rank_rows


def test_clear_row():
    assert clear_row([Fraction(1, 2), Fraction(-1, 3), 0]) == (3, -2, 0)
    assert clear_row([-2, 4]) == (1, -2)  # leading entry made positive
    assert clear_row([0, 0]) == (0, 0)


def test_rank_int_basics():
    assert rank_int([]) == 0
    assert rank_int([(0, 0)]) == 0
    assert rank_int([(1, 0), (0, 1)]) == 2
    assert rank_int([(1, 2), (2, 4)]) == 1
    assert rank_int([(1, 2, 3), (4, 5, 6), (7, 8, 9)]) == 2


def test_rank_mod_p():
    # x - y and x + y coincide mod 2
    assert rank_mod_p([(1, -1), (1, 1)], 3) == 2
    assert rank_mod_p([(1, 1), (1, 1)], 2) == 1
    assert rank_mod_p([(1, -1), (1, 1)], 2) == 1


def test_rank_rows_dispatch_agrees_with_fraction_elimination():
    rng = random.Random(11)
    for _ in range(50):
        rows = [tuple(rng.randint(-4, 4) for _ in range(3))
                for _ in range(rng.randint(0, 5))]
        # reference: rational Gaussian elimination
        m = [list(map(Fraction, r)) for r in rows]
        rank = 0
        for col in range(3):
            piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for i in range(rank + 1, len(m)):
                f = m[i][col] / m[rank][col]
                for j in range(3):
                    m[i][j] -= f * m[rank][j]
            rank += 1
        assert rank_rows(rows) == rank
