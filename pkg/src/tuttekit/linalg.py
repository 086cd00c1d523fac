"""Exact linear algebra helpers.

Ranks over the rationals are computed by fraction-free Bareiss elimination on
integer rows (denominators are cleared per row), which keeps intermediate
entries as true minors and controls coefficient growth.  Ranks over a prime
field use plain Gaussian elimination mod p.
"""

from fractions import Fraction
from math import gcd


def clear_row(row):
    """Scale a row of Fractions to a primitive integer row, first nonzero > 0.

    Returns a tuple of ints; the zero row maps to itself.
    """
    fracs = [Fraction(x) for x in row]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def rank_int(rows):
    """Rank of a matrix with integer entries, by Bareiss elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for i in range(row + 1, len(m)):
            for j in range(col + 1, ncols):
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) // prev
            m[i][col] = 0
        prev = m[row][col]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def rank_mod_p(rows, p):
    """Rank of a matrix over F_p by Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, p)
        for i in range(row + 1, len(m)):
            if m[i][col]:
                f = (m[i][col] * inv) % p
                for j in range(col, ncols):
                    m[i][j] = (m[i][j] - f * m[row][j]) % p
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def rank_rows(rows, prime=None):
    """Rank dispatcher: integer rows over Q (prime=None) or over F_prime."""
    if prime is None:
        return rank_int(rows)
    return rank_mod_p(rows, prime)
