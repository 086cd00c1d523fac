from fractions import Fraction

import pytest

from tuttekit.errors import InconsistentSamplesError
from tuttekit.interpolation import interpolate_in_X
from tuttekit.multipoly import MultiPoly

X = MultiPoly.variable("X")
Y = MultiPoly.variable("Y")


def test_exact_reconstruction():
    target = X ** 2 * Y + 3 * X - Y + Fraction(1, 2)
    samples = [(p, target.substitute({"X": p})) for p in (2, 3, 5, 7)]
    assert interpolate_in_X(samples, 2) == target


def test_scalar_values():
    samples = [(0, 1), (1, 2), (2, 5)]
    assert interpolate_in_X(samples, 2) == X ** 2 + 1


def test_constant_with_oversample():
    samples = [(2, MultiPoly.const(7)), (3, MultiPoly.const(7))]
    assert interpolate_in_X(samples, 0) == 7


def test_oversample_mismatch():
    samples = [(0, 0), (1, 1), (2, 3)]  # not linear
    with pytest.raises(InconsistentSamplesError):
        interpolate_in_X(samples, 1)


def test_duplicate_abscissa():
    with pytest.raises(InconsistentSamplesError):
        interpolate_in_X([(2, 1), (2, 1)], 1)


def test_too_few_samples():
    with pytest.raises(ValueError):
        interpolate_in_X([(1, 1)], 3)
