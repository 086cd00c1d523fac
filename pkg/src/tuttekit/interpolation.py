"""Exact Lagrange interpolation in one variable.

This is the reconstruction step of the finite field method: the coboundary
polynomial has X-degree at most the rank r, so r+1 point profiles at distinct
primes determine it, and an extra prime cross-checks the degree bound and the
correctness of every reduction.
"""

from fractions import Fraction

from .errors import InconsistentSamplesError
from .multipoly import MultiPoly


def interpolate_in_X(samples, degree_bound, var="X"):
    """Fit the unique polynomial of degree <= degree_bound in `var` through samples.

    samples: list of (abscissa, value) with Fraction/int abscissae and MultiPoly
    (or scalar) values.  Extra samples beyond degree_bound+1 are used as
    consistency checks; a mismatch raises InconsistentSamplesError.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    pts = []
    for absc, val in samples:
        absc = Fraction(absc)
        if isinstance(val, (int, Fraction)):
            val = MultiPoly.const(val)
        pts.append((absc, val))
    seen = set()
    for absc, _ in pts:
        if absc in seen:
            raise InconsistentSamplesError("duplicate abscissa %s" % absc)
        seen.add(absc)
    need = degree_bound + 1
    if len(pts) < need:
        raise ValueError(
            "need at least %d samples for degree bound %d" % (need, degree_bound)
        )
    base, extra = pts[:need], pts[need:]
    x = MultiPoly.variable(var)
    result = MultiPoly.zero()
    for j, (xj, vj) in enumerate(base):
        lj = MultiPoly.const(1)
        for k, (xk, _) in enumerate(base):
            if k != j:
                lj = lj * (x - xk) / (xj - xk)
        result = result + vj * lj
    for xe, ve in extra:
        fitted = result.substitute({var: xe}) if var in result.vars else result
        if fitted != ve:
            raise InconsistentSamplesError(
                "oversample at %s disagrees with the interpolant "
                "(wrong degree bound or bad prime)" % xe
            )
    return result
