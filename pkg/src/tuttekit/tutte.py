"""Tutte polynomial engines and their scalar specializations.

Three structural algorithms compute the same polynomial: the subset
expansion, deletion-contraction, and the basis-activity expansion.  The
fourth route, the finite field method, lives in `finite_field`.  All engines
agree exactly; the test suite asserts this on randomized arrangements.
"""

from fractions import Fraction
from itertools import combinations

from .multipoly import MultiPoly
from .poset import intersection_poset


class TutteResult:
    """A computed Tutte polynomial with its provenance."""

    __slots__ = ("tutte", "rank", "n_hyperplanes", "engine")

    def __init__(self, tutte, rank, n_hyperplanes, engine):
        self.tutte = tutte
        self.rank = rank
        self.n_hyperplanes = n_hyperplanes
        self.engine = engine

    def __repr__(self):
        return "TutteResult(%s; r=%d, n=%d, engine=%s)" % (
            self.tutte, self.rank, self.n_hyperplanes, self.engine)


class ActivityCertificate:
    """Per-basis activity counts; their monomials sum to the Tutte polynomial."""

    def __init__(self, records):
        self.records = records  # list of (basis tuple, internal, external)

    def polynomial(self):
        x = MultiPoly.variable("x")
        y = MultiPoly.variable("y")
        total = MultiPoly.zero()
        for _, i, e in self.records:
            total = total + x ** i * y ** e
        return total


def _xy():
    return MultiPoly.variable("x"), MultiPoly.variable("y")


def tutte_subset(arrangement):
    """Subset expansion: sum over central B of (x-1)^(r-rB) (y-1)^(|B|-rB)."""
    x, y = _xy()
    r = arrangement.rank
    nl = arrangement.nonloops()
    n_loops = arrangement.n - len(nl)
    xm1 = [MultiPoly.const(1)]
    ym1 = [MultiPoly.const(1)]
    for _ in range(max(r, arrangement.n)):
        xm1.append(xm1[-1] * (x - 1))
        ym1.append(ym1[-1] * (y - 1))
    total = MultiPoly.zero()
    for size in range(len(nl) + 1):
        for combo in combinations(nl, size):
            s = frozenset(combo)
            if not arrangement.is_central(s):
                continue
            rb = arrangement.rank_normals(s)
            total = total + xm1[r - rb] * ym1[size - rb]
    total = total * y ** n_loops
    return TutteResult(total, r, arrangement.n, "subset")


def tutte_delcon(arrangement, memoize=False, _cache=None):
    """Deletion-contraction recursion; identical result to the subset expansion.

    With memoize=True, results are cached by the canonical semimatroid
    fingerprint (sorted (central-subset bitmask, rank) pairs), so isomorphic
    minors are computed once.
    """
    if memoize and _cache is None:
        _cache = {}
    x, y = _xy()

    def rec(arr):
        loops = arr.loops()
        if loops:
            inner = rec(arr.restrict(arr.nonloops()))
            return inner * y ** len(loops)
        if arr.n == 0:
            return MultiPoly.const(1)
        if _cache is not None:
            key = arr.semimatroid()
            got = _cache.get(key)
            if got is not None:
                return got
        pivot = None
        for i in range(arr.n - 1, -1, -1):
            if arr.classify(i) == "ordinary":
                pivot = i
                break
        if pivot is None:
            result = x ** arr.n  # all coloops (loops already stripped)
        else:
            result = rec(arr.delete(pivot)) + rec(arr.contract(pivot))
        if _cache is not None:
            _cache[key] = result
        return result

    return TutteResult(rec(arrangement), arrangement.rank, arrangement.n, "delcon")


def tutte_activity(arrangement, order=None):
    """Basis-activity expansion for a fixed linear order on the hyperplanes.

    Bases are the independent central subsets of size and rank r.  Returns
    the TutteResult plus an ActivityCertificate listing (basis, i(B), e(B)).
    """
    n = arrangement.n
    if order is None:
        order = list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the hyperplane indices")
    pos = {h: k for k, h in enumerate(order)}
    r = arrangement.rank
    nl = arrangement.nonloops()
    loops = arrangement.loops()
    records = []
    for combo in combinations(nl, r):
        basis = frozenset(combo)
        if arrangement.rank_normals(basis) != r or not arrangement.is_central(basis):
            continue
        internal = 0
        for h in basis:
            below = basis - {h} | {g for g in range(n) if pos[g] < pos[h]}
            if arrangement.rank_normals(below) == r - 1:
                internal += 1
        external = len(loops)  # every loop is externally active w.r.t. every basis
        for h in nl:
            if h in basis:
                continue
            if not arrangement.is_central(basis | {h}):
                continue
            above = frozenset(g for g in basis if pos[g] > pos[h])
            if arrangement.rank_normals(above | {h}) == arrangement.rank_normals(above):
                external += 1
        records.append((tuple(sorted(basis)), internal, external))
    cert = ActivityCertificate(records)
    return TutteResult(cert.polynomial(), r, n, "activity"), cert


def char_poly(arrangement, var="q", check_whitney=None):
    """Characteristic polynomial via the Möbius-weighted sum over flats.

    A degenerate loop hyperplane covers the whole space, so an arrangement
    containing one has empty complement and chi = 0 (the poset-level Möbius
    sum does not see this; the Whitney route does).

    When check_whitney is true (default for n <= 10), the Whitney route
    (-1)^r q^(d-r) T(1-q, 0) is also computed and asserted equal.
    """
    if arrangement.loops():
        chi = MultiPoly.zero()
    else:
        poset = intersection_poset(arrangement)
        chi = poset.char_poly(var)
    if check_whitney is None:
        check_whitney = arrangement.n <= 10
    if check_whitney:
        alt = whitney_char(arrangement, var=var)
        if alt != chi:
            raise AssertionError(
                "Mobius and Whitney routes disagree: %s vs %s" % (chi, alt))
    return chi


def whitney_char(arrangement, tutte=None, var="q"):
    """chi(q) = (-1)^r q^(d-r) T(1-q, 0)."""
    if tutte is None:
        tutte = tutte_subset(arrangement).tutte
    q = MultiPoly.variable(var)
    r = arrangement.rank
    sub = {v: w for v, w in (("x", 1 - q), ("y", MultiPoly.const(0)))
           if v in tutte.vars}
    spec = tutte.substitute(sub) if sub else tutte
    return spec * q ** (arrangement.dim - r) * Fraction((-1) ** r)


def coboundary_transform(tutte, r, xvar="X", yvar="Y"):
    """Coboundary polynomial (Y-1)^r T((X+Y-1)/(Y-1), Y), expanded.

    Writing T = sum_i c_i(y) x^i with i <= r, the result is
    sum_i c_i(Y) (X+Y-1)^i (Y-1)^(r-i), a genuine polynomial.
    """
    if tutte.degree("x") > r:
        raise ValueError("x-degree exceeds the stated rank %d" % r)
    X = MultiPoly.variable(xvar)
    Y = MultiPoly.variable(yvar)
    total = MultiPoly.zero()
    for i in range(tutte.degree("x") + 1):
        ci = tutte.coefficient("x", i)
        ci = ci.substitute({"y": Y}) if "y" in ci.vars else ci
        total = total + ci * (X + Y - 1) ** i * (Y - 1) ** (r - i)
    return total


def tutte_from_coboundary(cob, r, xvar="X", yvar="Y"):
    """Inverse transform: T(x,y) = (y-1)^(-r) cob((x-1)(y-1), y), exact."""
    x = MultiPoly.variable("x")
    s = MultiPoly.variable("_s")
    sub = {}
    if xvar in cob.vars:
        sub[xvar] = (x - 1) * s
    if yvar in cob.vars:
        sub[yvar] = s + 1
    shifted = cob.substitute(sub) if sub else cob
    try:
        shifted = shifted.div_exact_var("_s", r) if r else shifted
    except ValueError:
        raise ValueError("inconsistent coboundary/rank pair: division not exact")
    if "_s" in shifted.vars:
        shifted = shifted.substitute({"_s": MultiPoly.variable("y") - 1})
    return shifted


def scalar_invariants(arrangement, tutte=None, chi=None):
    """The scalar and polynomial specializations of chapter-level interest.

    Returns a dict with region count a, bounded-region count b, the Poincare
    polynomial of the complex complement, the complement-size polynomial
    chi(q), the general-position bounded-region count T(1,0), and the beta
    invariant (reported only for n >= 2).
    """
    d = arrangement.dim
    r = arrangement.rank
    if chi is None:
        chi = char_poly(arrangement, check_whitney=False)
    if tutte is None:
        tutte = tutte_subset(arrangement).tutte
    a = (-1) ** d * chi.evaluate({"q": -1})
    b = (-1) ** r * chi.evaluate({"q": 1})
    q = MultiPoly.variable("q")
    # (-q)^d chi(-1/q): coefficient of q^k in chi becomes (-1)^(d-k) q^(d-k)
    poincare = MultiPoly.zero()
    for k in range(chi.degree("q") + 1):
        c = chi.coefficient("q", k).constant_value()
        poincare = poincare + c * Fraction((-1) ** (d - k)) * q ** (d - k)
    t10 = tutte.evaluate({"x": 1, "y": 0})
    beta = None
    if arrangement.n >= 2:
        b10 = tutte.coeff_of_monomial({"x": 1, "y": 0})
        b01 = tutte.coeff_of_monomial({"x": 0, "y": 1})
        # the x/y coefficient symmetry is a matroid fact; it can fail for
        # non-central arrangements (e.g. x=0, x=1 has T = x + 1)
        if arrangement.is_central() and b10 != b01:
            raise AssertionError("beta coefficients x^1y^0 and x^0y^1 differ")
        beta = b10
    return {
        "regions": a,
        "bounded_regions": b,
        "poincare": poincare,
        "complement_size": chi,
        "general_position_bounded": t10,
        "beta": beta,
    }


def validate_chi_shape(chi, var="q"):
    """Sign-alternation, unimodality, and log-concavity report for chi.

    The coefficient of q^(d-k) must have sign (-1)^k (or vanish); the
    magnitude sequence must be unimodal and log-concave.  Violations are
    returned, not raised: a violation would contradict the theorem and is a
    bug report.
    """
    d = chi.degree(var)
    mags = []
    violations = []
    for k in range(d + 1):
        c = chi.coefficient(var, d - k).constant_value()
        if c != 0 and (c > 0) != (k % 2 == 0):
            violations.append("sign of q^%d coefficient" % (d - k))
        mags.append(abs(c))
    rising = True
    for j in range(1, len(mags)):
        if rising and mags[j] < mags[j - 1]:
            rising = False
        elif not rising and mags[j] > mags[j - 1]:
            violations.append("unimodality fails at position %d" % j)
            break
    for j in range(1, len(mags) - 1):
        if mags[j - 1] * mags[j + 1] > mags[j] ** 2:
            violations.append("log-concavity fails at position %d" % j)
    return {"ok": not violations, "violations": violations, "magnitudes": mags}


def generalized_tg_evaluate(arrangement, a, b, coloop_value, loop_value):
    """Evaluate the generalized Tutte-Grothendieck recursion directly.

    Used to sanity-check universality: the result must equal
    a^(n-r) b^r T(coloop_value/b, loop_value/a).
    """
    a, b = Fraction(a), Fraction(b)
    cv, lv = Fraction(coloop_value), Fraction(loop_value)

    def rec(arr):
        if arr.n == 0:
            return Fraction(1)
        for i in range(arr.n - 1, -1, -1):
            kind = arr.classify(i)
            if kind == "loop":
                return lv * rec(arr.delete(i))
            if kind == "coloop":
                return cv * rec(arr.contract(i))
        i = arr.n - 1
        return a * rec(arr.delete(i)) + b * rec(arr.contract(i))

    return rec(arrangement)
