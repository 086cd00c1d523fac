"""Intersection posets, flats, and Möbius functions.

Flats are identified with closed sets of hyperplane indices: exactly the
hyperplanes containing the corresponding affine subspace.  The poset is
ordered by reverse inclusion of subspaces, i.e. inclusion of the index sets;
the minimum element is the closure of the empty set (the loops).

Enumeration is breadth-first closure generation, exponential in the worst
case but fine at desk scale.
"""

from .multipoly import MultiPoly


class Flat:
    """A flat: closed index set plus its dimension and rank."""

    __slots__ = ("hyperplane_set", "rank", "dim")

    def __init__(self, hyperplane_set, rank, dim):
        self.hyperplane_set = frozenset(hyperplane_set)
        self.rank = rank
        self.dim = dim

    def __repr__(self):
        return "Flat(%s, rank=%d, dim=%d)" % (
            sorted(self.hyperplane_set), self.rank, self.dim)


class IntersectionPoset:
    """All flats of an arrangement with their Möbius values."""

    def __init__(self, arrangement, flats, mobius):
        self.arrangement = arrangement
        self.flats = flats          # sorted by (rank, sorted index set)
        self.mobius = mobius        # frozenset -> int
        self.minimum = flats[0].hyperplane_set

    def leq(self, f, g):
        """f <= g in the poset (reverse inclusion of subspaces)."""
        return f.hyperplane_set <= g.hyperplane_set

    def level_mobius_sums(self):
        """Sum of Möbius values at each rank, as a list indexed by rank."""
        height = max(f.rank for f in self.flats)
        sums = [0] * (height + 1)
        for f in self.flats:
            sums[f.rank] += self.mobius[f.hyperplane_set]
        return sums

    def char_poly(self, var="q"):
        """Characteristic polynomial: sum of mu(F) q^dim(F)."""
        q = MultiPoly.variable(var)
        total = MultiPoly.zero()
        for f in self.flats:
            total = total + self.mobius[f.hyperplane_set] * q ** f.dim
        return total

    def verify_mobius(self):
        """Check the defining recursion at every flat; returns True or raises."""
        for g in self.flats:
            total = sum(self.mobius[f.hyperplane_set]
                        for f in self.flats if self.leq(f, g))
            expected = 1 if g.hyperplane_set == self.minimum else 0
            if total != expected:
                raise AssertionError("Mobius recursion fails at %r" % g)
        return True


def closure(arrangement, subset):
    """Closure of a central subset: all hyperplanes containing its intersection."""
    base_rank = arrangement.rank_normals(subset)
    closed = set(arrangement.loops())
    closed.update(subset)
    for i in arrangement.nonloops():
        if i in closed:
            continue
        bigger = frozenset(closed | {i})
        if arrangement.is_central(bigger) and \
                arrangement.rank_normals(bigger) == base_rank:
            closed.add(i)
    return frozenset(closed)


def intersection_poset(arrangement):
    """Enumerate all flats breadth-first and compute Möbius values."""
    d = arrangement.dim
    minimum = closure(arrangement, frozenset())
    seen = {minimum: 0}
    frontier = [minimum]
    while frontier:
        new = []
        for fset in frontier:
            base_rank = seen[fset]
            for i in arrangement.nonloops():
                if i in fset:
                    continue
                cand = fset | {i}
                if not arrangement.is_central(cand):
                    continue
                closed = closure(arrangement, cand)
                if closed not in seen:
                    seen[closed] = arrangement.rank_normals(closed)
                    new.append(closed)
        frontier = new
    flats = [Flat(fset, rank, d - rank) for fset, rank in seen.items()]
    flats.sort(key=lambda f: (f.rank, sorted(f.hyperplane_set)))
    mobius = {}
    for g in flats:
        if g.hyperplane_set == minimum:
            mobius[g.hyperplane_set] = 1
        else:
            mobius[g.hyperplane_set] = -sum(
                mobius[f.hyperplane_set] for f in flats
                if f.hyperplane_set < g.hyperplane_set
                and f.hyperplane_set in mobius)
    return IntersectionPoset(arrangement, flats, mobius)
