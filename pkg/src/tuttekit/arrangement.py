"""Affine hyperplane arrangements with exact coefficients.

An arrangement lives either over Q (the default) or over a prime field F_p
(used for the "all linear hyperplanes in F_p^n" family, whose matroid is in
general not realizable over Q).  Hyperplane equations are stored in canonical
form: over Q as primitive integer vectors with positive leading entry, over
F_p with leading entry 1.  The degenerate "loop" hyperplane (zero normal, zero
offset) stands for the whole ambient space and is allowed, since contractions
produce it.
"""

import json
from fractions import Fraction

from .errors import (
    InputFormatError,
    InvalidHyperplaneError,
    LoopContractionError,
    NonCentralError,
)
from .linalg import clear_row, rank_rows


class Hyperplane:
    """A single hyperplane {x : normal . x = offset}, in canonical form."""

    __slots__ = ("normal", "offset", "prime")

    def __init__(self, normal, offset, prime=None):
        if prime is None:
            row = clear_row(list(normal) + [offset])
            normal, offset = row[:-1], row[-1]
            if not any(normal):
                if offset != 0:
                    raise InvalidHyperplaneError(
                        "zero normal with nonzero offset is not a hyperplane"
                    )
                # canonical loop: offsets already zero
        else:
            normal = [int(x) % prime for x in normal]
            offset = int(offset) % prime
            lead = next((x for x in normal if x), None)
            if lead is None:
                if offset != 0:
                    raise InvalidHyperplaneError(
                        "zero normal with nonzero offset is not a hyperplane"
                    )
            else:
                inv = pow(lead, -1, prime)
                normal = [(x * inv) % prime for x in normal]
                offset = (offset * inv) % prime
            normal = tuple(normal)
        self.normal = tuple(normal)
        self.offset = offset
        self.prime = prime

    @property
    def is_loop(self):
        return not any(self.normal)

    def row(self):
        """(normal..., offset) as a tuple of ints."""
        return self.normal + (self.offset,)

    def key(self):
        return (self.normal, self.offset)

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.key() == other.key() \
            and self.prime == other.prime

    def __hash__(self):
        return hash((self.key(), self.prime))

    def __repr__(self):
        return "Hyperplane(%r, %r)" % (list(self.normal), self.offset)


class Arrangement:
    """An ordered list of hyperplanes in dimension `dim`.

    The hyperplane order is significant: it is the activity order and the
    order used by the command-line interface.  Duplicate hyperplanes are
    allowed (thickenings need them).
    """

    def __init__(self, dim, hyperplanes, label=None, prime=None):
        self.dim = dim
        hs = []
        for h in hyperplanes:
            if isinstance(h, Hyperplane):
                if h.prime != prime:
                    h = Hyperplane(h.normal, h.offset, prime)
            else:
                normal, offset = h
                h = Hyperplane(normal, offset, prime)
            if len(h.normal) != dim:
                raise InvalidHyperplaneError("normal length != ambient dimension")
            hs.append(h)
        self.hyperplanes = tuple(hs)
        self.label = label
        self.prime = prime
        self._central_cache = {}
        self._rank_cache = {}
        self._nrank_cache = {}

    # -- basic queries -----------------------------------------------------

    @property
    def n(self):
        return len(self.hyperplanes)

    def loops(self):
        return [i for i, h in enumerate(self.hyperplanes) if h.is_loop]

    def nonloops(self):
        return [i for i, h in enumerate(self.hyperplanes) if not h.is_loop]

    def _check_indices(self, subset):
        for i in subset:
            if not 0 <= i < self.n:
                raise IndexError("hyperplane index %d out of range" % i)

    def is_central(self, subset=None):
        """True iff the hyperplanes in `subset` have a common point.

        Loops never break centrality.  Decided by comparing the exact rank of
        the coefficient matrix with the rank of the augmented matrix.
        """
        if subset is None:
            subset = range(self.n)
        subset = frozenset(subset)
        self._check_indices(subset)
        key = subset
        got = self._central_cache.get(key)
        if got is not None:
            return got
        rows = [self.hyperplanes[i].row() for i in sorted(subset)
                if not self.hyperplanes[i].is_loop]
        normals = [r[:-1] for r in rows]
        central = rank_rows(normals, self.prime) == rank_rows(rows, self.prime)
        self._central_cache[key] = central
        return central

    def rank_normals(self, subset=None):
        """Rank of the normal vectors of `subset` (semimatroid rank extension).

        For a central subset this equals the codimension of the intersection;
        for an arbitrary subset it equals the maximal rank of a central subset.
        """
        if subset is None:
            subset = range(self.n)
        subset = frozenset(subset)
        key = subset
        got = self._nrank_cache.get(key)
        if got is not None:
            return got
        normals = [self.hyperplanes[i].normal for i in sorted(subset)
                   if not self.hyperplanes[i].is_loop]
        r = rank_rows(normals, self.prime)
        self._nrank_cache[key] = r
        return r

    def rank_of(self, subset):
        """dim V - dim(intersection) for a central subset; loops contribute 0."""
        subset = frozenset(subset)
        self._check_indices(subset)
        got = self._rank_cache.get(subset)
        if got is not None:
            return got
        if not self.is_central(subset):
            raise NonCentralError("non-central subset %s" % sorted(subset))
        r = self.rank_normals(subset)
        self._rank_cache[subset] = r
        return r

    @property
    def rank(self):
        """Rank of the whole arrangement (the height of its intersection poset)."""
        return self.rank_normals()

    def classify(self, i):
        """'loop', 'coloop', or 'ordinary' for hyperplane i."""
        h = self.hyperplanes[i]
        if h.is_loop:
            return "loop"
        rest = self.rank_normals(frozenset(range(self.n)) - {i})
        return "coloop" if self.rank == rest + 1 else "ordinary"

    # -- constructions -----------------------------------------------------

    def delete(self, i):
        self._check_indices([i])
        hs = [h for j, h in enumerate(self.hyperplanes) if j != i]
        return Arrangement(self.dim, hs, prime=self.prime)

    def contract(self, i):
        """Re-express the other hyperplanes inside hyperplane i (dimension d-1).

        The pivot coordinate is the first nonzero entry of i's normal; it is
        solved for and substituted into the other equations.  A hyperplane
        whose image is all of i becomes a degenerate loop; one with empty
        intersection (parallel) is dropped.
        """
        self._check_indices([i])
        h = self.hyperplanes[i]
        if h.is_loop:
            raise LoopContractionError("cannot contract a loop hyperplane")
        piv = next(j for j, x in enumerate(h.normal) if x)
        out = []
        for j, g in enumerate(self.hyperplanes):
            if j == i:
                continue
            if g.is_loop:
                out.append(((0,) * (self.dim - 1), 0))
                continue
            if self.prime is None:
                f = Fraction(g.normal[piv], h.normal[piv])
                new_normal = [g.normal[k] - f * h.normal[k]
                              for k in range(self.dim) if k != piv]
                new_offset = g.offset - f * h.offset
            else:
                p = self.prime
                f = (g.normal[piv] * pow(h.normal[piv], -1, p)) % p
                new_normal = [(g.normal[k] - f * h.normal[k]) % p
                              for k in range(self.dim) if k != piv]
                new_offset = (g.offset - f * h.offset) % p
            if not any(new_normal) and new_offset != 0:
                continue  # parallel to i: empty intersection, not a flat of i
            out.append((new_normal, new_offset))
        return Arrangement(self.dim - 1, out, prime=self.prime)

    def cone(self):
        """Homogenize into dimension d+1, adding the hyperplane x_{d+1} = 0."""
        out = []
        for h in self.hyperplanes:
            if h.is_loop:
                out.append(((0,) * (self.dim + 1), 0))
            else:
                out.append((h.normal + (-h.offset,), 0))
        out.append(((0,) * self.dim + (1,), 0))
        return Arrangement(self.dim + 1, out, prime=self.prime)

    def essentialize(self):
        """Quotient a central arrangement by the common intersection subspace."""
        if not self.is_central():
            raise NonCentralError("essentialization requires a central arrangement")
        if self.prime is not None:
            raise NotImplementedError("essentialization implemented over Q only")
        pivots = self._pivot_columns()
        out = []
        for h in self.hyperplanes:
            if h.is_loop:
                out.append(((0,) * len(pivots), 0))
            else:
                out.append((tuple(h.normal[j] for j in pivots), h.offset))
        return Arrangement(len(pivots), out, prime=self.prime)

    def _pivot_columns(self):
        """Pivot columns of the matrix of (non-loop) normals, by row echelon."""
        rows = [list(map(Fraction, self.hyperplanes[i].normal))
                for i in self.nonloops()]
        pivots = []
        row = 0
        for col in range(self.dim):
            pivot = None
            for i in range(row, len(rows)):
                if rows[i][col] != 0:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[row], rows[pivot] = rows[pivot], rows[row]
            for i in range(row + 1, len(rows)):
                f = rows[i][col] / rows[row][col]
                for j in range(col, self.dim):
                    rows[i][j] -= f * rows[row][j]
            pivots.append(col)
            row += 1
            if row == len(rows):
                break
        return pivots

    def restrict(self, subset):
        """Subarrangement on the given indices, in the given ambient space."""
        return Arrangement(self.dim,
                           [self.hyperplanes[i] for i in sorted(subset)],
                           prime=self.prime)

    # -- semimatroid fingerprint ------------------------------------------

    def semimatroid(self):
        """Sorted tuple of (bitmask, rank) over all central subsets of non-loops.

        Loops are excluded; the fingerprint is the canonical cache key for
        deletion-contraction memoization and the object compared by the
        verified reduction mode.
        """
        nl = self.nonloops()
        out = []
        for mask in range(1 << len(nl)):
            subset = frozenset(nl[i] for i in range(len(nl)) if mask >> i & 1)
            if self.is_central(subset):
                out.append((mask, self.rank_normals(subset)))
        return tuple(sorted(out))

    # -- serialization -----------------------------------------------------

    def to_dict(self):
        return {
            "dim": self.dim,
            "hyperplanes": [
                {"normal": [str(x) for x in h.normal], "offset": str(h.offset)}
                for h in self.hyperplanes
            ],
            **({"label": self.label} if self.label else {}),
            **({"prime": self.prime} if self.prime else {}),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data):
        try:
            dim = int(data["dim"])
            hs = [
                ([Fraction(x) for x in h["normal"]], Fraction(h.get("offset", 0)))
                for h in data["hyperplanes"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError("bad arrangement record: %s" % exc)
        prime = data.get("prime")
        if prime is not None:
            hs = [([int(a) for a in n], int(b)) for n, b in hs]
        return cls(dim, hs, label=data.get("label"), prime=prime)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputFormatError("invalid JSON: %s" % exc)
        return cls.from_dict(data)

    def __repr__(self):
        return "Arrangement(dim=%d, n=%d%s)" % (
            self.dim, self.n, ", label=%r" % self.label if self.label else "")
