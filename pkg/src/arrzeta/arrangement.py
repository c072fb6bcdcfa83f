"""Hyperplane arrangements with multiplicities and their intersection data.

An arrangement is a list of pairwise non-proportional linear (or affine)
forms with positive integer multiplicities, optionally refined by a
factorization matrix splitting the product of the forms into several
polynomial factors.  All the combinatorics downstream (flats, Mobius
function, characteristic polynomial, dense edges) lives here.

Flats are identified with closed index sets: I determines the subspace
W = intersection of the hyperplanes in I, and I is closed when it already
contains every hyperplane through W.  The partial order used everywhere is
reverse inclusion of subspaces, i.e. inclusion of index sets, with bottom
element the ambient space (empty index set).
"""

from fractions import Fraction
from itertools import combinations

from .core import (MultiPoly, QMatrix, kernel_basis, primitive_normal, rank,
                   rational, dot, poly_eval, div_linear_exact, AffineForm)


class ArrangementError(ValueError):
    """Invalid arrangement data or an operation outside its preconditions."""


class Arrangement:
    """A finite set of hyperplanes in C^n with multiplicities.

    forms: tuple of length-n normal vectors (rationals).
    consts: parallel tuple of constant terms; all zero means central.
    mults: positive integer multiplicities d_i.
    factors: optional k x r matrix of nonnegative integers whose rows are
        the exponent vectors of a factorization h_1 ... h_k of the product
        of the f_i^{d_i}; every column has a positive entry and column i
        sums to d_i.
    """

    def __init__(self, n, forms, mults=None, factors=None, consts=None, name=None):
        n = int(n)
        if n < 1:
            raise ArrangementError("ambient dimension must be at least 1")
        self.n = n
        parsed_forms = []
        parsed_consts = []
        for idx, f in enumerate(forms):
            f = [rational(e) for e in f]
            if len(f) == n and consts is None:
                normal, const = f, Fraction(0)
            elif len(f) == n:
                normal, const = f, rational(consts[idx])
            elif len(f) == n + 1 and consts is None:
                normal, const = f[:n], f[n]
            else:
                raise ArrangementError("form %d has length %d, expected %d" % (idx + 1, len(f), n))
            if all(e == 0 for e in normal):
                raise ArrangementError("form %d has zero normal vector" % (idx + 1,))
            parsed_forms.append(tuple(normal))
            parsed_consts.append(const)
        self.forms = tuple(parsed_forms)
        self.consts = tuple(parsed_consts)
        self.r = len(self.forms)
        # pairwise proportionality check via the affine canonical key
        seen = {}
        for i, (normal, const) in enumerate(zip(self.forms, self.consts)):
            prim = primitive_normal(normal)
            j = next(k for k, e in enumerate(prim) if e)
            scale = normal[j] / prim[j]
            key = (prim, const / scale)
            if key in seen:
                raise ArrangementError(
                    "forms %d and %d are proportional; merge them into one "
                    "hyperplane with a multiplicity" % (seen[key] + 1, i + 1))
            seen[key] = i
        if mults is None:
            mults = [1] * self.r
        mults = [int(m) for m in mults]
        if len(mults) != self.r:
            raise ArrangementError("expected %d multiplicities, got %d" % (self.r, len(mults)))
        if any(m < 1 for m in mults):
            raise ArrangementError("multiplicities must be positive")
        self.mults = tuple(mults)
        if factors is not None:
            factors = tuple(tuple(int(e) for e in row) for row in factors)
            if not factors:
                raise ArrangementError("factor matrix must have at least one row")
            for j, row in enumerate(factors):
                if len(row) != self.r:
                    raise ArrangementError("factor row %d has length %d, expected %d"
                                           % (j + 1, len(row), self.r))
                if any(e < 0 for e in row):
                    raise ArrangementError("factor exponents must be nonnegative")
            for i in range(self.r):
                col = [row[i] for row in factors]
                if all(e == 0 for e in col):
                    raise ArrangementError("hyperplane %d appears in no factor" % (i + 1,))
                if sum(col) != self.mults[i]:
                    raise ArrangementError(
                        "factor exponents of hyperplane %d sum to %d, multiplicity is %d"
                        % (i + 1, sum(col), self.mults[i]))
        self.factors = factors
        self.name = name

    @property
    def central(self):
        return all(c == 0 for c in self.consts)

    @property
    def nfactors(self):
        return len(self.factors) if self.factors is not None else None

    def degree(self):
        """Total degree d = sum of the multiplicities."""
        return sum(self.mults)

    def factor_degrees(self):
        """Degrees of the factors h_j (requires a factorization)."""
        if self.factors is None:
            raise ArrangementError("arrangement has no factorization data")
        return tuple(sum(row) for row in self.factors)

    def normal_matrix(self, indices=None):
        if indices is None:
            indices = range(self.r)
        return QMatrix.from_rows([self.forms[i] for i in sorted(indices)], cols=self.n)

    def __repr__(self):
        label = self.name or "arrangement"
        return "Arrangement(%s: r=%d in C^%d)" % (label, self.r, self.n)


class Flat:
    """A flat of a central arrangement, identified by its closed index set.

    codim is the codimension of the subspace W, basis a deterministic
    rational basis of W.
    """

    def __init__(self, indices, codim, basis):
        self.indices = frozenset(int(i) for i in indices)
        self.codim = int(codim)
        self.basis = tuple(tuple(v) for v in basis)

    def key(self):
        return (self.codim, tuple(sorted(self.indices)))

    def dim(self, n):
        return n - self.codim

    def __eq__(self, other):
        return isinstance(other, Flat) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return "Flat({%s} codim %d)" % (",".join(str(i + 1) for i in sorted(self.indices)),
                                        self.codim)


def _require_central(arr, what):
    if not arr.central:
        raise ArrangementError("%s requires a central arrangement" % what)


def closure(arr, indices):
    """The flat spanned by a set of hyperplane indices.

    Adds every hyperplane whose normal lies in the span of the given
    normals, computes the codimension, and fixes a deterministic basis of
    the underlying subspace via kernel_basis.
    """
    _require_central(arr, "closure")
    indices = set(int(i) for i in indices)
    for i in indices:
        if not 0 <= i < arr.r:
            raise ArrangementError("hyperplane index %d out of range" % i)
    base = arr.normal_matrix(indices)
    rk = rank(base)
    closed = set(indices)
    for i in range(arr.r):
        if i in closed:
            continue
        aug = QMatrix.from_rows([arr.forms[j] for j in sorted(indices)] + [arr.forms[i]],
                                cols=arr.n)
        if rank(aug) == rk:
            closed.add(i)
    basis = kernel_basis(arr.normal_matrix(closed))
    return Flat(closed, rk, basis)


class IntersectionLattice:
    """All flats of a central arrangement with their Mobius numbers.

    flats are sorted by (codim, index set); mobius maps each flat's index
    set to mu(ambient, flat).
    """

    def __init__(self, arr, flats, mobius):
        self.arr = arr
        self.flats = tuple(sorted(flats, key=Flat.key))
        self._by_indices = {f.indices: f for f in self.flats}
        self.mobius = dict(mobius)

    def flat(self, indices):
        key = frozenset(int(i) for i in indices)
        if key not in self._by_indices:
            raise ArrangementError("index set %r is not closed" % (sorted(key),))
        return self._by_indices[key]

    @property
    def ambient(self):
        return self._by_indices[frozenset()]

    def proper_flats(self):
        return [f for f in self.flats if f.codim > 0]

    def minimal_flat(self):
        """The intersection of all hyperplanes (bottom subspace, top flat)."""
        return max(self.flats, key=lambda f: (len(f.indices), f.codim))

    def below(self, X, Y):
        """True iff W_X contains W_Y (index set of X inside that of Y)."""
        return X.indices <= Y.indices

    def mu(self, flat):
        return self.mobius[flat.indices]

    def __len__(self):
        return len(self.flats)


def intersection_lattice(arr):
    """All flats, found by closing the atoms under pairwise join."""
    _require_central(arr, "intersection_lattice")
    flats = {}
    ambient = closure(arr, ())
    flats[ambient.indices] = ambient
    frontier = []
    for i in range(arr.r):
        f = closure(arr, (i,))
        if f.indices not in flats:
            flats[f.indices] = f
            frontier.append(f)
    while frontier:
        new = []
        current = list(flats.values())
        for f in frontier:
            for g in current:
                joined = f.indices | g.indices
                if joined in flats or joined == f.indices or joined == g.indices:
                    continue
                h = closure(arr, joined)
                if h.indices not in flats:
                    flats[h.indices] = h
                    new.append(h)
        frontier = new
    ordered = sorted(flats.values(), key=Flat.key)
    mobius = {}
    for f in ordered:
        if not f.indices:
            mobius[f.indices] = 1
            continue
        mobius[f.indices] = -sum(mobius[g.indices] for g in ordered
                                 if g.indices < f.indices)
    return IntersectionLattice(arr, ordered, mobius)


def char_poly(arr, lattice=None):
    """Characteristic polynomial sum of mu(X) t^{dim X}, as a MultiPoly in t."""
    _require_central(arr, "char_poly")
    if lattice is None:
        lattice = intersection_lattice(arr)
    terms = {}
    for f in lattice.flats:
        ex = (arr.n - f.codim,)
        terms[ex] = terms.get(ex, Fraction(0)) + lattice.mu(f)
    return MultiPoly(1, terms)


def complement_euler(arr, lattice=None):
    """Euler characteristic of the complement, chi_A(1)."""
    return poly_eval(char_poly(arr, lattice), (1,))


def proj_complement_euler(arr, lattice=None):
    """Euler characteristic of the projectivized complement.

    (chi_A / (t - 1)) evaluated at 1; for the empty arrangement the
    projectivized complement is P^{n-1} and the value is n.
    """
    _require_central(arr, "proj_complement_euler")
    if arr.r == 0:
        return Fraction(arr.n)
    quotient = div_linear_exact(char_poly(arr, lattice), AffineForm((1,), -1))
    return poly_eval(quotient, (1,))


def _extend_basis(inner, outer, n):
    """Vectors of outer extending span(inner), greedy in order."""
    chosen = list(inner)
    ext = []
    rk = rank(QMatrix.from_rows(chosen, cols=n)) if chosen else 0
    for v in outer:
        trial = QMatrix.from_rows(chosen + [list(v)], cols=n)
        if rank(trial) > rk:
            chosen.append(list(v))
            ext.append(tuple(v))
            rk += 1
    return ext


def _dedupe_forms(rows):
    """Keep one representative per proportionality class, preserving order."""
    out = []
    seen = set()
    for row in rows:
        key = primitive_normal(row)
        if key not in seen:
            seen.add(key)
            out.append(row)
    return out


def interval_arrangement(arr, lower, upper):
    """The arrangement of the lattice interval between two nested flats.

    lower must be strictly below upper as a subspace (its index set strictly
    larger).  Extend a basis of the lower flat by vectors C_1..C_m of the
    upper one; the hyperplanes are the distinct traces of the forms in
    I_lower minus I_upper on those coordinates.  Returned reduced (all
    multiplicities 1).
    """
    _require_central(arr, "interval_arrangement")
    if not upper.indices < lower.indices:
        raise ArrangementError("interval needs strictly nested flats "
                               "(lower strictly inside upper)")
    ext = _extend_basis([list(v) for v in lower.basis], upper.basis, arr.n)
    m = lower.codim - upper.codim
    assert len(ext) == m, "basis extension does not match codimension step"
    rows = []
    for i in sorted(lower.indices - upper.indices):
        row = tuple(dot(arr.forms[i], v) for v in ext)
        assert any(e != 0 for e in row), "form trace vanished on interval coordinates"
        rows.append(row)
    rows = _dedupe_forms(rows)
    assert rows, "interval arrangement is empty"
    return Arrangement(m, rows)


def restriction_arrangement(arr, flat):
    """Traces of the hyperplanes not containing the flat, inside the flat.

    Reduced (all multiplicities 1); may be empty, in which case the result
    is the empty arrangement in C^{dim flat}.
    """
    _require_central(arr, "restriction_arrangement")
    d = arr.n - flat.codim
    if d == 0:
        raise ArrangementError("cannot restrict to the origin")
    rows = []
    for i in range(arr.r):
        if i in flat.indices:
            continue
        row = tuple(dot(arr.forms[i], v) for v in flat.basis)
        assert any(e != 0 for e in row), "trace vanished off the flat's index set"
        rows.append(row)
    return Arrangement(d, _dedupe_forms(rows))


def is_essential(arr):
    _require_central(arr, "is_essential")
    return rank(arr.normal_matrix()) == arr.n


def _matroid_connected(normals, n):
    """Connectivity of the matroid of the given normal vectors.

    Disconnected iff some bipartition I, J has rank(I) + rank(J) equal to
    the total rank.  A single vector is connected.
    """
    r = len(normals)
    if r == 0:
        raise ArrangementError("connectivity of an empty set of normals")
    if r == 1:
        return True
    total = rank(QMatrix.from_rows(normals, cols=n))
    # bipartitions with normals[0] on the left and a nonempty right side
    for mask in range((1 << (r - 1)) - 1):
        left = [normals[0]] + [normals[i] for i in range(1, r) if mask & (1 << (i - 1))]
        right = [normals[i] for i in range(1, r) if not mask & (1 << (i - 1))]
        if rank(QMatrix.from_rows(left, cols=n)) + rank(QMatrix.from_rows(right, cols=n)) == total:
            return False
    return True


def is_indecomposable(arr):
    """No nontrivial split of the hyperplanes with additive rank."""
    _require_central(arr, "is_indecomposable")
    if arr.r == 0:
        raise ArrangementError("indecomposability of the empty arrangement")
    return _matroid_connected([list(f) for f in arr.forms], arr.n)


def dense_edges(arr, lattice=None):
    """Proper flats whose localized arrangement is indecomposable.

    Equivalently the flats whose index set spans a connected matroid of
    normals.  Every hyperplane is dense; the origin is dense iff the
    arrangement is essential and indecomposable.
    """
    _require_central(arr, "dense_edges")
    if lattice is None:
        lattice = intersection_lattice(arr)
    out = []
    for f in lattice.proper_flats():
        normals = [list(arr.forms[i]) for i in sorted(f.indices)]
        if _matroid_connected(normals, arr.n):
            out.append(f)
    return sorted(out, key=Flat.key)


def localize_at_point(arr, point):
    """The central arrangement of forms vanishing at the point, recentered.

    Keeps normals, multiplicities and the relevant factor columns of the
    hyperplanes through the point; drops the constants.  Raises if no
    hyperplane passes through the point.
    """
    point = tuple(rational(x) for x in point)
    if len(point) != arr.n:
        raise ArrangementError("point length %d, ambient dimension %d" % (len(point), arr.n))
    keep = [i for i in range(arr.r)
            if dot(arr.forms[i], point) + arr.consts[i] == 0]
    if not keep:
        raise ArrangementError("no hyperplane passes through the point")
    forms = [arr.forms[i] for i in keep]
    mults = [arr.mults[i] for i in keep]
    factors = None
    if arr.factors is not None:
        # factor rows with all kept exponents zero are local units; keep the
        # rows anyway so factor variable indices stay aligned with the
        # global factorization
        factors = [tuple(row[i] for i in keep) for row in arr.factors]
    return Arrangement(arr.n, forms, mults, factors=factors,
                       name=(arr.name + "@point") if arr.name else None)
