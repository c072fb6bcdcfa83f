"""Topological zeta functions of hyperplane arrangements.

The local and global (multivariate) topological zeta functions are computed
from the maximal wonderful model of the arrangement, whose boundary strata
are indexed by flags of proper flats.  Each flag of flats W_1 < ... < W_k
(strictly increasing subspaces) contributes the product of the Euler
characteristics of the projectivized complements of the interval
arrangements along the flag divided by the product of the corresponding
(N s + nu) factors; the local zeta sums the flags starting at the minimal
flat, the global one sums all flags weighted by the Euler characteristic of
the open stratum of the first flat, plus the empty flag.

Results are exact rational functions: a list of flag terms plus a
normalized numerator / denominator pair in which every removable linear
factor has been cancelled, so the reported poles are genuine.
"""

from collections import Counter
from fractions import Fraction

from .core import (AffineForm, MultiPoly, div_linear_exact, divides_linear,
                   format_poly, poly_eval, rank, rational)
from .arrangement import (ArrangementError, complement_euler, dense_edges,
                          intersection_lattice, interval_arrangement,
                          localize_at_point, proj_complement_euler,
                          restriction_arrangement)


class ResolutionDatum:
    """Numerical data of the boundary divisor attached to a proper flat.

    N: total multiplicity sum of d_i over the flat's index set.
    nu: discrepancy plus one, equal to the codimension of the flat.
    ord: per-factor multiplicities (sum of factor exponents over the index
        set), present only when the arrangement carries a factorization.
    """

    def __init__(self, flat, N, nu, ord=None):
        self.flat = flat
        self.N = int(N)
        self.nu = int(nu)
        self.ord = tuple(int(e) for e in ord) if ord is not None else None

    def __repr__(self):
        extra = ", ord=%r" % (self.ord,) if self.ord is not None else ""
        return "ResolutionDatum(%r, N=%d, nu=%d%s)" % (self.flat, self.N, self.nu, extra)


def resolution_datum(arr, flat):
    if flat.codim == 0:
        raise ArrangementError("the ambient flat carries no resolution datum")
    N = sum(arr.mults[i] for i in flat.indices)
    ords = None
    if arr.factors is not None:
        ords = tuple(sum(row[i] for i in flat.indices) for row in arr.factors)
    return ResolutionDatum(flat, N, flat.codim, ords)


def candidate_poles(arr, multi=False, lattice=None):
    """Candidate poles read off the dense edges.

    Univariate: the rationals -nu/N, sorted descending.  Multivariate: the
    canonical affine forms of (ord, nu), sorted; requires a factorization.
    """
    if lattice is None:
        lattice = intersection_lattice(arr)
    dense = dense_edges(arr, lattice)
    if multi:
        if arr.factors is None:
            raise ArrangementError("multivariate candidate poles need a factorization")
        forms = {AffineForm.canonical(resolution_datum(arr, f).ord, f.codim)[0]
                 for f in dense}
        return sorted(forms)
    roots = {Fraction(-f.codim, sum(arr.mults[i] for i in f.indices)) for f in dense}
    return sorted(roots, reverse=True)


class Chain:
    """A flag of proper flats, strictly increasing as subspaces.

    Stored smallest subspace first, so index sets strictly decrease along
    the tuple.
    """

    def __init__(self, flats):
        flats = tuple(flats)
        if not flats:
            raise ValueError("a chain needs at least one flat")
        if any(f.codim == 0 for f in flats):
            raise ValueError("the ambient flat does not belong to chains")
        for a, b in zip(flats, flats[1:]):
            if not b.indices < a.indices:
                raise ValueError("chain must strictly increase as subspaces")
        self.flats = flats

    def key(self):
        return (len(self.flats), tuple(f.key() for f in self.flats))

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __eq__(self, other):
        return isinstance(other, Chain) and self.flats == other.flats

    def __hash__(self):
        return hash(self.flats)

    def __repr__(self):
        return "Chain(%s)" % " < ".join(repr(f) for f in self.flats)


def enumerate_chains(lattice, start=None):
    """All chains of proper flats, sorted by (length, flat index sets).

    With start, only the chains whose smallest flat is that one.
    """
    proper = lattice.proper_flats()
    chains = []

    def grow(prefix):
        chains.append(Chain(prefix))
        last = prefix[-1]
        for g in proper:
            if g.indices < last.indices:
                grow(prefix + [g])

    if start is not None:
        seeds = [lattice.flat(start.indices)]
    else:
        seeds = proper
    for f in seeds:
        grow([f])
    return sorted(chains, key=Chain.key)


# ---------------------------------------------------------------------------
# the rational function container

class ZetaFunction:
    """Sum of constant/product-of-affine-forms terms, kept in two shapes.

    terms: the raw flag contributions (coefficient, denominator factors).
    numerator, denominator: the normalized quotient over the least common
        denominator with all removable affine factors cancelled; the pole
        data is read from this shape.  A zero sum has zero numerator and
        empty denominator.
    """

    def __init__(self, nvars, terms):
        self.nvars = int(nvars)
        clean = []
        for coef, dens in terms:
            coef = rational(coef)
            dens = tuple(sorted(dens))
            for f in dens:
                if not isinstance(f, AffineForm) or f.nvars != self.nvars:
                    raise ValueError("denominator factor %r does not match %d variables"
                                     % (f, self.nvars))
            if coef != 0:
                clean.append((coef, dens))
        self.terms = tuple(clean)
        self.numerator, self.denominator = self._normalize()

    def _normalize(self):
        lcd = {}
        for _, dens in self.terms:
            for f, k in Counter(dens).items():
                lcd[f] = max(lcd.get(f, 0), k)
        num = MultiPoly(self.nvars)
        for coef, dens in self.terms:
            part = MultiPoly.constant(self.nvars, coef)
            counts = Counter(dens)
            for f, k in lcd.items():
                for _ in range(k - counts.get(f, 0)):
                    part = part * f.to_poly()
            num = num + part
        if num.is_zero():
            return num, {}
        den = dict(lcd)
        for f in sorted(den):
            while den[f] > 0 and divides_linear(f, num):
                num = div_linear_exact(num, f)
                den[f] -= 1
            if den[f] == 0:
                del den[f]
        if num.total_degree() >= sum(den.values()):
            raise ValueError("zeta function is not a proper rational function")
        return num, den

    def is_zero(self):
        return self.numerator.is_zero()

    def denominator_factors(self):
        """Sorted (form, multiplicity) pairs of the normalized denominator."""
        return sorted(self.denominator.items())

    def evaluate(self, point):
        """Exact value at a point off the polar locus (normalized shape)."""
        val = poly_eval(self.numerator, point)
        for f, k in self.denominator.items():
            fv = f.evaluate(point)
            if fv == 0:
                raise ZeroDivisionError("point lies on the polar locus (%r)" % (f,))
            val /= fv ** k
        return val

    def evaluate_terms(self, point):
        """Exact value summed term by term (raw shape); cross-check route."""
        total = Fraction(0)
        for coef, dens in self.terms:
            val = coef
            for f in dens:
                fv = f.evaluate(point)
                if fv == 0:
                    raise ZeroDivisionError("point lies on a term denominator (%r)" % (f,))
                val /= fv
            total += val
        return total

    def __eq__(self, other):
        return (isinstance(other, ZetaFunction) and self.nvars == other.nvars
                and self.numerator == other.numerator
                and self.denominator == other.denominator)

    __hash__ = None

    def format_str(self):
        num = format_poly(self.numerator)
        if not self.denominator:
            return num
        den = "*".join("(%s)" % f.format_str() + ("^%d" % k if k > 1 else "")
                       for f, k in self.denominator_factors())
        return "(%s) / %s" % (num, den)

    def __repr__(self):
        return "ZetaFunction(%s)" % self.format_str()


class PoleReport:
    """Poles of a normalized zeta function.

    univariate: (root, order) pairs sorted by root descending, or None.
    multivariate: (AffineForm, order) pairs in canonical order, or None.
    """

    def __init__(self, univariate=None, multivariate=None):
        self.univariate = univariate
        self.multivariate = multivariate

    def pole_set(self):
        pairs = self.univariate if self.univariate is not None else self.multivariate
        return {p for p, _ in pairs}

    def __repr__(self):
        if self.univariate is not None:
            return "PoleReport(%s)" % ", ".join("%s (order %d)" % pq for pq in self.univariate)
        return "PoleReport(%s)" % ", ".join("%s (order %d)" % (f.format_str(), k)
                                            for f, k in self.multivariate)


def poles(z):
    """Poles of the normalized form: genuine after cancellation."""
    if z.nvars == 1:
        pairs = sorted(((f.root(), k) for f, k in z.denominator.items()), reverse=True)
        return PoleReport(univariate=pairs)
    return PoleReport(multivariate=z.denominator_factors())


def specialize(z, weights):
    """Substitute s_j = w_j s for positive integer weights w_j.

    Specializing a univariate zeta with weight (1,) is the identity.
    """
    weights = [int(w) for w in weights]
    if len(weights) != z.nvars:
        raise ValueError("expected %d weights, got %d" % (z.nvars, len(weights)))
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    terms = []
    for coef, dens in z.terms:
        new = []
        for f in dens:
            merged = sum(c * w for c, w in zip(f.coeffs, weights))
            form, scale = AffineForm.canonical((merged,), f.const)
            coef = coef / scale
            new.append(form)
        terms.append((coef, new))
    return ZetaFunction(1, terms)


# ---------------------------------------------------------------------------
# the flag formula

def _denominator_form(arr, flat, multi):
    datum = resolution_datum(arr, flat)
    if multi:
        return AffineForm.canonical(datum.ord, datum.nu)
    return AffineForm.canonical((datum.N,), datum.nu)


def _flag_terms(arr, lattice, chains, multi, lead):
    ambient = lattice.ambient
    terms = []
    for chain in chains:
        coef = lead(chain)
        if coef == 0:
            continue
        flats = list(chain.flats) + [ambient]
        for j in range(len(chain.flats)):
            step = interval_arrangement(arr, flats[j], flats[j + 1])
            coef *= proj_complement_euler(step)
            if coef == 0:
                break
        if coef == 0:
            continue
        dens = []
        for f in chain.flats:
            form, scale = _denominator_form(arr, f, multi)
            coef /= scale
            dens.append(form)
        terms.append((coef, dens))
    return terms


def _zeta_nvars(arr, multi):
    if not multi:
        return 1
    if arr.factors is None:
        raise ArrangementError("multivariate zeta needs a factorization")
    return len(arr.factors)


def _local(arr, multi):
    if not arr.central:
        raise ArrangementError("local zeta at the origin needs a central arrangement; "
                               "pass the point explicitly otherwise")
    if arr.r == 0:
        raise ArrangementError("the empty arrangement has no zeta function")
    nvars = _zeta_nvars(arr, multi)
    lattice = intersection_lattice(arr)
    vmin = lattice.minimal_flat()
    chains = enumerate_chains(lattice, start=vmin)
    terms = _flag_terms(arr, lattice, chains, multi, lambda c: Fraction(1))
    return ZetaFunction(nvars, terms)


def _global(arr, multi):
    if not arr.central:
        raise ArrangementError("global zeta needs a central arrangement")
    if arr.r == 0:
        raise ArrangementError("the empty arrangement has no zeta function")
    nvars = _zeta_nvars(arr, multi)
    lattice = intersection_lattice(arr)
    chains = enumerate_chains(lattice)
    stratum_chi = {}

    def lead(chain):
        first = chain.flats[0]
        if first.indices not in stratum_chi:
            if first.codim == arr.n:
                # the open stratum of the origin flat is the origin itself
                stratum_chi[first.indices] = Fraction(1)
            else:
                stratum_chi[first.indices] = complement_euler(restriction_arrangement(arr, first))
        return stratum_chi[first.indices]

    terms = [(complement_euler(arr, lattice), ())]
    terms += _flag_terms(arr, lattice, chains, multi, lead)
    return ZetaFunction(nvars, terms)


def local_zeta(arr, point=None):
    """The local topological zeta function at the origin (or at a point).

    With a point, the arrangement is first localized there; without one the
    arrangement must be central and the origin is used.  Flags start at the
    minimal flat, the intersection of all hyperplanes, which is the origin
    exactly when the arrangement is essential.
    """
    if point is not None:
        arr = localize_at_point(arr, point)
    return _local(arr, multi=False)


def global_zeta(arr):
    """The global topological zeta function of a central arrangement."""
    return _global(arr, multi=False)


def multivariate_local_zeta(arr, point=None):
    """Local zeta in one variable per factor of the factorization."""
    if point is not None:
        arr = localize_at_point(arr, point)
    return _local(arr, multi=True)


def multivariate_global_zeta(arr):
    """Global zeta in one variable per factor of the factorization."""
    return _global(arr, multi=True)


# ---------------------------------------------------------------------------
# independent closed-form oracles

def snc_zeta(arr, multi=False):
    """Zeta of an arrangement with linearly independent normals.

    The identity map already resolves such an arrangement, and the fiber
    over the origin meets only the deepest stratum, so the local zeta is
    the product of 1/(d_i s + 1); multivariate, 1/(sum_j d_ij s_j + 1).
    Computed without any lattice machinery, as an independent check.
    """
    if not arr.central:
        raise ArrangementError("snc oracle needs a central arrangement")
    if arr.r == 0:
        raise ArrangementError("snc oracle needs at least one hyperplane")
    if rank(arr.normal_matrix()) != arr.r:
        raise ArrangementError("snc oracle needs linearly independent normals")
    nvars = _zeta_nvars(arr, multi)
    forms = []
    for i in range(arr.r):
        if multi:
            coeffs = tuple(row[i] for row in arr.factors)
        else:
            coeffs = (arr.mults[i],)
        form, scale = AffineForm.canonical(coeffs, 1)
        assert scale == 1
        forms.append(form)
    return ZetaFunction(nvars, [(Fraction(1), forms)])


def rank2_zeta(arr):
    """Local zeta of at least three distinct lines through the origin of C^2.

    Closed form: (2 - r)/(d s + 2) + sum_i 1/((d s + 2)(d_i s + 1)) with
    d the total degree.  Independent of the flag machinery.
    """
    if not arr.central:
        raise ArrangementError("rank-2 oracle needs a central arrangement")
    if arr.n != 2:
        raise ArrangementError("rank-2 oracle is for arrangements in C^2")
    if arr.r < 3:
        raise ArrangementError("rank-2 oracle needs at least three lines")
    d = arr.degree()
    f0, s0 = AffineForm.canonical((d,), 2)
    terms = [(Fraction(2 - arr.r, s0), (f0,))]
    for i in range(arr.r):
        fi, si = AffineForm.canonical((arr.mults[i],), 1)
        assert si == 1
        terms.append((Fraction(1, s0), (f0, fi)))
    return ZetaFunction(1, terms)
