"""Exact rational linear algebra and polynomial utilities.

Everything in this package computes over Q with arbitrary precision: ranks
and kernels of coefficient matrices, sparse multivariate polynomials for
zeta numerators, and integer affine forms for zeta denominators and wall
levels.  No floating point is used anywhere.

Rational numbers are stdlib fractions (already canonical: reduced, positive
denominator).  Matrices are immutable and row major.  Reduction to row
echelon form picks the first nonzero entry in column order as pivot, so
ranks, kernels and everything derived from them are deterministic.
"""

from fractions import Fraction
from math import gcd

Rational = Fraction


def rational(x):
    """Coerce an int, a 'p/q' string or a Fraction to a Rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError("bad rational literal %r: %s" % (x, e))
    raise TypeError("cannot interpret %r as a rational" % (x,))


def vector(entries):
    return tuple(rational(e) for e in entries)


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("dot of vectors with lengths %d and %d" % (len(u), len(v)))
    return sum((rational(a) * rational(b) for a, b in zip(u, v)), Fraction(0))


class QMatrix:
    """Immutable dense matrix over Q."""

    def __init__(self, rows, cols, entries):
        entries = tuple(rational(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(entries) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [vector(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return cls(len(rows), cols, [e for r in rows for e in r])

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "QMatrix(%d x %d)" % (self.rows, self.cols)


def _rref(m):
    """Row reduce; return (reduced rows as lists, pivot column indices)."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [e / pv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m):
    if not isinstance(m, QMatrix):
        m = QMatrix.from_rows(m)
    return len(_rref(m)[1])


def kernel_basis(m):
    """Basis of the right kernel, one vector per free column.

    Free variables are taken in increasing column order and set to 1, so
    the basis is deterministic.  A 0 x n matrix yields the standard basis.
    """
    if not isinstance(m, QMatrix):
        m = QMatrix.from_rows(m)
    rows, pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def primitive_normal(v):
    """The coprime integer vector spanning the same line, first nonzero
    entry positive.

    Examples: (2, -2, 4) -> (1, -1, 2) and (0, -3/4) -> (0, 1).
    """
    v = vector(v)
    if all(e == 0 for e in v):
        raise ValueError("zero vector has no primitive normal")
    den = 1
    for e in v:
        den = den * e.denominator // gcd(den, e.denominator)
    ints = [int(e * den) for e in v]
    g = 0
    for e in ints:
        g = gcd(g, abs(e))
    ints = [e // g for e in ints]
    if next(e for e in ints if e != 0) < 0:
        ints = [-e for e in ints]
    return tuple(ints)


# ---------------------------------------------------------------------------
# sparse polynomials over Q

class MultiPoly:
    """Sparse polynomial over Q in a fixed number of variables.

    terms maps exponent tuples to nonzero rational coefficients.  All
    arithmetic stays exact; instances are treated as immutable.
    """

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("negative variable count")
        self.nvars = nvars
        clean = {}
        for ex, c in (terms or {}).items():
            c = rational(c)
            if c == 0:
                continue
            ex = tuple(int(e) for e in ex)
            if len(ex) != nvars or any(e < 0 for e in ex):
                raise ValueError("bad exponent tuple %r for %d variables" % (ex, nvars))
            clean[ex] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: rational(c)})

    @classmethod
    def variable(cls, nvars, i):
        ex = [0] * nvars
        ex[i] = 1
        return cls(nvars, {tuple(ex): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Total degree, with the convention 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(ex) for ex in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return 0
        return max(ex[i] for ex in self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for ex, c in other.terms.items():
            out[ex] = out.get(ex, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars, {ex: -c for ex, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            c = rational(other)
            return MultiPoly(self.nvars, {ex: a * c for ex, a in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                ex = tuple(a + b for a, b in zip(e1, e2))
                out[ex] = out.get(ex, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, str)):
            return MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            raise TypeError("cannot combine MultiPoly with %r" % (other,))
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch: %d vs %d" % (self.nvars, other.nvars))
        return other

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms sorted by total degree descending, then exponents descending."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __repr__(self):
        return "MultiPoly(%s)" % format_poly(self)


def poly_eval(p, point):
    """Evaluate a MultiPoly at a tuple of rationals."""
    point = vector(point)
    if len(point) != p.nvars:
        raise ValueError("point length %d, polynomial has %d variables" % (len(point), p.nvars))
    total = Fraction(0)
    for ex, c in p.terms.items():
        v = c
        for x, e in zip(point, ex):
            if e:
                v *= x ** e
        total += v
    return total


def format_poly(p, names=None):
    if names is None:
        names = ["s"] if p.nvars == 1 else ["s%d" % (j + 1) for j in range(p.nvars)]
    if not p.terms:
        return "0"
    parts = []
    for ex, c in p.sorted_terms():
        mono = "*".join(("%s" % names[j] if e == 1 else "%s^%d" % (names[j], e))
                        for j, e in enumerate(ex) if e)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        elif c == -1:
            body = "-" + mono
        else:
            body = "%s*%s" % (c, mono)
        parts.append(body)
    out = parts[0]
    for body in parts[1:]:
        out += " - " + body[1:] if body.startswith("-") else " + " + body
    return out


# ---------------------------------------------------------------------------
# integer affine forms  c . s + k

class AffineForm:
    """Canonical integer affine form  c_1 s_1 + ... + c_k s_k + const.

    Canonical means: the gcd of all coefficients and the constant is 1 and
    the first nonzero coefficient is positive.  Use AffineForm.canonical to
    normalize arbitrary integer data; it also reports the scale factor that
    was divided out, which zeta bookkeeping absorbs into term coefficients.
    The coefficient vector is never all zero (a constant is not a form).
    """

    def __init__(self, coeffs, const):
        coeffs = tuple(int(c) for c in coeffs)
        const = int(const)
        if not coeffs or all(c == 0 for c in coeffs):
            raise ValueError("affine form needs a nonzero coefficient vector")
        g = 0
        for c in coeffs:
            g = gcd(g, abs(c))
        g = gcd(g, abs(const))
        if g != 1:
            raise ValueError("non-canonical affine form (content %d); use AffineForm.canonical" % g)
        if next(c for c in coeffs if c) < 0:
            raise ValueError("non-canonical affine form (sign); use AffineForm.canonical")
        self.coeffs = coeffs
        self.const = const

    @classmethod
    def canonical(cls, coeffs, const):
        """Normalize integer data; return (form, scale) with input = scale * form."""
        coeffs = [int(c) for c in coeffs]
        const = int(const)
        if not coeffs or all(c == 0 for c in coeffs):
            raise ValueError("affine form needs a nonzero coefficient vector")
        g = 0
        for c in coeffs:
            g = gcd(g, abs(c))
        g = gcd(g, abs(const))
        if next(c for c in coeffs if c) < 0:
            g = -g
        return cls([c // g for c in coeffs], const // g), g

    @property
    def nvars(self):
        return len(self.coeffs)

    def evaluate(self, point):
        point = vector(point)
        if len(point) != self.nvars:
            raise ValueError("point length %d, form has %d variables" % (len(point), self.nvars))
        return dot(self.coeffs, point) + self.const

    def root(self):
        """The zero of a univariate form, as a Rational."""
        if self.nvars != 1:
            raise ValueError("root is only defined for univariate forms")
        return Fraction(-self.const, self.coeffs[0])

    def to_poly(self):
        terms = {}
        for j, c in enumerate(self.coeffs):
            if c:
                ex = [0] * self.nvars
                ex[j] = 1
                terms[tuple(ex)] = Fraction(c)
        if self.const:
            terms[(0,) * self.nvars] = Fraction(self.const)
        return MultiPoly(self.nvars, terms)

    def _key(self):
        return (self.coeffs, self.const)

    def __eq__(self, other):
        return isinstance(other, AffineForm) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        return "AffineForm(%s)" % self.format_str()

    def format_str(self, names=None):
        if names is None:
            names = ["s"] if self.nvars == 1 else ["s%d" % (j + 1) for j in range(self.nvars)]
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            body = names[j] if abs(c) == 1 else "%d*%s" % (abs(c), names[j])
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        if self.const:
            parts.append(("+ %d" if self.const > 0 else "- %d") % abs(self.const))
        return " ".join(parts)


def divides_linear(form, p):
    """True iff the affine form divides the polynomial p exactly.

    Decided by substituting the zero locus of the form into p: solve the
    form for its first pivot variable and check the substituted polynomial
    vanishes identically.
    """
    if not isinstance(form, AffineForm):
        raise TypeError("divides_linear expects an AffineForm")
    if p.nvars != form.nvars:
        raise ValueError("variable count mismatch: form %d, poly %d" % (form.nvars, p.nvars))
    m = next(j for j, c in enumerate(form.coeffs) if c)
    cm = form.coeffs[m]
    # s_m = -(const + sum_{j != m} c_j s_j) / c_m  on the zero locus
    sub_terms = {}
    for j, c in enumerate(form.coeffs):
        if j != m and c:
            ex = [0] * p.nvars
            ex[j] = 1
            sub_terms[tuple(ex)] = Fraction(-c, cm)
    if form.const:
        sub_terms[(0,) * p.nvars] = Fraction(-form.const, cm)
    sub = MultiPoly(p.nvars, sub_terms)
    powers = {0: MultiPoly.constant(p.nvars, 1)}
    acc = MultiPoly(p.nvars)
    for ex, c in p.terms.items():
        k = ex[m]
        if k not in powers:
            top = max(powers)
            for e in range(top + 1, k + 1):
                powers[e] = powers[e - 1] * sub
        rest = list(ex)
        rest[m] = 0
        acc = acc + MultiPoly(p.nvars, {tuple(rest): c}) * powers[k]
    return acc.is_zero()


def div_linear_exact(p, form):
    """Divide p by the affine form, raising ValueError on a nonzero remainder.

    Long division in the form's first pivot variable; exact arithmetic makes
    the zero-remainder check a genuine certificate.
    """
    if p.nvars != form.nvars:
        raise ValueError("variable count mismatch: form %d, poly %d" % (form.nvars, p.nvars))
    m = next(j for j, c in enumerate(form.coeffs) if c)
    cm = Fraction(form.coeffs[m])
    fpoly = form.to_poly()
    quot = MultiPoly(p.nvars)
    rem = p
    while rem.degree_in(m) > 0:
        d = rem.degree_in(m)
        lead = {}
        for ex, c in rem.terms.items():
            if ex[m] == d:
                low = list(ex)
                low[m] = d - 1
                lead[tuple(low)] = c / cm
        t = MultiPoly(p.nvars, lead)
        quot = quot + t
        rem = rem - t * fpoly
    if not rem.is_zero():
        raise ValueError("polynomial is not divisible by %r" % (form,))
    return quot
