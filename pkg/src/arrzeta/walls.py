"""Wall-and-chamber geometry on the parameter space of the arrangement.

A wall family is a primitive nonnegative integer normal L together with a
finite set of fractional offsets in [0, 1); its walls are the affine
hyperplanes L(alpha) = offset + integer.  Chambers are the connected
components of the complement of all walls, with the closed-below, open-above
convention: the wall L(alpha) = gamma separates a from b exactly when
L(a) <= gamma < L(b) (or with a and b swapped).

Everything is exact: separating walls are enumerated by integer interval
arithmetic on Fractions, and chamber paths are made generic by a
deterministic perturbation with halving step sizes.
"""

from fractions import Fraction
from itertools import combinations
from math import ceil, floor, gcd

from .core import primitive_normal, rational, vector
from .arrangement import dense_edges


class WallFamily:
    """A primitive nonnegative normal with its offset set."""

    def __init__(self, normal, offsets):
        normal = tuple(int(e) for e in normal)
        if not normal or all(e == 0 for e in normal):
            raise ValueError("wall family needs a nonzero normal")
        if any(e < 0 for e in normal):
            raise ValueError("wall normals are nonnegative")
        g = 0
        for e in normal:
            g = gcd(g, e)
        if g != 1:
            raise ValueError("wall normal must be primitive (content %d)" % g)
        offsets = sorted({rational(o) for o in offsets})
        if not offsets:
            raise ValueError("wall family needs at least one offset")
        if any(not 0 <= o < 1 for o in offsets):
            raise ValueError("offsets live in [0, 1)")
        self.normal = normal
        self.offsets = tuple(offsets)

    @property
    def dim(self):
        return len(self.normal)

    def content(self):
        """lcm of the offset denominators (1 for integer walls)."""
        c = 1
        for o in self.offsets:
            c = c * o.denominator // gcd(c, o.denominator)
        return c

    def evaluate(self, point):
        point = vector(point)
        if len(point) != self.dim:
            raise ValueError("point length %d, family dimension %d" % (len(point), self.dim))
        return sum((Fraction(e) * x for e, x in zip(self.normal, point)), Fraction(0))

    def hits(self, value):
        """True iff some wall of the family passes through this level."""
        return value - floor(value) in self.offsets

    def __eq__(self, other):
        return (isinstance(other, WallFamily) and self.normal == other.normal
                and self.offsets == other.offsets)

    def __hash__(self):
        return hash((self.normal, self.offsets))

    def __repr__(self):
        return "WallFamily(%r, {%s})" % (self.normal, ", ".join(str(o) for o in self.offsets))


class WallSet:
    """A finite set of wall families with distinct normals, sorted."""

    def __init__(self, families):
        families = sorted(families, key=lambda f: f.normal)
        seen = set()
        for f in families:
            if f.normal in seen:
                raise ValueError("duplicate wall normal %r; merge the offsets" % (f.normal,))
            seen.add(f.normal)
        if families:
            dims = {f.dim for f in families}
            if len(dims) != 1:
                raise ValueError("wall families of mixed dimension")
        self.families = tuple(families)

    @property
    def dim(self):
        if not self.families:
            raise ValueError("empty wall set has no dimension")
        return self.families[0].dim

    def __iter__(self):
        return iter(self.families)

    def __len__(self):
        return len(self.families)

    def __eq__(self, other):
        return isinstance(other, WallSet) and self.families == other.families

    def __repr__(self):
        return "WallSet(%d families)" % len(self.families)


class WallInstance:
    """One wall: a family normal with a concrete level gamma."""

    def __init__(self, normal, gamma):
        self.normal = tuple(int(e) for e in normal)
        self.gamma = rational(gamma)

    def key(self):
        return (self.normal, self.gamma)

    def __eq__(self, other):
        return isinstance(other, WallInstance) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return "Wall(%s = %s)" % (self.normal, self.gamma)


def walls_from_resolution(data):
    """Wall families generated by order tuples of a resolution.

    Each datum (a ResolutionDatum with factor orders, or a plain tuple of
    nonnegative integers) of content c contributes its primitive normal
    with offsets 0, 1/c, ..., (c-1)/c; families with equal normals merge.
    """
    fams = {}
    for item in data:
        if hasattr(item, "ord"):
            if item.ord is None:
                raise ValueError("resolution datum %r has no factor orders" % (item,))
            raw = item.ord
        else:
            raw = tuple(int(e) for e in item)
        if any(e < 0 for e in raw):
            raise ValueError("order tuples are nonnegative")
        if all(e == 0 for e in raw):
            raise ValueError("zero order tuple generates no wall")
        c = 0
        for e in raw:
            c = gcd(c, e)
        normal = tuple(e // c for e in raw)
        offsets = {Fraction(k, c) for k in range(c)}
        fams.setdefault(normal, set()).update(offsets)
    return WallSet(WallFamily(nrm, offs) for nrm, offs in fams.items())


def nd_wall_set(arr):
    """The wall set cut out by the dense edges, via 0/1 indicator tuples."""
    data = []
    for f in dense_edges(arr):
        data.append(tuple(1 if i in f.indices else 0 for i in range(arr.r)))
    return walls_from_resolution(data)


def localized_walls(walls, point):
    """The wall instances passing through a point, sorted."""
    point = vector(point)
    out = []
    for fam in walls:
        v = fam.evaluate(point)
        if fam.hits(v):
            out.append(WallInstance(fam.normal, v))
    return sorted(out)


def separating_walls(walls, a, b):
    """All wall instances separating a from b, closed below and open above.

    The wall at level gamma separates the pair iff min(L(a), L(b)) <= gamma
    < max(L(a), L(b)).  Sorted by (normal, level); empty iff same chamber.
    """
    a = vector(a)
    b = vector(b)
    out = []
    for fam in walls:
        va, vb = fam.evaluate(a), fam.evaluate(b)
        lo, hi = min(va, vb), max(va, vb)
        if lo == hi:
            continue
        for o in fam.offsets:
            for k in range(ceil(lo - o), ceil(hi - o)):
                out.append(WallInstance(fam.normal, o + k))
    return sorted(out)


def same_chamber(walls, a, b):
    return not separating_walls(walls, a, b)


def _perturbation_base(walls):
    # q must exceed every family content and every normal entry: distinct
    # normals then take distinct values on (1, 1/q, 1/q^2, ...), by base-q
    # digit uniqueness, which is what makes crossing times separable
    bound = 1
    for fam in walls:
        bound = max(bound, fam.content(), max(fam.normal))
    q = bound + 1
    while any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
        q += 1
    return q


def chamber_path(walls, a, b):
    """The walls crossed by a generic path from a's chamber to b's chamber,
    in crossing order.

    Both endpoints are nudged down by eps * (1, 1/q, 1/q^2, ...) without
    leaving their chambers, with eps halved until the straight segment
    between the nudged points crosses one wall at a time; the multiset of
    crossed walls always equals separating_walls(a, b).
    """
    a = vector(a)
    b = vector(b)
    if a == b:
        raise ValueError("endpoints coincide; no path to build")
    if len(walls) == 0:
        return []
    if len(a) != walls.dim or len(b) != walls.dim:
        raise ValueError("points do not match the wall dimension")
    q = _perturbation_base(walls)
    delta = tuple(Fraction(1, q ** j) for j in range(len(a)))
    eps = Fraction(1, 2)
    for _ in range(64):
        a1 = tuple(x - eps * d for x, d in zip(a, delta))
        b1 = tuple(x - eps * d for x, d in zip(b, delta))
        if separating_walls(walls, a, a1) or separating_walls(walls, b, b1):
            eps /= 2
            continue
        crossings = []
        generic = True
        for fam in walls:
            va, vb = fam.evaluate(a1), fam.evaluate(b1)
            if va == vb:
                if fam.hits(va):
                    generic = False  # segment runs inside a wall
                    break
                continue
            lo, hi = min(va, vb), max(va, vb)
            for o in fam.offsets:
                for k in range(ceil(lo - o), ceil(hi - o)):
                    gamma = o + k
                    t = (gamma - va) / (vb - va)
                    crossings.append((t, WallInstance(fam.normal, gamma)))
        if not generic:
            eps /= 2
            continue
        times = [t for t, _ in crossings]
        if len(set(times)) != len(times):
            eps /= 2
            continue
        assert all(0 < t < 1 for t in times), "crossing fell on a nudged endpoint"
        return [w for _, w in sorted(crossings, key=lambda c: (c[0], c[1].key()))]
    raise ValueError("chamber_path: no generic perturbation found after 64 halvings")


def extend_restricted_walls(walls):
    """Close a wall set under coordinate restrictions.

    For every family (L, offsets) and every nonempty support subset I, the
    restricted family has normal L^I / content and offsets (o + j)/c mod 1
    for old offsets o and 0 <= j < c, where c is the content of L^I.  The
    input families are reproduced by I = full support.
    """
    fams = {}
    for fam in walls:
        support = [i for i, e in enumerate(fam.normal) if e]
        for size in range(1, len(support) + 1):
            for sub in combinations(support, size):
                masked = tuple(e if i in sub else 0 for i, e in enumerate(fam.normal))
                c = 0
                for e in masked:
                    c = gcd(c, e)
                normal = tuple(e // c for e in masked)
                offs = set()
                for o in fam.offsets:
                    for j in range(c):
                        v = (o + j) / c
                        offs.add(v - floor(v))
                fams.setdefault(normal, set()).update(offs)
    return WallSet(WallFamily(nrm, offs) for nrm, offs in fams.items())
