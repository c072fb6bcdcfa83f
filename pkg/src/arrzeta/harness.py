"""Verification workflows tying the zeta, wall and polytope machinery together.

The checkable content here comes in three layers:

* numerics of the singularity: the log canonical threshold and the log
  canonical polytope cut out by the dense edges;
* adapted vectors: points of the polytope with non-integral partial sums at
  every dense edge except the origin, produced from matroid basis averages
  and certified by an independent validator;
* conjecture checks: whether -n/d is a candidate pole (and whether it is an
  actual pole), and whether every pole of the zeta function lies in a
  supplied set of Bernstein-Sato roots (resp. in a supplied zero locus for
  the multivariate version).

Verdicts carry their evidence: each one records the computed values it
judged, so a report can be audited without rerunning anything.
"""

from fractions import Fraction
from itertools import combinations

from .core import QMatrix, rank, rational, AffineForm
from .arrangement import (ArrangementError, dense_edges, intersection_lattice,
                          is_essential, is_indecomposable)
from .zeta import (candidate_poles, global_zeta, local_zeta,
                   multivariate_global_zeta, multivariate_local_zeta, poles,
                   resolution_datum)


class Verdict:
    """Outcome of a verification: a boolean, witnesses, and raw values."""

    def __init__(self, passed, witnesses, data=None):
        self.passed = bool(passed)
        self.witnesses = tuple(witnesses)
        self.data = dict(data or {})

    def __bool__(self):
        return self.passed

    def __repr__(self):
        head = "PASS" if self.passed else "FAIL"
        return "Verdict(%s: %s)" % (head, "; ".join(self.witnesses))


class BRootSet:
    """A finite set of rational roots of a Bernstein-Sato polynomial."""

    def __init__(self, roots):
        self.roots = frozenset(rational(x) for x in roots)
        if not self.roots:
            raise ValueError("empty root set")

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "roots" not in obj:
            raise ValueError('root data must be an object with a "roots" list')
        return cls(obj["roots"])

    def __contains__(self, x):
        return rational(x) in self.roots

    def sorted_roots(self):
        return sorted(self.roots, reverse=True)

    def __repr__(self):
        return "BRootSet(%s)" % ", ".join(str(x) for x in self.sorted_roots())


class Polytope:
    """Intersection of half spaces  sum_{i in I} beta_i <= bound."""

    def __init__(self, r, inequalities):
        self.r = int(r)
        ineqs = []
        for indices, bound in inequalities:
            indices = frozenset(int(i) for i in indices)
            if any(not 0 <= i < self.r for i in indices):
                raise ValueError("inequality index out of range")
            ineqs.append((indices, int(bound)))
        self.inequalities = tuple(sorted(ineqs, key=lambda q: (len(q[0]), sorted(q[0]))))

    def __repr__(self):
        return "Polytope(%d inequalities in R^%d)" % (len(self.inequalities), self.r)


def lct(arr):
    """Log canonical threshold: the least nu/N over the dense edges."""
    if not arr.central:
        raise ArrangementError("lct needs a central arrangement")
    if arr.r == 0:
        raise ArrangementError("lct of the empty arrangement")
    best = None
    for f in dense_edges(arr):
        datum = resolution_datum(arr, f)
        val = Fraction(datum.nu, datum.N)
        if best is None or val < best:
            best = val
    return best


def log_canonical_polytope(arr):
    """One inequality per dense edge: sum of beta over the index set is at
    most the codimension.  Lives in exponent space, one coordinate per
    hyperplane, unweighted by multiplicities."""
    if not arr.central:
        raise ArrangementError("log canonical polytope needs a central arrangement")
    if arr.r == 0:
        raise ArrangementError("polytope of the empty arrangement")
    return Polytope(arr.r, [(f.indices, f.codim) for f in dense_edges(arr)])


def polytope_member(poly, beta, strict=False):
    """Membership of a positive vector; strict checks the open inequalities."""
    beta = tuple(rational(x) for x in beta)
    if len(beta) != poly.r:
        raise ValueError("vector length %d, polytope lives in R^%d" % (len(beta), poly.r))
    if any(x <= 0 for x in beta):
        raise ValueError("polytope membership is defined for positive vectors")
    for indices, bound in poly.inequalities:
        s = sum((beta[i] for i in indices), Fraction(0))
        if s > bound or (strict and s == bound):
            return False
    return True


def _require_adapted_preconditions(arr, what):
    if not arr.central:
        raise ArrangementError("%s needs a central arrangement" % what)
    if arr.r == 0:
        raise ArrangementError("%s needs at least one hyperplane" % what)
    if not is_essential(arr):
        raise ArrangementError("%s needs an essential arrangement" % what)
    if not is_indecomposable(arr):
        raise ArrangementError("%s needs an indecomposable arrangement" % what)


def validate_adapted(arr, beta):
    """Certify a vector as adapted to the arrangement.

    Conditions: every component positive; the polytope inequality at every
    dense edge; a non-integral partial sum at every dense edge other than
    the origin; total sum exactly the ambient dimension.  The verdict lists
    one witness per violation.
    """
    _require_adapted_preconditions(arr, "validate_adapted")
    beta = tuple(rational(x) for x in beta)
    if len(beta) != arr.r:
        raise ArrangementError("expected %d components, got %d" % (arr.r, len(beta)))
    bad = []
    for i, x in enumerate(beta):
        if x <= 0:
            bad.append("component %d is not positive (%s)" % (i + 1, x))
    dense = dense_edges(arr)
    full = frozenset(range(arr.r))
    for f in dense:
        s = sum((beta[i] for i in f.indices), Fraction(0))
        label = ("hyperplane %d" % (min(f.indices) + 1,) if len(f.indices) == 1
                 else "edge {%s}" % ",".join(str(i + 1) for i in sorted(f.indices)))
        if s > f.codim:
            bad.append("polytope violated at dense %s (sum %s > %d)" % (label, s, f.codim))
        if f.indices != full and s.denominator == 1:
            bad.append("integral sum at dense %s (sum %s)" % (label, s))
    total = sum(beta, Fraction(0))
    if total != arr.n:
        bad.append("total sum %s differs from the ambient dimension %d" % (total, arr.n))
    data = {"beta": beta, "total": total,
            "dense_sums": [(tuple(sorted(f.indices)),
                            sum((beta[i] for i in f.indices), Fraction(0)))
                           for f in dense]}
    if bad:
        return Verdict(False, bad, data)
    return Verdict(True, ["vector is adapted"], data)


def _matroid_bases(arr):
    out = []
    for combo in combinations(range(arr.r), arr.n):
        if rank(QMatrix.from_rows([arr.forms[i] for i in combo], cols=arr.n)) == arr.n:
            out.append(combo)
    return out


def adapted_vector(arr):
    """Produce an adapted vector from the average of basis indicators.

    The uniform average of the indicator vectors of the matroid bases sums
    to n and satisfies the polytope strictly away from the origin edge; if
    some partial sums land on integers, a perturbation along differences of
    basis indicators (weights mu^k, then step eps, both halved through
    deterministic schedules) clears them.  The result is re-certified by
    validate_adapted before being returned.
    """
    _require_adapted_preconditions(arr, "adapted_vector")
    bases = _matroid_bases(arr)
    assert bases, "essential arrangement has a basis of normals"
    count = len(bases)
    beta = tuple(Fraction(sum(1 for b in bases if i in b), count) for i in range(arr.r))
    verdict = validate_adapted(arr, beta)
    if verdict.passed:
        return beta
    full = frozenset(range(arr.r))
    violating = []
    for f in dense_edges(arr):
        if f.indices == full:
            continue
        s = sum((beta[i] for i in f.indices), Fraction(0))
        if s.denominator == 1:
            violating.append(f)
    assert violating, "uniform basis average failed for a reason other than integrality"
    directions = []
    for f in violating:
        sizes = {b: len(f.indices.intersection(b)) for b in bases}
        hi = max(sizes.values())
        lo = min(sizes.values())
        assert lo < hi, "dense edge meets every basis equally; arrangement not indecomposable"
        b_hi = next(b for b in bases if sizes[b] == hi)
        b_lo = next(b for b in bases if sizes[b] == lo)
        v = [0] * arr.r
        for i in b_lo:
            v[i] += 1
        for i in b_hi:
            v[i] -= 1
        directions.append(v)
    mu = Fraction(1, 2)
    for _ in range(200):
        v = [sum(mu ** (k + 1) * d[i] for k, d in enumerate(directions))
             for i in range(arr.r)]
        if all(sum(v[i] for i in f.indices) != 0 for f in violating):
            break
        mu /= 2
    else:
        raise AssertionError("no perturbation direction found")
    eps = Fraction(1, 2)
    for _ in range(200):
        cand = tuple(b + eps * x for b, x in zip(beta, v))
        if validate_adapted(arr, cand).passed:
            return cand
        eps /= 2
    raise AssertionError("no adapted vector found along the perturbation direction")


# ---------------------------------------------------------------------------
# conjecture checks

def _require_nd_preconditions(arr, what):
    if not arr.central:
        raise ArrangementError("%s needs a central arrangement" % what)
    if arr.r == 0:
        raise ArrangementError("%s needs at least one hyperplane" % what)
    if not is_essential(arr):
        raise ArrangementError("%s needs an essential arrangement" % what)
    if not is_indecomposable(arr):
        raise ArrangementError("%s needs an indecomposable arrangement" % what)
    if arr.n < 2 and arr.r <= arr.n:
        raise ArrangementError("%s needs n >= 2 or more hyperplanes than n" % what)


def nd_check(arr):
    """Check that -n/d is a candidate pole, and report whether it is a pole.

    n is the ambient dimension, d the total degree.  The candidate property
    is the checkable half (the origin is a dense edge here, with datum
    (d, n)); whether the candidate survives as an actual pole of the local
    zeta function is reported but not judged, since it can honestly fail.
    """
    _require_nd_preconditions(arr, "nd_check")
    n, d = arr.n, arr.degree()
    ratio = Fraction(-n, d)
    cands = candidate_poles(arr)
    z = local_zeta(arr)
    pole_pairs = poles(z).univariate
    pole_set = {p for p, _ in pole_pairs}
    is_cand = ratio in cands
    is_pole = ratio in pole_set
    witnesses = ["-n/d = %s with n = %d, d = %d" % (ratio, n, d),
                 "candidate pole: %s" % ("yes" if is_cand else "NO"),
                 "pole of the local zeta function: %s" % ("yes" if is_pole else "no")]
    data = {"n": n, "d": d, "ratio": ratio, "candidates": list(cands),
            "poles": list(pole_pairs), "is_candidate": is_cand, "is_pole": is_pole,
            "zeta": z}
    return Verdict(is_cand, witnesses, data)


def smc_verify(arr, roots, use_global=False):
    """Check that every pole of the (local) zeta lies in the supplied roots.

    One-directional: a PASS is consistency of the supplied Bernstein-Sato
    root data with the strong monodromy conjecture, a FAIL pinpoints the
    offending poles.
    """
    if not isinstance(roots, BRootSet):
        roots = BRootSet(roots)
    if not arr.central:
        raise ArrangementError("smc_verify needs a central arrangement")
    if arr.r == 0:
        raise ArrangementError("smc_verify needs at least one hyperplane")
    z = global_zeta(arr) if use_global else local_zeta(arr)
    pole_pairs = poles(z).univariate
    offenders = [p for p, _ in pole_pairs if p not in roots]
    witnesses = []
    if offenders:
        for p in offenders:
            witnesses.append("pole %s is not among the supplied roots" % (p,))
    else:
        witnesses.append("all %d poles lie in the supplied root set" % len(pole_pairs))
    data = {"poles": list(pole_pairs), "roots": roots.sorted_roots(),
            "offenders": offenders, "zeta": z}
    return Verdict(not offenders, witnesses, data)


def multi_nd_check(arr):
    """Multivariate version of nd_check for a reduced factored arrangement.

    The distinguished hyperplane sum_j d'_j s_j + n, with d'_j the degree
    of the j-th factor, must appear among the multivariate candidate poles;
    membership in the polar locus of the multivariate local zeta is
    reported alongside.
    """
    _require_nd_preconditions(arr, "multi_nd_check")
    if arr.factors is None:
        raise ArrangementError("multi_nd_check needs a factorization")
    if any(m != 1 for m in arr.mults):
        raise ArrangementError("multi_nd_check expects a reduced arrangement")
    degrees = arr.factor_degrees()
    hyper, _ = AffineForm.canonical(degrees, arr.n)
    cands = candidate_poles(arr, multi=True)
    z = multivariate_local_zeta(arr)
    polar = [f for f, _ in poles(z).multivariate]
    is_cand = hyper in cands
    in_polar = hyper in polar
    witnesses = ["distinguished hyperplane %s" % hyper.format_str(),
                 "candidate pole: %s" % ("yes" if is_cand else "NO"),
                 "component of the polar locus: %s" % ("yes" if in_polar else "no")]
    data = {"hyperplane": hyper, "candidates": list(cands), "polar": polar,
            "is_candidate": is_cand, "in_polar": in_polar, "zeta": z}
    return Verdict(is_cand, witnesses, data)


def multi_smc_verify(arr, zero_locus):
    """Check the polar locus of the multivariate global zeta against a
    supplied zero locus (a list of affine forms, canonicalized on input)."""
    if not arr.central:
        raise ArrangementError("multi_smc_verify needs a central arrangement")
    if arr.r == 0:
        raise ArrangementError("multi_smc_verify needs at least one hyperplane")
    if arr.factors is None:
        raise ArrangementError("multi_smc_verify needs a factorization")
    allowed = set()
    for item in zero_locus:
        if isinstance(item, AffineForm):
            allowed.add(item)
        else:
            item = [int(e) for e in item]
            allowed.add(AffineForm.canonical(item[:-1], item[-1])[0])
    z = multivariate_global_zeta(arr)
    polar = [f for f, _ in poles(z).multivariate]
    offenders = [f for f in polar if f not in allowed]
    witnesses = []
    if offenders:
        for f in offenders:
            witnesses.append("polar component %s is not in the zero locus" % f.format_str())
    else:
        witnesses.append("polar locus (%d components) lies in the zero locus" % len(polar))
    data = {"polar": polar, "zero_locus": sorted(allowed), "offenders": offenders,
            "zeta": z}
    return Verdict(not offenders, witnesses, data)
