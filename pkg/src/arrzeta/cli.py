"""Command line front end.

Subcommands: analyze, zeta, walls, adapted, nd, smc, multi-nd, multi-smc,
vmono-demo.  Arrangements come from a JSON file or from a built-in example
(--example veys | threelines | boolean2).  All rationals are printed as
p/q strings, hyperplane indices are 1-based, and --json output is
byte-stable across runs.

Exit codes: 0 for success (and verification PASS), 1 for a verification
FAIL, 2 for bad input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .arrangement import (Arrangement, ArrangementError, char_poly,
                          complement_euler, dense_edges, intersection_lattice,
                          is_essential, is_indecomposable, proj_complement_euler)
from .core import AffineForm, format_poly, rational
from .examples import EXAMPLES, veys_broots
from .harness import (BRootSet, adapted_vector, lct, log_canonical_polytope,
                      multi_nd_check, multi_smc_verify, nd_check, smc_verify,
                      validate_adapted)
from .vmono import (DiagClass, MonomialConnectionSpec, diag_annihilator,
                    diag_s_eigenvalue, diag_vres_member, diag_walls,
                    ncv_generator, ncv_walls)
from .walls import (extend_restricted_walls, localized_walls, nd_wall_set,
                    separating_walls)
from .zeta import (ZetaFunction, candidate_poles, global_zeta, local_zeta,
                   multivariate_global_zeta, multivariate_local_zeta, poles,
                   resolution_datum, specialize)


def frac_str(x):
    return str(Fraction(x))


def parse_point(text):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty point")
    return tuple(rational(p) for p in parts)


def load_arrangement(args):
    if getattr(args, "example", None):
        if args.example not in EXAMPLES:
            raise ValueError("unknown example %r; choose from %s"
                             % (args.example, ", ".join(sorted(EXAMPLES))))
        return EXAMPLES[args.example]()
    if not getattr(args, "file", None):
        raise ValueError("provide an arrangement file or --example")
    with open(args.file) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError("bad JSON in %s: %s" % (args.file, e))
    if not isinstance(obj, dict) or "n" not in obj or "forms" not in obj:
        raise ValueError('arrangement file needs at least "n" and "forms"')
    return Arrangement(obj["n"], obj["forms"], mults=obj.get("mults"),
                       factors=obj.get("factors"), name=obj.get("name"))


def emit(obj, as_json):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for line in obj["lines"]:
            print(line)


def form_json(f):
    return {"coeffs": list(f.coeffs), "const": f.const}


def form_from_json(obj):
    return AffineForm(obj["coeffs"], obj["const"])


def zeta_json(z):
    rep = poles(z)
    if z.nvars == 1:
        pole_part = [[frac_str(p), k] for p, k in rep.univariate]
    else:
        pole_part = [[form_json(f), k] for f, k in rep.multivariate]
    return {
        "variables": z.nvars,
        "terms": [{"coef": frac_str(c),
                   "denominator": [form_json(f) for f in dens]}
                  for c, dens in z.terms],
        "numerator": [[list(ex), frac_str(c)]
                      for ex, c in sorted(z.numerator.terms.items())],
        "denominator": [[form_json(f), k] for f, k in z.denominator_factors()],
        "poles": pole_part,
    }


def zeta_from_json(obj):
    """Rebuild a ZetaFunction from its serialized raw terms."""
    terms = [(rational(t["coef"]), [form_from_json(f) for f in t["denominator"]])
             for t in obj["terms"]]
    return ZetaFunction(obj["variables"], terms)


def family_json(fam):
    return {"normal": list(fam.normal), "offsets": [frac_str(o) for o in fam.offsets]}


def _indices_label(indices):
    return "{%s}" % ",".join(str(i + 1) for i in sorted(indices))


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args):
    arr = load_arrangement(args)
    lattice = intersection_lattice(arr)
    dense = dense_edges(arr, lattice)
    data = {
        "name": arr.name,
        "n": arr.n,
        "r": arr.r,
        "mults": list(arr.mults),
        "degree": arr.degree(),
        "central": arr.central,
        "essential": is_essential(arr),
        "indecomposable": is_indecomposable(arr),
        "char_poly": format_poly(char_poly(arr, lattice), names=["t"]),
        "complement_euler": frac_str(complement_euler(arr, lattice)),
        "proj_complement_euler": frac_str(proj_complement_euler(arr, lattice)),
        "flats": len(lattice),
        "dense_edges": [],
        "lct": frac_str(lct(arr)),
        "candidate_poles": [frac_str(p) for p in candidate_poles(arr, lattice=lattice)],
    }
    for f in dense:
        datum = resolution_datum(arr, f)
        entry = {"indices": sorted(i + 1 for i in f.indices), "codim": f.codim,
                 "N": datum.N, "nu": datum.nu}
        if datum.ord is not None:
            entry["ord"] = list(datum.ord)
        data["dense_edges"].append(entry)
    lines = [
        "arrangement %s: %d hyperplanes in C^%d, degree %d"
        % (arr.name or "(unnamed)", arr.r, arr.n, arr.degree()),
        "central: %s  essential: %s  indecomposable: %s"
        % (data["central"], data["essential"], data["indecomposable"]),
        "characteristic polynomial: %s" % data["char_poly"],
        "complement Euler characteristic: %s (projectivized: %s)"
        % (data["complement_euler"], data["proj_complement_euler"]),
        "flats: %d" % data["flats"],
        "dense edges:",
    ]
    for entry in data["dense_edges"]:
        extra = "  ord=%s" % (tuple(entry["ord"]),) if "ord" in entry else ""
        lines.append("  %s  codim %d  N=%d nu=%d%s"
                     % ("{%s}" % ",".join(str(i) for i in entry["indices"]),
                        entry["codim"], entry["N"], entry["nu"], extra))
    lines.append("log canonical threshold: %s" % data["lct"])
    lines.append("candidate poles: %s" % ", ".join(data["candidate_poles"]))
    data["lines"] = lines
    emit(data, args.json)
    return 0


def cmd_zeta(args):
    arr = load_arrangement(args)
    point = parse_point(args.at) if args.at else None
    if args.multi:
        if args.use_global:
            z = multivariate_global_zeta(arr)
        else:
            z = multivariate_local_zeta(arr, point)
    elif args.use_global:
        z = global_zeta(arr)
    else:
        z = local_zeta(arr, point)
    data = zeta_json(z)
    which = "%s %s zeta" % ("multivariate" if args.multi else "univariate",
                            "global" if args.use_global else "local")
    lines = ["%s of %s:" % (which, arr.name or "arrangement"),
             "  %s" % z.format_str(),
             "terms in the flag sum: %d" % len(z.terms)]
    if z.nvars == 1:
        lines.append("poles: %s" % (", ".join("%s (order %d)" % (frac_str(p), k)
                                              for p, k in poles(z).univariate) or "none"))
    else:
        lines.append("polar locus: %s" % ("; ".join("%s (order %d)" % (f.format_str(), k)
                                                    for f, k in poles(z).multivariate) or "empty"))
    data["lines"] = lines
    emit(data, args.json)
    return 0


def cmd_walls(args):
    arr = load_arrangement(args)
    ws = nd_wall_set(arr)
    data = {"families": [family_json(f) for f in ws]}
    lines = ["dense edge wall set of %s: %d families"
             % (arr.name or "arrangement", len(ws))]
    for fam in ws:
        lines.append("  normal %s  offsets %s"
                     % (list(fam.normal), ", ".join(frac_str(o) for o in fam.offsets)))
    if args.localize:
        p = parse_point(args.localize)
        hits = localized_walls(ws, p)
        data["localized"] = [{"normal": list(w.normal), "level": frac_str(w.gamma)}
                             for w in hits]
        lines.append("walls through %s: %d" % (args.localize, len(hits)))
        for w in hits:
            lines.append("  %s = %s" % (list(w.normal), frac_str(w.gamma)))
    if args.separate:
        a = parse_point(args.separate[0])
        b = parse_point(args.separate[1])
        sep = separating_walls(ws, a, b)
        data["separating"] = [{"normal": list(w.normal), "level": frac_str(w.gamma)}
                              for w in sep]
        lines.append("walls separating %s from %s: %d"
                     % (args.separate[0], args.separate[1], len(sep)))
        for w in sep:
            lines.append("  %s = %s" % (list(w.normal), frac_str(w.gamma)))
    data["lines"] = lines
    emit(data, args.json)
    return 0


def cmd_adapted(args):
    arr = load_arrangement(args)
    beta = adapted_vector(arr)
    verdict = validate_adapted(arr, beta)
    data = {"beta": [frac_str(x) for x in beta], "valid": verdict.passed,
            "witnesses": list(verdict.witnesses)}
    data["lines"] = ["adapted vector: %s" % ",".join(frac_str(x) for x in beta),
                     "validation: %s" % ("PASS" if verdict.passed else "FAIL")]
    emit(data, args.json)
    return 0 if verdict.passed else 1


def _verdict_exit(verdict, data, args, head):
    lines = [head] + ["  %s" % w for w in verdict.witnesses]
    lines.append("PASS" if verdict.passed else "FAIL")
    data["lines"] = lines
    data["passed"] = verdict.passed
    data["witnesses"] = list(verdict.witnesses)
    emit(data, args.json)
    return 0 if verdict.passed else 1


def cmd_nd(args):
    arr = load_arrangement(args)
    verdict = nd_check(arr)
    d = verdict.data
    data = {"n": d["n"], "d": d["d"], "ratio": frac_str(d["ratio"]),
            "candidates": [frac_str(p) for p in d["candidates"]],
            "poles": [[frac_str(p), k] for p, k in d["poles"]],
            "is_candidate": d["is_candidate"], "is_pole": d["is_pole"]}
    return _verdict_exit(verdict, data, args,
                         "n/d check for %s:" % (arr.name or "arrangement"))


def cmd_smc(args):
    arr = load_arrangement(args)
    if args.broots:
        with open(args.broots) as fh:
            roots = BRootSet.from_json(json.load(fh))
    elif getattr(args, "example", None) == "veys":
        roots = veys_broots()
    else:
        raise ValueError("supply --broots FILE (built-in roots exist only for "
                         "--example veys)")
    verdict = smc_verify(arr, roots)
    d = verdict.data
    data = {"poles": [[frac_str(p), k] for p, k in d["poles"]],
            "roots": [frac_str(x) for x in d["roots"]],
            "offenders": [frac_str(x) for x in d["offenders"]]}
    return _verdict_exit(verdict, data, args,
                         "strong monodromy check for %s:" % (arr.name or "arrangement"))


def cmd_multi_nd(args):
    arr = load_arrangement(args)
    verdict = multi_nd_check(arr)
    d = verdict.data
    data = {"hyperplane": form_json(d["hyperplane"]),
            "candidates": [form_json(f) for f in d["candidates"]],
            "polar": [form_json(f) for f in d["polar"]],
            "is_candidate": d["is_candidate"], "in_polar": d["in_polar"]}
    return _verdict_exit(verdict, data, args,
                         "multivariate n/d check for %s:" % (arr.name or "arrangement"))


def cmd_multi_smc(args):
    arr = load_arrangement(args)
    if not args.zero_locus:
        raise ValueError("supply --zero-locus FILE")
    with open(args.zero_locus) as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict) or "zero_locus" not in obj:
        raise ValueError('zero locus file needs a "zero_locus" list')
    verdict = multi_smc_verify(arr, obj["zero_locus"])
    d = verdict.data
    data = {"polar": [form_json(f) for f in d["polar"]],
            "zero_locus": [form_json(f) for f in d["zero_locus"]],
            "offenders": [form_json(f) for f in d["offenders"]]}
    return _verdict_exit(verdict, data, args,
                         "multivariate strong monodromy check for %s:"
                         % (arr.name or "arrangement"))


def cmd_vmono_demo(args):
    lines = []
    spec = MonomialConnectionSpec([Fraction(0), Fraction(-3, 4)])
    lines.append("monomial connection on the 2-torus, residues (0, -3/4)")
    for alpha in [(0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, 1),
                  (Fraction(7, 4), Fraction(1, 4))]:
        g = ncv_generator(spec, alpha)
        lines.append("  generator exponents at (%s, %s): (%d, %d)"
                     % (frac_str(alpha[0]), frac_str(alpha[1]), g[0], g[1]))
    for fam in ncv_walls(spec):
        lines.append("  wall family: normal %s offsets %s"
                     % (list(fam.normal), [frac_str(o) for o in fam.offsets]))
    lines.append("diagonal direct image of the line in the plane")
    lines.append("  classes t1^m t2^n / (t1 - t2)^k, filtration level m + n - k")
    samples = [((0, 0, 1), (Fraction(1, 2), Fraction(1, 2))),
               ((0, 0, 1), (1, 1)),
               ((0, 0, 2), (0, 0)),
               ((1, 0, 1), (1, 1)),
               ((1, 0, 1), (Fraction(3, 2), Fraction(3, 2)))]
    for (m, n, k), alpha in samples:
        cls = DiagClass(m, n, k)
        member = diag_vres_member(cls, alpha)
        lines.append("  (m,n,k)=(%d,%d,%d) at alpha=(%s, %s): %s, s-eigenvalue %d"
                     % (m, n, k, frac_str(alpha[0]), frac_str(alpha[1]),
                        "member" if member else "not a member",
                        diag_s_eigenvalue(cls)))
    ann = diag_annihilator((Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 2), Fraction(3, 2)))
    lines.append("  annihilator levels for V(1/2,1/2) over V(3/2,3/2): %s" % (ann,))
    base = diag_walls()
    ext = extend_restricted_walls(base)
    lines.append("  restricted wall normals: %s" % [list(f.normal) for f in base])
    lines.append("  extended wall normals: %s" % [list(f.normal) for f in ext])
    data = {"lines": lines}
    emit(data, args.json)
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_input(sub, needs_file=True):
    if needs_file:
        sub.add_argument("file", nargs="?", help="arrangement JSON file")
        sub.add_argument("--example", choices=sorted(EXAMPLES),
                         help="use a built-in arrangement instead of a file")
    sub.add_argument("--json", action="store_true", help="machine readable output")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="arrzeta",
        description="Exact topological zeta functions, wall geometry and "
                    "monodromy checks for hyperplane arrangements.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="lattice, dense edges, lct, candidates")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("zeta", help="local or global (multivariate) zeta function")
    _add_input(p)
    p.add_argument("--global", dest="use_global", action="store_true",
                   help="global instead of local")
    p.add_argument("--multi", action="store_true",
                   help="one variable per factor (needs factorization data)")
    p.add_argument("--at", metavar="POINT",
                   help="localize at a point, e.g. 0,0,1 (local zeta only)")
    p.set_defaults(func=cmd_zeta)

    p = subs.add_parser("walls", help="dense edge wall families")
    _add_input(p)
    p.add_argument("--localize", metavar="POINT", help="walls through a point")
    p.add_argument("--separate", nargs=2, metavar=("A", "B"),
                   help="walls separating two points")
    p.set_defaults(func=cmd_walls)

    p = subs.add_parser("adapted", help="produce and certify an adapted vector")
    _add_input(p)
    p.set_defaults(func=cmd_adapted)

    p = subs.add_parser("nd", help="check that -n/d is a candidate pole")
    _add_input(p)
    p.set_defaults(func=cmd_nd)

    p = subs.add_parser("smc", help="poles against supplied Bernstein-Sato roots")
    _add_input(p)
    p.add_argument("--broots", metavar="FILE", help='JSON {"roots": [...]} file')
    p.set_defaults(func=cmd_smc)

    p = subs.add_parser("multi-nd", help="multivariate candidate check")
    _add_input(p)
    p.set_defaults(func=cmd_multi_nd)

    p = subs.add_parser("multi-smc", help="multivariate polar locus against a zero locus")
    _add_input(p)
    p.add_argument("--zero-locus", metavar="FILE",
                   help='JSON {"zero_locus": [[c1...ck, const], ...]} file')
    p.set_defaults(func=cmd_multi_smc)

    p = subs.add_parser("vmono-demo", help="filtration wall-crossing demonstrations")
    _add_input(p, needs_file=False)
    p.set_defaults(func=cmd_vmono_demo)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ArrangementError, ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
