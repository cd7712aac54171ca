"""Batch command line front end.

Subcommands build the named objects, run the lemma verification suites and
export complexes or curves as JSON and DOT.  Exit codes: 0 on success, 2
when a verified claim fails, 3 on a resource limit, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .cells import SurfaceSig
from .curves import Surface, enumerate_classes, geometric_intersection, isotopic
from .complexes import (
    build_B30,
    build_B_family,
    build_X,
    build_complex,
    exhaustion_complex,
    named_curve,
    scharlemann_complex,
)
from .geometry import intersection_matrix
from .mcg import MappingClass, crosscap_slide, twist
from .rigidity import enumerate_locally_injective, rigidity_evidence
from .suites import MANIFEST, run_suite

USAGE_ERROR = 64
CLAIM_FAILED = 2
RESOURCE_LIMIT = 3


def _surface(args):
    try:
        g, n = (int(x) for x in args.surface.split(","))
        return Surface.get(g, n)
    except Exception:
        raise SystemExit(USAGE_ERROR)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def cmd_surface(args):
    s = _surface(args)
    cc = s.complex
    payload = {"signature": [s.sig.genus, s.sig.boundary],
               "euler_characteristic": cc.euler_characteristic,
               "boundary_components": len(cc.boundary_cycles()),
               "small_exceptional": s.sig.is_small_exceptional,
               "complex": json.loads(cc.to_json())}
    _emit(args, payload,
          f"{s.sig}: chi = {cc.euler_characteristic}, "
          f"{len(cc.boundary_cycles())} boundary components")
    return 0


def cmd_curves(args):
    s = _surface(args)
    if args.name:
        c = named_curve(s, args.name)
        payload = c.to_json_dict()
        payload.update({"name": args.name, "sided": c.sidedness,
                        "complement": [str(x) for x in c.cut_along()]})
        _emit(args, payload,
              f"{args.name}: {c.sidedness}, weight {c.weight}, "
              f"complement {', '.join(str(x) for x in c.cut_along())}")
        return 0
    bound = args.bound if args.bound is not None else config.CENSUS_BOUND
    cls = enumerate_classes(s, bound)
    payload = [dict(c.to_json_dict(), sided=c.sidedness) for c in cls]
    _emit(args, payload,
          f"{len(cls)} classes of weight <= {bound} on {s.sig}")
    return 0


def cmd_intersect(args):
    s = _surface(args)
    classes = [named_curve(s, nm) for nm in args.names]
    mat = intersection_matrix(classes)
    if args.json:
        print(json.dumps({"names": args.names, "matrix": mat}, indent=2))
    else:
        width = max(len(n) for n in args.names) + 1
        print(" " * width + " ".join(f"{n:>{width}}" for n in args.names))
        for nm, row in zip(args.names, mat):
            print(f"{nm:>{width}}" +
                  " ".join(f"{v:>{width}}" for v in row))
    return 0


def cmd_mcg(args):
    s = _surface(args)
    target = named_curve(s, args.curve)
    if args.twist:
        image = twist(named_curve(s, args.twist), target, args.power)
    elif args.slide:
        mu, alpha = (named_curve(s, nm) for nm in args.slide)
        image = crosscap_slide(mu, alpha, target, args.power)
    else:
        raise SystemExit(USAGE_ERROR)
    name = image.name or "(unnamed class)"
    _emit(args, dict(image.to_json_dict(), result=name, sided=image.sidedness),
          f"image: {name}, {image.sidedness}, weight {image.weight}")
    return 0


def _build_set(s, name, level):
    if name == "X":
        return build_X(s)
    if name == "B30":
        return build_B30(s)
    if name in {"B1", "B2", "B3", "B4", "B5"}:
        return build_B_family(s, int(name[1]))
    if name == "E":
        return exhaustion_complex(s, level).vertices
    raise SystemExit(USAGE_ERROR)


def cmd_complex(args):
    s = _surface(args)
    if args.set == "scharlemann":
        fc = scharlemann_complex(s, truncation=args.level)
    else:
        fc = build_complex(_build_set(s, args.set, args.level))
    payload = fc.to_json_dict()
    _emit(args, payload,
          f"{args.set}: {fc.n_vertices} vertices, {len(fc.edges())} edges")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(fc.to_dot())
    return 0


def cmd_rigidity(args):
    s = _surface(args)
    bound = args.bound if args.bound is not None else config.CENSUS_BOUND
    radius = args.radius if args.radius is not None else config.WORD_RADIUS
    classes = _build_set(s, args.set, args.level)
    if args.enumerate:
        domain = build_complex(classes)
        codomain = build_complex(
            list(classes) + [c for c in enumerate_classes(s, bound)
                             if not any(c is x for x in classes)])
        maps = list(enumerate_locally_injective(domain, codomain,
                                                limit=args.limit))
        _emit(args, {"maps": [list(m.assignment) for m in maps]},
              f"{len(maps)} locally injective maps")
        return 0
    report = rigidity_evidence(classes, bound=bound, radius=radius)
    out = {k: v for k, v in report.items() if k != "not_induced"}
    _emit(args, out, f"verdicts: {report['counts']}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(out, fh, indent=2, sort_keys=True)
    return CLAIM_FAILED if report["counts"]["NotInduced"] else 0


def cmd_suite(args):
    if args.name not in MANIFEST:
        print(f"unknown suite {args.name!r}; known: {sorted(MANIFEST)}",
              file=sys.stderr)
        return USAGE_ERROR
    rows, ok = run_suite(args.name)
    if args.json:
        print(json.dumps({"suite": args.name, "passed": ok,
                          "checks": [{"claim": c, "passed": p, "detail": d}
                                     for c, p, d in rows]}, indent=2))
    else:
        for claim, passed, detail in rows:
            mark = "pass" if passed else "FAIL"
            extra = f"  [{detail}]" if detail and not passed else ""
            print(f"[{mark}] {claim}{extra}")
        print(f"suite {args.name}: {'all passed' if ok else 'FAILURES'}")
    return 0 if ok else CLAIM_FAILED


def cmd_export(args):
    s = _surface(args)
    if args.object == "surface":
        text = s.complex.to_json()
    else:
        fc = build_complex(_build_set(s, args.object, args.level))
        text = fc.to_dot() if args.format == "dot" else \
            json.dumps(fc.to_json_dict(), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crosscap",
        description="curves and curve complexes on nonorientable surfaces")
    parser.add_argument("--surface", default="3,0", help="signature g,n")
    parser.add_argument("--config", help="key=value bounds file")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; runs are serial")
    sub = parser.add_subparsers(dest="command")

    sub.add_parser("surface", help="build and classify the polygon model")

    p = sub.add_parser("curves", help="named curves or a bounded census")
    p.add_argument("--name")
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("intersect", help="pairwise intersection matrix")
    p.add_argument("names", nargs="+")

    p = sub.add_parser("mcg", help="apply a twist or slide to a curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--twist")
    p.add_argument("--slide", nargs=2, metavar=("MU", "ALPHA"))
    p.add_argument("--power", type=int, default=1)

    p = sub.add_parser("complex", help="build a named subcomplex")
    p.add_argument("--set", default="B30",
                   help="X | B1..B5 | B30 | E | scharlemann")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--dot", help="write DOT output to this path")

    p = sub.add_parser("rigidity", help="rigidity evidence and enumeration")
    p.add_argument("--set", default="B30")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--limit", type=int, default=1000)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--out", help="write the JSON report here")

    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("name")

    p = sub.add_parser("export", help="export JSON or DOT")
    p.add_argument("object", help="surface | X | B1..B5 | B30 | E")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--out")
    return parser


COMMANDS = {
    "surface": cmd_surface,
    "curves": cmd_curves,
    "intersect": cmd_intersect,
    "mcg": cmd_mcg,
    "complex": cmd_complex,
    "rigidity": cmd_rigidity,
    "suite": cmd_suite,
    "export": cmd_export,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        config.load(args.config)
    if not args.command:
        parser.print_help()
        return USAGE_ERROR
    try:
        return COMMANDS[args.command](args)
    except MemoryError:
        print("resource limit reached", file=sys.stderr)
        return RESOURCE_LIMIT
    except RecursionError:
        print("resource limit reached", file=sys.stderr)
        return RESOURCE_LIMIT


if __name__ == "__main__":
    sys.exit(main())
