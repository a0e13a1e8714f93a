"""Command line interface.

Exit codes: 0 pass, 1 input error, 2 check failure, 3 precondition or
structural failure.  Every number is printed as an exact rational.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .certify import certify
from .core import LENIENT, STRICT, curve_area, validate
from .errors import InputError, ParseError, TropicalError
from .exact import format_vec, parse_rat
from .gallery import embed, gen_example7, gen_plane_curve, gen_random_balanced, gen_random_tree, gen_tropical_line
from .geometry import density_prediction, measure_density
from .paths import path_family_for_face
from .saturation import saturate

EXIT_OK, EXIT_INPUT, EXIT_CHECK, EXIT_PRECONDITION = 0, 1, 2, 3


def _rat(text):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text):
    try:
        return tuple(parse_rat(c) for c in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path):
    if path == "-":
        return io.loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return io.loads(text)


def _write(G, path):
    text = io.dumps(G)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_validate(args):
    G = _read(args.file)
    rep = validate(G, LENIENT if args.lenient else STRICT)
    for line in rep.lines():
        print(line)
    if rep.ok:
        print(f"OK {rep.level}")
        return EXIT_OK
    return EXIT_CHECK


def cmd_area(args):
    print(curve_area(_read(args.file)))
    return EXIT_OK


def cmd_saturate(args):
    G = _read(args.file)
    result = saturate(G, args.delta)
    _write(result.curve, args.output)
    out = sys.stderr if args.output == "-" else sys.stdout
    for line in result.log.lines():
        print(line, file=out)
    return EXIT_OK


def cmd_paths(args):
    G = _read(args.file)
    F = path_family_for_face(G, args.dir, args.tie)
    for k, P in enumerate(F.paths):
        print(f"PATH {k} entry e{P.entry_edge} exit {format_vec(P.exit_point)}")
        for s in P.segments:
            line = f"  e{s.edge_id} {format_vec(s.start)} -> {format_vec(s.end)} scale {s.weight.scale}"
            print(line)
    for eid in sorted(F.usage):
        print(f"USAGE e{eid} {F.usage[eid]} / {F.capacity[eid]}")
    if args.emit_segments:
        for P in F.paths:
            for s in P.segments:
                print(f"SEGMENT {' '.join(map(str, s.start))} -> {' '.join(map(str, s.end))}")
    return EXIT_OK


def cmd_certify(args):
    G = _read(args.file)
    cert = certify(G, args.delta, args.area_budget, args.tie)
    if args.json:
        print(json.dumps(cert.to_dict(), indent=2))
    else:
        for line in cert.lines():
            print(line)
    return EXIT_OK if cert.passed else EXIT_CHECK


def cmd_gen(args):
    kind = args.kind
    if kind == "example7":
        G = gen_example7(args.levels)
    elif kind == "line":
        apex = args.apex or tuple(Fraction(1, args.n + 1) for _ in range(args.n))
        G = gen_tropical_line(args.n, apex)
    elif kind == "random":
        G = gen_random_balanced(args.n, args.seed, args.complexity, trees=args.trees)
    elif kind == "plane":
        G = gen_plane_curve(args.degree, args.seed if args.noise else None)
    else:
        G = gen_random_tree(args.n, args.seed, args.delta or Fraction(1, 8))
    if args.delta is not None and kind in ("line", "random", "plane"):
        G = embed(G, args.delta)
    if args.emit_segments:
        for line in io.segments(G):
            print(line)
        return EXIT_OK
    _write(G, args.output)
    return EXIT_OK


def cmd_slice(args):
    G = _read(args.file)
    got = measure_density(G, args.dir, args.at)
    want = density_prediction(G, args.dir, args.at)
    print(f"density {got} prediction {want}")
    return EXIT_OK if got == want else EXIT_CHECK


def build_parser():
    p = argparse.ArgumentParser(prog="tropcurve", description="Exact tropical curve toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the tropical curve conditions")
    s.add_argument("file")
    lvl = s.add_mutually_exclusive_group()
    lvl.add_argument("--strict", action="store_true", default=True)
    lvl.add_argument("--lenient", action="store_true")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("area", help="print the tropical area")
    s.add_argument("file")
    s.set_defaults(func=cmd_area)

    s = sub.add_parser("saturate", help="saturate the restriction to the open simplex")
    s.add_argument("file")
    s.add_argument("--delta", type=_rat, required=True)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_saturate)

    s = sub.add_parser("paths", help="path family from the facet x_i = 0 of a saturated curve")
    s.add_argument("file")
    s.add_argument("--dir", type=int, required=True)
    s.add_argument("--tie", choices=("id", "lex"), default="id")
    s.add_argument("--emit-segments", action="store_true")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("certify", help="vertex-count certificate")
    s.add_argument("file")
    s.add_argument("--delta", type=_rat, required=True)
    s.add_argument("--area-budget", type=_rat, required=True)
    s.add_argument("--tie", choices=("id", "lex"), default="id")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("gen", help="generate a gallery curve")
    s.add_argument("kind", choices=("example7", "line", "random", "plane", "tree"))
    s.add_argument("--levels", type=int, default=4)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--apex", type=_point)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--complexity", type=int, default=2)
    s.add_argument("--trees", action="store_true")
    s.add_argument("--degree", type=int, default=3)
    s.add_argument("--noise", action="store_true", help="perturb plane-curve coefficients using --seed")
    s.add_argument("--delta", type=_rat, help="embed in the dilated simplex (tree: its region)")
    s.add_argument("--emit-segments", action="store_true")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("slice", help="measure density on a slice x_i = zeta")
    s.add_argument("file")
    s.add_argument("--dir", type=int, required=True)
    s.add_argument("--at", type=_rat, required=True)
    s.set_defaults(func=cmd_slice)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TropicalError, KeyError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
