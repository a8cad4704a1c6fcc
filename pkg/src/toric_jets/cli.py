"""Command-line front end: ``toric-jets analyze | blowup | render | examples``.

Exit codes: 0 success, 2 bundle not globally generated (analyze only),
3 parse or validation error, 4 criteria disagree (a bug, never bad input).
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import analyze, format_report
from .divisors import NOT_SPANNED, LineBundle, anticanonical_bundle, pullback_minus_exceptional
from .errors import InconsistencyError, ToricError
from .fan import blow_up, del_pezzo_6, hirzebruch, projective_space
from .fanfile import format_fan_file, parse_fan_file
from .intersection import jet_level
from .render import render_svg

EXIT_OK = 0
EXIT_NOT_SPANNED = 2
EXIT_INVALID = 3
EXIT_DISAGREE = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    fan, bundle = parse_fan_file(_read(args.file))
    if bundle is None:
        print("error: the fan file has no 'bundle' section", file=sys.stderr)
        return EXIT_INVALID
    report = analyze(bundle, oracle_k=args.oracle, max_fixed_points=args.max_fixed_points)
    if args.json:
        _write(json.dumps(report.to_dict(), indent=2) + "\n", None)
    else:
        _write(format_report(report) + "\n", None)
    if not report.criteria_agree:
        print("error: positivity criteria disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK if report.spanned else EXIT_NOT_SPANNED


def cmd_blowup(args) -> int:
    fan, bundle = parse_fan_file(_read(args.file))
    cones = args.cone or []
    eps = args.eps or []
    if eps and len(eps) != len(cones):
        print("error: give one --eps per --cone", file=sys.stderr)
        return EXIT_INVALID
    if not eps:
        eps = [0] * len(cones)
    ray_sets = []
    for c in cones:
        if not 1 <= c <= fan.n_cones:
            print(f"error: cone {c} out of range 1..{fan.n_cones}", file=sys.stderr)
            return EXIT_INVALID
        ray_sets.append(fan.cones[c - 1])

    comments = [f"blow-up of cones {cones} with eps {eps}"]
    if bundle is not None:
        level = jet_level(bundle)
        budget = 0 if level is NOT_SPANNED else level
        if sum(eps) > budget:
            note = f"warning: sum of eps ({sum(eps)}) exceeds the jet level ({level}) of the input bundle"
            comments.append(note)
            print(note, file=sys.stderr)
    for ray_set, e in zip(ray_sets, eps):
        new_fan, new_ray = blow_up(fan, fan.cone_index(ray_set))
        if bundle is not None:
            bundle = pullback_minus_exceptional(bundle, new_fan, new_ray, e)
        fan = new_fan
    _write(format_fan_file(fan, bundle, comments), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    fan, bundle = parse_fan_file(_read(args.file))
    _write(render_svg(fan, None if args.no_bundle else bundle), args.output)
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.name == "pn":
        fan = projective_space(args.param if args.param is not None else 2)
        title = f"projective space P^{fan.dim}"
    elif args.name == "hirzebruch":
        r = args.param if args.param is not None else 1
        fan = hirzebruch(r)
        title = f"Hirzebruch surface F_{r}"
    else:
        fan = del_pezzo_6()
        title = "del Pezzo surface of degree 6"
    bundle = None
    if args.bundle == "anticanonical":
        bundle = anticanonical_bundle(fan)
    elif args.bundle is not None:
        bundle = LineBundle(fan, [int(x) for x in args.bundle.split(",")])
    _write(format_fan_file(fan, bundle, [title]), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-jets", description="k-jet ampleness of line bundles on smooth toric varieties"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute the jet level of the bundle in a fan file")
    p.add_argument("file", help="fan file, or - for stdin")
    p.add_argument("--oracle", type=int, metavar="K", help="also run the fixed-point jet oracle up to order K")
    p.add_argument("--max-fixed-points", type=int, default=8)
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("blowup", help="equivariant blow-up at fixed points")
    p.add_argument("file")
    p.add_argument("--cone", type=int, action="append", help="1-based cone number (repeatable)")
    p.add_argument("--eps", type=int, action="append", help="exceptional multiplicity per --cone")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("render", help="SVG picture of a surface fan and its polytope")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--no-bundle", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("examples", help="print a built-in fan file")
    p.add_argument("name", choices=["pn", "hirzebruch", "delpezzo6"])
    p.add_argument("param", nargs="?", type=int, help="n for pn, r for hirzebruch")
    p.add_argument("--bundle", help="'anticanonical' or comma-separated coefficients")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ToricError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
