"""Command line interface: ``braidsurgery <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .braid import BraidWord, negative_letter_count, parse_word
from .closure import linking_matrix
from .errors import BraidSurgeryError
from .garside import minimal_twist_power, positive_representative
from .pipeline import BraidSurgeryDiagram, braid_positive_surgery, diagram_to_presentation
from .selftest import DEFAULT_SEED, run_all
from .serialize import (
    closure_to_json,
    diagram_from_json,
    diagram_to_json,
    homology_to_json,
    presentation_from_json,
    presentation_to_json,
    report_to_json,
    word_from_json,
)
from .surgery import h1_invariants, parse_coeff, rolfsen_twist

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str) -> Any:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return json.loads(text)


def _word(args: argparse.Namespace) -> BraidWord:
    if args.input:
        return word_from_json(_load(args.input))
    if args.strands is None or args.word is None:
        raise InputError("give --input FILE or both --strands and --word")
    return parse_word(args.word, args.strands)


def _coeff_list(text: str) -> tuple:
    return tuple(parse_coeff(tok) for tok in text.replace(",", " ").split())


def _diagram(args: argparse.Namespace) -> BraidSurgeryDiagram:
    if args.input:
        return diagram_from_json(_load(args.input))
    if args.coeffs is None:
        raise InputError("give --input FILE or --strands, --word and --coeffs")
    axis = parse_coeff(args.axis) if getattr(args, "axis", None) else None
    return BraidSurgeryDiagram(_word(args), _coeff_list(args.coeffs), axis)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _matrix_text(rows) -> str:
    return "\n".join("  " + " ".join(f"{x:>3}" for x in row) for row in rows)


def _presentation_text(p) -> str:
    lines = [f"components: {p.m}", "coefficients: " + " ".join(str(c) for c in p.coeffs),
             "unknotted: " + " ".join("yes" if f else "no" for f in p.unknotted), "linking:"]
    return "\n".join(lines) + ("\n" + _matrix_text(p.linking) if p.m else "")


def cmd_positify(args: argparse.Namespace) -> int:
    w = _word(args)
    if args.minimal:
        n = minimal_twist_power(w)
    elif args.n is not None:
        n = args.n
    else:
        n = negative_letter_count(w)
    out = positive_representative(w, n)
    _emit(args, {"strands": out.strands, "word": list(out.letters), "n": n}, str(out))
    return EXIT_OK


def cmd_closure(args: argparse.Namespace) -> int:
    info = linking_matrix(_word(args))
    text = "\n".join([
        f"components: {info.component_count}",
        "strand to component: " + " ".join(map(str, info.strand_to_component)),
        "strand counts: " + " ".join(map(str, info.strand_counts)),
        "linking:",
        _matrix_text(info.linking),
    ])
    _emit(args, closure_to_json(info), text)
    return EXIT_OK


def cmd_h1(args: argparse.Namespace) -> int:
    if args.input:
        doc = _load(args.input)
        pres = diagram_to_presentation(diagram_from_json(doc)) if "strands" in doc else presentation_from_json(doc)
    else:
        pres = diagram_to_presentation(_diagram(args))
    h = h1_invariants(pres)
    _emit(args, homology_to_json(h), f"H1 = {h}")
    return EXIT_OK


def cmd_twist(args: argparse.Namespace) -> int:
    pres = presentation_from_json(_load(args.input))
    if not 1 <= args.component <= pres.m:
        raise InputError(f"component must be in 1..{pres.m}")
    out = rolfsen_twist(pres, args.component - 1, args.n)
    _emit(args, presentation_to_json(out), _presentation_text(out))
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    out, report = braid_positive_surgery(_diagram(args), args.mode)
    lines = [
        f"N = {report.n_used} ({report.mode})",
        f"word: {out.word}",
        "coefficients: " + " ".join(str(c) for c in out.coeffs),
        f"axis: {out.axis if out.axis is not None else 'none'}",
        f"H1: {report.h1_before} -> {report.h1_after}",
    ]
    lines += [f"  {'ok  ' if ok else 'FAIL'} {name}" for name, ok in report.checks.items()]
    _emit(args, {"diagram": diagram_to_json(out), "report": report_to_json(report)}, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_all(args.seed, args.trials, args.max_strands, args.max_length, args.mode)
    payload = {
        "seed": args.seed,
        "suites": [
            {"name": r.name, "passed": r.passed, "trials": r.trials, "failures": r.failures[:10], "metric": r.metric}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if payload["passed"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--input", metavar="FILE", help="JSON document ('-' for stdin)")

    inline = argparse.ArgumentParser(add_help=False)
    inline.add_argument("--strands", type=int)
    inline.add_argument("--word", help='signed generators, e.g. "1 -2 1"')

    coeffs = argparse.ArgumentParser(add_help=False)
    coeffs.add_argument("--coeffs", help='one per closure component, e.g. "-1/1 inf 3/2"')
    coeffs.add_argument("--axis", help="coefficient of the braid axis, if present")

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--mode", choices=("lemma", "minimal"), default="lemma")

    parser = argparse.ArgumentParser(prog="braidsurgery", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("positify", parents=[common, inline], help="positive word for Delta^N w")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int, help="number of full twists (default: negative letter count)")
    g.add_argument("--minimal", action="store_true", help="use the least sufficient N")
    p.set_defaults(func=cmd_positify)

    p = sub.add_parser("closure", parents=[common, inline], help="components and linking matrix")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("h1", parents=[common, inline, coeffs], help="first homology of a presentation or diagram")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("twist", parents=[common], help="Rolfsen twist of a presentation")
    p.add_argument("--component", type=int, required=True, help="1-based component index")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("transform", parents=[common, inline, coeffs, mode], help="braid-positive surgery diagram")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("selftest", parents=[common, mode], help="seeded property suites")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, help="override every randomized suite's trial count")
    p.add_argument("--max-strands", type=int, default=6)
    p.add_argument("--max-length", type=int, default=24)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "twist" and not args.input:
        print("error: twist needs --input FILE", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (BraidSurgeryError, InputError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
