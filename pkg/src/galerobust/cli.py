"""Command-line interface.

Every subcommand reads one matrix file, runs the requested computation
and prints a deterministic JSON document to stdout (or --out).  Exit
codes: 0 success / strongly robust, 1 computed but not strongly robust,
2 invalid input or violated precondition, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, svgplot
from .errors import (
    DegenerateError,
    GaleRobustError,
    GradingError,
    MatrixFormatError,
    RankError,
    ZeroRowError,
)
from .gale import bouquets, gale_transform, is_positively_graded, reduce_configuration
from .hilbert import fan_radius_bound
from .intlinalg import IntegerMatrix
from .matrixio import load_matrix
from .oracle import SHELL_WIDTH, graver_bruteforce, is_indispensable_oracle
from .toric import Binomial, is_strongly_robust, render_binomial

_INPUT_ERRORS = (
    MatrixFormatError,
    RankError,
    GradingError,
    ZeroRowError,
    DegenerateError,
    OSError,
)


def _binomial_doc(b: Binomial, letters: bool) -> dict:
    return {
        "plus": list(b.plus),
        "minus": list(b.minus),
        "pretty": render_binomial(b, letters),
    }


def _binomial_list(bins, letters: bool) -> list[dict]:
    return [_binomial_doc(b, letters) for b in sorted(bins)]


def _input_doc(m: IntegerMatrix) -> dict:
    return {"rows": m.nrows, "cols": m.ncols, "entries": [list(r) for r in m.rows]}


def _report_document(m: IntegerMatrix, letters: bool) -> dict:
    report = is_strongly_robust(m)
    doc = {
        "version": __version__,
        "input": _input_doc(m),
        "gale": [list(r) for r in report.gale.rows],
        "reduced_gale": {
            "rows": [list(r) for r in report.reduced.rows],
            "index_map": list(report.reduced.index_map),
            "angular_order": list(report.reduced.angular_order),
        },
        "positively_graded": is_positively_graded(report.gale),
        "fan_cones": [[list(c.a), list(c.b)] for c in report.h_union.cones],
        "hilbert_union": [
            {"vector": list(v), "cones": list(idx)}
            for v, idx in report.h_union.provenance
        ],
        "h_core": [list(v) for v in report.h_core],
        "indispensable": _binomial_list(report.indispensable, letters),
        "graver": _binomial_list(report.graver, letters),
        "markov": _binomial_list(
            report.indispensable if not report.complete_intersection else (), letters
        ),
        "complete_intersection": report.complete_intersection,
        "bouquets": [
            {
                "members": sorted(q.members),
                "direction": list(q.direction),
                "mixed": q.mixed,
            }
            for q in report.bouquets
        ],
        "mixed_count": report.mixed_count,
        "centrally_symmetric": report.centrally_symmetric,
        "strongly_robust": report.strongly_robust,
        "witness": list(report.witness) if report.witness is not None else None,
    }
    return doc


def _compact_json(value, indent: int = 0) -> str:
    """json.dumps with indent, except lists of ints stay on one line."""
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f'{pad}  "{k}": {_compact_json(v, indent + 1)}' for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            return "[" + ", ".join(str(x) for x in value) + "]"
        items = [f"{pad}  {_compact_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def _emit(doc, out_path: str | None) -> None:
    text = _compact_json(doc) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _oracle_radius(m: IntegerMatrix, override: int | None) -> int:
    if override is not None:
        return override
    reduced = reduce_configuration(gale_transform(m))
    return fan_radius_bound(reduced) + SHELL_WIDTH


def _run_oracle_comparison(m: IntegerMatrix, radius: int | None, letters: bool) -> dict:
    b = gale_transform(m)
    r = _oracle_radius(m, radius)
    brute = graver_bruteforce(b, r)
    report = is_strongly_robust(m)
    indisp_oracle = frozenset(x for x in brute if is_indispensable_oracle(b, x))
    return {
        "radius": r,
        "bruteforce_graver": _binomial_list(brute, letters),
        "graver_match": brute == report.graver,
        "indispensable_match": indisp_oracle == report.indispensable,
    }


def cmd_check(args) -> int:
    m = load_matrix(args.path, args.json)
    t0 = time.monotonic()
    doc = _report_document(m, args.letters)
    elapsed = time.monotonic() - t0
    _emit(doc, args.out)
    print(f"elapsed_ms={elapsed * 1000:.1f}", file=sys.stderr)
    return 0 if doc["strongly_robust"] else 1


def _partial(args, keys) -> tuple[int, dict]:
    m = load_matrix(args.path, args.json)
    full = _report_document(m, args.letters)
    doc = {"version": full["version"], "input": full["input"]}
    for k in keys:
        doc[k] = full[k]
    rc = 0
    if getattr(args, "oracle", False):
        oracle_doc = _run_oracle_comparison(m, args.radius, args.letters)
        doc["oracle"] = oracle_doc
        if not (oracle_doc["graver_match"] and oracle_doc["indispensable_match"]):
            rc = 3
    return rc, doc


def cmd_graver(args) -> int:
    rc, doc = _partial(args, ["graver"])
    _emit(doc, args.out)
    return rc


def cmd_indispensable(args) -> int:
    rc, doc = _partial(args, ["indispensable"])
    _emit(doc, args.out)
    return rc


def cmd_markov(args) -> int:
    rc, doc = _partial(args, ["markov", "complete_intersection"])
    _emit(doc, args.out)
    return rc


def cmd_bouquets(args) -> int:
    m = load_matrix(args.path, args.json)
    b = gale_transform(m)
    qs = bouquets(b)
    doc = {
        "version": __version__,
        "input": _input_doc(m),
        "bouquets": [
            {"members": sorted(q.members), "direction": list(q.direction), "mixed": q.mixed}
            for q in qs
        ],
        "mixed_count": sum(1 for q in qs if q.mixed),
    }
    _emit(doc, args.out)
    return 0


def cmd_gale(args) -> int:
    m = load_matrix(args.path, args.json)
    b = gale_transform(m)
    reduced = reduce_configuration(b)
    doc = {
        "version": __version__,
        "input": _input_doc(m),
        "gale": [list(r) for r in b.rows],
        "reduced_gale": {
            "rows": [list(r) for r in reduced.rows],
            "index_map": list(reduced.index_map),
            "angular_order": list(reduced.angular_order),
        },
        "positively_graded": is_positively_graded(b),
    }
    _emit(doc, args.out)
    return 0


def cmd_oracle(args) -> int:
    m = load_matrix(args.path, args.json)
    doc = {
        "version": __version__,
        "input": _input_doc(m),
        "oracle": _run_oracle_comparison(m, args.radius, args.letters),
    }
    _emit(doc, args.out)
    ok = doc["oracle"]["graver_match"] and doc["oracle"]["indispensable_match"]
    return 0 if ok else 3


def cmd_plot(args) -> int:
    m = load_matrix(args.path, args.json)
    report = is_strongly_robust(m)
    svg = svgplot.diagram_for_report(report)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galerobust",
        description=(
            "Decide strong robustness of a codimension-2 toric ideal from its "
            "Gale diagram and print the certificates as JSON."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, oracle_flag=False):
        p.add_argument("path", help="matrix file ('d n' header + entries, '#' comments)")
        p.add_argument("--json", action="store_true", help="input file is JSON")
        p.add_argument("--letters", action="store_true", help="render variables a..z when possible")
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        if oracle_flag:
            p.add_argument(
                "--oracle",
                action="store_true",
                help="also run the brute-force oracle; exit 3 on mismatch",
            )
            p.add_argument("--radius", type=int, help="override the oracle box radius")

    p = sub.add_parser("check", help="full robustness report (exit 0 robust, 1 not)")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("graver", help="Graver basis")
    add_common(p, oracle_flag=True)
    p.set_defaults(func=cmd_graver)

    p = sub.add_parser("indispensable", help="indispensable binomials")
    add_common(p, oracle_flag=True)
    p.set_defaults(func=cmd_indispensable)

    p = sub.add_parser("markov", help="minimal generating set (Markov basis)")
    add_common(p, oracle_flag=True)
    p.set_defaults(func=cmd_markov)

    p = sub.add_parser("bouquets", help="bouquet decomposition")
    add_common(p)
    p.set_defaults(func=cmd_bouquets)

    p = sub.add_parser("gale", help="Gale and reduced Gale configurations")
    add_common(p)
    p.set_defaults(func=cmd_gale)

    p = sub.add_parser("oracle", help="brute-force cross-check of the fan results")
    add_common(p)
    p.add_argument("--radius", type=int, help="override the oracle box radius")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("plot", help="SVG drawing of the reduced diagram")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="input file is JSON")
    p.add_argument("--out", metavar="PATH", required=True, help="output SVG path")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except GaleRobustError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
