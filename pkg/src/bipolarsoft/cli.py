"""Command-line interface over ``.bss.json`` documents.

Exit codes: 0 success (or boolean true), 1 domain failure (boolean false,
constraint violation, failed must-hold law), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec, decision, laws
from .errors import BipolarSoftError, BoundsTooLarge, ParseError, UnknownLaw
from .products import and_product, or_product
from .table import render_table_csv, render_table_text, table_document, to_table

_BINARY_OPS = ("union", "intersect", "and", "or", "subset", "equals")
_OPS = _BINARY_OPS + ("complement",)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def cmd_validate(args) -> int:
    bss = codec.load(args.path)
    complete = "true" if bss.is_complete() else "false"
    print(f"valid: m={bss.space.m} n={bss.space.n} complete={complete}")
    return 0


def cmd_table(args) -> int:
    bss = codec.load(args.path)
    tab = to_table(bss)
    if args.format == "csv":
        text = render_table_csv(tab)
    elif args.format == "json":
        text = _json_text(table_document(tab))
    else:
        text = render_table_text(tab)
    _emit(text, args.output)
    return 0


def cmd_op(args) -> int:
    expected = 1 if args.name == "complement" else 2
    if len(args.paths) != expected:
        print(
            f"error: op {args.name} takes {expected} operand file(s), got {len(args.paths)}",
            file=sys.stderr,
        )
        return 2
    operands = [codec.load(path) for path in args.paths]
    if args.name == "subset":
        verdict = operands[0].is_subset_of(operands[1])
    elif args.name == "equals":
        verdict = operands[0].equals(operands[1])
    else:
        result = {
            "union": lambda: operands[0].union(operands[1]),
            "intersect": lambda: operands[0].intersection(operands[1]),
            "complement": lambda: operands[0].complement(),
            "and": lambda: and_product(operands[0], operands[1]),
            "or": lambda: or_product(operands[0], operands[1]),
        }[args.name]()
        _emit(codec.serialize(result), args.output)
        return 0
    print("true" if verdict else "false")
    return 0 if verdict else 1


def cmd_decide(args) -> int:
    bss = codec.load(args.path)
    result = decision.decide(bss)
    if args.format == "csv":
        text = decision.render_scores_csv(result)
    elif args.format == "json":
        text = _json_text(decision.scores_document(result))
    else:
        text = decision.render_scores_text(result)
    _emit(text, args.output)
    return 0


def cmd_check_laws(args) -> int:
    if args.law:
        for law_id in args.law:
            laws.get_law(law_id)  # fail fast on unknown ids
    exhaustive = tuple(args.exhaustive) if args.exhaustive else None
    random_count = args.random
    if exhaustive is None and random_count is None:
        exhaustive = (2, 2)
        random_count = 1000
    reports = laws.run_catalogue(
        law_ids=args.law or None,
        exhaustive=exhaustive,
        random_count=random_count or 0,
        seed=args.seed,
        random_bounds=tuple(args.bounds),
    )
    failures = [r.law_id for r in reports if r.must_hold and not r.holds]
    doc = {
        "laws": [r.to_json() for r in reports],
        "must_hold_failures": failures,
    }
    _emit(_json_text(doc), args.output)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipolarsoft",
        description="Validate, render, combine, and score bipolar soft set documents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document and print a summary")
    p.add_argument("path", type=Path)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("table", help="render the indicator-pair table")
    p.add_argument("path", type=Path)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("op", help="apply an algebra operation to documents")
    p.add_argument("name", choices=_OPS)
    p.add_argument("paths", nargs="+", type=Path)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("decide", help="score all objects and report the best")
    p.add_argument("path", type=Path)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("check-laws", help="brute-force the law catalogue")
    p.add_argument("--law", action="append", help="check only this law id (repeatable)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--exhaustive", nargs=2, type=int, metavar=("M", "N"))
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--bounds", nargs=2, type=int, default=(6, 4), metavar=("M", "N"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check_laws)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, BoundsTooLarge, UnknownLaw) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except BipolarSoftError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
