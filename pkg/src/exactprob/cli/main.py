"""Command-line entry point: ``exactprob QUERY``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from ..errors import ParseError, UnknownName
from .evaluator import Context, evaluate
from .grammar import parse, show

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EVAL = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="exactprob",
        description="Evaluate a distribution query exactly, e.g. 'binomial(3, 1/3) | pmf(1)'.",
    )
    p.add_argument("query", help="query text, or '-' to read it from stdin")
    p.add_argument("--json", action="store_true", help="print a JSON object instead of plain text")
    p.add_argument("--fuel", type=int, default=None, help="fuel for negative_binomial and geometric")
    p.add_argument("--seed", type=int, default=None, help="seed for the randomized 'laws' action")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    text = sys.stdin.read() if args.query == "-" else args.query
    try:
        q = parse(text)
    except (ParseError, UnknownName) as exc:
        _report(exc)
        return EXIT_PARSE
    try:
        result = evaluate(q, Context(fuel=args.fuel, seed=args.seed))
    except Exception as exc:  # any library error ends up here
        _report(exc)
        return EXIT_EVAL
    if args.json:
        print(json.dumps({"query": show(q), "action": result.action, "result": result.json_value()}))
    else:
        print(result.text())
    return EXIT_OK


def _report(exc: BaseException) -> None:
    print(f"{type(exc).__name__}: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
