"""Command-line entry point: ``rectangle-forge <subcommand> ...``.

Exit status is 0 on success, 1 on usage errors and 2 on runtime errors.
Output files are written atomically; ``-`` means standard output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import core
from .canon import automorphisms, canonical_form
from .enumeration import TheoremViolation, enumerate_rectangles
from .oracle import FILTERS, brute_classes
from .presentations import associated_presentation, core_presentation, format_presentations, write_atomic
from .prune import RULE_NAMES, Pruner, parse_rules


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(path: Optional[str], text: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        write_atomic(path, text)


def _read_lines(path: str):
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def _default_jobs() -> int:
    raw = os.environ.get("RECTANGLE_FORGE_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"RECTANGLE_FORGE_JOBS must be an integer, got {raw!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _rules(text: str) -> tuple:
    try:
        return parse_rules(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rectangle-forge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    e = sub.add_parser("enumerate", help="generate rectangle classes with pruning")
    e.add_argument("--rows", type=_positive, required=True)
    e.add_argument("--cols", type=_positive, required=True)
    e.add_argument("--rules", type=_rules, default=RULE_NAMES,
                   help=f"'all', 'none' or a comma list of: {', '.join(RULE_NAMES)}")
    e.add_argument("--emit", help="JSONL file for the surviving rectangles")
    e.add_argument("--presentations", help="presentation export file for the survivors")
    e.add_argument("--stats", help="stats JSON file")
    e.add_argument("--jobs", type=_positive, default=None, help="worker processes (env RECTANGLE_FORGE_JOBS)")
    e.add_argument("--split-depth", type=int, default=3, help="edges fixed before subtrees become tasks")
    e.add_argument("--max-nodes", type=_positive, default=None, help="stop after this many nodes")
    e.add_argument("--validate", action="store_true", help="re-check every prune certificate")

    c = sub.add_parser("canon", help="canonical forms of JSONL rectangles")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("--output", default="-")

    o = sub.add_parser("oracle-check", help="brute-force class count")
    o.add_argument("--rows", type=_positive, required=True)
    o.add_argument("--cols", type=_positive, required=True)
    o.add_argument("--filter", choices=sorted(FILTERS), default="none")

    x = sub.add_parser("export", help="presentations of JSONL rectangles")
    x.add_argument("input", nargs="?", default="-")
    x.add_argument("--output", default="-")
    x.add_argument("--core", metavar="ROW,COL", help="add g_ROW = h_COL = 1")
    return p


def _cmd_enumerate(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    found: list = []
    failure = None
    try:
        stats = enumerate_rectangles(
            args.rows, args.cols, Pruner(args.rules), sink=found.append, jobs=jobs,
            split_depth=args.split_depth, max_nodes=args.max_nodes, validate=args.validate,
        )
    except TheoremViolation as exc:
        failure = exc
        stats = None
    _emit(args.emit, "".join(core.dumps(r) + "\n" for r in found))
    _emit(args.presentations, format_presentations([associated_presentation(r) for r in found]))
    if stats is not None:
        doc = stats.to_json()
        if stats.truncated:
            doc["truncated"] = True
        if args.validate:
            doc["invalid_certificates"] = stats.invalid_certificates
        _emit(args.stats, json.dumps(doc, separators=(",", ":")) + "\n")
        if args.validate and stats.invalid_certificates:
            print(f"error: {stats.invalid_certificates} invalid certificate(s)", file=sys.stderr)
            return 2
    if failure is not None:
        print(f"error: {failure}", file=sys.stderr)
        return 2
    return 0


def _cmd_canon(args) -> int:
    out = []
    for rect in core.read_jsonl(_read_lines(args.input)):
        obj = core.to_json_obj(canonical_form(rect))
        obj["aut_order"] = len(automorphisms(rect))
        out.append(json.dumps(obj, separators=(",", ":")) + "\n")
    _emit(args.output, "".join(out))
    return 0


def _cmd_oracle(args) -> int:
    cc = brute_classes(args.rows, args.cols, args.filter)
    print(json.dumps(cc.to_json(), separators=(",", ":")))
    return 0


def _cmd_export(args) -> int:
    rects = list(core.read_jsonl(_read_lines(args.input)))
    if args.core:
        try:
            p = tuple(int(t) for t in args.core.split(","))
            if len(p) != 2:
                raise ValueError
        except ValueError:
            raise UsageError(f"--core expects ROW,COL, got {args.core!r}") from None
        pres = [core_presentation(r, p) for r in rects]
    else:
        pres = [associated_presentation(r) for r in rects]
    _emit(args.output, format_presentations(pres))
    return 0


COMMANDS = {"enumerate": _cmd_enumerate, "canon": _cmd_canon, "oracle-check": _cmd_oracle, "export": _cmd_export}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (core.RectangleError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
