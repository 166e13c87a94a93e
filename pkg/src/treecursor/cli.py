"""Command-line entry point: ``treecursor {bench,unfont,query,roundtrip}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import document
from .bench import Method, run_bench, verify_lists
from .errors import TreeCursorError
from .nav import NavCursor
from .numbering import node_id, node_set, number_tree, set_members
from .tree import parse_notation

AXES = ("following-sibling", "preceding-sibling", "ancestor", "descendant-or-self")


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _load_tree(text: str, fmt: str):
    if fmt == "auto":
        fmt = "xml" if text.lstrip().startswith("<") else "tree"
    if fmt == "xml":
        return document.parse(text)
    try:
        return parse_notation(text)
    except ValueError as e:
        raise TreeCursorError(str(e)) from None


def cmd_bench(args) -> int:
    methods = [Method(args.method)] if args.method else list(Method)
    if args.verify:
        verify_lists(args.depth, args.branch)
    for m in methods:
        report = run_bench(args.depth, args.branch, m)
        if args.json:
            print(json.dumps(report.to_dict()))
        else:
            print(
                f"{report.method:<14} depth={report.depth} branch={report.branch} "
                f"nodes={report.node_count} time={report.wall_time:.3f}s cells={report.cell_ops}"
            )
    if args.verify and not args.json:
        print("verify: list_direct and list_cursor agree")
    return 0


def cmd_unfont(args) -> int:
    doc = document.parse(_read(args.file))
    sys.stdout.write(document.serialize(document.unfont(doc)) + "\n")
    return 0


def axis_ids(tree, axis: str, target: int) -> list[int]:
    """Ids on ``axis`` relative to node ``target`` of an (unnumbered) tree, in document order."""
    root = NavCursor.from_tree(number_tree(tree))
    for c in root.descendants_or_self():
        if node_id(c) == target:
            break
    else:
        raise TreeCursorError(f"no node with id {target}")
    if axis == "following-sibling":
        found = c.following_siblings()
    elif axis == "preceding-sibling":
        found = c.preceding_siblings()
    elif axis == "ancestor":
        found = c.ancestors()
    else:
        found = c.descendants_or_self()
    return set_members(node_set(found))


def cmd_query(args) -> int:
    tree = _load_tree(_read(args.file), args.format)
    for i in axis_ids(tree, args.axis, args.id):
        print(i)
    return 0


def cmd_roundtrip(args) -> int:
    first = document.parse(_read(args.file))
    text = document.serialize(first)
    second = document.parse(text)
    if first == second:
        print("equal")
        return 0
    print("unequal")
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treecursor", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="time direct and cursor traversals of a uniform tree")
    b.add_argument("--depth", type=int, required=True)
    b.add_argument("--branch", type=int, default=4)
    b.add_argument("--method", choices=[m.value for m in Method], help="default: all four")
    b.add_argument("--verify", action="store_true", help="check direct and cursor label lists agree")
    b.add_argument("--json", action="store_true", help="one JSON report per line")
    b.set_defaults(func=cmd_bench)

    u = sub.add_parser("unfont", help="replace every <font> element by its contents")
    u.add_argument("file", nargs="?", help="input document (stdin if absent)")
    u.set_defaults(func=cmd_unfont)

    q = sub.add_parser("query", help="list node ids on an axis, in document order")
    q.add_argument("--axis", choices=AXES, required=True)
    q.add_argument("--id", type=int, required=True, help="preorder id of the context node")
    q.add_argument("--format", choices=("auto", "xml", "tree"), default="auto")
    q.add_argument("file")
    q.set_defaults(func=cmd_query)

    r = sub.add_parser("roundtrip", help="parse, serialize, re-parse and compare")
    r.add_argument("file")
    r.set_defaults(func=cmd_roundtrip)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench" and (args.depth < 0 or args.branch < 1):
        parser.error("--depth must be >= 0 and --branch >= 1")
    try:
        return args.func(args)
    except (TreeCursorError, OSError) as e:
        print(f"treecursor: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
