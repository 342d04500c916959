"""Command-line interface; every result is written as one JSON record per line.

Records look like ``{"schema_version": "1", "command": ..., "payload": ...}``.
The ``tree --format dot`` subcommand writes a Graphviz digraph instead, with
edges pointing from child to parent.

Exit codes: 0 on success, 1 on domain errors (not coprime, not packed, bad
dimensions, ...), 2 on malformed arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, TextIO

from . import __version__
from .core import NumericalSemigroup, canonicalize, minimal_generators, wilf_check
from .errors import SemigroupError
from .packed import enumerate_packed, is_packed, pack, reduction_chain
from .tree import (
    enumerate_class_frobenius,
    enumerate_class_genus,
    enumerate_family_frobenius,
    enumerate_family_genus,
    family_extremes,
    iter_levels,
)
from .wilf import scan

SCHEMA_VERSION = "1"


def semigroup_json(S: NumericalSemigroup) -> dict[str, Any]:
    return {"gens": list(S.msg), "m": S.m, "e": S.e, "frobenius": S.frobenius, "genus": S.genus}


def fraction_json(q) -> str | None:
    if q is None:
        return None
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def node_id(S: NumericalSemigroup) -> str:
    return ",".join(map(str, S.msg))


class Writer:
    """Serializes every record through one stream."""

    def __init__(self, command: str, out: TextIO):
        self.command = command
        self.out = out

    def record(self, payload: Any) -> None:
        line = json.dumps({"schema_version": SCHEMA_VERSION, "command": self.command, "payload": payload})
        self.out.write(line + "\n")

    def raw(self, text: str) -> None:
        self.out.write(text)


def _gens(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError("generators must be positive integers")
    return values


def _semigroup(raw: list[int], w: Writer) -> NumericalSemigroup:
    gens = canonicalize(raw)
    msg = minimal_generators(gens)
    if list(msg) != list(raw):
        w.record({"warning": "input was not a sorted minimal generating set", "input": raw, "msg": list(msg)})
    return NumericalSemigroup(msg)


def cmd_packed(args, w: Writer) -> None:
    for S in enumerate_packed(args.m, args.e):
        w.record(semigroup_json(S))


def cmd_pack(args, w: Writer) -> None:
    S = _semigroup(args.gens, w)
    w.record(
        {
            "input": semigroup_json(S),
            "packed": semigroup_json(pack(S)),
            "chain": [semigroup_json(T) for T in reduction_chain(S)],
        }
    )


def cmd_invariants(args, w: Writer) -> None:
    S = _semigroup(args.gens, w)
    check = wilf_check(S)
    w.record(
        {
            "semigroup": semigroup_json(S),
            "apery": list(S.apery.w),
            "packed": is_packed(S) if not S.is_whole else None,
            "wilf": {
                "holds": check.holds,
                "lhs": check.lhs,
                "rhs": check.rhs,
                "quotient": fraction_json(check.quotient),
            },
        }
    )


def cmd_tree(args, w: Writer) -> None:
    root = _semigroup(args.gens, w)
    layers = iter_levels(root, args.levels)
    if args.format == "jsonl":
        for layer in layers:
            for node in layer:
                w.record(
                    {
                        "level": node.level,
                        "semigroup": semigroup_json(node.semigroup),
                        "parent": None if node.parent is None else list(node.parent.msg),
                    }
                )
        return
    lines = ["digraph class_tree {"]
    for layer in layers:
        for node in layer:
            if node.parent is None:
                lines.append(f'  "{node_id(node.semigroup)}";')
            else:
                lines.append(f'  "{node_id(node.semigroup)}" -> "{node_id(node.parent)}";')
    lines.append("}")
    w.raw("\n".join(lines) + "\n")


def cmd_enum(args, w: Writer) -> None:
    if args.max_frobenius is not None:
        res = enumerate_family_frobenius(args.m, args.e, args.max_frobenius, args.exact, args.threads)
    else:
        res = enumerate_family_genus(args.m, args.e, args.max_genus, args.exact, args.threads)
    for S in res:
        w.record(semigroup_json(S))


def cmd_class_enum(args, w: Writer) -> None:
    root = _semigroup(args.gens, w)
    if args.max_frobenius is not None:
        res = enumerate_class_frobenius(root, args.max_frobenius)
    else:
        res = enumerate_class_genus(root, args.max_genus)
    for S in res:
        w.record(semigroup_json(S))


def cmd_wilf(args, w: Writer) -> None:
    root = _semigroup(args.gens, w)
    rep = scan(root, args.levels, threads=args.threads)
    w.record(
        {
            "root": semigroup_json(root),
            "depth": rep.depth,
            "node_count": rep.node_count,
            "descendant_count": rep.descendant_count,
            "level_sizes": list(rep.level_sizes),
            "min_quotient": fraction_json(rep.min_quotient),
            "max_quotient": fraction_json(rep.max_quotient),
            "min_witness": semigroup_json(rep.min_witness),
            "max_witness": semigroup_json(rep.max_witness),
            "violations": [list(S.msg) for S in rep.violations],
            "all_hold": rep.all_hold,
        }
    )


def cmd_extremes(args, w: Writer) -> None:
    ext = family_extremes(args.m, args.e)

    def entry(pair):
        return {"value": pair[0], "witness": semigroup_json(pair[1])}

    w.record(
        {
            "m": args.m,
            "e": args.e,
            "min_frobenius": entry(ext.min_frobenius),
            "min_genus": entry(ext.min_genus),
            "max_packed_frobenius": entry(ext.max_packed_frobenius),
        }
    )


def _bound_options(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-frobenius", type=int, metavar="F")
    group.add_argument("--max-genus", type=int, metavar="G")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packed-semigroups",
        description="Numerical semigroups with fixed multiplicity and embedding dimension.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1, help="cap on parallel tree expansion"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("packed", help="list the packed semigroups C(m, e)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_packed)

    p = sub.add_parser("pack", help="packed representative and reduction chain")
    p.add_argument("--gens", type=_gens, required=True)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("invariants", help="m, e, F, g, Apéry set and Wilf check")
    p.add_argument("--gens", type=_gens, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("tree", help="levels of the tree of a packed semigroup")
    p.add_argument("--gens", type=_gens, required=True)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--format", choices=("dot", "jsonl"), default="jsonl")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("enum", help="all semigroups with (m, e) and a bounded invariant")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    _bound_options(p)
    p.add_argument("--exact", action="store_true", help="keep only members hitting the bound")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("class-enum", help="members of one packed class with a bounded invariant")
    p.add_argument("--gens", type=_gens, required=True)
    _bound_options(p)
    p.set_defaults(func=cmd_class_enum)

    p = sub.add_parser("wilf", help="Wilf-inequality scan of a class tree")
    p.add_argument("--gens", type=_gens, required=True)
    p.add_argument("--levels", type=int, required=True)
    p.set_defaults(func=cmd_wilf)

    p = sub.add_parser("extremes", help="minimal F and g over (m, e), maximal F over C(m, e)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_extremes)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        err.write("error: --threads must be at least 1\n")
        return 2
    if getattr(args, "levels", 0) < 0:
        err.write("error: --levels must be nonnegative\n")
        return 2
    try:
        args.func(args, Writer(args.command, out))
    except SemigroupError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
