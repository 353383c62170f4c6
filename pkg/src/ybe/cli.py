"""Command line front end for batch analysis.

Exit codes: 0 success, 1 invalid input, 2 usage error, 3 internal
consistency violation (two routes to the same fact disagreed, which means
a bug, not bad data).
"""

from __future__ import annotations

import argparse
import sys

from . import characterize, io_catalog
from .brace import all_ideals, socle
from .cycleset import (CycleSet, enumerate_cycle_sets, from_solution,
                       is_indecomposable, is_irretractable, is_simple,
                       multipermutation_level, retraction, to_solution)
from .errors import ConsistencyError, Error, ParseError, ValidationError
from .group_brace import group_brace


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise Error(f"cannot read {path}: {e.strerror}") from None


def _load_cycle_set(args) -> tuple[str, CycleSet]:
    if getattr(args, "catalog", None):
        entry = io_catalog.catalog_get(args.catalog)
        return entry.id, entry.cycle_set
    return args.file, io_catalog.parse_cycle_set(_read(args.file))


def _theorem_dict(rep: characterize.TheoremReport) -> dict:
    out = {
        "preconditions": {
            "socle_trivial": rep.soc_trivial,
            "order_gt_1": rep.order_gt_1,
            "base_transitive": rep.base_transitive,
        },
        "cond1": rep.cond1_simple,
        "cond2": rep.cond2_all_nonzero_ideals_transitive,
        "cond3": rep.cond3_unique_minimal_transitive,
        "minimal_ideal_sizes": list(rep.minimal_ideal_sizes),
        "equivalent": rep.equivalent,
    }
    if rep.cond2_witness is not None:
        out["cond2_witness_size"] = len(rep.cond2_witness)
    return out


def _cmd_validate(args) -> dict:
    name, X = _load_cycle_set(args)
    return {"input": name, "size": X.size, "valid": True}


def _cmd_analyze(args) -> dict:
    name, X = _load_cycle_set(args)
    tower = [X.size]
    cur = X
    while cur.size > 1:
        nxt, _ = retraction(cur)
        if nxt.size == cur.size:
            break
        cur = nxt
        tower.append(cur.size)
    level = multipermutation_level(X)
    return {
        "input": name,
        "size": X.size,
        "valid": True,
        "indecomposable": is_indecomposable(X),
        "irretractable": is_irretractable(X),
        "retraction_tower": tower,
        "multipermutation_level": "none" if level is None else level,
        "simple_oracle": is_simple(X),
    }


def _cmd_brace(args) -> dict:
    name, X = _load_cycle_set(args)
    result = group_brace(X)
    lattice = all_ideals(result.brace)
    return {
        "input": name,
        "size": X.size,
        "group_order": result.brace.order,
        "socle_size": len(socle(result.brace)),
        "ideal_sizes": [len(i) for i in lattice.ideals],
        "minimal_ideal_sizes": [len(i) for i in lattice.minimal],
    }


def _cmd_theorem(args) -> tuple[dict, int]:
    name, X = _load_cycle_set(args)
    result = group_brace(X)
    rep = characterize.theorem_characterization(result.brace,
                                                result.embedded_base)
    out = {
        "input": name,
        "size": X.size,
        "group_order": result.brace.order,
        "ideal_sizes": list(rep.ideal_sizes),
        "theorem": _theorem_dict(rep),
    }
    code = 3 if (rep.preconditions_ok and not rep.equivalent) else 0
    return out, code


def _cmd_classify(args) -> dict:
    name, X = _load_cycle_set(args)
    c = characterize.classify_cycle_set(X)
    out = {
        "input": name,
        "size": c.size,
        "classification": c.branch,
        "simple": c.simple,
        "simple_oracle": c.oracle_simple,
        "indecomposable": c.indecomposable,
        "irretractable": c.irretractable,
        "detail": c.detail,
    }
    if c.theorem is not None:
        out["theorem"] = _theorem_dict(c.theorem)
    return out


def _cmd_enumerate(args) -> dict:
    try:
        found = enumerate_cycle_sets(args.n, up_to_iso=args.up_to_iso)
        entries = []
        for X in found:
            simple = is_simple(X)
            if args.simple_only and not simple:
                continue
            entries.append({
                "size": X.size,
                "sigma": [io_catalog.render_perm(r) for r in X.sigma],
                "simple": simple,
            })
    except ValueError as e:
        raise UsageError(str(e)) from None
    return {
        "size": args.n,
        "up_to_iso": args.up_to_iso,
        "simple_only": args.simple_only,
        "count": len(entries),
        "cycle_sets": entries,
    }


def _cmd_catalog(args) -> dict:
    if args.action == "show":
        if not args.id:
            raise UsageError("catalog show needs an entry id")
        e = io_catalog.catalog_get(args.id)
        return {
            "id": e.id,
            "description": e.description,
            "provenance": e.provenance,
            "size": e.cycle_set.size,
            "sigma": [io_catalog.render_perm(r) for r in e.cycle_set.sigma],
            "expected": {k: list(v) if isinstance(v, tuple) else v
                         for k, v in e.expected.items()},
        }
    return {"entries": [
        {"id": e.id, "size": e.cycle_set.size, "description": e.description}
        for e in io_catalog.catalog()
    ]}


def _cmd_convert(args) -> str:
    text = _read(args.file)
    lines = [l.split("#", 1)[0].strip() for l in text.splitlines()]
    lines = [l for l in lines if l]
    kind = None
    if len(lines) > 1:
        kind = lines[1].split()[0]
    if kind == "sigma":
        X = io_catalog.parse_cycle_set(text)
    elif kind == "lambda":
        X = from_solution(io_catalog.parse_solution(text))
    else:
        raise ParseError("cannot tell a cycle set file from a solution file",
                         line=2)
    if args.to == "solution":
        return io_catalog.render_solution(to_solution(X))
    return io_catalog.render_cycle_set(X)


class UsageError(Error):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybe",
        description="Exact computation with finite cycle sets, involutive "
                    "Yang-Baxter solutions, and left braces.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output with stable keys")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        # accepted after the subcommand too; SUPPRESS keeps a root-level
        # --json from being overwritten by the subparser default
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help=argparse.SUPPRESS)

    def add_input(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("file", nargs="?", help="cycle set file")
        g.add_argument("--catalog", metavar="ID", help="built-in catalog entry")

    p = sub.add_parser("validate", help="check a cycle set file")
    p.add_argument("file")
    add_json(p)

    for name, help_text in [
            ("analyze", "validity, decomposition, retraction, simplicity"),
            ("brace", "the brace on the permutation group and its ideals"),
            ("theorem", "the three simplicity conditions, checked independently"),
            ("classify", "simplicity verdict with brute-force cross-check")]:
        p = sub.add_parser(name, help=help_text)
        add_input(p)
        add_json(p)

    p = sub.add_parser("enumerate", help="all cycle sets of a small size")
    p.add_argument("n", type=int)
    p.add_argument("--simple-only", action="store_true")
    p.add_argument("--up-to-iso", action="store_true")
    add_json(p)

    p = sub.add_parser("catalog", help="list or show built-in entries")
    p.add_argument("action", nargs="?", choices=["list", "show"], default="list")
    p.add_argument("id", nargs="?")
    add_json(p)

    p = sub.add_parser("convert", help="convert between cycle set and solution")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=["solution", "cycleset"])
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    try:
        code = 0
        if args.command == "validate":
            out = _cmd_validate(args)
        elif args.command == "analyze":
            out = _cmd_analyze(args)
        elif args.command == "brace":
            out = _cmd_brace(args)
        elif args.command == "theorem":
            out, code = _cmd_theorem(args)
        elif args.command == "classify":
            out = _cmd_classify(args)
        elif args.command == "enumerate":
            out = _cmd_enumerate(args)
        elif args.command == "catalog":
            out = _cmd_catalog(args)
        else:
            sys.stdout.write(_cmd_convert(args))
            return 0
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return 1
    except ConsistencyError as e:
        print(f"consistency violation: {e}", file=sys.stderr)
        return 3
    except (ParseError, ValidationError, Error) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    sys.stdout.write(io_catalog.emit_report(out, as_json=args.json))
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
