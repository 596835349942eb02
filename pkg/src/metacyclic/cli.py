"""Command-line front end.

Subcommands: validate, derive, classify, query-pair, dicyclic, lift, bound,
sweep.  Exit status 0 = success / affirmative verdict, 1 = clean run with a
negative verdict, 2 = input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .applications import bound_check, dicyclic_exists, lift_to_split
from .classify import enumerate_meta, query_pair
from .cyclic import CyclicDataSet, MalformedDataSetError, validate_cyclic
from .derive import DerivationError, derive_factors
from .groups import GroupParameterError
from .meta import (MetacyclicDataSet, validate_meta_literal,
                   validate_meta_oracle)
from .notation import (JSON_SCHEMA, ParseError, cyclic_to_json, format_cyclic,
                       format_meta, meta_to_json, parse_any, parse_cyclic,
                       parse_meta)
from .sweep import dual_validator_sweep

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _default_workers() -> int:
    env = os.environ.get("MCG_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _read_source(value: str) -> str:
    """A data-set argument is a literal, a file path, or '-' for stdin."""
    if value == "-":
        return sys.stdin.read().strip()
    if not value.lstrip().startswith(("(", "{")) and os.path.exists(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default="text")
    p.add_argument("--output", default=None, help="write to a file")


# -- subcommand bodies -----------------------------------------------------


def _cmd_validate(args) -> int:
    if args.meta is not None:
        ds = parse_meta(_read_source(args.meta))
    elif args.cyclic is not None:
        ds = parse_cyclic(_read_source(args.cyclic))
    else:
        ds = parse_any(_read_source(args.dataset or "-"))

    if isinstance(ds, CyclicDataSet):
        rep = validate_cyclic(ds, min_genus=args.min_genus)
        if args.format == "json":
            _emit(json.dumps({
                "schema": JSON_SCHEMA, "type": "cyclic-validation",
                "dataset": format_cyclic(ds), "valid": rep.valid,
                "failed_condition": rep.failed_condition,
                "genus": [rep.genus.numerator, rep.genus.denominator],
            }, indent=2), args.output)
        else:
            verdict = "valid" if rep.valid else \
                f"invalid (condition {rep.failed_condition})"
            _emit(f"cyclic data set {ds}: {verdict}, genus {rep.genus}",
                  args.output)
        return EXIT_OK if rep.valid else EXIT_NEGATIVE

    lit = validate_meta_literal(ds)
    orc = validate_meta_oracle(ds)
    agree = lit.valid == orc.valid
    if args.format == "json":
        _emit(json.dumps({
            "schema": JSON_SCHEMA, "type": "meta-validation",
            "dataset": format_meta(ds),
            "valid": lit.valid,
            "literal_failed_condition": lit.failed_condition,
            "oracle_valid": orc.valid,
            "oracle_failed_condition": orc.failed_condition,
            "validators_agree": agree,
            "genus": [lit.genus.numerator, lit.genus.denominator],
        }, indent=2), args.output)
    else:
        verdict = "valid" if lit.valid else \
            f"invalid (condition {lit.failed_condition})"
        lines = [f"metacyclic data set {ds}: {verdict}, genus {lit.genus}"]
        if not agree:
            lines.append(f"  WARNING: oracle validator disagrees "
                         f"({orc.valid}, {orc.failed_condition})")
        _emit("\n".join(lines), args.output)
    if not agree:
        return EXIT_ERROR
    return EXIT_OK if lit.valid else EXIT_NEGATIVE


def _cmd_derive(args) -> int:
    ds = parse_meta(_read_source(args.meta))
    rep = validate_meta_literal(ds)
    if not rep.valid:
        _emit(f"input data set is invalid (condition "
              f"{rep.failed_condition})", args.output)
        return EXIT_NEGATIVE
    factors = derive_factors(ds)
    if args.format == "json":
        _emit(json.dumps({
            "schema": JSON_SCHEMA, "type": "derived-factors",
            "dataset": format_meta(ds),
            "DF": cyclic_to_json(factors.DF),
            "DG": cyclic_to_json(factors.DG),
            "DGbar": cyclic_to_json(factors.DGbar),
            "pair": f"[{factors.DG};{factors.DF}]",
        }, indent=2), args.output)
    else:
        _emit("\n".join([
            f"D_F    = {factors.DF}",
            f"D_G    = {factors.DG}",
            f"D_Gbar = {factors.DGbar}",
            f"[D_G;D_F] = [{factors.DG};{factors.DF}]",
        ]), args.output)
    return EXIT_OK


def format_table(table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "schema": JSON_SCHEMA, "type": "classification",
            "genus": table.genus, "nonsplit": table.nonsplit,
            "exclude_quaternions": table.exclude_quaternions,
            "classes": len(table.rows),
            "rows": [{
                "group": row.params.label(),
                "u": row.params.u, "n": row.params.n,
                "r": row.params.r, "k": row.params.k,
                "representative": format_meta(row.representative),
                "DG": format_cyclic(row.DG) if row.DG else None,
                "DF": format_cyclic(row.DF) if row.DF else None,
            } for row in table.rows],
        }, indent=2)
    if fmt == "csv":
        lines = ["group,u,n,r,k,representative,DG,DF"]
        for row in table.rows:
            rep = format_meta(row.representative)
            dg = format_cyclic(row.DG) if row.DG else ""
            df = format_cyclic(row.DF) if row.DF else ""
            lines.append(",".join([
                f'"{row.params.label()}"', str(row.params.u),
                str(row.params.n), str(row.params.r), str(row.params.k),
                f'"{rep}"', f'"{dg}"', f'"{df}"',
            ]))
        return "\n".join(lines)
    head = (f"# classification genus={table.genus} "
            f"nonsplit={str(table.nonsplit).lower()} "
            f"exclude_quaternions={str(table.exclude_quaternions).lower()} "
            f"classes={len(table.rows)}")
    lines = [head]
    for row in table.rows:
        cols = [row.params.label(), format_meta(row.representative)]
        if row.DG is not None and row.DF is not None:
            cols.append(f"[{format_cyclic(row.DG)};{format_cyclic(row.DF)}]")
        lines.append("\t".join(cols))
    return "\n".join(lines)


def _cmd_classify(args) -> int:
    table = enumerate_meta(args.genus, nonsplit=args.nonsplit,
                           exclude_quaternions=args.exclude_quaternions,
                           max_order=args.max_order,
                           workers=args.workers)
    _emit(format_table(table, args.format), args.output)
    return EXIT_OK


def _cmd_query_pair(args) -> int:
    DF = parse_cyclic(_read_source(args.df))
    DG = parse_cyclic(_read_source(args.dg))
    found = query_pair(DF, DG, args.u, args.r, args.k)
    if found is None:
        _emit("none", args.output)
        return EXIT_NEGATIVE
    if args.format == "json":
        _emit(json.dumps(meta_to_json(found), indent=2), args.output)
    else:
        _emit(format_meta(found), args.output)
    return EXIT_OK


def _cmd_dicyclic(args) -> int:
    DF = parse_cyclic(_read_source(args.df))
    report = dicyclic_exists(DF)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK if report.exists else EXIT_NEGATIVE


def _cmd_lift(args) -> int:
    ds = parse_meta(_read_source(args.meta))
    result = lift_to_split(ds)
    if result is None:
        _emit("none", args.output)
        return EXIT_NEGATIVE
    if args.format == "json":
        _emit(json.dumps(result.to_json(), indent=2), args.output)
    else:
        _emit(result.to_text(), args.output)
    return EXIT_OK


def _cmd_bound(args) -> int:
    report = bound_check(args.genus, workers=args.workers)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK if report.bound_holds else EXIT_NEGATIVE


def _cmd_sweep(args) -> int:
    report = dual_validator_sweep(max_order=args.max_order,
                                  max_genus=args.max_genus,
                                  max_g0=args.max_g0)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.output)
    else:
        _emit(report.to_text(), args.output)
    return EXIT_OK if report.agreed else EXIT_NEGATIVE


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="metacyclic",
        description="Verify, derive, and classify finite metacyclic group "
                    "actions on closed orientable surfaces.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a data set")
    p.add_argument("dataset", nargs="?", default=None,
                   help="data set literal, file path, or '-' for stdin")
    p.add_argument("--meta", default=None, help="metacyclic data set")
    p.add_argument("--cyclic", default=None, help="cyclic data set")
    p.add_argument("--min-genus", type=int, default=1,
                   help="minimum genus for cyclic validation")
    _add_common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("derive", help="derive the cyclic factors")
    p.add_argument("--meta", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("classify", help="enumerate weak conjugacy classes")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--nonsplit", action="store_true")
    p.add_argument("--exclude-quaternions", action="store_true")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("query-pair",
                       help="find a metacyclic data set with given factors")
    p.add_argument("--df", required=True)
    p.add_argument("--dg", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_query_pair)

    p = sub.add_parser("dicyclic",
                       help="decide the dicyclic extension of a cyclic action")
    p.add_argument("--df", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_dicyclic)

    p = sub.add_parser("lift", help="lift a non-split data set to a split one")
    p.add_argument("--meta", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("bound", help="check the 4g non-split order bound")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("sweep", help="cross-validate both validators")
    p.add_argument("--max-order", type=int, default=48)
    p.add_argument("--max-genus", type=int, default=6)
    p.add_argument("--max-g0", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=_cmd_sweep)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = _default_workers()
    try:
        return args.func(args)
    except (ParseError, MalformedDataSetError, GroupParameterError,
            DerivationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
