"""Command-line front end.

Exit codes: 0 success or verified, 1 verification failure, 2 usage error,
3 input outside the domain of the requested map.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import analysis, bijections
from .perm import PATTERNS, DomainError, class_members, format_perm, parse_perm
from .stats import UnknownStatistic, build_catalog, evaluate, parse_name

SCHEMA = "1"

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

STAT_HELP = """\
statistic names: [n-|m-]<base>[.<word>]
  base      one of asc des exc ldr rdr lir rir zeil comp lmax lmin rmax rmin
            head last peak valley lds lis rank cyc fp slmax
  word      letters r (reverse), c (complement), i (inverse) applied right
            to left, so head.ir is head(i(r(p)))
  n-, m-    n - s(p) and n + 1 - s(p)
permutations: "5213476", "5 2 1 3 4 7 6" or "5,2,1,3,4,7,6"
"""


class UsageError(Exception):
    pass


def _perm_arg(text: str):
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _bijection(key: str) -> bijections.Bijection:
    try:
        return bijections.get(key)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _emit(args, record: dict, text: str, csv_rows: list[list] | None = None) -> None:
    if args.output == "json":
        print(json.dumps({"schema": SCHEMA, **record}, indent=2, ensure_ascii=False))
    elif args.output == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows or [])
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def _show(p) -> str:
    return format_perm(p, compact=True)


# -- subcommands -------------------------------------------------------------


def cmd_apply(args) -> int:
    b = _bijection(args.bijection)
    p = _perm_arg(args.perm)
    q = bijections.apply(b.key, p)
    _emit(
        args,
        {"bijection": b.key, "input": list(p), "output": list(q)},
        _show(q),
        [["bijection", "input", "output"], [b.key, _show(p), _show(q)]],
    )
    return EXIT_OK


def cmd_invert(args) -> int:
    b = _bijection(args.bijection)
    q = _perm_arg(args.perm)
    try:
        p = bijections.invert(b.key, q)
    except bijections.LengthCapError as exc:
        raise UsageError(str(exc)) from None
    _emit(
        args,
        {"bijection": b.key, "input": list(q), "preimage": list(p)},
        _show(p),
        [["bijection", "input", "preimage"], [b.key, _show(q), _show(p)]],
    )
    return EXIT_OK


def cmd_stat(args) -> int:
    p = _perm_arg(args.perm)
    d = parse_name(args.name)
    value = evaluate(d.name, p)
    _emit(
        args,
        {"statistic": d.name, "permutation": list(p), "value": value},
        str(value),
        [["statistic", "permutation", "value"], [d.name, _show(p), value]],
    )
    return EXIT_OK


def cmd_catalog(args) -> int:
    catalog = build_catalog(args.max_len)
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(catalog.to_json() + "\n")
    rows = json.loads(catalog.to_json())
    lines = [f"{len(catalog)} classes of statistics (equal on all permutations of length <= {args.max_len})"]
    lines += [f"  {r['name']:<14} {' '.join(r['class_aliases'])}".rstrip() for r in rows]
    _emit(
        args,
        {"classes": len(catalog), "max_len": args.max_len, "statistics": rows},
        "\n".join(lines),
        [["name", "base", "word", "modifier", "aliases"]]
        + [[r["name"], r["base"], r["word"], r["modifier"], " ".join(r["class_aliases"])] for r in rows],
    )
    return EXIT_OK


def _result_lines(report: analysis.ResultReport) -> list[str]:
    verdict = "PASS" if report.passed else "FAIL"
    lines = [
        f"{verdict}  {report.bijection}: preserved={report.all_preserved} "
        f"rank={report.rank_left}/{report.rank_right} of {len(report.pairs)} maximal={report.maximal}",
        "      " + "  ".join(left for left, _ in report.pairs),
        "      " + "  ".join(right for _, right in report.pairs),
    ]
    for w in report.witnesses:
        detail = ", ".join(f"{k}={v}" for k, v in w.items() if k != "kind")
        lines.append(f"      witness ({w['kind']}): {detail}")
    return lines


def _result_csv(reports: list[tuple[str, analysis.ResultReport]]) -> list[list]:
    rows = [["row", "bijection", "passed", "all_preserved", "rank_left", "rank_right", "pairs", "maximal"]]
    for label, r in reports:
        rows.append([label, r.bijection, r.passed, r.all_preserved, r.rank_left, r.rank_right, len(r.pairs), r.maximal])
    return rows


def cmd_verify(args) -> int:
    if args.target == "thm2":
        return _verify_relations(args)
    max_len = args.max_len or 7
    preserve_len = max(args.preserve_len, max_len)
    if args.target == "thm1":
        reports = [(key, r) for key, r in analysis.verify_lists(max_len, preserve_len).items()]
    else:
        reports = [
            (label, r) for label, rs in analysis.verify_canonical_lists(max_len, preserve_len).items() for r in rs
        ]
    lines = []
    for label, r in reports:
        lines += [f"[{label}]"] + _result_lines(r)
    failed = sum(not r.passed for _, r in reports)
    lines.append(f"{len(reports) - failed} of {len(reports)} rows verified")
    _emit(
        args,
        {
            "target": args.target,
            "max_len": max_len,
            "preserve_len": preserve_len,
            "rows": [{"row": label, **r.to_dict(), "passed": r.passed} for label, r in reports],
        },
        "\n".join(lines),
        _result_csv(reports),
    )
    return EXIT_FAILED if failed else EXIT_OK


def _verify_relations(args) -> int:
    report = analysis.verify_relations(args.max_len or 8)
    lines = []
    for left, right, ok in report.identities:
        lines.append(f"{'VERIFIED' if ok else 'FAILED':<9}{left} = {right}")
    lines.append(
        f"{report.classes} classes of composites; {report.predicted} predicted from the identities alone"
    )
    for name, found in report.symmetries.items():
        lines.append(f"symmetry of {name}: " + ", ".join(f"{s} = {name}" for s in found))
    for merge in report.cross_family_merges:
        lines.append("unexpected relation: " + " = ".join(merge))
    for split in report.unexpected_splits:
        lines.append("predicted but unequal: " + ", ".join(split))
    lines.append(
        "no relations between different bijections beyond these"
        if report.no_other_relations
        else "further relations found"
    )
    _emit(
        args,
        report.to_dict(),
        "\n".join(lines),
        [["left", "right", "holds"]] + [[a, b, ok] for a, b, ok in report.identities],
    )
    return EXIT_OK if report.no_other_relations else EXIT_FAILED


def cmd_discover(args) -> int:
    b = _bijection(args.bijection)
    max_len = args.max_len or 7
    pairs = sorted(
        analysis.preserved_pairs(b, build_catalog(), max_len), key=lambda q: (q.left.name, q.right.name)
    )
    _emit(
        args,
        {
            "bijection": b.key,
            "max_len": max_len,
            "pairs": [{"left": q.left.name, "right": q.right.name} for q in pairs],
        },
        "\n".join(f"{q.left.name} -> {q.right.name}" for q in pairs),
        [["left", "right"]] + [[q.left.name, q.right.name] for q in pairs],
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.pattern not in PATTERNS:
        raise UsageError(f"pattern must be one of {', '.join(PATTERNS)}")
    if args.n < 0:
        raise UsageError("length must be non-negative")
    members = class_members(args.n, args.pattern)
    _emit(
        args,
        {"n": args.n, "pattern": args.pattern, "count": len(members), "permutations": [list(p) for p in members]},
        "\n".join(_show(p) for p in members),
        [["permutation"]] + [[_show(p)] for p in members],
    )
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    keys = list(bijections.CODECS) if args.codec == "all" else [args.codec]
    for key in keys:
        if key not in bijections.CODECS:
            raise UsageError(f"unknown codec {key!r}; expected one of {', '.join(bijections.CODECS)} or all")
    max_len = args.max_len or 8
    results = {key: [msg for n in range(max_len + 1) for msg in bijections.codec_roundtrip(key, n)] for key in keys}
    lines = [
        f"{'VERIFIED' if not problems else 'FAILED':<9}{key} (lengths 0..{max_len})" for key, problems in results.items()
    ]
    lines += [f"  {msg}" for problems in results.values() for msg in problems[:5]]
    _emit(
        args,
        {"max_len": max_len, "codecs": {k: {"ok": not v, "problems": v} for k, v in results.items()}},
        "\n".join(lines),
        [["codec", "ok", "problems"]] + [[k, not v, len(v)] for k, v in results.items()],
    )
    return EXIT_FAILED if any(results.values()) else EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", choices=("text", "json", "csv"), default="text",
        help="text for people, json (versioned by a schema field) or csv for tools",
    )
    lengths = argparse.ArgumentParser(add_help=False)
    lengths.add_argument("--max-len", type=int, default=None, metavar="N", help="largest length checked")

    parser = argparse.ArgumentParser(
        prog="permbij",
        description="Bijections between 321- and 132-avoiding permutations and the statistics they preserve.",
        epilog=STAT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    keys = ", ".join(bijections.BIJECTIONS)

    p = sub.add_parser("apply", parents=[common], help="apply a bijection", description=f"bijections: {keys}")
    p.add_argument("bijection")
    p.add_argument("perm")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("invert", parents=[common], help="invert a bijection", description=f"bijections: {keys}")
    p.add_argument("bijection")
    p.add_argument("perm")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser(
        "stat", parents=[common], help="evaluate a statistic",
        epilog=STAT_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("name")
    p.add_argument("perm")
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("catalog", parents=[common], help="list the distinct statistics")
    p.add_argument("--export", metavar="FILE", help="write the catalog as JSON to FILE")
    p.add_argument("--max-len", type=int, default=7, metavar="N", help="lengths used to decide equality (default 7)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser(
        "verify", parents=[common, lengths], help="check the equidistribution lists or the relations",
        description="thm1: lists per bijection; thm2: relations through trivial bijections; "
        "thm3: lists for the 321-to-132 forms. --max-len defaults to 7 (thm1, thm3) or 8 (thm2).",
    )
    p.add_argument("target", choices=("thm1", "thm2", "thm3"))
    p.add_argument("--preserve-len", type=int, default=8, metavar="N",
                   help="largest length on which listed pairs are checked (thm1, thm3; default 8)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("discover", parents=[common, lengths], help="all catalog pairs a bijection preserves")
    p.add_argument("bijection")
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("enumerate", parents=[common], help="list a pattern class")
    p.add_argument("n", type=int)
    p.add_argument("pattern")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "roundtrip", parents=[common, lengths], help="check a path codec",
        description=f"codecs: {', '.join(bijections.CODECS)}, or all",
    )
    p.add_argument("codec")
    p.set_defaults(func=cmd_roundtrip)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_len", None) is not None and args.max_len < 1:
        print("error: --max-len must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, UnknownStatistic, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
