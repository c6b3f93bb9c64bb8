"""Command-line front end: degrees, SNPD checks, verification suites, exports.

Exit codes: 0 when every executed check passed, 1 on verification failure,
2 on usage or input errors. Output is deterministic byte-for-byte for a
fixed argument list; JSON payloads follow the schemas shipped under
schemas/.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path

from . import __version__, atlas_data, theorem_suite
from .numtheory import Factorization
from .partitions import conjugate, iter_partitions
from .reporting import SuiteReport
from .snpd_core import profile
from .sym_degrees import DegreeSet, an_restriction_classes, character_degree

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_SUITES = ("theorem12", "sporadic", "covers", "corollary", "table2", "lemmas")
_DECIMAL_DEFAULT_MAX_N = 20


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _json_dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True)


def _csv_lines(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _degree_text(value: int, fact, show_decimal: bool) -> str:
    if show_decimal:
        return f"{value} = {fact}" if value > 1 else "1"
    return str(fact)


def cmd_degrees(args: argparse.Namespace) -> int:
    target, n = args.target, args.n
    minimum = 1 if target == "S" else 2
    if n < minimum:
        return _usage_error(f"target {target} requires n >= {minimum}")
    if n > args.cap:
        return _usage_error(f"n = {n} exceeds the cap {args.cap}; raise --cap if intended")
    show_decimal = args.decimal or n <= _DECIMAL_DEFAULT_MAX_N
    entries = []
    pairs = []
    if target == "S":
        for lam in iter_partitions(n):
            c = character_degree(lam)
            entries.append((str(lam), "", 1, c.value, c.factorization))
            pairs.append((c.value, c.factorization))
    else:
        for lam, count, value, fact in an_restriction_classes(n):
            if count == 2:
                entries.append((str(lam), "splits", 2, value, fact))
            else:
                entries.append((f"{lam} ~ {conjugate(lam)}", "pair", 1, value, fact))
            pairs.append((value, fact))
    cd = DegreeSet.from_pairs(pairs)
    group = f"{target}_{n}"
    if args.format == "json":
        payload = {
            "command": "degrees",
            "group": group,
            "n": n,
            "entries": [
                {
                    "partition": label,
                    "kind": kind or "irreducible",
                    "count": count,
                    "degree": str(value),
                    "factorization": str(fact),
                }
                for label, kind, count, value, fact in entries
            ],
            "cd": [
                {"value": str(d), "factorization": str(f)} for d, f in cd.pairs()
            ],
        }
        _emit(_json_dumps(payload), args.out)
    elif args.format == "csv":
        rows = [
            [label, kind or "irreducible", str(count), str(value), str(fact)]
            for label, kind, count, value, fact in entries
        ]
        _emit(_csv_lines(["partition", "kind", "count", "degree", "factorization"], rows), args.out)
    else:
        lines = [f"{group}: irreducible degrees by partition"]
        for label, kind, count, value, fact in entries:
            marker = f" [{kind} x{count}]" if kind == "splits" else (f" [{kind}]" if kind else "")
            lines.append(f"  {label:<28}{_degree_text(value, fact, show_decimal)}{marker}")
        if show_decimal:
            body = ", ".join(str(d) for d in cd.degrees)
        else:
            body = ", ".join(str(f) for f in cd.factorizations)
        lines.append(f"cd({group}) = {{{body}}}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_snpd(args: argparse.Namespace) -> int:
    raw = args.target
    if re.fullmatch(r"[0-9][0-9,\s]*", raw.strip()):
        values = [int(tok) for tok in raw.replace(",", " ").split()]
        if not values or any(v < 1 for v in values):
            return _usage_error("degree lists must contain positive integers")
        name = "degree list"
        try:
            cd = DegreeSet.from_values(values)
        except ValueError as exc:
            return _usage_error(str(exc))
    else:
        try:
            record = atlas_data.lookup(raw)
            name, cd = record.name, record.cd
        except KeyError as exc:
            # sporadic names resolve to their cited two-degree witness pair
            wanted = atlas_data.canonical_name(raw)
            pair = next(
                (p for p in atlas_data.sporadic_pairs() if p.name == wanted), None
            )
            if pair is None:
                return _usage_error(exc.args[0])
            name = f"{pair.name} (cited degree pair)"
            cd = DegreeSet.from_pairs(
                [
                    (1, Factorization()),
                    (pair.first.value, pair.first.factorization),
                    (pair.second.value, pair.second.factorization),
                ]
            )
    result = profile(name, cd)
    verdict = result.verdict
    if args.format == "csv":
        header = ["name", "is_snpd", "common_omega", "witness", "rho", "sigma"]
        row = [
            name,
            "true" if verdict.is_snpd else "false",
            "" if verdict.common_omega is None else str(verdict.common_omega),
            "" if verdict.witness is None else f"{verdict.witness[0]} {verdict.witness[1]}",
            " ".join(str(p) for p in result.rho),
            str(result.sigma),
        ]
        _emit(_csv_lines(header, [row]), args.out)
    elif args.format == "json":
        payload = {
            "command": "snpd",
            "name": name,
            "cd": [{"value": str(d), "factorization": str(f)} for d, f in cd.pairs()],
            "is_snpd": verdict.is_snpd,
            "common_omega": verdict.common_omega,
            "witness": list(verdict.witness) if verdict.witness else None,
            "rho": list(result.rho),
            "sigma": result.sigma,
        }
        _emit(_json_dumps(payload), args.out)
    else:
        lines = [f"{name}: cd = {{{', '.join(str(d) for d in cd.degrees)}}}"]
        if verdict.is_snpd and verdict.common_omega is not None:
            lines.append(f"SNPD: yes, common omega = {verdict.common_omega}")
        elif verdict.is_snpd:
            lines.append("SNPD: yes (vacuously; no degree above 1)")
        else:
            a, b = verdict.witness
            wa = next(f.omega for d, f in cd.pairs() if d == a)
            wb = next(f.omega for d, f in cd.pairs() if d == b)
            lines.append(f"SNPD: no, witness ({a}, {b}) with omega {wa} != {wb}")
        lines.append(f"rho = {{{', '.join(str(p) for p in result.rho)}}}")
        lines.append(f"sigma = {result.sigma}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def _run_suites(names: tuple[str, ...], n_max: int) -> list[SuiteReport]:
    reports = [atlas_data.integrity_check()]
    for name in names:
        if name == "theorem12":
            reports.append(theorem_suite.case_tree_suite(n_max))
        elif name == "sporadic":
            reports.append(theorem_suite.verify_sporadic_pairs())
        elif name == "covers":
            reports.append(theorem_suite.verify_cover_families())
        elif name == "corollary":
            reports.append(theorem_suite.verify_rho_sigma_bounds())
        elif name == "table2":
            reports.append(theorem_suite.verify_a7_subgroup_indices())
        elif name == "lemmas":
            reports.append(theorem_suite.verify_lemmas())
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 8:
        return _usage_error(f"--n-max must be at least 8, got {args.n_max}")
    names = _SUITES if args.suite == "all" else (args.suite,)
    reports = _run_suites(names, args.n_max)
    all_passed = all(report.passed for report in reports)
    if args.format == "json":
        payload = {
            "command": "verify",
            "suites": [report.to_dict() for report in reports],
            "passed": all_passed,
        }
        _emit(_json_dumps(payload), args.out)
    elif args.format == "csv":
        rows = [
            [report.suite, item.name, "pass" if item.passed else "fail", item.detail]
            for report in reports
            for item in report.items
        ]
        _emit(_csv_lines(["suite", "item", "result", "detail"], rows), args.out)
    else:
        lines = []
        for report in reports:
            good, total = report.counts
            for item in report.items:
                status = "PASS" if item.passed else "FAIL"
                suffix = f": {item.detail}" if item.detail else ""
                lines.append(f"{status} [{report.suite}] {item.name}{suffix}")
            lines.append(f"suite {report.suite}: {good}/{total} passed")
        lines.append(f"overall: {'PASS' if all_passed else 'FAIL'}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if all_passed else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    if args.n_from < 8 or args.n_from > args.n_to:
        return _usage_error("search requires 8 <= n_from <= n_to")
    reports = [theorem_suite.case_report(n) for n in range(args.n_from, args.n_to + 1)]
    all_passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "command": "search",
            "from": args.n_from,
            "to": args.n_to,
            "cases": [r.to_dict() for r in reports],
            "passed": all_passed,
        }
        _emit(_json_dumps(payload), args.out)
    elif args.format == "csv":
        rows = []
        for r in reports:
            low, high = r.witness
            rows.append(
                [
                    str(r.n),
                    r.branch.value,
                    str(low.value),
                    str(low.factorization),
                    str(low.omega),
                    str(high.value),
                    str(high.factorization),
                    str(high.omega),
                    "pass" if r.passed else "fail",
                ]
            )
        header = [
            "n",
            "branch",
            "low",
            "low_factorization",
            "low_omega",
            "high",
            "high_factorization",
            "high_omega",
            "result",
        ]
        _emit(_csv_lines(header, rows), args.out)
    else:
        lines = []
        for r in reports:
            low, high = r.witness
            show_decimal = args.decimal or r.n <= _DECIMAL_DEFAULT_MAX_N
            if show_decimal:
                low_text, high_text = str(low), str(high)
            else:
                low_text, high_text = str(low.factorization), str(high.factorization)
            status = "" if r.passed else "  ** FAILED **"
            lines.append(
                f"n={r.n} branch={r.branch.value}: {low_text} (omega={low.omega})"
                f" < {high_text} (omega={high.omega}){status}"
            )
        _emit("\n".join(lines), args.out)
    return EXIT_OK if all_passed else EXIT_FAIL


def cmd_export(args: argparse.Namespace) -> int:
    data = atlas_data.dataset_dict()
    try:
        atlas_data.export_data(args.export_format, args.destination)
    except (OSError, ValueError) as exc:
        return _usage_error(f"export failed for {args.destination}: {exc}")
    counts = [
        f"groups: {len(data['groups'])} records",
        f"sporadic_pairs: {len(data['sporadic_pairs'])} records",
        f"maximal_subgroups: {len(data['maximal_subgroups'])} records",
        f"cover_families: {len(data['cover_families'])} records",
    ]
    _emit("\n".join(counts), None)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument("--format", choices=formats, default="text")
    parser.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snpd",
        description="Exact character-degree arithmetic and SNPD verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_degrees = sub.add_parser("degrees", help="character degrees of S_n or A_n")
    p_degrees.add_argument("target", choices=("S", "A"))
    p_degrees.add_argument("n", type=int)
    p_degrees.add_argument("--cap", type=int, default=60, help="refuse n above this bound")
    p_degrees.add_argument("--decimal", action="store_true", help="print decimal values even for large n")
    _add_common(p_degrees, ("text", "json", "csv"))
    p_degrees.set_defaults(func=cmd_degrees)

    p_snpd = sub.add_parser("snpd", help="SNPD verdict for a named group or a degree list")
    p_snpd.add_argument("target", help="group name (e.g. A_7) or comma-separated degrees")
    _add_common(p_snpd, ("text", "json", "csv"))
    p_snpd.set_defaults(func=cmd_snpd)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", choices=_SUITES + ("all",))
    p_verify.add_argument("--n-max", type=int, default=10000, dest="n_max")
    _add_common(p_verify, ("text", "json", "csv"))
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="branch and witness pair for each n in a range")
    p_search.add_argument("n_from", type=int)
    p_search.add_argument("n_to", type=int)
    p_search.add_argument("--decimal", action="store_true")
    _add_common(p_search, ("text", "json", "csv"))
    p_search.set_defaults(func=cmd_search)

    p_export = sub.add_parser("export", help="write the embedded dataset to disk")
    p_export.add_argument("export_format", choices=("json", "csv"), metavar="format")
    p_export.add_argument("destination")
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        return _usage_error(f"I/O error: {exc}")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
