"""Command line entry point: ``simulprime check|scan|verify|bench|list-criteria``.

Exit codes: 0 success (or verdict true), 1 verification mismatch,
2 usage or domain error, 3 ``check`` verdict false.
"""
import argparse
import csv
import io
import json
import os
import sys
import time

from .combinator import DivisorInvalid
from .constellations import NAMED_FORM_IDS, NamedForm, TuplePattern, UnknownForm, get_form, scan
from .criteria import DomainError, list_criteria
from .numkernel import DEFAULT_FACTORIAL_CAP, CapExceeded
from .oracle import BadRange, sieve_tuple_bases, verify_equivalence

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_FALSE = 0, 1, 2, 3

CSV_COLUMNS = ["p", "targets", "form", "verdict", "residue", "modulus", "reason"]
BENCH_COLUMNS = ["form", "pattern", "candidates", "hits", "seconds", "us_per_candidate", "ratio_vs_sieve"]

# Below this many bases a process pool costs more than it saves.
_PARALLEL_MIN = 2000


class UsageError(Exception):
    pass


def parse_range(text):
    lo, sep, hi = (text or "").partition("..")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like lo..hi, got {text!r}") from None
    if not sep or lo < 0 or hi < lo:
        raise UsageError(f"invalid range {text!r}")
    return lo, hi


def _str(value):
    return None if value is None else str(value)


def make_record(form, p, verdict, witness=False):
    """One output record; integers are decimal strings so JSON stays exact."""
    record = {
        "p": str(p),
        "targets": [str(t) for t in form.pattern.targets(p)],
        "form": form.id,
        "verdict": verdict.holds,
        "residue": _str(verdict.residue),
        "modulus": _str(verdict.modulus),
        "reason": verdict.reason,
    }
    if witness:
        record["witness"] = _str(verdict.witness)
    return record


def render_records(records, fmt, witness=False):
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    columns = CSV_COLUMNS + (["witness"] if witness else [])
    rows = [[_cell(r[c]) for c in columns] for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buf.getvalue()
    return _table(columns, rows)


def _cell(value):
    if isinstance(value, list):
        return ";".join(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


def _table(columns, rows):
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _resolve_form(args, name=None):
    pattern = TuplePattern.parse(args.pattern) if args.pattern else None
    try:
        form = get_form(name or args.form, pattern=pattern, k=args.k, d=args.d)
    except UnknownForm as exc:
        raise UsageError(str(exc)) from None
    if pattern is not None and form.pattern != pattern:
        raise UsageError(f"form {form.id} has pattern {form.pattern}, not {pattern}")
    return form


def _jobs(args, lo, hi):
    if hi - lo + 1 < _PARALLEL_MIN:
        return 1
    return args.jobs


def cmd_check(args, out):
    if args.form is None or args.p is None:
        raise UsageError("check needs --form and --p")
    form = _resolve_form(args)
    if not form.in_domain(args.p):
        raise DomainError(f"p={args.p} is outside the domain of {form.id} ({form.domain})")
    verdict = form.evaluate(args.p, witness=args.witness, cap=args.witness_cap)
    out.write(render_records([make_record(form, args.p, verdict, args.witness)],
                             args.format, args.witness))
    return EXIT_OK if verdict.holds else EXIT_FALSE


def cmd_scan(args, out):
    if args.form is None or args.range is None:
        raise UsageError("scan needs --form and --range")
    form = _resolve_form(args)
    lo, hi = parse_range(args.range)
    bases = scan(form, lo, hi, jobs=_jobs(args, lo, hi))
    records = [make_record(form, p, form.evaluate(p, witness=args.witness, cap=args.witness_cap),
                           args.witness)
               for p in bases]
    out.write(render_records(records, args.format, args.witness))
    return EXIT_OK


def cmd_verify(args, out):
    if args.form is None or args.range is None:
        raise UsageError("verify needs --form and --range")
    form = _resolve_form(args)
    lo, hi = parse_range(args.range)
    report = verify_equivalence(form, lo, hi, jobs=_jobs(args, lo, hi))
    if args.format == "json":
        out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["form", "p", "form_verdict", "oracle_verdict"])
        for p, f, o in report.mismatches:
            writer.writerow([report.form, p, _cell(f), _cell(o)])
        out.write(buf.getvalue())
    else:
        out.write(f"form {report.form} pattern {','.join(map(str, report.pattern))} "
                  f"range {lo}..{hi}\n")
        out.write(f"checked {report.checked}  true {report.true_count}  "
                  f"mismatches {len(report.mismatches)}  elapsed {report.elapsed:.3f}s\n")
        for p, f, o in report.mismatches:
            out.write(f"mismatch p={p} form={_cell(f)} oracle={_cell(o)}\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bench(args, out):
    names = args.forms or args.form
    if not names or args.range is None:
        raise UsageError("bench needs --forms and --range")
    forms = [_resolve_form(args, name) for name in names.split(",") if name]
    if not forms:
        raise UsageError("bench needs at least one form")
    lo, hi = parse_range(args.range)
    jobs = _jobs(args, lo, hi)

    baselines = {}
    for form in forms:
        offsets = form.pattern.offsets
        if offsets not in baselines:
            start = time.perf_counter()
            hits = len(sieve_tuple_bases(offsets, lo, hi))
            baselines[offsets] = (time.perf_counter() - start, hits)

    rows = []
    for form in forms:
        candidates = sum(1 for p in range(lo, hi + 1) if form.in_domain(p))
        start = time.perf_counter()
        hits = len(scan(form, lo, hi, jobs=jobs))
        seconds = time.perf_counter() - start
        base_seconds = baselines[form.pattern.offsets][0]
        rows.append([form.id, str(form.pattern), str(candidates), str(hits), f"{seconds:.6f}",
                     f"{1e6 * seconds / candidates:.3f}" if candidates else "0.000",
                     f"{seconds / base_seconds:.1f}" if base_seconds > 0 else "inf"])
    for offsets, (seconds, hits) in baselines.items():
        n = hi - lo + 1
        rows.append(["oracle-sieve", ",".join(map(str, offsets)), str(n), str(hits),
                     f"{seconds:.6f}", f"{1e6 * seconds / n:.3f}", "1.0"])

    if args.format == "json":
        out.write(json.dumps([dict(zip(BENCH_COLUMNS, r)) for r in rows], sort_keys=True) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(_table(BENCH_COLUMNS, rows))
    return EXIT_OK


def listing():
    """Rows ``(kind, id, domain, provenance)`` for every criterion and form."""
    rows = [("criterion", c.name, c.domain, c.provenance) for c in list_criteria()]
    for form_id in NAMED_FORM_IDS:
        kind = form_id.split(":")[0]
        form = NamedForm(kind, 1 if ":" in form_id else None)
        rows.append(("form", form_id, form.domain, form.provenance))
    rows += [
        ("combined", "weighted", "pairwise-coprime targets", "weighted sum of conditions mod R"),
        ("combined", "divisor:D", "D divides R", "weighted sum divided by D, mod R/D"),
        ("combined", "integer-sum", "pairwise-coprime targets", "sum of c_i/r_i is an integer"),
        ("preset", "T", "pattern targets >= k", "Simionov conditions, weighted sum"),
        ("preset", "U:s", "1 <= s <= targets", "Simionov conditions, modulus p_1...p_s"),
        ("preset", "V:j", "1 <= j <= targets", "Simionov conditions, modulus p_j"),
        ("preset", "W", "pattern targets >= k", "Simionov conditions, integer sum"),
    ]
    return rows


def cmd_list(args, out):
    columns = ["kind", "id", "domain", "provenance"]
    rows = [list(r) for r in listing()]
    if args.format == "json":
        out.write(json.dumps([dict(zip(columns, r)) for r in rows], sort_keys=True) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(_table(columns, rows))
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "list-criteria": cmd_list,
}


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--form", help="form id, e.g. twin-a, pair-c:4, named:quad, weighted, U:1")
    common.add_argument("--forms", help="comma-separated form ids (bench)")
    common.add_argument("--pattern", help="offsets o1,o2,... for combined forms "
                                          "(write --pattern=-2,0,4 for negative offsets)")
    common.add_argument("--p", type=_natural, help="base to check")
    common.add_argument("--range", help="inclusive base range lo..hi")
    common.add_argument("--k", help="Simionov k (integer or 'balanced'), or the gap of pair forms")
    common.add_argument("--d", type=_positive, help="divisor D for a bare 'divisor' form")
    common.add_argument("--format", choices=["json", "csv", "table"], default="table")
    common.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    common.add_argument("--witness-cap", type=_natural, default=DEFAULT_FACTORIAL_CAP)
    common.add_argument("--witness", action="store_true",
                        help="include the exact unreduced witness in records")

    parser = argparse.ArgumentParser(
        prog="simulprime",
        description="Check, scan and verify congruence characterizations of simultaneous primes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DomainError, DivisorInvalid, BadRange, CapExceeded, ValueError) as exc:
        print(f"simulprime {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
