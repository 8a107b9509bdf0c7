"""Command-line entry point.

Exit codes: 0 success / Excluded / all checks pass, 1 usage error,
2 mathematically negative outcome (Inconclusive verdict, failed audit step,
ceiling violation), 3 computational error.  Data goes to stdout (or
--output); logging and timings go to stderr only.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import bounds
from .audit import audit_q2_proof, audit_r_proof
from .characters import build_character, eval_char
from .errors import DomainError, NormEuclidError
from .exclusion import evaluate_exclusion, theorem5_check, theorem26_check, ugly_condition_check
from .nonresidue import nonresidue_data
from .survey import SurveyConfig, scan_records, spot_check, verify_q1_ceiling

WORKERS_ENV = "NORMEUCLID_WORKERS"

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2, 3

log = logging.getLogger("normeuclid")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text: str) -> int:
    """Integers, also written as 1e8 or 10**8."""
    text = text.strip().replace("_", "")
    try:
        if "**" in text:
            b, e = text.split("**")
            return int(b) ** int(e)
        if "e" in text.lower():
            m, e = text.lower().split("e")
            return int(m) * 10 ** int(e)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV}={raw!r} is not an integer") from None
    if n < 1:
        raise UsageError(f"{WORKERS_ENV} must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="normeuclid", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output", type=Path, help="write data here instead of stdout")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("char", help="evaluate chi(n)")
    s.add_argument("--ell", type=_int, default=3)
    s.add_argument("--f", type=_int, required=True)
    s.add_argument("--n", type=_int, required=True)

    s = sub.add_parser("nonres", help="q1, q2, r for one conductor")
    s.add_argument("--ell", type=_int, default=3)
    s.add_argument("--f", type=_int, required=True)

    s = sub.add_parser("exclude", help="apply the exclusion criteria")
    s.add_argument("--ell", type=_int, default=3)
    s.add_argument("--f", type=_int, required=True)

    s = sub.add_parser("bounds", help="GRH bound values at one conductor")
    s.add_argument("--ell", type=_int, default=3)
    s.add_argument("--f", type=_int, required=True)

    s = sub.add_parser("ctable", help="derive C_ell and compare with the table")
    s.add_argument("--ell", type=_int, action="append")

    s = sub.add_parser("audit", help="replay a bound proof numerically")
    s.add_argument("--which", choices=("q2", "r"), required=True)
    s.add_argument("--ell", type=_int, default=3)
    s.add_argument("--f", type=_int, required=True)

    for name, hlp in (("records", "record values of q1"), ("verify-q1", "check a q1 ceiling")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("--ell", type=_int, default=3)
        s.add_argument("--min", dest="f_min", type=_int, default=2)
        s.add_argument("--max", dest="f_max", type=_int, required=True)
        s.add_argument("--workers", type=_int)
        s.add_argument("--segment-size", type=_int, default=1 << 22)
        if name == "records":
            s.add_argument("--checkpoint", type=Path)
        else:
            s.add_argument("--ceiling", type=_int, required=True)

    s = sub.add_parser("spot", help="q1 for a single conductor")
    s.add_argument("--ell", type=_int, default=3)
    s.add_argument("--f", type=_int, required=True)
    return p


# --- emitters -----------------------------------------------------------------


def _emit_rows(out, fmt: str, header: list[str], rows: list[list], text_lines: list[str], obj) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for line in text_lines:
            out.write(line + "\n")


def _kv(d: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in d.items())


def cmd_char(args, out) -> int:
    v = eval_char(build_character(args.ell, args.f), args.n)
    d = {"tag": v.tag, "exponent": v.exponent}
    _emit_rows(out, args.format, ["tag", "exponent"], [[v.tag, "" if v.is_zero else v.exponent]], [str(v)], d)
    return EXIT_OK


def cmd_nonres(args, out) -> int:
    d = nonresidue_data(build_character(args.ell, args.f)).to_dict()
    _emit_rows(out, args.format, list(d), [list(d.values())], [_kv(d)], d)
    return EXIT_OK


def cmd_exclude(args, out) -> int:
    v = evaluate_exclusion(args.ell, args.f)
    d = v.to_dict()
    lines = [f"ell={v.ell} f={v.f} outcome={v.outcome}"]
    if v.fired_condition:
        lines.append(f"fired={v.fired_condition}")
    if v.nonresidue:
        lines.append(_kv(v.nonresidue.to_dict()))
    rows = []
    for w in v.witnesses:
        for i in w.inequalities:
            lines.append(f"{w.condition}: {i.label}: {i.lhs!r} {i.relation} {i.rhs!r} -> {i.holds}")
            rows.append([w.condition, w.guard_ok, i.label, repr(i.lhs), i.relation, repr(i.rhs), i.holds])
    for cond, reason in v.failure_log.items():
        lines.append(f"{cond} failed: {reason}")
    if v.note:
        lines.append(f"note: {v.note}")
    header = ["condition", "guard_ok", "label", "lhs", "relation", "rhs", "holds"]
    _emit_rows(out, args.format, header, rows, lines, d)
    return EXIT_OK if v.excluded else EXIT_NEGATIVE


def _maybe(fn, *a):
    try:
        return fn(*a)
    except DomainError:
        return None


def cmd_bounds(args, out) -> int:
    ell, f = args.ell, args.f
    if f < 2 or ell < 3 or ell % 2 == 0:
        raise UsageError("need f >= 2 and ell an odd prime")
    c = bounds.analytic_constants()
    d = {
        "ell": ell,
        "f": f,
        "psiQ_3_2": c.psiQ_3_2,
        "zeta_log_deriv_2": c.zeta_log_deriv_2,
        "bach_q1_bound": _maybe(bounds.bach_q1_bound, f),
        "q2_bound": _maybe(bounds.q2_bound, f),
        "r_bound": _maybe(bounds.r_bound, ell, f),
        "zero_sum_bound_chi": _maybe(bounds.zero_sum_bound_chi, f, 0.5),
        "zero_sum_bound_chi_rounded": bounds.zero_sum_bound_chi_rounded(f),
        "zero_sum_bound_K": _maybe(bounds.zero_sum_bound_K, ell, f, 0.5),
        "zero_sum_bound_K_rounded": bounds.zero_sum_bound_K_rounded(ell, f),
        "theorem5": _maybe(theorem5_check, ell, f),
        "ugly_condition": _maybe(ugly_condition_check, ell, f),
        "theorem26": _maybe(theorem26_check, ell, f),
    }
    lines = [f"{k} = {'n/a' if v is None else v}" for k, v in d.items()]
    _emit_rows(out, args.format, ["quantity", "value"], [[k, v] for k, v in d.items()], lines, d)
    return EXIT_OK


def cmd_ctable(args, out) -> int:
    reports = bounds.derive_C_table(args.ell)
    header = ["ell", "crossover_theorem5", "crossover_ugly", "table2_value", "match_flag"]
    rows = [[r.ell, r.crossover_theorem5, r.crossover_ugly, r.table2_value, r.match_flag] for r in reports]
    lines = [
        f"ell={r.ell} theorem5=10^{r.crossover_theorem5} ugly=10^{r.crossover_ugly} "
        f"table=10^{r.table2_value} match={r.match_flag}"
        for r in reports
    ]
    for r in reports:
        if r.finding:
            log.warning("finding: %s", r.finding)
    _emit_rows(out, args.format, header, rows, lines, [r.to_dict() for r in reports])
    ok = all(r.match_flag != "neither" and r.verified for r in reports)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_audit(args, out) -> int:
    rep = audit_q2_proof(args.f) if args.which == "q2" else audit_r_proof(args.ell, args.f)
    header = ["label", "relation", "claimed", "rounded", "exact", "passed"]
    rows = [[s.label, s.relation, repr(s.claimed), repr(s.rounded), repr(s.exact), s.passed] for s in rep.steps]
    lines = [f"{rep.context} ell={rep.ell} f={rep.f:g}"]
    lines += [
        f"{'PASS' if s.passed else 'FAIL'} {s.label}: exact {s.exact:.6g} {s.relation} {s.claimed:.6g} "
        f"(rounded chain {s.rounded:.6g})"
        for s in rep.steps
    ]
    _emit_rows(out, args.format, header, rows, lines, rep.to_dict())
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def _survey_config(args, **extra) -> SurveyConfig:
    workers = args.workers if args.workers is not None else _default_workers()
    try:
        return SurveyConfig(args.f_min, args.f_max, ell=args.ell, segment_size=args.segment_size,
                            workers=workers, **extra)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_records(args, out) -> int:
    cfg = _survey_config(args, checkpoint=args.checkpoint)
    if args.format == "text":
        scan_records(cfg, on_record=lambda r: (out.write(f"{r}\n"), out.flush()))
        return EXIT_OK
    recs = scan_records(cfg)
    _emit_rows(out, args.format, ["f", "q1"], [[r.f, r.q1] for r in recs], [], [r.to_dict() for r in recs])
    return EXIT_OK


def cmd_verify_q1(args, out) -> int:
    cfg = _survey_config(args, q1_ceiling=args.ceiling)
    rep = verify_q1_ceiling(cfg)
    lines = [f"max_q1={rep.max_q1} argmax_f={rep.argmax_f} conductors={rep.conductors} "
             f"violations={len(rep.violations)}"]
    lines += [f"violation: f={v.f}, q1={v.q1}" for v in rep.violations]
    rows = [[rep.max_q1, rep.argmax_f, rep.conductors, ";".join(f"{v.f}:{v.q1}" for v in rep.violations)]]
    _emit_rows(out, args.format, ["max_q1", "argmax_f", "conductors", "violations"], rows, lines, rep.to_dict())
    return EXIT_NEGATIVE if rep.violations else EXIT_OK


def cmd_spot(args, out) -> int:
    rec = spot_check(args.ell, args.f)
    _emit_rows(out, args.format, ["f", "q1"], [[rec.f, rec.q1]], [f"f={rec.f}, q1={rec.q1}"], rec.to_dict())
    return EXIT_OK


COMMANDS = {
    "char": cmd_char,
    "nonres": cmd_nonres,
    "exclude": cmd_exclude,
    "bounds": cmd_bounds,
    "ctable": cmd_ctable,
    "audit": cmd_audit,
    "records": cmd_records,
    "verify-q1": cmd_verify_q1,
    "spot": cmd_spot,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("normeuclid")
    root.handlers[:] = [handler]
    root.setLevel(logging.WARNING - 10 * min(args.verbose, 2))
    t0 = time.perf_counter()
    try:
        with contextlib.ExitStack() as stack:
            out = stack.enter_context(open(args.output, "w")) if args.output else stdout
            code = COMMANDS[args.command](args, out)
    except UsageError as exc:
        stderr.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except (NormEuclidError, ArithmeticError, ValueError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}\n")
        return EXIT_ERROR
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - t0)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
