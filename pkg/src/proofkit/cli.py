"""Command-line front end: ``proofkit <command> ...``.

Exit status is 0 on success, 1 when a derivation fails its checker or a
transformation cannot be carried out, and 2 on usage or parse errors.
Reports are ``key: value`` lines (JSON with ``--json``).  A produced
derivation goes to ``--out`` when given; otherwise it is printed on
standard output and the report moves to standard error, so the output
stays a loadable file.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .calculi.check import check, is_cut_free
from .calculi.constructions import ConstructionError, cut_count, derive_identity, neg_left_inverse
from .calculi.io import FormatError, dump_derivation, load_derivation
from .calculi.tree import LT, SLT, canonical_vars
from .natded.check import check_nd, is_normal, open_assumptions
from .natded.io import dump_nd, load_nd
from .reduce import ReductionError, ReductionTrace, find_redexes, reduce_at, reduce_to_normal
from .syntax import FormulaSyntaxError, Neg, format_formula, parse_formula, parse_index
from .syntax.trace import find_countermodel
from .transform import (
    FuelExhausted,
    TranslationError,
    cut_eliminate_lt,
    default_fuel,
    lt_cutfree_to_slt_cutfree,
    nlt_to_slt,
    cut_eliminate_slt,
    slt_cutfree_to_nd_normal,
    slt_to_lt,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Failure(Exception):
    """A semantic failure: reported with exit status 1."""

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}


# ---------------------------------------------------------------- helpers


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, calculus: str):
    text = _read(path)
    return load_nd(text) if calculus == "nd" else load_derivation(text)


def _check(d, calculus: str):
    return check_nd(d) if calculus == "nd" else check(d, calculus)


def _require_ok(d, calculus: str, what: str = "input"):
    report = _check(d, calculus)
    if not report.ok:
        raise Failure(f"{what} does not check in {calculus}", _report_dict(report))
    return report


def _report_dict(report) -> dict:
    return {
        "ok": report.ok,
        "cuts": report.cut_count,
        "omega": report.uses_omega,
        "violations": [f"{path}: {msg}" for path, msg in report.violations],
    }


def _dump(d, calculus: str) -> str:
    return dump_nd(d) if calculus == "nd" else dump_derivation(d)


def _summary(d, calculus: str) -> dict:
    report = _require_ok(d, calculus, "output")
    out = {"ok": True, "calculus": calculus}
    if calculus == "nd":
        out["end"] = format_formula(d.conclusion)
        out["open"] = sorted(format_formula(f) for f in open_assumptions(d))
        out["normal"] = is_normal(d)
    else:
        out["end"] = str(d.conclusion)
        out["cuts"] = report.cut_count
        out["cut_free"] = is_cut_free(d)
    out["omega"] = report.uses_omega
    return out


# ---------------------------------------------------------------- commands


def cmd_check(args):
    d = _load(args.file, args.calculus)
    report = _check(d, args.calculus)
    out = _report_dict(report)
    if args.calculus == "nd" and report.ok:
        out["end"] = format_formula(d.conclusion)
        out["open"] = sorted(format_formula(f) for f in open_assumptions(d))
        out["normal"] = is_normal(d)
    return (OK if report.ok else FAILED), out, None


_TRANSLATIONS = {
    ("nd", "slt"): lambda d: nlt_to_slt(d),
    ("nd", "lt"): lambda d: slt_to_lt(nlt_to_slt(d)),
    ("slt", "lt"): lambda d: slt_to_lt(d),
    ("lt", "slt"): lambda d: lt_cutfree_to_slt_cutfree(d),
    ("slt", "nd"): lambda d: slt_cutfree_to_nd_normal(d),
    ("lt", "nd"): lambda d: slt_cutfree_to_nd_normal(lt_cutfree_to_slt_cutfree(d)),
}


def cmd_translate(args):
    key = (args.source, args.target)
    if key not in _TRANSLATIONS:
        raise UsageError(f"no translation from {args.source} to {args.target}")
    d = _load(args.file, args.source)
    _require_ok(d, args.source)
    result = _TRANSLATIONS[key](d)
    return OK, _summary(result, args.target), (result, args.target)


def cmd_cutelim(args):
    d = _load(args.file, args.calculus)
    _require_ok(d, args.calculus)
    fuel = args.fuel if args.fuel is not None else default_fuel()
    stages = [("input", d, args.calculus)]
    if args.calculus == LT:
        result = cut_eliminate_lt(d, fuel)
    else:
        lt = slt_to_lt(d)
        free = cut_eliminate_lt(lt, fuel)
        image = lt_cutfree_to_slt_cutfree(free)
        goal = d.conclusion.goal
        result = image if goal is None else neg_left_inverse(image, Neg(goal), d.conclusion.ante)
        result = canonical_vars(result)
        stages += [("slt_to_lt", lt, LT), ("cut_eliminate_lt", free, LT), ("lt_cutfree_to_slt_cutfree", image, SLT)]
    stages.append(("output", result, args.calculus))
    if args.emit_trace:
        _write_stages(args.emit_trace, stages)
    out = _summary(result, args.calculus)
    out["input_cuts"] = cut_count(d)
    out["steps"] = len(stages)
    if result.conclusion != d.conclusion:
        raise Failure("end-sequent changed", out)
    return OK, out, (result, args.calculus)


def cmd_normalize(args):
    d = _load(args.file, "nd")
    _require_ok(d, "nd")
    if args.mode == "indirect":
        slt = nlt_to_slt(d)
        free = cut_eliminate_slt(slt, args.fuel)
        result = slt_cutfree_to_nd_normal(free)
        stages = [("input", d, "nd"), ("nlt_to_slt", slt, SLT), ("cut_eliminate_slt", free, SLT), ("output", result, "nd")]
        if args.emit_trace:
            _write_stages(args.emit_trace, stages)
        out = _summary(result, "nd")
        out["steps"] = len(stages)
    else:
        fuel = args.fuel if args.fuel is not None else default_fuel()
        trace = reduce_to_normal(d, fuel)
        result = trace.final(d)
        if args.emit_trace:
            Path(args.emit_trace).write_text(trace.to_json() + "\n", encoding="utf-8")
        out = _summary(result, "nd")
        out["steps"] = len(trace.steps)
        out["terminated_normal"] = trace.terminated_normal
        if not trace.terminated_normal:
            raise Failure("fuel exhausted before a normal form was reached", out)
    if not out["normal"]:
        raise Failure("result is not normal", out)
    return OK, out, (result, "nd")


def cmd_reduce(args):
    d = _load(args.file, "nd")
    _require_ok(d, "nd")
    steps = []
    current = d
    for _ in range(args.steps):
        redexes = find_redexes(current)
        if not redexes:
            break
        current = reduce_at(current, redexes[0])
        steps.append((redexes[0], current))
    if args.emit_trace:
        Path(args.emit_trace).write_text(ReductionTrace(steps, is_normal(current)).to_json() + "\n", encoding="utf-8")
    out = _summary(current, "nd")
    out["steps"] = len(steps)
    out["cases"] = [r.case_id for r, _ in steps]
    out["remaining"] = len(find_redexes(current))
    return OK, out, (current, "nd")


def cmd_identity(args):
    alpha = _formula(args.formula)
    try:
        i = parse_index(args.index)
    except ValueError as exc:
        raise UsageError(f"bad index {args.index!r}: {exc}") from None
    context = [_formula(f) for f in args.context]
    d = derive_identity(alpha, i, context, args.calculus)
    return OK, _summary(d, args.calculus), (d, args.calculus)


def cmd_oracle(args):
    f = _formula(args.formula)
    cm = find_countermodel(f, args.max_lasso, f.atoms() | set(args.atoms or ()))
    out = {"formula": format_formula(f), "max_lasso": args.max_lasso, "valid": cm is None}
    if cm is not None:
        out["countermodel_prefix"] = [_state(s) for s in cm.prefix]
        out["countermodel_loop"] = [_state(s) for s in cm.loop]
    return (OK if cm is None else FAILED), out, None


def _state(s) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def _formula(text: str):
    try:
        return parse_formula(text)
    except FormulaSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _write_stages(path: str, stages) -> None:
    data = [
        {"step": n + 1, "stage": name, "cuts": cut_count(x) if calc != "nd" else 0, "derivation": _dump(x, calc)}
        for n, (name, x, calc) in enumerate(stages)
    ]
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="proofkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out=True):
        sp.add_argument("--json", action="store_true", help="print the report as JSON")
        if out:
            sp.add_argument("--out", help="write the produced derivation here")

    sp = sub.add_parser("check", help="check a derivation file")
    sp.add_argument("--calculus", choices=("lt", "slt", "nd"), required=True)
    sp.add_argument("file")
    common(sp, out=False)
    sp.set_defaults(run=cmd_check)

    sp = sub.add_parser("translate", help="translate between calculi")
    sp.add_argument("--from", dest="source", choices=("nd", "slt", "lt"), required=True)
    sp.add_argument("--to", dest="target", choices=("nd", "slt", "lt"), required=True)
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(run=cmd_translate)

    sp = sub.add_parser("cutelim", help="eliminate cuts from an LT or SLT derivation")
    sp.add_argument("--calculus", choices=("lt", "slt"), required=True)
    sp.add_argument("--fuel", type=int, default=None)
    sp.add_argument("--emit-trace", help="write the pipeline stages as JSON")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(run=cmd_cutelim)

    sp = sub.add_parser("normalize", help="normalize an ND derivation")
    sp.add_argument("--mode", choices=("direct", "indirect"), default="direct")
    sp.add_argument("--fuel", type=int, default=None)
    sp.add_argument("--emit-trace", help="write the reduction trace as JSON")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(run=cmd_normalize)

    sp = sub.add_parser("reduce", help="apply leftmost-innermost reduction steps")
    sp.add_argument("--steps", type=int, default=1)
    sp.add_argument("--emit-trace", help="write the reduction trace as JSON")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(run=cmd_reduce)

    sp = sub.add_parser("identity", help="derive X^i a, context => X^i a")
    sp.add_argument("--formula", required=True)
    sp.add_argument("--index", default="0")
    sp.add_argument("--context", action="append", default=[], help="antecedent formula (repeatable)")
    sp.add_argument("--calculus", choices=("lt", "slt"), default="slt")
    common(sp)
    sp.set_defaults(run=cmd_identity)

    sp = sub.add_parser("oracle", help="test a formula on every small lasso trace")
    sp.add_argument("--formula", required=True)
    sp.add_argument("--max-lasso", type=int, default=6)
    sp.add_argument("--atoms", action="append", help="extra atom to range over (repeatable)")
    common(sp, out=False)
    sp.set_defaults(run=cmd_oracle)
    return p


def _emit_report(out: dict, as_json: bool, stream) -> None:
    if as_json:
        print(json.dumps(out, indent=2), file=stream)
        return
    for key, value in out.items():
        if key == "violations":
            continue
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, list):
            value = ", ".join(map(str, value))
        print(f"{key}: {value}", file=stream)
    for v in out.get("violations", []):
        print(f"violation: {v}", file=stream)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)
    try:
        status, out, produced = args.run(args)
    except (UsageError, FormatError, FormulaSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except Failure as exc:
        out = {"ok": False, "error": str(exc), **{k: v for k, v in exc.report.items() if k != "ok"}}
        _emit_report(out, as_json, sys.stdout)
        return FAILED
    except (TranslationError, ConstructionError, FuelExhausted, ReductionError) as exc:
        _emit_report({"ok": False, "error": str(exc)}, as_json, sys.stdout)
        return FAILED
    report_stream = sys.stdout
    if produced is not None:
        d, calculus = produced
        text = _dump(d, calculus)
        if getattr(args, "out", None):
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
            report_stream = sys.stderr
    _emit_report(out, as_json, report_stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
