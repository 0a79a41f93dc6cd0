"""Command-line front end.

Subcommands: analyze, family, gb, recover, verify.  Exit codes are a
contract: 0 success, 1 usage error, 2 mathematical refusal, 3 internal
inconsistency (verdict disagreement or recovery anomaly).  All numeric
I/O is exact integers; JSON output round-trips byte-identically.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .acm import (
    AcmReport,
    analyze_member,
    cross_validate,
    homogeneous_basis,
    homogenize,
)
from .bresinsky import (
    DEFAULT_D_CAP,
    SKIP_FORM,
    SKIP_GCD,
    SKIP_MAX,
    BresinskyData,
    ShiftFamily,
    a_from_d,
    closed_form_basis,
    d_from_a,
    d_from_a_any_order,
    generators,
    shift_vector,
)
from .errors import (
    AnomalyError,
    CurveLabError,
    DisagreementError,
    RefusalError,
    StepBoundExceeded,
)
from .groebner import DEFAULT_STEP_BOUND, BinomialBasis, buchberger, reduce_basis
from .monomials import AFFINE_ORDER, PROJECTIVE_ORDER

ENV_PREFIX = "CURVELAB_"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2
EXIT_INCONSISTENT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; our contract wants 1
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one input form, one mode, one output format,
    plus the numeric knobs."""

    mode: str
    data: BresinskyData
    base: tuple[int, int, int, int]
    m: Optional[int]
    m_range: Optional[tuple[int, int]]
    fmt: str
    homogenize: bool
    oracle: bool
    step_bound: int
    d_cap: int


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    return int(raw) if raw else default


def _env_str(name: str, default: str) -> str:
    return os.environ.get(ENV_PREFIX + name) or default


def _parse_vector(raw: str, n: int, flag: str) -> tuple[int, ...]:
    try:
        vec = tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects {n} comma-separated integers, got {raw!r}")
    if len(vec) != n:
        raise UsageError(f"{flag} expects {n} comma-separated integers, got {len(vec)}")
    return vec


def _parse_m_range(raw: str) -> tuple[int, int]:
    lo, sep, hi = raw.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise UsageError(f"--m-range expects lo..hi with non-negative integers, got {raw!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise UsageError(f"--m-range is empty: {raw}")
    return lo_i, hi_i


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_d: bool = True) -> None:
        p.add_argument("--a", metavar="a1,a2,a3,a4", help="degree vector input")
        if with_d:
            p.add_argument(
                "--d",
                metavar="d21,d41,d32,d42,d13,d23,d14,d34",
                help="parameter input",
            )
        p.add_argument(
            "--format",
            choices=("json", "table"),
            default=_env_str("FORMAT", "table"),
            help="output format (env CURVELAB_FORMAT)",
        )
        p.add_argument(
            "--step-bound",
            type=int,
            default=_env_int("STEP_BOUND", DEFAULT_STEP_BOUND),
            help="reduction step budget (env CURVELAB_STEP_BOUND)",
        )
        p.add_argument(
            "--d-cap",
            type=int,
            default=_env_int("D_CAP", DEFAULT_D_CAP),
            help="recovery search cap on each row sum (env CURVELAB_D_CAP)",
        )

    p_analyze = sub.add_parser("analyze", help="dual-route verdict for a single shift")
    add_common(p_analyze)
    p_analyze.add_argument("--m", type=int, required=True, help="shift index")
    p_analyze.add_argument(
        "--homogenize", action="store_true", help="include the homogeneous basis when ACM"
    )

    p_family = sub.add_parser("family", help="scan a range of shifts")
    add_common(p_family)
    p_family.add_argument("--m-range", required=True, metavar="lo..hi")

    p_verify = sub.add_parser(
        "verify", help="family scan that hard-fails on any verdict disagreement"
    )
    add_common(p_verify)
    p_verify.add_argument("--m-range", required=True, metavar="lo..hi")

    p_gb = sub.add_parser("gb", help="print the Groebner basis for one shift")
    add_common(p_gb)
    p_gb.add_argument("--m", type=int, required=True, help="shift index")
    p_gb.add_argument("--homogenize", action="store_true", help="print the homogenized basis")
    p_gb.add_argument(
        "--oracle",
        action="store_true",
        help="substitute the Buchberger engine for the closed form",
    )

    p_recover = sub.add_parser("recover", help="recover parameters from a degree vector")
    add_common(p_recover, with_d=False)

    return parser


def _resolve_input(args: argparse.Namespace) -> tuple[BresinskyData, tuple[int, ...]]:
    a_raw = getattr(args, "a", None)
    d_raw = getattr(args, "d", None)
    if (a_raw is None) == (d_raw is None):
        raise UsageError("exactly one of --a and --d is required")
    if d_raw is not None:
        vals = _parse_vector(d_raw, 8, "--d")
        try:
            data = BresinskyData(*vals)
        except ValueError as exc:
            raise UsageError(str(exc))
        return data, ShiftFamily.from_data(data).base
    vec = _parse_vector(a_raw, 4, "--a")
    if any(x < 1 for x in vec):
        raise UsageError(f"--a entries must be positive: {vec}")
    if math.gcd(*vec) != 1:
        raise RefusalError(SKIP_GCD, {"degrees": vec})
    if not all(vec[3] > vec[i] for i in range(3)):
        raise RefusalError(SKIP_MAX, {"degrees": vec})
    data = d_from_a(vec, cap=args.d_cap)
    if data is None:
        raise RefusalError(SKIP_FORM, {"degrees": vec, "d_cap": args.d_cap})
    return data, vec


def _config(args: argparse.Namespace) -> RunConfig:
    data, base = _resolve_input(args)
    m_range = _parse_m_range(args.m_range) if getattr(args, "m_range", None) else None
    m = getattr(args, "m", None)
    if m is not None and m < 0:
        raise UsageError(f"--m must be non-negative, got {m}")
    return RunConfig(
        mode=args.command,
        data=data,
        base=base,
        m=m,
        m_range=m_range,
        fmt=args.format,
        homogenize=getattr(args, "homogenize", False),
        oracle=getattr(args, "oracle", False),
        step_bound=args.step_bound,
        d_cap=args.d_cap,
    )


def to_canonical_json(obj) -> str:
    """The one JSON rendering used everywhere, so that output parsed with
    json.loads re-serializes byte-identically."""
    return json.dumps(obj, indent=2)


_ROW_HEADER = (
    f"{'m':>4} | {'degrees':<23} | {'ok':<2} | {'case':<4} | {'w':<2} | "
    f"{'crit':<4} | {'gb':<4} | {'agree':<5} | note"
)


def _fmt_verdict(v: Optional[bool]) -> str:
    return "-" if v is None else ("T" if v else "F")


def report_row(r: AcmReport) -> str:
    note = r.skip_reason or ("reordered" if r.reordered else "-")
    return (
        f"{r.m:>4} | {','.join(str(x) for x in r.degrees):<23} | "
        f"{'y' if r.applicable else 'n':<2} | {r.case if r.case else '-':<4} | "
        f"{r.w if r.w else '-':<2} | {_fmt_verdict(r.verdict_criterion):<4} | "
        f"{_fmt_verdict(r.verdict_groebner):<4} | "
        f"{('y' if r.agree else 'n') if r.agree is not None else '-':<5} | {note}"
    )


def _summary(reports: list[AcmReport]) -> dict:
    return {
        "acm": sum(1 for r in reports if r.applicable and r.verdict_criterion),
        "non_acm": sum(1 for r in reports if r.applicable and not r.verdict_criterion),
        "skipped": sum(1 for r in reports if not r.applicable),
        "reordered": sum(1 for r in reports if r.reordered),
    }


def _print_basis(basis: BinomialBasis, out) -> None:
    for b in basis.sorted_elements():
        print(f"  {b}", file=out)


def cmd_analyze(cfg: RunConfig, out) -> int:
    report = analyze_member(cfg.data, cfg.m, step_bound=cfg.step_bound, d_cap=cfg.d_cap)
    hom = None
    if cfg.homogenize and report.applicable and report.verdict_criterion and not report.reordered:
        hom = homogeneous_basis(cfg.data, cfg.m)
    if cfg.fmt == "json":
        doc = report.to_dict()
        if cfg.homogenize:
            doc["homogeneous_basis"] = hom.to_json() if hom else None
        print(to_canonical_json(doc), file=out)
    else:
        print(_ROW_HEADER, file=out)
        print(report_row(report), file=out)
        for c in report.conditions:
            print(f"cond {c.name} = {c.value} ({'pass' if c.passed else 'fail'})", file=out)
        if report.x4_initial:
            print(f"x4-bearing initial generators: {', '.join(report.x4_initial)}", file=out)
        if hom is not None:
            print("homogeneous basis:", file=out)
            _print_basis(hom, out)
        elif cfg.homogenize:
            print("homogeneous basis unavailable (not ACM)", file=out)
    if not report.applicable:
        raise RefusalError(report.skip_reason or "not applicable",
                           {"m": report.m, "degrees": report.degrees})
    return EXIT_OK


def _run_scan(cfg: RunConfig, out, hard_verify: bool) -> int:
    lo, hi = cfg.m_range
    reports = cross_validate(
        cfg.data, range(lo, hi + 1), step_bound=cfg.step_bound, d_cap=cfg.d_cap
    )
    if cfg.fmt == "json":
        doc = {"reports": [r.to_dict() for r in reports], "summary": _summary(reports)}
        print(to_canonical_json(doc), file=out)
    else:
        print(_ROW_HEADER, file=out)
        for r in reports:
            print(report_row(r), file=out)
        s = _summary(reports)
        print(
            f"summary: acm={s['acm']} non-acm={s['non_acm']} "
            f"skipped={s['skipped']} reordered={s['reordered']}",
            file=out,
        )
        if hard_verify:
            print("verified: both routes agree on every applicable member", file=out)
    return EXIT_OK


def cmd_gb(cfg: RunConfig, out) -> int:
    if cfg.oracle:
        basis = reduce_basis(
            buchberger(generators(cfg.data, cfg.m), AFFINE_ORDER, cfg.step_bound),
            step_bound=cfg.step_bound,
        )
        tag: dict = {"source": "oracle", "case": None, "reduced": True}
    else:
        closed = closed_form_basis(cfg.data, cfg.m)
        basis = closed.basis
        tag = {"source": "closed-form", "case": closed.case, "reduced": basis.is_reduced}
    if cfg.homogenize:
        if cfg.oracle:
            elems = tuple(homogenize(b) for b in basis.elements)
            key = PROJECTIVE_ORDER.key
            basis = BinomialBasis(
                tuple(sorted(elems, key=lambda b: (key(b.lead), key(b.trail)))),
                PROJECTIVE_ORDER,
                is_groebner_verified=True,
            )
        else:
            basis = homogeneous_basis(cfg.data, cfg.m)
        tag["homogenized"] = True
    if cfg.fmt == "json":
        doc = {"tag": tag, "basis": basis.to_json()}
        print(to_canonical_json(doc), file=out)
    else:
        kind = "reduced Groebner basis" if tag["reduced"] else "Groebner basis"
        label = f"case {tag['case']}" if tag["case"] else "oracle"
        suffix = ", homogenized" if tag.get("homogenized") else ""
        print(f"{label} ({kind}, {len(basis)} elements{suffix})", file=out)
        _print_basis(basis, out)
    return EXIT_OK


def cmd_recover(args: argparse.Namespace, out) -> int:
    if not args.a:
        raise UsageError("recover requires --a")
    vec = _parse_vector(args.a, 4, "--a")
    if any(x < 1 for x in vec):
        raise UsageError(f"--a entries must be positive: {vec}")
    cap = args.d_cap
    if all(vec[3] > vec[i] for i in range(3)):
        data = d_from_a(vec, cap=cap)
        hits = [((0, 1, 2, 3), data)] if data else []
    else:
        hits = d_from_a_any_order(vec, cap=cap)
    if not hits:
        if args.format == "json":
            print(to_canonical_json({"solutions": []}), file=out)
        else:
            print(f"not Bresinsky form (within d-cap {cap})", file=out)
        raise RefusalError(SKIP_FORM, {"degrees": vec, "d_cap": cap})
    if args.format == "json":
        doc = {
            "solutions": [
                {
                    "permutation": [i + 1 for i in perm],
                    "d": data.to_json(),
                    "a": list(a_from_d(data)),
                    "v": list(shift_vector(data)),
                    "generators": [b.to_json() for b in generators(data, 0)],
                }
                for perm, data in hits
            ]
        }
        print(to_canonical_json(doc), file=out)
    else:
        for perm, data in hits:
            if perm != (0, 1, 2, 3):
                print(f"permutation: {tuple(i + 1 for i in perm)}", file=out)
            print(" ".join(f"{k}={v}" for k, v in data.as_dict().items()), file=out)
            print(f"d1={data.d1} d2={data.d2} d3={data.d3} d4={data.d4}", file=out)
            print(f"a={','.join(str(x) for x in a_from_d(data))}", file=out)
            print(f"v={','.join(str(x) for x in shift_vector(data))}", file=out)
            print("generators:", file=out)
            for b in generators(data, 0):
                print(f"  {b}", file=out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "recover":
            return cmd_recover(args, out)
        cfg = _config(args)
        if cfg.mode == "analyze":
            return cmd_analyze(cfg, out)
        if cfg.mode in ("family", "verify"):
            return _run_scan(cfg, out, hard_verify=cfg.mode == "verify")
        if cfg.mode == "gb":
            return cmd_gb(cfg, out)
        raise UsageError(f"unknown command {cfg.mode}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (DisagreementError, AnomalyError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except StepBoundExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except CurveLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED


def main_entry() -> None:
    sys.exit(main())
