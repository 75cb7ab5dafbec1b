"""
Bar lengths, d̄-cores and spin degrees from the command line.

Usage:
    python bar_lengths.py show 7,5,3,2 --diagram shifted
    python bar_lengths.py show 4,2,1 --diagram abacus --d 3
    python bar_lengths.py core-quotient 13,10,4 --d 3
    python bar_lengths.py decompose 13,10,4 --d 3 --json
    python bar_lengths.py degree 7,5,3,2 --d 3 --relative
    python bar_lengths.py verify --max-n 20 --d 3,5 --jobs 4 --json output/verify.json

Partitions are comma-separated parts; "-" is the empty partition.

Exit status: 0 success, 1 verification failure, 2 bad input.

Env (see barlens/config.py):
  - BARLENS_COLOR: auto | never | always
  - BARLENS_JOBS, BARLENS_HOOK_MAX_N, BARLENS_PARTITION_MAX_N
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional

from barlens import render
from barlens.abacus import abacus_from, validate_modulus
from barlens.bars import (
    BarDecomposition,
    BarQuotient,
    bar_lengths_direct,
    bars_divisible_by_d,
    dbar_core,
    dbar_quotient,
    dbar_quotient_partition,
    decompose_bars,
)
from barlens.config import color_enabled, get_settings
from barlens.degrees import (
    degree_context,
    relative_formula_value,
    relative_spin_degree,
    spin_degree,
)
from barlens.errors import BarlensError, BadModulus, MismatchWithBarFormula
from barlens.multiset import IntMultiset
from barlens.partitions import BarPartition, Partition, double, format_parts
from barlens.verify import PROPERTIES, SizeOutcome, run_verify

DIAGRAMS = ("young", "shifted", "doubled", "abacus", "residues")


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _ms(values: IntMultiset) -> list[int]:
    return values.descending()


def _require_d(args: argparse.Namespace) -> int:
    if args.d is None:
        raise BadModulus("--d is required for this command")
    return validate_modulus(args.d)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _parse_ds(text: str) -> tuple[int, ...]:
    try:
        ds = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise BadModulus(f"not a list of moduli: {text!r}") from None
    return tuple(validate_modulus(d) for d in ds)


def _quotient_doc(q: BarQuotient, qp: BarPartition) -> dict[str, Any]:
    return {
        "mu0": list(q.mu0.parts),
        "mus": [list(mu.parts) for mu in q.mus],
        "partition": list(qp.parts),
        "weight": q.weight,
    }


def _decomposition_doc(dec: BarDecomposition) -> dict[str, Any]:
    return {
        "core_bars": _ms(dec.core_bars),
        "modified_bars": _ms(dec.modified_bars),
        "core_parts": sorted(dec.core_parts, reverse=True),
        "modified_parts": sorted(dec.modified_parts, reverse=True),
        "overlap": sorted(dec.overlap, reverse=True),
        "overlap_doubled": _ms(dec.doubled_overlap),
        "tilde_bars": _ms(dec.btilde),
        "plain_union": dec.plain_union,
        "checks": {name: ok for name, ok in dec.checks},
    }


def _document(lam: BarPartition, d: Optional[int], **sections: Any) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "partition": list(lam.parts),
        "d": d,
        "core": None,
        "quotient": None,
        "x": None,
        "bars": {"total": _ms(bar_lengths_direct(lam))},
        "decomposition": None,
        "degrees": None,
        "verdict": True,
    }
    doc.update(sections)
    return doc


def _emit(lines: list[tuple[str, Any]]) -> None:
    for key, value in lines:
        print(f"{key}: {value}")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_show(args: argparse.Namespace) -> int:
    color = color_enabled(sys.stdout)
    if args.diagram == "young":
        text = render.young(Partition.parse(args.partition))
    elif args.diagram == "shifted":
        text = render.shifted(BarPartition.parse(args.partition), color=color)
    elif args.diagram == "doubled":
        text = render.doubled(BarPartition.parse(args.partition), color=color)
    elif args.diagram == "residues":
        text = render.residues(Partition.parse(args.partition), _require_d(args))
    else:
        text = render.abacus(Partition.parse(args.partition), _require_d(args))
    if text:
        print(text)
    return 0


def cmd_core_quotient(args: argparse.Namespace) -> int:
    lam = BarPartition.parse(args.partition)
    d = _require_d(args)
    core = dbar_core(lam, d)
    q = dbar_quotient(lam, d)
    qp = dbar_quotient_partition(lam, d)
    x = abacus_from(double(lam), d).runner_counts
    holds = lam.n == core.n + qp.n

    if args.json:
        doc = _document(
            lam, d,
            core=list(core.parts),
            quotient=_quotient_doc(q, qp),
            x=list(x),
            verdict=holds,
        )
        doc["bars"]["divisible_by_d"] = _ms(bars_divisible_by_d(lam, d))
        print(json.dumps(doc, indent=2))
    else:
        _emit([
            ("partition", lam),
            ("d", d),
            ("core", core),
            ("quotient", str(q)),
            ("quotient partition", qp),
            ("x", format_parts(x)),
            ("weight", f"{lam.n} = {core.n} + {qp.n}"),
            ("bars divisible by d", bars_divisible_by_d(lam, d)),
        ])
    return 0 if holds else 1


def cmd_decompose(args: argparse.Namespace) -> int:
    lam = BarPartition.parse(args.partition)
    d = _require_d(args)
    dec = decompose_bars(lam, d)

    if args.json:
        doc = _document(
            lam, d,
            core=list(dec.core.parts),
            quotient={"partition": list(dec.quotient_partition.parts)},
            x=list(dec.x),
            decomposition=_decomposition_doc(dec),
            verdict=dec.holds,
        )
        print(json.dumps(doc, indent=2))
    else:
        _emit([
            ("partition", lam),
            ("d", d),
            ("core", dec.core),
            ("quotient partition", dec.quotient_partition),
            ("x", format_parts(dec.x)),
            ("bars", dec.total),
            ("core bars", dec.core_bars),
            ("modified bars", dec.modified_bars),
            ("core parts", format_parts(sorted(dec.core_parts, reverse=True))),
            ("modified parts", format_parts(sorted(dec.modified_parts, reverse=True))),
            ("overlap", format_parts(sorted(dec.overlap, reverse=True))),
            ("overlap doubled", dec.doubled_overlap),
            ("tilde bars", dec.btilde),
            ("plain union", "yes" if dec.plain_union else "no"),
        ])
        for name, ok in dec.checks:
            print(f"check {name}: {'pass' if ok else 'fail'}")
        print(f"verdict: {'pass' if dec.holds else 'fail'}")
    return 0 if dec.holds else 1


def cmd_degree(args: argparse.Namespace) -> int:
    lam = BarPartition.parse(args.partition)
    direct = spin_degree(lam)
    if args.d is not None:
        validate_modulus(args.d)
    if not args.relative:
        if args.json:
            print(json.dumps(_document(lam, args.d, degrees={"spin_degree": direct}), indent=2))
        else:
            print(f"spin degree: {direct}")
        return 0

    d = _require_d(args)
    try:
        relative = relative_spin_degree(lam, d)
        ok = True
    except MismatchWithBarFormula as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        relative = relative_formula_value(lam, d)
        ok = False
    ctx = degree_context(lam, d)

    if args.json:
        degrees = {
            "spin_degree": direct,
            "relative": relative,
            "sigma": ctx.sigma,
            "delta_floor": ctx.delta_floor,
            "overlap_delta": ctx.overlap_delta,
            "epsilon": ctx.epsilon,
        }
        print(json.dumps(_document(lam, d, degrees=degrees, verdict=ok), indent=2))
    else:
        _emit([
            ("spin degree", direct),
            ("relative formula", relative),
            ("epsilon", ctx.epsilon),
            ("overlap", ctx.overlap_delta),
            ("verdict", "equal" if ok else "mismatch"),
        ])
    return 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    settings = get_settings()
    ds = _parse_ds(args.d)
    jobs = args.jobs if args.jobs is not None else settings.jobs
    hook_max_n = args.hook_max_n if args.hook_max_n is not None else settings.hook_max_n

    def progress(k: int, total: int, outcome: SizeOutcome) -> None:
        print(f"  [{k:>3}/{total}] n={outcome.n} checks={outcome.checks}", file=sys.stderr)

    report = run_verify(
        args.max_n,
        ds,
        jobs=jobs,
        hook_max_n=hook_max_n,
        partition_max_n=settings.partition_max_n,
        progress=progress if args.progress else None,
    )

    if args.json:
        out_path = Path(args.json)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        with open(out_path, "w") as f:
            json.dump(report.to_dict(), f, indent=2)

    print(f"sizes: 1..{report.max_n}")
    print(f"d: {format_parts(report.ds)}")
    print(f"checks: {report.checks}")
    for prop in PROPERTIES:
        print(f"property {prop}: passed={report.passed.get(prop, 0)} failed={report.failed.get(prop, 0)}")
    for c in report.counterexamples:
        print(f"counterexample {c.property} d={c.d} partition={format_parts(c.partition)}: "
              f"expected {c.expected}, got {c.actual}")
    print(f"verdict: {'pass' if report.ok else 'fail'}")

    print(
        f"VERIFY_STATUS ok={'true' if report.ok else 'false'} checks={report.checks} "
        f"counterexamples={len(report.counterexamples)} jobs={jobs} duration_s={report.duration_s:.2f}",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# Main
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Bar lengths, d-bar cores and spin degrees of bar partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="Render a diagram")
    p.add_argument("partition", help='Comma-separated parts, "-" for empty')
    p.add_argument("--diagram", choices=DIAGRAMS, default="young")
    p.add_argument("--d", type=int, default=None, help="Odd modulus >= 3 (abacus, residues)")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("core-quotient", help="d-bar core, quotient and quotient partition")
    p.add_argument("partition")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_core_quotient)

    p = sub.add_parser("decompose", help="Bar-length decomposition through core and quotient partition")
    p.add_argument("partition")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("degree", help="Spin-character degree")
    p.add_argument("partition")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--relative", action="store_true", help="Also evaluate the relative formula (needs --d)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="Run every property over all small bar partitions")
    p.add_argument("--max-n", type=_positive_int, default=20)
    p.add_argument("--d", default="3,5", help="Comma-separated odd moduli")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes (default BARLENS_JOBS)")
    p.add_argument("--json", default=None, metavar="OUT", help="Write the JSON report to OUT")
    p.add_argument("--hook-max-n", type=int, default=None,
                   help="Largest size for the hook-level check (default BARLENS_HOOK_MAX_N)")
    p.add_argument("--progress", action="store_true", help="Per-size progress on stderr")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BarlensError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1


if __name__ == "__main__":
    raise SystemExit(main())
