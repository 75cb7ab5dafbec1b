"""
Exhaustive verification harness.

For every size n in 1..max_n, check_size() runs each property over all bar
partitions of n and every modulus in ds, plus the general-partition checks
for all partitions of n up to the configured limits. run_verify() fans the
sizes out over a process pool and folds the outcomes into a VerifyReport.

Each check yields (expected, actual); it passes iff they are equal. A
BarlensError raised while computing a check counts as a failure with the
error as the actual value.
"""

from __future__ import annotations

import concurrent.futures
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from barlens.abacus import (
    abacus_from,
    d_core,
    d_quotient,
    hook_lengths,
    hooks,
    modified_hook_length,
    quotient_partition,
    validate_modulus,
    verify_hook_decomposition,
)
from barlens.bars import (
    HookKind,
    bar_lengths_direct,
    bar_lengths_via_doubling,
    bars_divisible_by_d,
    classify_hooks,
    dbar_core,
    dbar_quotient,
    dbar_quotient_partition,
    decompose_bars,
    divisible_parts,
    is_dbar_core,
    lengths_of,
    modified_lengths,
    part_partner,
    reconstruct,
    runner_class_decomposition,
    star,
)
from barlens.degrees import degree_context, relative_spin_degree, spin_degree, spin_degree_sum_check
from barlens.errors import BarlensError
from barlens.multiset import IntMultiset
from barlens.partitions import (
    BarPartition,
    Partition,
    beta_set,
    conjugate,
    double,
    enumerate_bar_partitions,
    enumerate_partitions,
    frobenius,
    from_frobenius,
    partition_from_beta_set,
    undouble,
)

PROPERTIES = (
    "bar_count",
    "direct_vs_doubling",
    "double_roundtrip",
    "runner_symmetry",
    "star_pairing",
    "star_class_lengths",
    "star_modified_length",
    "doubled_part_modified_length",
    "modified_parts_distinct",
    "bar_decomposition",
    "core_bars_contained",
    "modified_bars_contained",
    "parts_symmetric_difference",
    "part_count_balance",
    "plain_union_iff_no_overlap",
    "runner_class_decomposition",
    "weight",
    "divisible_bars_match",
    "divisible_parts",
    "core_is_dbar_core",
    "reconstruct_roundtrip",
    "relative_degree",
    "degree_ledger",
    "degree_product",
    "degree_sum",
    "frobenius_roundtrip",
    "conjugate_involution",
    "beta_roundtrip",
    "beta_shift",
    "hook_count",
    "hook_labels",
    "core_quotient_weight",
    "core_idempotent",
    "quotient_partition_shape",
    "quotient_partition_invariance",
    "runner_shift",
    "hook_decomposition",
)

DECOMPOSITION_CHECKS = (
    "bar_decomposition",
    "core_bars_contained",
    "modified_bars_contained",
    "parts_symmetric_difference",
    "part_count_balance",
    "plain_union_iff_no_overlap",
)


# ── Result types ──────────────────────────────────────────────────────────────

@dataclass(frozen=True, order=True)
class Counterexample:
    property: str
    d: int
    partition: tuple[int, ...]
    expected: str
    actual: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "d": self.d,
            "partition": list(self.partition),
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class SizeOutcome:
    n: int
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def checks(self) -> int:
        return sum(self.passed.values()) + sum(self.failed.values())

    def check(self, prop: str, parts: tuple[int, ...], d: int, compute: Callable[[], tuple[Any, Any]]) -> bool:
        try:
            expected, actual = compute()
        except BarlensError as exc:
            expected, actual = "no error", f"{type(exc).__name__}: {exc}"
        if expected == actual:
            self.passed[prop] += 1
            return True
        self.failed[prop] += 1
        self.counterexamples.append(Counterexample(prop, d, tuple(parts), str(expected), str(actual)))
        return False


@dataclass(frozen=True)
class VerifyReport:
    max_n: int
    ds: tuple[int, ...]
    jobs: int
    hook_max_n: int
    partition_max_n: int
    passed: Counter
    failed: Counter
    counterexamples: tuple[Counterexample, ...]
    duration_s: float

    @property
    def checks(self) -> int:
        return sum(self.passed.values()) + sum(self.failed.values())

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "parameters": {
                "max_n": self.max_n,
                "d": list(self.ds),
                "jobs": self.jobs,
                "hook_max_n": self.hook_max_n,
                "partition_max_n": self.partition_max_n,
            },
            "properties": {
                prop: {"passed": self.passed.get(prop, 0), "failed": self.failed.get(prop, 0)}
                for prop in PROPERTIES
            },
            "checks": self.checks,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "duration_s": round(self.duration_s, 3),
            "verdict": self.ok,
        }


# ── Bar partition checks ──────────────────────────────────────────────────────

def _star_pairs(lam: BarPartition, d: int) -> tuple[bool, bool]:
    classified = classify_hooks(lam, d)
    bars = [ch for ch in classified if ch.kind is HookKind.B]
    images = [star(ch, lam, d) for ch in bars]
    paired = all(
        img.kind is HookKind.NB
        and img.length == ch.length
        and img.runner_pair == ((-ch.runner_pair[1]) % d, (-ch.runner_pair[0]) % d)
        for ch, img in zip(bars, images)
    )
    bijective = len({img.cell for img in images}) == len(lengths_of(HookKind.NB, classified))
    return paired, bijective


def _star_class_lengths(lam: BarPartition, d: int) -> bool:
    classified = classify_hooks(lam, d)
    for i in range(d):
        for j in range(d):
            b = IntMultiset(ch.length for ch in classified if ch.kind is HookKind.B and ch.runner_pair == (i, j))
            target = ((-j) % d, (-i) % d)
            nb = IntMultiset(ch.length for ch in classified if ch.kind is HookKind.NB and ch.runner_pair == target)
            if b != nb:
                return False
    return True


def _star_modified(lam: BarPartition, d: int) -> bool:
    q = dbar_quotient_partition(lam, d)
    x = abacus_from(double(lam), d).runner_counts
    return all(
        modified_hook_length(ch.hook, x) == modified_hook_length(star(ch, q, d).hook, x)
        for ch in classify_hooks(q, d)
        if ch.kind is HookKind.B
    )


def _doubled_part_modified(lam: BarPartition, d: int) -> bool:
    q = dbar_quotient_partition(lam, d)
    x = abacus_from(double(lam), d).runner_counts
    return all(
        modified_hook_length(part_partner(ch, q, d).hook, x) == 2 * modified_hook_length(ch.hook, x)
        for ch in classify_hooks(q, d)
        if ch.kind is HookKind.P
    )


def _modified_distinct(lam: BarPartition, d: int) -> bool:
    values = modified_lengths(lam, d)
    for kind in (HookKind.P, HookKind.DP):
        seen = [abs(v) for ch, v in values if ch.kind is kind]
        if len(seen) != len(set(seen)):
            return False
    return True


def _runner_sums(lam: BarPartition, d: int) -> set[int]:
    x = abacus_from(double(lam), d).runner_counts
    return {x[i] + x[(d - i) % d] for i in range(d)}


def _product_identity(lam: BarPartition, d: int) -> tuple[int, int]:
    dec = decompose_bars(lam, d)
    return dec.total.product(), 2 ** len(dec.overlap) * dec.modified_bars.product() * dec.core_bars.product()


def _failed_runner_classes(lam: BarPartition, d: int) -> list[str]:
    return [
        f"{check.case} {list(check.classes)}"
        for check in runner_class_decomposition(lam, d)
        if not check.holds
    ]


def _divisible_parts(lam: BarPartition, d: int) -> tuple[tuple, tuple]:
    from_mu0 = tuple(d * a for a in dbar_quotient(lam, d).mu0.parts)
    return (from_mu0, from_mu0), (divisible_parts(lam, d), divisible_parts(dbar_quotient_partition(lam, d), d))


def _check_bar_partition(out: SizeOutcome, lam: BarPartition, d: int) -> None:
    parts = lam.parts

    def decomposition_flag(name: str) -> tuple[bool, bool]:
        return True, dict(decompose_bars(lam, d).checks)[name]

    out.check("runner_symmetry", parts, d, lambda: (1, len(_runner_sums(lam, d))))
    out.check("star_pairing", parts, d, lambda: ((True, True), _star_pairs(lam, d)))
    out.check("star_class_lengths", parts, d, lambda: (True, _star_class_lengths(lam, d)))
    out.check("star_modified_length", parts, d, lambda: (True, _star_modified(lam, d)))
    out.check("doubled_part_modified_length", parts, d, lambda: (True, _doubled_part_modified(lam, d)))
    out.check("modified_parts_distinct", parts, d, lambda: (True, _modified_distinct(lam, d)))
    for name in DECOMPOSITION_CHECKS:
        out.check(name, parts, d, lambda name=name: decomposition_flag(name))
    out.check("runner_class_decomposition", parts, d, lambda: ([], _failed_runner_classes(lam, d)))
    out.check("weight", parts, d, lambda: (
        (lam.n, dbar_quotient_partition(lam, d).n),
        (dbar_core(lam, d).n + dbar_quotient_partition(lam, d).n, d * dbar_quotient(lam, d).weight),
    ))
    out.check("divisible_bars_match", parts, d, lambda: (
        bars_divisible_by_d(lam, d), bars_divisible_by_d(dbar_quotient_partition(lam, d), d),
    ))
    out.check("divisible_parts", parts, d, lambda: _divisible_parts(lam, d))
    out.check("core_is_dbar_core", parts, d, lambda: (True, is_dbar_core(dbar_core(lam, d), d)))
    out.check("reconstruct_roundtrip", parts, d, lambda: (
        lam, reconstruct(dbar_core(lam, d), dbar_quotient(lam, d), d),
    ))
    out.check("relative_degree", parts, d, lambda: (spin_degree(lam), relative_spin_degree(lam, d)))
    out.check("degree_ledger", parts, d, lambda: (True, degree_context(lam, d) is not None))
    out.check("degree_product", parts, d, lambda: _product_identity(lam, d))


# ── General partition checks ──────────────────────────────────────────────────

def _hook_labels(p: Partition, d: int) -> bool:
    return all(
        z.hand_residue(d) == z.hand_runner
        and z.foot_residue(d) == (z.foot_runner + 1) % d
        and z.length % d == (z.hand_runner - z.foot_runner) % d
        for z in hooks(p, d)
    )


def _core_quotient_weight(p: Partition, d: int) -> tuple[int, int]:
    return p.size, d_core(p, d).size + d * sum(c.size for c in d_quotient(p, d))


def _core_idempotent(p: Partition, d: int) -> tuple[tuple, tuple]:
    core = d_core(p, d)
    divisible = [v for v in hook_lengths(core).distinct() if v % d == 0]
    return (core, ()), (d_core(core, d), tuple(divisible))


def _quotient_shape(p: Partition, d: int) -> tuple[tuple, tuple]:
    qp = quotient_partition(p, d)
    return (Partition(), d_quotient(p, d)), (d_core(qp, d), d_quotient(qp, d))


def _quotient_invariance(p: Partition, d: int) -> tuple[tuple, tuple]:
    qp = quotient_partition(p, d)
    widened = tuple(quotient_partition(p, d, extra_beads=e) for e in (1, 2))
    return (qp, qp, qp), (*widened, quotient_partition(qp, d))


def _runner_shift(p: Partition, d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ab = abacus_from(p, d)
    return tuple(v + 1 for v in ab.runner_counts), ab.enlarged().runner_counts


def _hook_decomposition(p: Partition, d: int) -> tuple[tuple, tuple]:
    report = verify_hook_decomposition(p, d)
    return (True, True, [], ()), (report.identity_holds, report.holds, report.failed_classes(), report.zeros)


def _check_partition(out: SizeOutcome, p: Partition, ds: tuple[int, ...], hook_max_n: int) -> None:
    parts = p.parts
    out.check("frobenius_roundtrip", parts, 0, lambda: (p, from_frobenius(frobenius(p))))
    out.check("conjugate_involution", parts, 0, lambda: (p, conjugate(conjugate(p))))
    for t in (len(p), len(p) + 1, len(p) + 3):
        out.check("beta_roundtrip", parts, 0, lambda t=t: (p, partition_from_beta_set(beta_set(p, t))))
        out.check("beta_shift", parts, 0, lambda t=t: (beta_set(p, t).shifted(1), beta_set(p, t + 1)))
    for d in ds:
        out.check("hook_count", parts, d, lambda d=d: (p.size, len(hooks(p, d))))
        out.check("hook_labels", parts, d, lambda d=d: (True, _hook_labels(p, d)))
        out.check("core_quotient_weight", parts, d, lambda d=d: _core_quotient_weight(p, d))
        out.check("core_idempotent", parts, d, lambda d=d: _core_idempotent(p, d))
        out.check("quotient_partition_shape", parts, d, lambda d=d: _quotient_shape(p, d))
        out.check("quotient_partition_invariance", parts, d, lambda d=d: _quotient_invariance(p, d))
        out.check("runner_shift", parts, d, lambda d=d: _runner_shift(p, d))
        if p.size <= hook_max_n:
            out.check("hook_decomposition", parts, d, lambda d=d: _hook_decomposition(p, d))


# ── Drivers ───────────────────────────────────────────────────────────────────

def check_size(n: int, ds: tuple[int, ...], hook_max_n: int, partition_max_n: int) -> SizeOutcome:
    out = SizeOutcome(n)
    for lam in enumerate_bar_partitions(n):
        out.check("bar_count", lam.parts, 0, lambda lam=lam: (lam.n, len(bar_lengths_direct(lam))))
        out.check("double_roundtrip", lam.parts, 0, lambda lam=lam: (
            (lam, 2 * lam.n), (undouble(double(lam)), double(lam).size),
        ))
        out.check("direct_vs_doubling", lam.parts, 0, lambda lam=lam: (
            bar_lengths_direct(lam), bar_lengths_via_doubling(lam),
        ))
        for d in ds:
            _check_bar_partition(out, lam, d)
    out.check("degree_sum", (n,), 0, lambda: (True, spin_degree_sum_check(n).holds))
    if n <= partition_max_n:
        for p in enumerate_partitions(n):
            _check_partition(out, p, ds, hook_max_n)
    return out


def run_verify(
    max_n: int,
    ds: tuple[int, ...],
    jobs: int = 1,
    hook_max_n: int = 16,
    partition_max_n: int = 20,
    progress: Optional[Callable[[int, int, SizeOutcome], None]] = None,
) -> VerifyReport:
    ds = tuple(validate_modulus(d) for d in ds)
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    sizes = list(range(1, max_n + 1))
    start = time.perf_counter()

    outcomes: list[tuple[int, SizeOutcome]] = []
    if jobs <= 1:
        for k, n in enumerate(sizes, start=1):
            outcome = check_size(n, ds, hook_max_n, partition_max_n)
            if progress:
                progress(k, len(sizes), outcome)
            outcomes.append((n, outcome))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {
                pool.submit(check_size, n, ds, hook_max_n, partition_max_n): n
                for n in sizes
            }
            for k, future in enumerate(concurrent.futures.as_completed(futures), start=1):
                outcome = future.result()
                if progress:
                    progress(k, len(sizes), outcome)
                outcomes.append((futures[future], outcome))
        outcomes.sort(key=lambda item: item[0])

    passed: Counter = Counter()
    failed: Counter = Counter()
    counterexamples: list[Counterexample] = []
    for _, outcome in outcomes:
        passed.update(outcome.passed)
        failed.update(outcome.failed)
        counterexamples.extend(outcome.counterexamples)

    return VerifyReport(
        max_n=max_n,
        ds=ds,
        jobs=jobs,
        hook_max_n=hook_max_n,
        partition_max_n=partition_max_n,
        passed=passed,
        failed=failed,
        counterexamples=tuple(sorted(counterexamples)),
        duration_s=time.perf_counter() - start,
    )
