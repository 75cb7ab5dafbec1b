"""
Bar lengths of bar partitions, read through the doubled partition D(λ).

The hooks of D(λ) split by corner cell (r, c), with m the part count of λ:

    DP  r = c <= m            doubled parts, length 2·a_r
    P   r <= m, c = m + 1     parts, length a_r
    B   r <= m, c > r, else   bars that are not parts
    NB  everything else       lower-half counterparts of B

so B(λ) = P ∪ B as multisets of lengths, and NB and B have equal lengths.
d̄-cores, d̄-quotients and quotient partitions come from the d-abacus of
D(λ); modified lengths of hooks of D(q̄_d(λ)) always use the runner counts
of D(λ).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from barlens.abacus import (
    Hook,
    abacus_from,
    abacus_from_rows,
    cell_hook_lengths,
    d_core,
    d_quotient,
    hooks,
    modified_hook_length,
    quotient_partition,
    validate_modulus,
)
from barlens.errors import (
    InvalidPartition,
    ModifiedLengthCollision,
    NotABar,
    NotACore,
    NotAPart,
    NotDoubledForm,
    StructureViolation,
)
from barlens.multiset import IntMultiset
from barlens.partitions import (
    BarPartition,
    Partition,
    beta_set,
    conjugate,
    double,
    undouble,
)


class HookKind(str, Enum):
    P = "P"
    DP = "DP"
    B = "B"
    NB = "NB"


def kind_of_cell(row: int, col: int, m: int) -> HookKind:
    if row <= m:
        if row == col:
            return HookKind.DP
        if col == m + 1:
            return HookKind.P
        if col > row:
            return HookKind.B
    return HookKind.NB


@dataclass(frozen=True)
class ClassifiedHook:
    hook: Hook
    kind: HookKind

    @property
    def length(self) -> int:
        return self.hook.length

    @property
    def cell(self) -> tuple[int, int]:
        return self.hook.cell

    @property
    def runner_pair(self) -> tuple[int, int]:
        return self.hook.runner_pair


@dataclass(frozen=True)
class BarQuotient:
    mu0: BarPartition
    mus: tuple[Partition, ...]

    def components(self, d: int) -> tuple[Partition, ...]:
        """The d-quotient of D(λ): (D(μ_0), μ_1, …, μ_k, μ_k*, …, μ_1*)."""
        if len(self.mus) != (d - 1) // 2:
            raise InvalidPartition(f"a {d}-bar quotient has {(d - 1) // 2} partition components")
        return (double(self.mu0),) + self.mus + tuple(conjugate(mu) for mu in reversed(self.mus))

    @property
    def weight(self) -> int:
        return self.mu0.n + sum(mu.size for mu in self.mus)

    def __str__(self) -> str:
        return " ".join(f"({','.join(str(p) for p in part)})" for part in (self.mu0, *self.mus))


class ModifiedBarData(NamedTuple):
    bars: IntMultiset
    parts: frozenset[int]


@dataclass(frozen=True)
class BarDecomposition:
    partition: BarPartition
    d: int
    core: BarPartition
    quotient_partition: BarPartition
    x: tuple[int, ...]
    total: IntMultiset
    core_bars: IntMultiset
    modified_bars: IntMultiset
    core_parts: frozenset[int]
    modified_parts: frozenset[int]
    overlap: frozenset[int]
    btilde: IntMultiset
    checks: tuple[tuple[str, bool], ...]

    @property
    def doubled_overlap(self) -> IntMultiset:
        return IntMultiset(self.overlap).doubled()

    @property
    def plain_union(self) -> bool:
        return self.total == self.core_bars + self.modified_bars

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failed(self) -> list[str]:
        return [name for name, ok in self.checks if not ok]


# ── Bar lengths ───────────────────────────────────────────────────────────────

def bar_lengths_direct(lam: BarPartition) -> IntMultiset:
    total = IntMultiset()
    for i, a in enumerate(lam.parts):
        later = lam.parts[i + 1:]
        row = IntMultiset(range(1, a + 1)) + IntMultiset(a + b for b in later)
        total = total + row.remove_exact(IntMultiset(a - b for b in later))
    return total


@lru_cache(maxsize=4096)
def classify_hooks(lam: BarPartition, d: int) -> tuple[ClassifiedHook, ...]:
    validate_modulus(d)
    return tuple(ClassifiedHook(z, kind_of_cell(z.row, z.col, lam.m)) for z in hooks(double(lam), d))


@lru_cache(maxsize=4096)
def _by_cell(lam: BarPartition, d: int) -> dict[tuple[int, int], ClassifiedHook]:
    return {ch.cell: ch for ch in classify_hooks(lam, d)}


def hook_at(lam: BarPartition, d: int, cell: tuple[int, int]) -> ClassifiedHook:
    try:
        return _by_cell(lam, d)[cell]
    except KeyError:
        raise StructureViolation(f"D({lam}) has no cell {cell}") from None


def lengths_of(kind: HookKind, classified: tuple[ClassifiedHook, ...]) -> IntMultiset:
    return IntMultiset(ch.length for ch in classified if ch.kind is kind)


def star(z: ClassifiedHook, lam: BarPartition, d: int) -> ClassifiedHook:
    """Counterpart in NB of a bar hook: (r, c) ↦ (c, r), skipping the part column."""
    if z.kind is not HookKind.B:
        raise NotABar(f"hook at {z.cell} is {z.kind.value}, not a bar")
    r, c = z.cell
    target = c if c <= lam.m else c - 1
    return hook_at(lam, d, (target, r))


def part_partner(z: ClassifiedHook, lam: BarPartition, d: int) -> ClassifiedHook:
    """Doubled-part hook on the diagonal of the part hook's row."""
    if z.kind is not HookKind.P:
        raise NotAPart(f"hook at {z.cell} is {z.kind.value}, not a part")
    return hook_at(lam, d, (z.hook.row, z.hook.row))


def bar_lengths_via_doubling(lam: BarPartition) -> IntMultiset:
    """Lengths of the P and B hooks of D(λ)."""
    return IntMultiset(
        length
        for (r, c), length in cell_hook_lengths(double(lam)).items()
        if kind_of_cell(r, c, lam.m) in (HookKind.P, HookKind.B)
    )


def shifted_bar_table(lam: BarPartition) -> list[list[int]]:
    """Bar lengths of the shifted diagram, row by row in column order."""
    by_cell = cell_hook_lengths(double(lam))
    return [
        [by_cell[(r, c)] for c in range(r + 1, r + a + 1)]
        for r, a in enumerate(lam.parts, start=1)
    ]


# ── d̄-cores and d̄-quotients ───────────────────────────────────────────────────

def dbar_core(lam: BarPartition, d: int) -> BarPartition:
    try:
        return undouble(d_core(double(lam), d))
    except NotDoubledForm as exc:
        raise StructureViolation(f"d-core of D({lam}) is not doubled: {exc}") from exc


def dbar_quotient(lam: BarPartition, d: int) -> BarQuotient:
    components = d_quotient(double(lam), d)
    try:
        mu0 = undouble(components[0])
    except NotDoubledForm as exc:
        raise StructureViolation(f"runner 0 of D({lam}) is not doubled: {exc}") from exc
    half = (d - 1) // 2
    for i in range(1, half + 1):
        if components[d - i] != conjugate(components[i]):
            raise StructureViolation(
                f"runners {i} and {d - i} of D({lam}) are not conjugate: "
                f"{components[i]} vs {components[d - i]}"
            )
    return BarQuotient(mu0, components[1:half + 1])


def dbar_quotient_partition(lam: BarPartition, d: int) -> BarPartition:
    try:
        return undouble(quotient_partition(double(lam), d))
    except NotDoubledForm as exc:
        raise StructureViolation(f"quotient partition of D({lam}) is not doubled: {exc}") from exc


def is_dbar_core(lam: BarPartition, d: int) -> bool:
    return not any(v % d == 0 for v in bar_lengths_direct(lam).distinct())


def reconstruct(core: BarPartition, quotient: BarQuotient, d: int) -> BarPartition:
    """The bar partition with the given d̄-core and d̄-quotient."""
    validate_modulus(d)
    if not is_dbar_core(core, d):
        raise NotACore(f"{core} has a bar length divisible by {d}")
    components = quotient.components(d)
    x = abacus_from(double(core), d).runner_counts
    extra = max(0, max(len(c) - k for c, k in zip(components, x)))
    rows = [beta_set(c, k + extra) for c, k in zip(components, x)]
    try:
        return undouble(abacus_from_rows(rows, d).partition)
    except NotDoubledForm as exc:
        raise StructureViolation(f"core {core} with quotient {quotient} is not doubled: {exc}") from exc


# ── Modified bar lengths ──────────────────────────────────────────────────────

def modified_lengths(lam: BarPartition, d: int) -> tuple[tuple[ClassifiedHook, int], ...]:
    """Signed h̄ for every hook of D(q̄_d(λ)), runner counts taken from D(λ)."""
    q = dbar_quotient_partition(lam, d)
    x = abacus_from(double(lam), d).runner_counts
    return tuple((ch, modified_hook_length(ch.hook, x)) for ch in classify_hooks(q, d))


def modified_bar_data(lam: BarPartition, d: int) -> ModifiedBarData:
    bars, parts = [], []
    for ch, value in modified_lengths(lam, d):
        if ch.kind not in (HookKind.P, HookKind.B):
            continue
        if value == 0:
            raise StructureViolation(f"zero modified length at {ch.cell} for {lam}, d={d}")
        bars.append(abs(value))
        if ch.kind is HookKind.P:
            parts.append(abs(value))
    if len(set(parts)) != len(parts):
        raise ModifiedLengthCollision(f"modified part lengths repeat for {lam}, d={d}: {sorted(parts)}")
    return ModifiedBarData(IntMultiset(bars), frozenset(parts))


@lru_cache(maxsize=4096)
def decompose_bars(lam: BarPartition, d: int) -> BarDecomposition:
    validate_modulus(d)
    core = dbar_core(lam, d)
    q = dbar_quotient_partition(lam, d)
    total = bar_lengths_direct(lam)
    core_bars = bar_lengths_direct(core)
    modified = modified_bar_data(lam, d)
    core_parts = frozenset(core.parts)
    overlap = core_parts & modified.parts
    shared = IntMultiset(overlap)
    btilde = modified.bars.remove_exact(shared) + shared.doubled()

    checks = (
        ("bar_decomposition", total == core_bars + btilde),
        ("core_bars_contained", core_bars <= total),
        ("modified_bars_contained", modified.bars <= total),
        ("parts_symmetric_difference",
         IntMultiset(lam.parts) == IntMultiset(core_parts) ^ IntMultiset(modified.parts)),
        ("part_count_balance", core.m + q.m == lam.m + 2 * len(overlap)),
        ("plain_union_iff_no_overlap",
         (total == core_bars + modified.bars) == (lam.m == core.m + q.m)),
    )
    return BarDecomposition(
        partition=lam,
        d=d,
        core=core,
        quotient_partition=q,
        x=abacus_from(double(lam), d).runner_counts,
        total=total,
        core_bars=core_bars,
        modified_bars=modified.bars,
        core_parts=core_parts,
        modified_parts=modified.parts,
        overlap=overlap,
        btilde=btilde,
        checks=checks,
    )


def bars_divisible_by_d(lam: BarPartition, d: int) -> IntMultiset:
    validate_modulus(d)
    return bar_lengths_direct(lam).restrict(lambda v: v % d == 0)



# ── Decomposition by runner class ─────────────────────────────────────────────

_BAR_KINDS = (HookKind.P, HookKind.B)


@dataclass(frozen=True)
class RunnerClassCheck:
    """One runner-class group of the decomposition, lhs against rhs."""

    case: str
    classes: tuple[tuple[int, int], ...]
    lhs: IntMultiset
    rhs: IntMultiset

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _class_lengths(
    pairs: tuple[tuple[ClassifiedHook, int], ...],
    classes: tuple[tuple[int, int], ...],
    kinds: tuple[HookKind, ...],
) -> IntMultiset:
    return IntMultiset(abs(v) for ch, v in pairs if ch.kind in kinds and ch.hook.runner_class in classes)


@lru_cache(maxsize=4096)
def runner_class_decomposition(lam: BarPartition, d: int) -> tuple[RunnerClassCheck, ...]:
    """Bar decomposition restricted to groups of runner classes {i, j}.

    single     all classes {i, i}: bars of λ are the modified bars of q̄
    generic    {i, j} with {i*, j*}, four distinct runners
    zero       {0, j} with {0, j*}: a shared part is dropped from both sides
    zero_parts the same groups, parts of λ against core ^ modified parts
    conjugate  {i, i*}: shared parts of the matching zero group count twice
    """
    validate_modulus(d)
    core = dbar_core(lam, d)
    own = tuple((ch, ch.length) for ch in classify_hooks(lam, d))
    core_hooks = tuple((ch, ch.length) for ch in classify_hooks(core, d))
    modified = modified_lengths(lam, d)

    def bars(pairs, classes):
        return _class_lengths(pairs, classes, _BAR_KINDS)

    def parts(pairs, classes):
        return _class_lengths(pairs, classes, (HookKind.P,))

    def cls(i: int, j: int) -> tuple[int, int]:
        return (min(i, j), max(i, j))

    def conj(i: int) -> int:
        return (-i) % d

    checks = []
    single = tuple((i, i) for i in range(d))
    checks.append(RunnerClassCheck("single", single, bars(own, single), bars(core_hooks, single) + bars(modified, single)))

    seen = set()
    for i in range(1, d):
        for j in range(i + 1, d):
            if len({i, j, conj(i), conj(j)}) < 4:
                continue
            group = tuple(sorted({cls(i, j), cls(conj(i), conj(j))}))
            if group in seen:
                continue
            seen.add(group)
            checks.append(RunnerClassCheck(
                "generic", group, bars(own, group), bars(core_hooks, group) + bars(modified, group),
            ))

    for j in range(1, (d - 1) // 2 + 1):
        zero = (cls(0, j), cls(0, conj(j)))
        shared = parts(core_hooks, zero) & parts(modified, zero)
        checks.append(RunnerClassCheck(
            "zero", zero, bars(own, zero) + shared, bars(core_hooks, zero) + bars(modified, zero),
        ))
        checks.append(RunnerClassCheck(
            "zero_parts", zero, parts(own, zero), parts(core_hooks, zero) ^ parts(modified, zero),
        ))
        pair = (cls(j, conj(j)),)
        checks.append(RunnerClassCheck(
            "conjugate", pair, bars(own, pair),
            bars(core_hooks, pair) + bars(modified, pair) + shared.doubled(),
        ))
    return tuple(checks)


def divisible_parts(lam: BarPartition, d: int) -> tuple[int, ...]:
    """Parts of λ divisible by d, largest first."""
    validate_modulus(d)
    return tuple(a for a in lam.parts if a % d == 0)
