"""
d-runner abacus on β-sets: hooks, d-cores, d-quotients, quotient partitions
and modified hook lengths for arbitrary partitions.

Position p sits on runner [p]_d at row ⌊p/d⌋. Every abacus here is
d-normalized (the β-set size is a multiple of d), so runner indices agree
with node residues: a hook with bead on runner i and gap on runner j has
hand residue i and foot residue [j+1]_d, and length ≡ i - j (mod d).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from barlens.errors import BadModulus, SizeTooSmall
from barlens.multiset import IntMultiset
from barlens.partitions import BetaSet, Partition, beta_set, conjugate, partition_from_beta_set


def validate_modulus(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < 3 or d % 2 == 0:
        raise BadModulus(f"d must be an odd integer >= 3, got {d!r}")
    return d


def residue(ell: int, d: int) -> int:
    """[ell]_d, the least non-negative integer congruent to ell mod d."""
    return ell % validate_modulus(d)


def normalized_size(p: Partition, d: int) -> int:
    """Least multiple of d that is >= the part count; d for the empty partition."""
    return max(d, -(-len(p) // d) * d)


# ── Abacus ────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Abacus:
    d: int
    positions: BetaSet

    def __post_init__(self):
        validate_modulus(self.d)
        if not self.positions.elements or len(self.positions) % self.d:
            raise SizeTooSmall(
                f"abacus needs a positive multiple of {self.d} beads, got {len(self.positions)}"
            )

    def runner(self, pos: int) -> int:
        return pos % self.d

    def row(self, pos: int) -> int:
        return pos // self.d

    @property
    def runner_counts(self) -> tuple[int, ...]:
        counts = [0] * self.d
        for pos in self.positions.elements:
            counts[pos % self.d] += 1
        return tuple(counts)

    def runner_rows(self, i: int) -> BetaSet:
        return BetaSet(frozenset(pos // self.d for pos in self.positions.elements if pos % self.d == i))

    @property
    def partition(self) -> Partition:
        return partition_from_beta_set(self.positions)

    @property
    def depth(self) -> int:
        return max(self.positions.elements) // self.d + 1

    def enlarged(self) -> Abacus:
        return Abacus(self.d, self.positions.shifted(self.d))


@lru_cache(maxsize=4096)
def abacus_from(p: Partition, d: int) -> Abacus:
    """Minimally normalized abacus of p."""
    validate_modulus(d)
    return Abacus(d, beta_set(p, normalized_size(p, d)))


def abacus_from_rows(rows: list[BetaSet], d: int) -> Abacus:
    """Abacus whose runner i carries the bead rows in rows[i]."""
    return Abacus(d, BetaSet(frozenset(r * d + i for i, runner in enumerate(rows) for r in runner)))


# ── Hooks ─────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Hook:
    bead: int
    gap: int
    length: int
    row: int
    col: int
    arm: int
    leg: int
    hand_runner: int
    foot_runner: int

    @property
    def cell(self) -> tuple[int, int]:
        return self.row, self.col

    @property
    def runner_pair(self) -> tuple[int, int]:
        return self.hand_runner, self.foot_runner

    @property
    def runner_class(self) -> tuple[int, int]:
        """Unordered runner pair {i, j} as a sorted tuple."""
        return tuple(sorted(self.runner_pair))  # type: ignore[return-value]

    def hand_residue(self, d: int) -> int:
        # hand node is the last cell of the corner row
        return (self.col + self.arm - self.row) % d

    def foot_residue(self, d: int) -> int:
        # foot node is the last cell of the corner column
        return (self.col - self.row - self.leg) % d


@lru_cache(maxsize=4096)
def hooks(p: Partition, d: int) -> tuple[Hook, ...]:
    """Every hook of p, one per (bead, gap) pair of its minimally normalized β-set."""
    ab = abacus_from(p, d)
    beads = ab.positions.elements
    desc = sorted(beads, reverse=True)
    t = len(desc)
    out = []
    for r, a in enumerate(desc, start=1):
        part = a - (t - r)
        if part == 0:
            break
        leg = 0
        for b in range(a - 1, -1, -1):
            if b in beads:
                leg += 1
                continue
            length = a - b
            arm = length - 1 - leg
            out.append(Hook(
                bead=a,
                gap=b,
                length=length,
                row=r,
                col=part - arm,
                arm=arm,
                leg=leg,
                hand_runner=a % d,
                foot_runner=b % d,
            ))
    out.sort(key=lambda z: z.cell)
    return tuple(out)


@lru_cache(maxsize=4096)
def cell_hook_lengths(p: Partition) -> dict[tuple[int, int], int]:
    """Hook length at every cell (r, c) of p, 1-based: arm + leg + 1."""
    conj = conjugate(p).parts
    return {
        (r, c): part - c + conj[c - 1] - r + 1
        for r, part in enumerate(p.parts, start=1)
        for c in range(1, part + 1)
    }


def hook_lengths(p: Partition) -> IntMultiset:
    return IntMultiset(cell_hook_lengths(p).values())


# ── Cores and quotients ───────────────────────────────────────────────────────

def d_core(p: Partition, d: int) -> Partition:
    x = abacus_from(p, d).runner_counts
    return abacus_from_rows([BetaSet(frozenset(range(k))) for k in x], d).partition


def d_quotient(p: Partition, d: int) -> tuple[Partition, ...]:
    ab = abacus_from(p, d)
    return tuple(partition_from_beta_set(ab.runner_rows(i)) for i in range(d))


def quotient_partition(p: Partition, d: int, extra_beads: int = 0) -> Partition:
    """The partition with empty d-core and the same d-quotient as p.

    Every runner gets k + extra_beads beads, k the longest component; the
    result does not depend on extra_beads.
    """
    if extra_beads < 0:
        raise SizeTooSmall(f"extra_beads must be >= 0, got {extra_beads}")
    components = d_quotient(p, d)
    k = max(len(c) for c in components) + extra_beads
    if k == 0:
        return Partition()
    return abacus_from_rows([beta_set(c, k) for c in components], d).partition


def modified_hook_length(z: Hook, x: tuple[int, ...]) -> int:
    """h(z) + (x_i - x_j)·d for z on runners i → j; d is len(x). May be negative."""
    d = len(x)
    return z.length + (x[z.hand_runner] - x[z.foot_runner]) * d


# ── Hook-level decomposition ──────────────────────────────────────────────────

@dataclass(frozen=True)
class HookDecompositionReport:
    partition: Partition
    d: int
    core: Partition
    quotient_partition: Partition
    x: tuple[int, ...]
    hook_lengths: IntMultiset
    core_hook_lengths: IntMultiset
    modified_hook_lengths: IntMultiset
    per_class: tuple[tuple[tuple[int, int], bool], ...]
    zeros: tuple[Hook, ...]

    @property
    def identity_holds(self) -> bool:
        return self.hook_lengths == self.core_hook_lengths + self.modified_hook_lengths

    @property
    def holds(self) -> bool:
        return self.identity_holds and all(ok for _, ok in self.per_class) and not self.zeros

    def failed_classes(self) -> list[tuple[int, int]]:
        return [cls for cls, ok in self.per_class if not ok]


def verify_hook_decomposition(p: Partition, d: int) -> HookDecompositionReport:
    """
    Check H(p) = H(core) ∪ |H̄(quotient partition)|, with x taken from p's
    minimally normalized abacus, globally and per unordered runner pair.
    """
    validate_modulus(d)
    core = d_core(p, d)
    qp = quotient_partition(p, d)
    x = abacus_from(p, d).runner_counts

    own = hooks(p, d)
    core_hooks = hooks(core, d)
    modified = [(z, modified_hook_length(z, x)) for z in hooks(qp, d)]

    per_class = []
    for i in range(d):
        for j in range(i, d):
            lhs = IntMultiset(z.length for z in own if z.runner_class == (i, j))
            rhs = IntMultiset(z.length for z in core_hooks if z.runner_class == (i, j))
            rhs = rhs + IntMultiset(abs(v) for z, v in modified if z.runner_class == (i, j))
            per_class.append(((i, j), lhs == rhs))

    return HookDecompositionReport(
        partition=p,
        d=d,
        core=core,
        quotient_partition=qp,
        x=x,
        hook_lengths=IntMultiset(z.length for z in own),
        core_hook_lengths=IntMultiset(z.length for z in core_hooks),
        modified_hook_lengths=IntMultiset(abs(v) for _, v in modified),
        per_class=tuple(per_class),
        zeros=tuple(z for z, v in modified if v == 0),
    )
