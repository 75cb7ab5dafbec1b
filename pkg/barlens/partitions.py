"""
Partitions, bar partitions, Frobenius symbols and β-sets.

Text format (CLI and reports): comma-separated decreasing parts, e.g.
"13,10,4"; the empty partition is spelled "-".

    from barlens.partitions import BarPartition, double, undouble

    lam = BarPartition.parse("7,5,3,2")
    double(lam)               # Partition((8, 7, 6, 6, 4, 2, 1))
    undouble(double(lam))     # BarPartition((7, 5, 3, 2))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from barlens.errors import InvalidPartition, NotDoubledForm, SizeTooSmall
from barlens.multiset import IntMultiset

__all__ = [
    "Partition",
    "BarPartition",
    "FrobeniusSymbol",
    "BetaSet",
    "IntMultiset",
    "conjugate",
    "frobenius",
    "from_frobenius",
    "double",
    "undouble",
    "beta_set",
    "partition_from_beta_set",
    "enumerate_bar_partitions",
    "enumerate_partitions",
    "format_parts",
    "parse_parts",
]


def format_parts(parts: Iterable[int]) -> str:
    return ",".join(str(p) for p in parts) or "-"


def parse_parts(text: str) -> tuple[int, ...]:
    raw = text.strip()
    if raw == "-" or raw == "":
        return ()
    try:
        return tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise InvalidPartition(f"not a partition: {text!r}") from None


# ── Domain types ──────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts, no trailing zeros."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise InvalidPartition(f"parts must be positive: {format_parts(parts)}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be decreasing: {format_parts(parts)}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(parse_parts(text))

    def __str__(self) -> str:
        return format_parts(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, row: int) -> int:
        """1-based row length, 0 below the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def is_strict(self) -> bool:
        return all(self.parts[k] > self.parts[k + 1] for k in range(len(self.parts) - 1))

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.parts, start=1):
            for c in range(1, length + 1):
                yield r, c


@dataclass(frozen=True)
class BarPartition:
    """Strictly decreasing positive parts a_1 > ... > a_m > 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise InvalidPartition(f"parts must be positive: {format_parts(parts)}")
        if any(parts[k] <= parts[k + 1] for k in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be strictly decreasing: {format_parts(parts)}")

    @classmethod
    def parse(cls, text: str) -> BarPartition:
        return cls(parse_parts(text))

    @classmethod
    def from_partition(cls, p: Partition) -> BarPartition:
        return cls(p.parts)

    def as_partition(self) -> Partition:
        return Partition(self.parts)

    def __str__(self) -> str:
        return format_parts(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k]

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    size = n


@dataclass(frozen=True)
class FrobeniusSymbol:
    arms: tuple[int, ...] = ()
    legs: tuple[int, ...] = ()

    def __post_init__(self):
        arms, legs = tuple(self.arms), tuple(self.legs)
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)
        if len(arms) != len(legs):
            raise InvalidPartition(f"arms and legs differ in length: ({arms} | {legs})")
        for seq in (arms, legs):
            if any(v < 0 for v in seq) or any(seq[k] <= seq[k + 1] for k in range(len(seq) - 1)):
                raise InvalidPartition(f"not a Frobenius symbol: ({arms} | {legs})")

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return f"({format_parts(self.arms)} | {format_parts(self.legs)})"


@dataclass(frozen=True)
class BetaSet:
    elements: frozenset[int] = frozenset()

    def __post_init__(self):
        elements = frozenset(self.elements)
        object.__setattr__(self, "elements", elements)
        if any(x < 0 for x in elements):
            raise InvalidPartition(f"β-set entries must be non-negative: {sorted(elements)}")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __str__(self) -> str:
        return ",".join(str(x) for x in sorted(self.elements)) or "-"

    def shifted(self, k: int = 1) -> BetaSet:
        """Add k beads at the bottom: {0..k-1} ∪ {x + k}. Same partition."""
        return BetaSet(frozenset(range(k)) | {x + k for x in self.elements})


# ── Operations ────────────────────────────────────────────────────────────────

def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.parts[0] + 1)))


def frobenius(p: Partition) -> FrobeniusSymbol:
    conj = conjugate(p)
    rank = sum(1 for k, part in enumerate(p.parts) if part >= k + 1)
    return FrobeniusSymbol(
        arms=tuple(p.parts[k] - k - 1 for k in range(rank)),
        legs=tuple(conj.parts[k] - k - 1 for k in range(rank)),
    )


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    r = f.rank
    if r == 0:
        return Partition()
    rows = [f.arms[k] + k + 1 for k in range(r)]
    # below the Durfee square, row i meets column k iff i <= legs[k] + k
    for i in range(r, f.legs[0] + 1):
        rows.append(sum(1 for k in range(r) if f.legs[k] + k >= i))
    return Partition(tuple(rows))


def double(lam: BarPartition) -> Partition:
    return from_frobenius(FrobeniusSymbol(arms=lam.parts, legs=tuple(a - 1 for a in lam.parts)))


def undouble(p: Partition) -> BarPartition:
    f = frobenius(p)
    if any(leg != arm - 1 for arm, leg in zip(f.arms, f.legs)):
        raise NotDoubledForm(f"{p} has Frobenius symbol {f}, legs are not arms - 1")
    return BarPartition(f.arms)


def beta_set(p: Partition, t: int) -> BetaSet:
    if t < len(p):
        raise SizeTooSmall(f"β-set of {p} needs at least {len(p)} entries, got {t}")
    return BetaSet(frozenset(p.part(i + 1) + t - i - 1 for i in range(t)))


def partition_from_beta_set(x: BetaSet) -> Partition:
    desc = sorted(x.elements, reverse=True)
    t = len(desc)
    parts = (desc[k] - (t - k - 1) for k in range(t))
    return Partition(tuple(p for p in parts if p > 0))


@lru_cache(maxsize=None)
def _strict_parts(n: int, limit: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, limit), 0, -1):
        rest = n - first
        # distinct parts below `first` sum to at most first*(first-1)/2
        if rest > first * (first - 1) // 2:
            break
        out.extend((first,) + tail for tail in _strict_parts(rest, first - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _weak_parts(n: int, limit: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, limit), 0, -1):
        out.extend((first,) + tail for tail in _weak_parts(n - first, first))
    return tuple(out)


def enumerate_bar_partitions(n: int) -> list[BarPartition]:
    """All bar partitions of n, descending lexicographic order."""
    if n < 0:
        raise InvalidPartition(f"size must be non-negative, got {n}")
    return [BarPartition(parts) for parts in _strict_parts(n, n)]


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, descending lexicographic order."""
    if n < 0:
        raise InvalidPartition(f"size must be non-negative, got {n}")
    return [Partition(parts) for parts in _weak_parts(n, n)]
