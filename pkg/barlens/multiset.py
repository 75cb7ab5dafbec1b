"""
Immutable multisets of integers.

Backed by collections.Counter. Values are signed so modified lengths can be
collected before taking absolute values; multiplicities are always >= 1.

    a + b          union, multiplicities add
    a - b          difference, floored at 0
    a & b          intersection, min of multiplicities
    a ^ b          symmetric difference, (a - b) + (b - a)
    a.doubled()    {2v | v in a}, multiplicities kept
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Callable, Iterable, Iterator, Mapping

from barlens.errors import MultisetUnderflow


class IntMultiset:
    __slots__ = ("_counts",)

    def __init__(self, values: Iterable[int] = ()):
        counts = Counter(int(v) for v in values)
        self._counts = counts

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> IntMultiset:
        out = cls()
        out._counts = Counter({v: c for v, c in counts.items() if c > 0})
        return out

    # ── Container protocol ────────────────────────────────────────────────────

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __iter__(self) -> Iterator[int]:
        return iter(self.descending())

    def __contains__(self, value: object) -> bool:
        return self._counts.get(value, 0) > 0  # type: ignore[arg-type]

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        return f"IntMultiset({self.descending()!r})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.descending()) or "-"

    # ── Algebra ───────────────────────────────────────────────────────────────

    def __add__(self, other: IntMultiset) -> IntMultiset:
        return IntMultiset.from_counts(self._counts + other._counts)

    def __sub__(self, other: IntMultiset) -> IntMultiset:
        return IntMultiset.from_counts(self._counts - other._counts)

    def __and__(self, other: IntMultiset) -> IntMultiset:
        return IntMultiset.from_counts(self._counts & other._counts)

    def __xor__(self, other: IntMultiset) -> IntMultiset:
        return (self - other) + (other - self)

    def __le__(self, other: IntMultiset) -> bool:
        return all(other._counts.get(v, 0) >= c for v, c in self._counts.items())

    def union(self, other: IntMultiset) -> IntMultiset:
        return self + other

    def difference(self, other: IntMultiset) -> IntMultiset:
        return self - other

    def intersection(self, other: IntMultiset) -> IntMultiset:
        return self & other

    def symmetric_difference(self, other: IntMultiset) -> IntMultiset:
        return self ^ other

    def issubset(self, other: IntMultiset) -> bool:
        return self <= other

    def remove_exact(self, other: IntMultiset) -> IntMultiset:
        """Difference that refuses to clamp: every element of other must be present."""
        if not other <= self:
            raise MultisetUnderflow(f"cannot remove {other} from {self}")
        return self - other

    def doubled(self) -> IntMultiset:
        return IntMultiset.from_counts({2 * v: c for v, c in self._counts.items()})

    def abs(self) -> IntMultiset:
        return IntMultiset(abs(v) for v in self.elements())

    def restrict(self, keep: Callable[[int], bool]) -> IntMultiset:
        return IntMultiset.from_counts({v: c for v, c in self._counts.items() if keep(v)})

    # ── Queries ───────────────────────────────────────────────────────────────

    def count(self, value: int) -> int:
        return self._counts.get(value, 0)

    def elements(self) -> Iterator[int]:
        return self._counts.elements()

    def distinct(self) -> frozenset[int]:
        return frozenset(self._counts)

    def descending(self) -> list[int]:
        return sorted(self._counts.elements(), reverse=True)

    def product(self) -> int:
        return math.prod(self._counts.elements())
