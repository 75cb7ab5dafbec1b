"""
Exact spin-character degrees.

    bar formula        ρ_λ(1) = 2^⌊(n-m)/2⌋ · n! / πB(λ)
    relative formula   ρ_λ(1) = (|λ|!/|c̄|!) · 2^(δ(q̄)+ε) / πB̄(q̄) · ρ_c̄(1)

All arithmetic is on Python ints; every division goes through exact_div and
fails loudly if it leaves a remainder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from barlens.bars import BarDecomposition, bar_lengths_direct, dbar_core, decompose_bars
from barlens.errors import InexactDivision, InvalidPartition, MismatchWithBarFormula, StructureViolation
from barlens.partitions import BarPartition, enumerate_bar_partitions


def exact_div(a: int, b: int) -> int:
    if b == 0:
        raise InexactDivision(f"division of {a} by zero")
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} is not divisible by {b}")
    return q


def rising_product(lo: int, hi: int) -> int:
    """hi!/lo! as lo+1 · … · hi."""
    return math.prod(range(lo + 1, hi + 1))


def sigma(lam: BarPartition) -> int:
    return lam.n - lam.m


def delta_floor(lam: BarPartition) -> int:
    return sigma(lam) // 2


def associate_multiplicity(lam: BarPartition) -> int:
    """1 when n - m is even (self-associate), else 2."""
    return 1 if sigma(lam) % 2 == 0 else 2


@dataclass(frozen=True)
class DegreeContext:
    n: int
    m: int
    sigma: int
    delta_floor: int
    overlap_delta: int
    epsilon: int


@dataclass(frozen=True)
class SumCheckReport:
    n: int
    total: int
    expected: int

    @property
    def holds(self) -> bool:
        return self.total == self.expected


def spin_degree(lam: BarPartition) -> int:
    numerator = 2 ** delta_floor(lam) * math.factorial(lam.n)
    return exact_div(numerator, bar_lengths_direct(lam).product())


def epsilon(lam: BarPartition, d: int) -> int:
    s = sigma(lam)
    if s % 2 == 1:
        return 0
    return 0 if sigma(dbar_core(lam, d)) % 2 == 0 else 1


def degree_context(lam: BarPartition, d: int, dec: BarDecomposition | None = None) -> DegreeContext:
    dec = dec or decompose_bars(lam, d)
    core, q = dec.core, dec.quotient_partition
    ctx = DegreeContext(
        n=lam.n,
        m=lam.m,
        sigma=sigma(lam),
        delta_floor=delta_floor(lam),
        overlap_delta=len(dec.overlap),
        epsilon=epsilon(lam, d),
    )
    if ctx.sigma != sigma(core) + sigma(q) + 2 * ctx.overlap_delta:
        raise StructureViolation(f"σ ledger fails for {lam}, d={d}")
    if ctx.delta_floor != delta_floor(q) + delta_floor(core) + ctx.overlap_delta + ctx.epsilon:
        raise StructureViolation(f"δ ledger fails for {lam}, d={d}")
    return ctx


def relative_formula_value(lam: BarPartition, d: int, dec: BarDecomposition | None = None) -> int:
    """Right-hand side of the relative bar formula, without cross-checks."""
    dec = dec or decompose_bars(lam, d)
    core, q = dec.core, dec.quotient_partition
    numerator = (
        rising_product(core.n, lam.n)
        * 2 ** (delta_floor(q) + epsilon(lam, d))
        * spin_degree(core)
    )
    return exact_div(numerator, dec.modified_bars.product())


def relative_spin_degree(lam: BarPartition, d: int) -> int:
    dec = decompose_bars(lam, d)
    ctx = degree_context(lam, d, dec)
    expected_product = 2 ** ctx.overlap_delta * dec.modified_bars.product() * dec.core_bars.product()
    if dec.total.product() != expected_product:
        raise MismatchWithBarFormula(
            f"πB({lam}) = {dec.total.product()} but the decomposition gives {expected_product}"
        )
    value = relative_formula_value(lam, d, dec)
    direct = spin_degree(lam)
    if value != direct:
        raise MismatchWithBarFormula(f"relative formula gives {value}, bar formula {direct} for {lam}, d={d}")
    return value


def spin_degree_sum_check(n: int) -> SumCheckReport:
    """Σ a_λ · ρ_λ(1)² over bar partitions of n, against n!."""
    if n < 1:
        raise InvalidPartition(f"sum check needs n >= 1, got {n}")
    total = sum(associate_multiplicity(lam) * spin_degree(lam) ** 2 for lam in enumerate_bar_partitions(n))
    return SumCheckReport(n=n, total=total, expected=math.factorial(n))
