import pytest
from hypothesis import given, settings, strategies as st

from barlens.bars import (
    BarQuotient,
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
    hook_at,
    is_dbar_core,
    kind_of_cell,
    modified_bar_data,
    part_partner,
    reconstruct,
    runner_class_decomposition,
    shifted_bar_table,
    star,
)
from barlens.errors import InvalidPartition, NotABar, NotACore, NotAPart, StructureViolation
from barlens.multiset import IntMultiset
from barlens.partitions import BarPartition, Partition

SMALL = BarPartition((7, 5, 3, 2))
LARGE = BarPartition((13, 10, 4))

bar_partitions = st.sets(st.integers(min_value=1, max_value=11), max_size=5).map(
    lambda ps: BarPartition(tuple(sorted(ps, reverse=True)))
)
moduli = st.sampled_from([3, 5, 7, 9])


def ms(*values):
    return IntMultiset(values)


# ── Bar lengths ───────────────────────────────────────────────────────────────

def test_bar_lengths_small_example():
    expected = ms(12, 10, 9, 8, 7, 7, 6, 5, 5, 4, 3, 3, 2, 2, 1, 1, 1)
    assert bar_lengths_direct(SMALL) == expected
    assert bar_lengths_via_doubling(SMALL) == expected


def test_bar_lengths_large_example():
    expected = ms(23, 17, 14, 13, 12, 11, 10, 10, 9, 8, 8, 7, 7, 6, 5, 5, 4, 4, 4, 3, 3, 2, 2, 2, 1, 1, 1)
    assert bar_lengths_direct(LARGE) == expected
    assert len(expected) == LARGE.n


def test_shifted_tables():
    assert shifted_bar_table(SMALL) == [
        [12, 10, 9, 7, 6, 3, 1],
        [8, 7, 5, 4, 1],
        [5, 3, 2],
        [2, 1],
    ]
    assert shifted_bar_table(LARGE) == [
        [23, 17, 13, 12, 11, 10, 8, 7, 6, 5, 4, 2, 1],
        [14, 10, 9, 8, 7, 5, 4, 3, 2, 1],
        [4, 3, 2, 1],
    ]


def test_empty_partition_has_no_bars():
    assert bar_lengths_direct(BarPartition()) == IntMultiset()
    assert shifted_bar_table(BarPartition()) == []


@pytest.mark.parametrize("cell,kind", [
    ((1, 1), HookKind.DP),
    ((1, 5), HookKind.P),
    ((1, 3), HookKind.B),
    ((1, 6), HookKind.B),
    ((3, 2), HookKind.NB),
    ((5, 1), HookKind.NB),
])
def test_kind_of_cell(cell, kind):
    assert kind_of_cell(*cell, m=4) is kind


def test_classification_counts():
    classified = classify_hooks(SMALL, 3)
    counts = {kind: sum(1 for ch in classified if ch.kind is kind) for kind in HookKind}
    assert counts[HookKind.P] == counts[HookKind.DP] == SMALL.m
    assert counts[HookKind.B] == counts[HookKind.NB] == SMALL.n - SMALL.m


# ── Star and partner maps ─────────────────────────────────────────────────────

def test_star_skips_the_part_column():
    z = hook_at(SMALL, 3, (1, 6))
    assert z.kind is HookKind.B
    image = star(z, SMALL, 3)
    assert image.cell == (5, 1)
    assert image.kind is HookKind.NB
    assert image.length == z.length == 6
    assert (z.runner_pair, image.runner_pair) == ((1, 1), (2, 2))


def test_star_below_the_part_column():
    z = hook_at(SMALL, 3, (1, 3))
    image = star(z, SMALL, 3)
    assert image.cell == (3, 1)
    assert image.length == z.length == 10
    assert (z.runner_pair, image.runner_pair) == ((1, 0), (0, 2))


def test_star_rejects_non_bars():
    with pytest.raises(NotABar):
        star(hook_at(SMALL, 3, (1, 1)), SMALL, 3)


def test_part_partner():
    z = hook_at(SMALL, 3, (2, 5))
    assert z.kind is HookKind.P and z.length == 5
    partner = part_partner(z, SMALL, 3)
    assert partner.cell == (2, 2)
    assert partner.length == 10


def test_part_partner_rejects_non_parts():
    with pytest.raises(NotAPart):
        part_partner(hook_at(SMALL, 3, (1, 6)), SMALL, 3)
    with pytest.raises(NotAPart):
        part_partner(hook_at(SMALL, 3, (1, 1)), SMALL, 3)


def test_hook_at_missing_cell():
    with pytest.raises(StructureViolation):
        hook_at(SMALL, 3, (9, 9))


# ── Cores and quotients ───────────────────────────────────────────────────────

def test_core_and_quotient_small_example():
    assert dbar_core(SMALL, 3) == BarPartition((2,))
    q = dbar_quotient(SMALL, 3)
    assert q == BarQuotient(BarPartition((1,)), (Partition((4,)),))
    assert str(q) == "(1) (4)"
    assert q.weight == 5
    assert dbar_quotient_partition(SMALL, 3) == BarPartition((10, 3, 2))
    assert bars_divisible_by_d(SMALL, 3) == ms(12, 9, 6, 3, 3)
    assert bars_divisible_by_d(BarPartition((10, 3, 2)), 3) == ms(12, 9, 6, 3, 3)


def test_core_and_quotient_large_example():
    assert dbar_core(LARGE, 3) == BarPartition((7, 4, 1))
    q = dbar_quotient(LARGE, 3)
    assert q == BarQuotient(BarPartition(), (Partition((2, 2, 1)),))
    assert q.components(3) == (Partition(), Partition((2, 2, 1)), Partition((3, 2)))
    assert dbar_quotient_partition(LARGE, 3) == BarPartition((8, 4, 2, 1))


def test_large_modulus_leaves_partition_alone():
    lam = BarPartition((5, 4, 1))
    assert dbar_core(lam, 11) == lam
    assert dbar_quotient(lam, 11).weight == 0
    assert dbar_quotient_partition(lam, 11) == BarPartition()


def test_quotient_components_count():
    with pytest.raises(InvalidPartition):
        BarQuotient(BarPartition(), (Partition(),)).components(5)


def test_is_dbar_core():
    assert is_dbar_core(BarPartition((7, 4, 1)), 3)
    assert not is_dbar_core(SMALL, 3)


def test_reconstruct_examples():
    assert reconstruct(BarPartition((2,)), BarQuotient(BarPartition((1,)), (Partition((4,)),)), 3) == SMALL
    assert reconstruct(BarPartition((7, 4, 1)), BarQuotient(BarPartition(), (Partition((2, 2, 1)),)), 3) == LARGE


def test_reconstruct_requires_a_core():
    with pytest.raises(NotACore):
        reconstruct(SMALL, BarQuotient(BarPartition(), (Partition(),)), 3)


# ── Decomposition ─────────────────────────────────────────────────────────────

def test_modified_parts_small_example():
    data = modified_bar_data(SMALL, 3)
    assert data.parts == frozenset({7, 5, 3})
    assert data.bars == ms(12, 10, 9, 8, 7, 7, 6, 5, 5, 4, 3, 3, 2, 1, 1)


def test_decomposition_small_example_is_a_plain_union():
    dec = decompose_bars(SMALL, 3)
    assert dec.overlap == frozenset()
    assert dec.plain_union
    assert dec.holds
    assert dec.x == (3, 2, 4)


def test_decomposition_large_example():
    dec = decompose_bars(LARGE, 3)
    assert dec.x == (5, 8, 2)
    assert dec.core_bars == ms(11, 8, 7, 5, 5, 4, 4, 2, 2, 1, 1, 1)
    assert dec.modified_bars == ms(23, 17, 13, 12, 10, 10, 9, 8, 7, 7, 6, 4, 3, 3, 1)
    assert dec.modified_parts == frozenset({13, 10, 7, 1})
    assert dec.overlap == frozenset({7, 1})
    assert dec.doubled_overlap == ms(14, 2)
    assert dec.btilde == ms(23, 17, 14, 13, 12, 10, 10, 9, 8, 7, 6, 4, 3, 3, 2)
    assert not dec.plain_union
    assert dec.holds
    assert dec.failed() == []


def test_decomposition_of_a_core_is_trivial():
    core = BarPartition((7, 4, 1))
    dec = decompose_bars(core, 3)
    assert dec.core == core
    assert dec.quotient_partition == BarPartition()
    assert dec.modified_bars == IntMultiset()
    assert dec.holds


@settings(max_examples=80)
@given(lam=bar_partitions)
def test_direct_matches_doubling(lam):
    assert bar_lengths_direct(lam) == bar_lengths_via_doubling(lam)
    assert len(bar_lengths_direct(lam)) == lam.n


@settings(max_examples=80)
@given(lam=bar_partitions, d=moduli)
def test_decomposition_holds(lam, d):
    dec = decompose_bars(lam, d)
    assert dec.holds, dec.failed()
    assert lam.n == dec.core.n + dec.quotient_partition.n
    assert dec.quotient_partition.n == d * dbar_quotient(lam, d).weight


@settings(max_examples=80)
@given(lam=bar_partitions, d=moduli)
def test_reconstruct_roundtrip(lam, d):
    assert reconstruct(dbar_core(lam, d), dbar_quotient(lam, d), d) == lam


# ── Runner classes and divisible parts ────────────────────────────────────────

def test_runner_class_groups_for_three_and_five():
    assert [c.case for c in runner_class_decomposition(LARGE, 3)] == ["single", "zero", "zero_parts", "conjugate"]
    groups = [c.classes for c in runner_class_decomposition(SMALL, 5) if c.case == "generic"]
    assert groups == [((1, 2), (3, 4)), ((1, 3), (2, 4))]


def test_runner_class_decomposition_large_example():
    checks = {c.case: c for c in runner_class_decomposition(LARGE, 3)}
    assert checks["zero_parts"].lhs == ms(13, 10, 4)
    assert checks["zero_parts"].rhs == ms(13, 10, 4)
    assert ms(14, 2) <= checks["conjugate"].rhs
    assert all(c.holds for c in checks.values())


def test_runner_class_decomposition_small_example():
    assert all(c.holds for c in runner_class_decomposition(SMALL, 3))
    assert all(c.holds for c in runner_class_decomposition(SMALL, 5))


def test_divisible_parts():
    assert divisible_parts(SMALL, 3) == (3,)
    assert dbar_quotient(SMALL, 3).mu0 == BarPartition((1,))
    assert divisible_parts(dbar_quotient_partition(SMALL, 3), 3) == (3,)
    assert divisible_parts(LARGE, 3) == ()
    assert divisible_parts(BarPartition((15, 10, 5)), 5) == (15, 10, 5)


@settings(max_examples=80)
@given(lam=bar_partitions, d=moduli)
def test_runner_class_decomposition_holds(lam, d):
    failed = [(c.case, c.classes) for c in runner_class_decomposition(lam, d) if not c.holds]
    assert failed == []


@settings(max_examples=80)
@given(lam=bar_partitions, d=moduli)
def test_divisible_parts_come_from_the_first_component(lam, d):
    expected = tuple(d * a for a in dbar_quotient(lam, d).mu0.parts)
    assert divisible_parts(lam, d) == expected
    assert divisible_parts(dbar_quotient_partition(lam, d), d) == expected
