import pytest
from hypothesis import given, strategies as st

from barlens.errors import InvalidPartition, NotDoubledForm, SizeTooSmall
from barlens.partitions import (
    BarPartition,
    BetaSet,
    FrobeniusSymbol,
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

partitions = st.lists(st.integers(min_value=1, max_value=12), max_size=10).map(
    lambda ps: Partition(tuple(sorted(ps, reverse=True)))
)
bar_partitions = st.sets(st.integers(min_value=1, max_value=15), max_size=7).map(
    lambda ps: BarPartition(tuple(sorted(ps, reverse=True)))
)


# ── Parsing and validation ────────────────────────────────────────────────────

def test_parse_and_str():
    assert Partition.parse("4,2,2").parts == (4, 2, 2)
    assert str(BarPartition.parse("13,10,4")) == "13,10,4"
    assert Partition.parse("-") == Partition()
    assert str(Partition()) == "-"


@pytest.mark.parametrize("text", ["2,3", "3,0", "a,b", "4,,1"])
def test_parse_rejects_bad_partitions(text):
    with pytest.raises(InvalidPartition):
        Partition.parse(text)


def test_bar_partition_requires_distinct_parts():
    with pytest.raises(InvalidPartition):
        BarPartition((3, 3, 1))
    assert BarPartition.from_partition(Partition((5, 2))).as_partition() == Partition((5, 2))


def test_sizes():
    lam = BarPartition((7, 5, 3, 2))
    assert lam.n == lam.size == 17
    assert lam.m == 4
    assert Partition((4, 2, 2)).size == 8
    assert Partition((4, 2, 2)).is_strict() is False


# ── Frobenius symbols and doubling ────────────────────────────────────────────

def test_frobenius_of_staircase():
    assert frobenius(Partition((3, 2, 1))) == FrobeniusSymbol((2, 0), (2, 0))


def test_double_worked_example():
    lam = BarPartition((7, 5, 3, 2))
    assert double(lam) == Partition((8, 7, 6, 6, 4, 2, 1))
    assert double(lam).size == 34
    assert conjugate(double(lam)) == Partition((7, 6, 5, 5, 4, 4, 2, 1))


def test_double_larger_example():
    dp = double(BarPartition((13, 10, 4)))
    assert dp == Partition((14, 12, 7, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1))
    assert dp.size == 54


def test_double_of_empty_is_empty():
    assert double(BarPartition()) == Partition()
    assert undouble(Partition()) == BarPartition()


def test_undouble_rejects_other_shapes():
    with pytest.raises(NotDoubledForm):
        undouble(Partition((2, 2)))


@given(p=partitions)
def test_frobenius_roundtrip(p):
    assert from_frobenius(frobenius(p)) == p


@given(p=partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p


@given(lam=bar_partitions)
def test_double_roundtrip(lam):
    assert undouble(double(lam)) == lam
    assert double(lam).size == 2 * lam.n


# ── β-sets ────────────────────────────────────────────────────────────────────

def test_beta_set_of_doubled_example():
    assert beta_set(double(BarPartition((7, 5, 3, 2))), 9) == BetaSet(frozenset({0, 1, 3, 5, 8, 11, 12, 14, 16}))


def test_beta_set_too_small():
    with pytest.raises(SizeTooSmall):
        beta_set(Partition((3, 2, 1)), 2)


@given(p=partitions, extra=st.integers(min_value=0, max_value=6))
def test_beta_roundtrip(p, extra):
    assert partition_from_beta_set(beta_set(p, len(p) + extra)) == p


@given(p=partitions, extra=st.integers(min_value=0, max_value=6))
def test_beta_shift_law(p, extra):
    t = len(p) + extra
    assert beta_set(p, t + 1) == beta_set(p, t).shifted(1)


# ── Enumeration ───────────────────────────────────────────────────────────────

def test_enumerate_bar_partitions_order():
    assert [lam.parts for lam in enumerate_bar_partitions(6)] == [(6,), (5, 1), (4, 2), (3, 2, 1)]
    assert enumerate_bar_partitions(0) == [BarPartition()]


@pytest.mark.parametrize("n,count", [(1, 1), (5, 3), (10, 10), (20, 64), (25, 142)])
def test_enumerate_bar_partitions_counts(n, count):
    assert len(enumerate_bar_partitions(n)) == count


@pytest.mark.parametrize("n,count", [(1, 1), (5, 7), (10, 42), (16, 231)])
def test_enumerate_partitions_counts(n, count):
    assert len(enumerate_partitions(n)) == count
