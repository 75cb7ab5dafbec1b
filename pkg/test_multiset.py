from collections import Counter

import pytest
from hypothesis import given, strategies as st

from barlens.errors import MultisetUnderflow
from barlens.multiset import IntMultiset

values = st.lists(st.integers(min_value=-30, max_value=30), max_size=25)


def test_multiset_initialization():
    ms = IntMultiset([3, 1, 2, 2])
    assert ms.count(2) == 2
    assert len(ms) == 4
    assert ms.descending() == [3, 2, 2, 1]
    assert list(ms) == [3, 2, 2, 1]


def test_multiset_str():
    assert str(IntMultiset([1, 7, 7])) == "7,7,1"
    assert str(IntMultiset()) == "-"


def test_multiset_union_adds_multiplicities():
    assert IntMultiset([1, 2]) + IntMultiset([2, 3]) == IntMultiset([1, 2, 2, 3])


def test_multiset_difference_is_floored():
    assert IntMultiset([1, 2, 2]) - IntMultiset([2, 5]) == IntMultiset([1, 2])


def test_multiset_symmetric_difference():
    a = IntMultiset([7, 4, 1])
    b = IntMultiset([13, 10, 7, 1])
    assert a ^ b == IntMultiset([13, 10, 4])


def test_multiset_remove_exact_raises_when_missing():
    with pytest.raises(MultisetUnderflow):
        IntMultiset([1, 2]).remove_exact(IntMultiset([3]))
    assert IntMultiset([1, 2, 2]).remove_exact(IntMultiset([2])) == IntMultiset([1, 2])


def test_multiset_is_subset():
    assert IntMultiset([1, 2, 2]) <= IntMultiset([1, 2, 2, 3])
    assert not IntMultiset([2, 2, 2]).issubset(IntMultiset([1, 2, 2, 3]))


def test_multiset_doubled_and_product():
    assert IntMultiset([1, 7]).doubled() == IntMultiset([2, 14])
    assert IntMultiset([2, 3, 3]).product() == 18
    assert IntMultiset().product() == 1


def test_multiset_abs_and_restrict():
    assert IntMultiset([-3, 3, 1]).abs() == IntMultiset([3, 3, 1])
    assert IntMultiset([12, 9, 7, 6]).restrict(lambda v: v % 3 == 0) == IntMultiset([12, 9, 6])


def test_multiset_from_counts_drops_nonpositive():
    assert IntMultiset.from_counts({1: 2, 5: 0, 6: -1}) == IntMultiset([1, 1])


def test_multiset_is_hashable():
    assert len({IntMultiset([1, 2]), IntMultiset([2, 1])}) == 1


@given(a=values, b=values)
def test_union_then_difference(a, b):
    assert (IntMultiset(a) + IntMultiset(b)) - IntMultiset(b) == IntMultiset(a)


@given(a=values, b=values)
def test_symmetric_difference_and_intersection_cover_union(a, b):
    ma, mb = IntMultiset(a), IntMultiset(b)
    common = ma & mb
    assert (ma ^ mb) + common + common == ma + mb


@given(a=values)
def test_doubled_keeps_cardinality(a):
    ms = IntMultiset(a)
    assert len(ms.doubled()) == len(ms)
    assert Counter(ms.doubled().elements()) == Counter(2 * v for v in a)
