import pytest
from hypothesis import given, strategies as st

from hyperexp.oracle import (HyperExpansion, count_expansions, iter_expansions,
                             list_expansions)
from hyperexp.stern import s

from conftest import brute_expansions


def test_count_examples():
    assert count_expansions(2, 0) == 1
    assert count_expansions(7, 0) == 1
    assert count_expansions(2, 4) == 3
    assert count_expansions(2, 18) == 7


def test_list_examples():
    found, truncated = list_expansions(2, 3, 10)
    assert [e.coeffs for e in found] == [(1, 1)]
    assert not truncated
    found, _ = list_expansions(5, 0, 10)
    assert [e.coeffs for e in found] == [()]
    found, _ = list_expansions(2, 4, 10)
    assert [e.coeffs for e in found] == [(0, 0, 1), (0, 2), (2, 1)]
    found, _ = list_expansions(3, 3, 10)
    assert [e.coeffs for e in found] == [(0, 1), (3,)]


def test_truncation_flag():
    found, truncated = list_expansions(2, 18, 3)
    assert len(found) == 3 and truncated
    found, truncated = list_expansions(2, 18, 7)
    assert len(found) == 7 and not truncated


def test_bad_cap():
    with pytest.raises(ValueError):
        list_expansions(2, 4, 0)


@pytest.mark.parametrize("b", [2, 3, 4, 6])
def test_against_exhaustive_search(b):
    for n in range(0, 80):
        listed = [e.coeffs for e in iter_expansions(b, n)]
        assert listed == brute_expansions(b, n)
        assert count_expansions(b, n) == len(listed)


@given(st.integers(2, 10), st.integers(0, 3000))
def test_master_identity(b, n):
    assert count_expansions(b, n) == s(b, n + 1)


@given(st.integers(2, 6), st.integers(0, 400))
def test_listing_reconstructs(b, n):
    found, truncated = list_expansions(b, n, 10**6)
    assert not truncated
    assert len(found) == count_expansions(b, n)
    assert len(set(found)) == len(found)
    for e in found:
        assert e.value == n
        assert all(0 <= a <= b for a in e.coeffs)


def test_expansion_invariants():
    with pytest.raises(ValueError):
        HyperExpansion(2, (1, 0))
    with pytest.raises(ValueError):
        HyperExpansion(2, (3,))
    assert str(HyperExpansion(2, (0, 2))) == "0,2"
