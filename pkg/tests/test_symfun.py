import itertools
import random
from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cinv.symfun import elementary_from_power_sums, g_explicit, power_sums


def brute_elementary(values, k):
    return [sum(prod(c) for c in itertools.combinations(values, j)) for j in range(1, k + 1)]


@pytest.mark.parametrize(
    "degrees, expected",
    [
        ((46, 36, 34, 21, 14, 13, 12, 11, 3, 2, 2), (194, 5656, 200600, 7790356, 317267984)),
        ((88, 77, 72, 54, 48, 31, 29), (399, 25879, 1833489, 137438707, 10682130249)),
        ((), (0, 0, 0, 0, 0)),
    ],
)
def test_power_sums(degrees, expected):
    assert power_sums(degrees, 5) == expected


def test_power_sums_order_validation():
    with pytest.raises(ValueError):
        power_sums((2,), 0)


def test_elementary_examples():
    assert elementary_from_power_sums([7]) == (7,)
    assert elementary_from_power_sums([3, 5])[1] == 2
    e = elementary_from_power_sums([6] * 5)
    assert e[4] == 6 == comb(6, 5)
    assert list(e) == brute_elementary([1] * 6, 5)


def test_g_explicit_examples():
    assert g_explicit(3, (1, 1, 1)) == 0
    assert g_explicit(2, (194, 5656)) == 15990
    assert elementary_from_power_sums((194, 5656))[1] == 15990
    assert g_explicit(1, (0,)) == 0


def test_g_explicit_rejects_out_of_range():
    with pytest.raises(ValueError):
        g_explicit(7, (1,) * 7)
    with pytest.raises(ValueError):
        g_explicit(3, (1, 2))


def test_recurrence_matches_printed_polynomials():
    rng = random.Random(1234)
    for j in range(1, 7):
        for _ in range(1000):
            t = [rng.randint(-100, 100) for _ in range(j)]
            assert elementary_from_power_sums(t)[j - 1] == g_explicit(j, t)


@settings(max_examples=300)
@given(st.lists(st.integers(min_value=-12, max_value=12), max_size=8), st.integers(1, 9))
def test_true_power_sums_give_elementary_polynomials(values, k):
    e = elementary_from_power_sums(power_sums(values, k))
    assert list(e) == brute_elementary(values, k)
    assert all(isinstance(x, Fraction) for x in e)


@given(st.lists(st.integers(min_value=2, max_value=30), min_size=1, max_size=5))
def test_vanishing_beyond_variable_count(values):
    r = len(values)
    e = elementary_from_power_sums(power_sums(values, r + 3))
    assert all(x == 0 for x in e[r:])
