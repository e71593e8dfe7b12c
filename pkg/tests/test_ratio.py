import pickle
from fractions import Fraction

import pytest

from toughlab.ratio import INFINITY, ceil_ratio, format_ratio, less_than, parse_ratio, ratio


def test_lowest_terms():
    assert format_ratio(ratio(6, 4)) == "3/2"
    assert format_ratio(ratio(4, 2)) == "2/1"
    assert format_ratio(ratio(0, 5)) == "0/1"


def test_infinity_ordering():
    assert INFINITY > Fraction(10**9, 1)
    assert Fraction(10**9, 1) < INFINITY
    assert not INFINITY < INFINITY
    assert INFINITY == INFINITY
    assert INFINITY != Fraction(1)
    assert max(Fraction(3, 2), INFINITY) is INFINITY
    assert sorted([INFINITY, Fraction(1), 0]) == [0, Fraction(1), INFINITY]


def test_infinity_is_singleton_through_pickle():
    assert pickle.loads(pickle.dumps(INFINITY)) is INFINITY


@pytest.mark.parametrize("text", ["2/1", "5/3", "0/1", "inf", "12/5"])
def test_round_trip(text):
    assert format_ratio(parse_ratio(text)) == text


def test_parse_bare_integer_and_reduction():
    assert parse_ratio("3") == Fraction(3)
    assert format_ratio(parse_ratio("6/4")) == "3/2"


@pytest.mark.parametrize("text", ["", "x", "1/0", "-1/2", "1/-2", "1.5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_ratio(text)


def test_ceil():
    assert ceil_ratio(Fraction(3)) == 3
    assert ceil_ratio(Fraction(8, 3)) == 3
    assert ceil_ratio(Fraction(4, 1)) == 4
    assert ceil_ratio(Fraction(0)) == 0


def test_less_than_is_strict_cross_multiplication():
    assert less_than(3, 2, Fraction(2))       # 3/2 < 2
    assert not less_than(4, 2, Fraction(2))   # 2 == 2
    assert less_than(10, 9, Fraction(11, 9))
    assert not less_than(11, 9, Fraction(11, 9))
    assert less_than(100, 1, INFINITY)
