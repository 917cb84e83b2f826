from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rieszlab.rational import ONE, format_rational, to_rational


@pytest.mark.parametrize("text, expected", [("3", "3"), ("-2/4", "-1/2"), ("0/5", "0"), (" 7/1 ", "7")])
def test_format_is_reduced(text, expected):
    assert format_rational(to_rational(text)) == expected


@pytest.mark.parametrize("bad", [0.5, True, "0.5", "1e3", "1_000", "1/0", "x", None])
def test_rejects_inexact_input(bad):
    with pytest.raises((TypeError, ValueError)):
        to_rational(bad)


def test_fraction_interop():
    assert to_rational(Fraction(3, 6)) == Fraction(1, 2)
    assert hash(to_rational("1/2")) == hash(Fraction(1, 2))
    assert to_rational(1) == ONE


@given(st.fractions())
def test_text_round_trip(value):
    assert to_rational(format_rational(to_rational(value))) == value
