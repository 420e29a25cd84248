import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from albtwist.parser import ParseError, parse_poly

from helpers import random_poly


def test_tokunaga_expression():
    f = parse_poly("x^3 - 3*x*y*(y^3-8) + 2*(y^6-20*y^3-8)")
    assert str(f) == "2*y^6 - 3*x*y^4 + x^3 - 40*y^3 + 24*x*y - 16"


def test_zeta_reduction():
    assert str(parse_poly("zeta^2*x + 1", 3)) == "(-zeta - 1)*x + 1"


@pytest.mark.parametrize("text,col", [("x^(3", 3), ("2x", 2), ("x +", 4), ("x $ y", 3), ("1/0", 3)])
def test_syntax_errors(text, col):
    with pytest.raises(ParseError) as exc:
        parse_poly(text)
    assert exc.value.column == col
    assert exc.value.line == 1


def test_zeta_needs_order():
    with pytest.raises(ParseError):
        parse_poly("zeta*x")


def test_unary_minus_binds_below_power():
    assert parse_poly("-x^2") == -parse_poly("x*x")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([1, 3, 4, 5, 6, 12]))
def test_print_parse_round_trip(seed, order):
    p = random_poly(random.Random(seed), names=("x", "y", "w1"), order=order)
    assert parse_poly(str(p), order if order > 1 else None) == p
