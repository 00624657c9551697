from fractions import Fraction

import pytest

from germlab import ParseError, Poly, format_poly, parse_poly


def test_grammar_examples():
    f = parse_poly("x1^2 - 3/2*x1*x2 + x2^3", 2)
    assert f.coeff((2, 0)) == 1
    assert f.coeff((1, 1)) == Fraction(-3, 2)
    assert f.coeff((0, 3)) == 1


def test_whitespace_insignificant():
    assert parse_poly(" x1 ^2-3/2 * x1* x2+x2^3 ", 2) == parse_poly(
        "x1^2-3/2*x1*x2+x2^3", 2
    )


def test_coefficient_forms():
    assert parse_poly("5", 2) == Poly.constant(2, 5)
    assert parse_poly("-x1", 2) == Poly.variable(2, 0).scale(-1)
    assert parse_poly("3x1", 2) == parse_poly("3*x1", 2)
    assert parse_poly("x1*x1", 2) == parse_poly("x1^2", 2)
    assert parse_poly("x1^0", 2) == Poly.constant(2, 1)
    assert parse_poly("x1 + x1", 2) == parse_poly("2*x1", 2)
    assert parse_poly("x1 - x1", 2).is_zero


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x1^", 2)
    assert info.value.column == 4
    with pytest.raises(ParseError):
        parse_poly("x3 + x1", 2)
    with pytest.raises(ParseError):
        parse_poly("", 2)
    with pytest.raises(ParseError):
        parse_poly("x1 + + x2", 2)
    with pytest.raises(ParseError):
        parse_poly("1/0", 2)
    with pytest.raises(ParseError):
        parse_poly("x1 x2", 2)


def test_roundtrip_exact():
    samples = [
        "0",
        "1",
        "-7/3",
        "x1",
        "-x2^4",
        "x1^2 - 3/2*x1*x2 + x2^3",
        "1/2 - x1 + 5*x1^3*x2^2",
    ]
    for text in samples:
        f = parse_poly(text, 2)
        assert parse_poly(format_poly(f), 2) == f


def test_canonical_print_is_sorted_forward():
    f = parse_poly("x2^3 + x1^2 - 3/2*x1*x2", 2)
    assert format_poly(f) == "-3/2*x1*x2 + x1^2 + x2^3"
    assert format_poly(Poly.zero(2)) == "0"
