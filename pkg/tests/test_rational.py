from fractions import Fraction

import pytest

from pirtrade.rational import exact_grid, format_decimal, format_exact, rat


def test_rat_parses_strings_and_ints():
    assert rat("31/125") == Fraction(31, 125)
    assert rat(" 3/5 ") == Fraction(3, 5)
    assert rat(7) == Fraction(7)
    assert rat(3, 4) == Fraction(3, 4)
    assert rat("0.248") == Fraction(31, 125)


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        rat(0.5)


def test_format_exact():
    assert format_exact(Fraction(31, 125)) == "31/125"
    assert format_exact(Fraction(6, 2)) == "3"


def test_format_decimal_basic():
    assert format_decimal(Fraction(31, 125), 6) == "0.248000"
    assert format_decimal(Fraction(5, 2), 3) == "2.500"
    assert format_decimal(Fraction(-1, 8), 1) == "-0.1"


def test_format_decimal_half_even_ties():
    assert format_decimal(Fraction(3, 20), 1) == "0.2"  # 0.15 -> even 2
    assert format_decimal(Fraction(1, 4), 1) == "0.2"  # 0.25 -> even 2
    assert format_decimal(Fraction(7, 20), 1) == "0.4"  # 0.35 -> even 4
    assert format_decimal(Fraction(-3, 20), 1) == "-0.2"


def test_format_decimal_rejects_zero_digits():
    with pytest.raises(ValueError):
        format_decimal(Fraction(1), 0)


def test_exact_grid_endpoints_and_spacing():
    g = exact_grid(Fraction(3, 5), Fraction(3), 9)
    assert g[0] == Fraction(3, 5) and g[-1] == Fraction(3)
    steps = {b - a for a, b in zip(g, g[1:])}
    assert steps == {Fraction(3, 10)}


def test_exact_grid_needs_two_points():
    with pytest.raises(ValueError):
        exact_grid(0, 1, 1)
