"""Scalar layer: exact rationals, falling factorials, binomials, Beta values."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catb2 import FamilyIndex, beta_half, binomial, falling_factorial, rat_make

rats = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


def test_rat_make_reduces():
    assert rat_make(2, 4) == Fraction(1, 2)


def test_rat_make_normalizes_sign():
    r = rat_make(3, -6)
    assert r == Fraction(-1, 2)
    assert r.denominator > 0


def test_rat_make_zero():
    assert rat_make(0, 7) == Fraction(0, 1)


def test_rat_make_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="zero denominator"):
        rat_make(1, 0)


def test_rat_text_form():
    assert str(rat_make(-2, 15)) == "-2/15"
    assert str(rat_make(6)) == "6"


def test_falling_factorial_integers():
    assert falling_factorial(3, 2) == 6


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(5), Fraction(-7, 2)])
def test_falling_factorial_empty_product(alpha):
    assert falling_factorial(alpha, 0) == 1


def test_falling_factorial_half_integer():
    assert falling_factorial(Fraction(1, 2), 3) == Fraction(3, 8)


def test_falling_factorial_negative_length():
    # (-1/2)_(-2) = 1/((3/2)(1/2))
    assert falling_factorial(Fraction(-1, 2), -2) == Fraction(4, 3)


def test_falling_factorial_pole():
    # (-1)_(-2) needs (1)(0) in the denominator
    with pytest.raises(ZeroDivisionError, match="falling factorial pole"):
        falling_factorial(-1, -2)


def test_falling_factorial_shift_law():
    """(a)_(j+k) = (a)_j * (a-j)_k wherever both sides are defined."""
    alphas = [Fraction(n, d) for d in (1, 2) for n in range(-8, 9)]
    for alpha in alphas:
        for j in range(9):
            for k in range(-8, 9):
                try:
                    lhs = falling_factorial(alpha, j + k)
                    rhs = falling_factorial(alpha, j) * falling_factorial(alpha - j, k)
                except ZeroDivisionError:
                    continue
                assert lhs == rhs, (alpha, j, k)


def test_binomial_outside_range_is_zero():
    assert binomial(1, 2) == 0
    assert binomial(4, -1) == 0


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(5, 0) == 1


def test_binomial_negative_n():
    with pytest.raises(ValueError, match="unsupported binomial"):
        binomial(-1, 0)


def test_beta_half_values():
    assert beta_half(0, 0, 0) == 2
    assert beta_half(0, 0, 1) == Fraction(4, 3)
    assert beta_half(1, 0, 1) == Fraction(4, 15)


def test_beta_half_matches_termwise_integral():
    """Independent route: expand (1-s)^m binomially, integrate each power.

    integral_0^1 s^(u+i-1/2) (1-s)^m ds
        = sum_j binom(m,j) (-1)^j / (u+i+j+1/2).
    """
    for u in range(5):
        for i in range(5):
            for m in range(5):
                expected = sum(
                    (
                        Fraction(binomial(m, j) * (-1) ** j * 2, 2 * (u + i + j) + 1)
                        for j in range(m + 1)
                    ),
                    Fraction(0),
                )
                assert beta_half(u, i, m) == expected, (u, i, m)


def test_beta_half_rejects_negative():
    with pytest.raises(ValueError):
        beta_half(-1, 0, 0)


@given(rats, rats, rats)
def test_rat_arithmetic_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(rats, rats)
def test_rat_division_exact(a, b):
    if b != 0:
        assert (a / b) * b == a


def test_family_index_p():
    assert FamilyIndex(1, 0).p == 1
    assert FamilyIndex(0, 3).p == 6
    assert FamilyIndex(2, 4).p == 10


def test_family_index_rejects_negative():
    with pytest.raises(ValueError):
        FamilyIndex(-1, 0)
