"""Tests for the power-sum polynomial against its summation oracle."""

from fractions import Fraction

import pytest

from powersums.polyring import Poly, clear_denominators
from powersums.powersum import (
    PowerSumInstance,
    bernoulli_diff,
    has_two_distinct_zeros,
    power_sum_direct,
    power_sum_poly,
)

X = Poly.x()


def test_instance_validation():
    inst = PowerSumInstance(4, 3)
    assert inst.q == 5
    with pytest.raises(ValueError):
        PowerSumInstance(0, 2)
    with pytest.raises(ValueError):
        PowerSumInstance(1, 1)


def test_linear_case():
    g = power_sum_poly(1, 2)
    assert g == Poly([0, Fraction(1, 2), Fraction(3, 2)])
    assert 2 * g == X * Poly([1, 3])


def test_oracle_hand_values():
    assert power_sum_direct(1, 2, 8) == 100  # 9 + 10 + ... + 16
    assert power_sum_direct(2, 2, 1) == 4
    assert power_sum_direct(3, 3, 2) == 432  # 3^3 + 4^3 + 5^3 + 6^3
    assert power_sum_poly(2, 2).eval(1) == 4
    with pytest.raises(ValueError):
        power_sum_direct(1, 2, 0)


def test_polynomial_matches_oracle():
    for k in range(1, 7):
        for l in range(2, 7):
            g = power_sum_poly(k, l)
            for x in range(1, 21):
                assert g.eval(x) == power_sum_direct(k, l, x), (k, l, x)


def test_coefficient_structure():
    for k in range(1, 11):
        for l in range(2, 11):
            g = power_sum_poly(k, l)
            assert g.degree == k + 1
            assert g.leading == Fraction(l ** (k + 1) - 1, k + 1)
            assert g.coeff(k) == Fraction(l**k - 1, 2)
            assert g.coeff(0) == 0


def test_diff_polynomial():
    assert bernoulli_diff(2, 2) == Poly([0, 1, 3])
    d, cleared = clear_denominators(bernoulli_diff(3, 2))
    assert d == 2 and cleared == X * Poly([1, 9, 14])
    d, cleared = clear_denominators(bernoulli_diff(3, 6))
    assert d == 2 and cleared == 5 * X * Poly([1, 21, 86])
    with pytest.raises(ValueError):
        bernoulli_diff(1, 2)


def test_diff_is_q_times_power_sum():
    for k in range(1, 9):
        for l in (2, 3, 5, 8):
            assert bernoulli_diff(k + 1, l) == (k + 1) * power_sum_poly(k, l)


def test_quartic_factored_identity():
    for l in range(2, 11):
        lhs = 4 * power_sum_poly(3, l)
        rhs = X**2 * (l - 1) * Poly([l + 1, l * l + 1]) * Poly([1, l + 1])
        assert lhs == rhs, l


def test_two_distinct_zeros():
    assert not has_two_distinct_zeros(X**5)
    assert has_two_distinct_zeros(X * Poly([1, 3]))
    for k in range(1, 11):
        for l in range(2, 11):
            assert has_two_distinct_zeros(power_sum_poly(k, l)), (k, l)
    with pytest.raises(ValueError):
        has_two_distinct_zeros(Poly([7]))
    with pytest.raises(ValueError):
        has_two_distinct_zeros(Poly.zero())
