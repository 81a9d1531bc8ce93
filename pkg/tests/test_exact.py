from fractions import Fraction

import pytest

from spliths.exact import ComplexRational, QuadraticValue, sqrt_fraction


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_fraction(Fraction(0)) == 0
    assert sqrt_fraction(Fraction(2)) is None
    assert sqrt_fraction(Fraction(50, 2)) == 5
    with pytest.raises(ValueError):
        sqrt_fraction(Fraction(-1))


def test_complex_rational_field_ops():
    z = ComplexRational(Fraction(1, 2), 3)
    w = ComplexRational(-2, Fraction(1, 3))
    assert (z + w) - w == z
    assert z * w == w * z
    assert (z * w) / w == z
    assert z.conj().conj() == z
    assert (z * z.conj()).im == 0
    assert z.abs_sq() == Fraction(1, 4) + 9
    assert z.times_i() == ComplexRational(-3, Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        z / ComplexRational(0)


def test_quadratic_value_collapses_perfect_squares():
    v = QuadraticValue(1, 2, 9)  # 1 + 2*3
    assert v.is_rational() and v.rational() == 7
    w = QuadraticValue(1, 1, 2)
    assert not w.is_rational()
    assert (w * w) == QuadraticValue(3, 2, 2)  # (1+s2)^2 = 3 + 2 s2
    assert w + w == QuadraticValue(2, 2, 2)
    assert (w - w) == QuadraticValue(0)


def test_quadratic_value_signs():
    assert QuadraticValue(1, 1, 2).sign() == 1
    assert QuadraticValue(-1, 1, 2).sign() == 1   # sqrt(2) > 1
    assert QuadraticValue(-2, 1, 2).sign() == -1
    assert QuadraticValue(0, -1, 3).sign() == -1
    assert QuadraticValue(0).sign() == 0
    # conjugate-root product: (a + sqrt(d))(a - sqrt(d)) = a^2 - d
    v = QuadraticValue(5, 1, 7) * QuadraticValue(5, -1, 7)
    assert v == QuadraticValue(18)


def test_quadratic_value_rejects_mixed_discriminants():
    with pytest.raises(ValueError):
        QuadraticValue(0, 1, 2) + QuadraticValue(0, 1, 3)
