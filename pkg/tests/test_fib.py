"""Weighted Fibonacci sequence, ratios, identities, quadratic arithmetic."""

from fractions import Fraction

import pytest

from zdspectra.fib import (
    FibSequence,
    QuadraticNumber,
    docagne_residual,
    fib,
    gamma,
    golden_pair,
)

from oracles import fib_loop


# === sequence values ===

def test_seeds_and_classical_case():
    assert [fib(2, k) for k in range(7)] == [1, 1, 2, 3, 5, 8, 13]


def test_weight_three_values():
    assert [fib(3, k) for k in range(7)] == [1, 1, 3, 5, 11, 21, 43]


@pytest.mark.parametrize("m", range(2, 13))
def test_matches_loop_oracle(m):
    seq = FibSequence(m)
    for k in range(61):
        assert seq.value(k) == fib_loop(m, k)


def test_recurrence_holds_directly():
    for m in (2, 5, 10):
        seq = FibSequence(m)
        for k in range(2, 50):
            assert seq.value(k) == seq.value(k - 1) + (m - 1) * seq.value(k - 2)


def test_values_positive_and_eventually_increasing():
    for m in range(2, 8):
        values = [fib(m, k) for k in range(40)]
        assert all(v > 0 for v in values)
        assert all(b >= a for a, b in zip(values[1:], values[2:]))


def test_memoization_is_consistent():
    seq = FibSequence(4)
    high = seq.value(30)
    assert seq.value(30) == high
    assert seq.value(5) == fib_loop(4, 5)


def test_input_validation():
    with pytest.raises(ValueError):
        FibSequence(1)
    with pytest.raises(ValueError):
        FibSequence(2.0)
    with pytest.raises(ValueError):
        FibSequence(True)
    with pytest.raises(ValueError):
        fib(3, -1)
    with pytest.raises(ValueError):
        fib(3, 1.5)


# === ratios ===

def test_ratio_values():
    assert gamma(2, 0) == 1
    assert gamma(2, 2) == Fraction(3, 2)
    assert gamma(3, 2) == Fraction(5, 3)
    assert gamma(3, 3) == Fraction(11, 5)


def test_ratio_is_exact_quotient():
    for m in (2, 4, 7):
        seq = FibSequence(m)
        for k in range(30):
            assert seq.ratio(k) == Fraction(seq.value(k + 1), seq.value(k))


@pytest.mark.parametrize("m", range(2, 11))
def test_ratios_pairwise_distinct(m):
    ratios = [gamma(m, k) for k in range(41)]
    assert len(set(ratios)) == len(ratios)


# === cross-product identity ===

def test_residual_vanishes_on_small_grid():
    for m in range(2, 8):
        for l in range(1, 15):
            for r in range(l):
                assert docagne_residual(m, l, r) == 0


def test_residual_spot_check_by_hand():
    # m=3, l=3, r=1: F3*F2 - F4*F1 = 5*3 - 11*1 = 4 and (1-3)^2 * F1 = 4.
    f = FibSequence(3)
    lhs = f.value(3) * f.value(2) - f.value(4) * f.value(1)
    assert lhs == (1 - 3) ** 2 * f.value(1)
    assert docagne_residual(3, 3, 1) == 0


def test_residual_rejects_bad_indices():
    with pytest.raises(ValueError):
        docagne_residual(3, 2, 2)
    with pytest.raises(ValueError):
        docagne_residual(3, 1, -1)
    with pytest.raises(ValueError):
        docagne_residual(3, 0, 0)
    with pytest.raises(ValueError):
        docagne_residual(3, 2.0, 1)


# === quadratic numbers ===

def test_perfect_square_radicand_collapses():
    q = QuadraticNumber(Fraction(1), Fraction(2), 9)
    assert q.is_rational
    assert q == 7
    assert QuadraticNumber(Fraction(1, 2), Fraction(0), 5).is_rational


def test_rejects_bad_radicand():
    with pytest.raises(ValueError):
        QuadraticNumber(Fraction(1), Fraction(1), -2)
    with pytest.raises(ValueError):
        QuadraticNumber(Fraction(1), Fraction(1), True)


def test_mixed_radicands_rejected():
    a = QuadraticNumber(Fraction(0), Fraction(1), 5)
    b = QuadraticNumber(Fraction(0), Fraction(1), 21)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


def test_rational_operand_mixes_with_any_radicand():
    root5 = QuadraticNumber(Fraction(0), Fraction(1), 5)
    assert (root5 + 2) - 2 == root5
    assert 3 * root5 == QuadraticNumber(Fraction(0), Fraction(3), 5)
    assert root5 * root5 == 5


def test_field_identities():
    x = QuadraticNumber(Fraction(3, 2), Fraction(-1, 3), 7)
    y = QuadraticNumber(Fraction(-2), Fraction(5), 7)
    z = QuadraticNumber(Fraction(1, 4), Fraction(1), 7)
    assert (x + y) * z == x * z + y * z
    assert x * x.inverse() == 1
    assert (x / y) * y == x
    assert x - x == 0
    assert -x + x == 0


def test_conjugate_norm_is_rational():
    x = QuadraticNumber(Fraction(3), Fraction(2), 5)
    norm = x * x.conjugate()
    assert norm.is_rational
    assert norm == 9 - 4 * 5


def test_powers():
    x = QuadraticNumber(Fraction(1), Fraction(1), 2)
    assert x**0 == 1
    assert x**1 == x
    assert x**2 == x * x
    assert x**5 == x * x * x * x * x
    with pytest.raises(ValueError):
        x**-1
    with pytest.raises(ValueError):
        x**0.5


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        QuadraticNumber(Fraction(0)).inverse()


def test_float_and_str_forms():
    x = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
    assert abs(float(x) - (1 + 5**0.5) / 2) < 1e-15
    assert "sqrt(5)" in str(x)
    assert str(QuadraticNumber(Fraction(7, 3))) == "7/3"


def test_equality_and_hash_against_rationals():
    assert QuadraticNumber(Fraction(2)) == 2
    assert QuadraticNumber(Fraction(1, 3)) == Fraction(1, 3)
    assert hash(QuadraticNumber(Fraction(2))) == hash(
        QuadraticNumber(Fraction(2), Fraction(0), 11)
    )
    assert QuadraticNumber(Fraction(0), Fraction(1), 5) != QuadraticNumber(
        Fraction(0), Fraction(1), 6
    )


# === golden pair ===

@pytest.mark.parametrize("m", range(2, 13))
def test_pair_solves_the_quadratic(m):
    phi, xi = golden_pair(m)
    assert phi * phi - phi - (m - 1) == 0
    assert xi * xi - xi - (m - 1) == 0
    assert phi + xi == 1
    assert phi * xi == -(m - 1)


def test_pair_classical_value():
    phi, xi = golden_pair(2)
    assert abs(float(phi) - (1 + 5**0.5) / 2) < 1e-15
    assert abs(float(xi) - (1 - 5**0.5) / 2) < 1e-15
    assert not phi.is_rational


def test_pair_rational_collapse():
    phi, xi = golden_pair(3)
    assert phi.is_rational and xi.is_rational
    assert phi == 2
    assert xi == -1


def test_ratio_limit_approaches_phi():
    # gamma[k] converges to the positive root; check the gap shrinks.
    phi = float(golden_pair(5)[0])
    gaps = [abs(float(gamma(5, k)) - phi) for k in (5, 15, 30, 60)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-10
