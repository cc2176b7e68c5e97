# tests/test_power_series.py
from fractions import Fraction

import pytest

from errors import UsageError
from ring.power_series import PowerSeries, ps_arith, ps_exp, ps_log, ps_pow
from ring.scalar import Ring
from triangle.classical import bell_number


def test_square_root_squares_back():
    f = PowerSeries([1, -1], 8)
    root = ps_pow(f, Fraction(1, 2))
    assert root * root == PowerSeries([1, -1], 8)


def test_exp_inverts_log():
    f = PowerSeries([1, 1], 7)
    assert ps_exp(ps_log(f)) == f


def test_exponential_sequences():
    assert PowerSeries.variable(5).exp().egf_values() == [1] * 6
    assert PowerSeries.exp_linear(2, 4).egf_values() == [1, 2, 4, 8, 16]


def test_bell_generating_function():
    series = (PowerSeries.exp_linear(1, 6) - 1).exp()
    assert series.egf_values() == [bell_number(n) for n in range(7)]


def test_reciprocal_of_geometric():
    assert PowerSeries([1, -1], 5).reciprocal() == PowerSeries([1] * 6)


def test_truncation_takes_the_smaller_order():
    product = PowerSeries([1, 1], 3) * PowerSeries([1, 1], 1)
    assert product.order == 1


def test_preconditions():
    with pytest.raises(UsageError):
        PowerSeries([1, 1], 3).exp()
    with pytest.raises(UsageError):
        PowerSeries([2, 1], 3).log()
    with pytest.raises(UsageError):
        PowerSeries([0, 1], 3).reciprocal()
    with pytest.raises(UsageError):
        PowerSeries([])


def test_reciprocal_of_a_polynomial_constant_term():
    ring = Ring(("q",))
    q = ring.gen("q")
    f = PowerSeries([ring.const(2), q], 3)
    inverse = f.reciprocal()
    assert inverse * f == PowerSeries.constant(ring.one(), 3)
    assert inverse.coeffs[0] == ring.const(Fraction(1, 2))
    with pytest.raises(UsageError):
        PowerSeries([q + 1, q], 3).reciprocal()
    with pytest.raises(UsageError):
        PowerSeries([0, 1], 3).reciprocal()


def test_arith_and_integer_powers():
    f = PowerSeries([1, 2, -1], 5)
    g = PowerSeries([Fraction(1, 3), 0, 1], 5)
    assert ps_arith("add", f, g) == f + g
    assert ps_pow(f, 3) == ps_arith("mul", f, ps_arith("mul", f, f))
    assert ps_pow(f, 0) == PowerSeries.constant(Fraction(1), 5)
    with pytest.raises(UsageError):
        ps_arith("sub", f, g)
