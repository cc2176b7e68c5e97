# jacobi/egf.py
import logging
from fractions import Fraction
from math import factorial

from errors import PreconditionError
from ring.power_series import PowerSeries
from ring.rational import as_rational
from triangle.build import Triangle, Witness
from triangle.params import Params


def egf_branch(params: Params) -> str:
    """Which closed form applies, by the zero pattern of (a1, b1)."""
    if params.a1 != 0 and params.b1 != 0:
        return "general"
    if params.b1 != 0:
        return "a1_zero"
    if params.a1 != 0:
        return "b1_zero"
    return "both_zero"


def egf_closed_form(params: Params, q_binding, order: int) -> PowerSeries:
    """
    Truncated exponential generating function sum_n T_n(q) t^n/n! at a rational q.

    With p = q + λ:
      general:   e^{a2 t} [1 + b1 p (1 - e^{a1 t})/a1]^{-(1 + b2/b1)}
      a1 = 0:    e^{a2 t} (1 - b1 p t)^{-(1 + b2/b1)}
      b1 = 0:    exp(a2 t + b2 p (e^{a1 t} - 1)/a1)
      both zero: e^{(a2 + b2 p) t}
    """
    if not params.is_numeric:
        raise PreconditionError("The closed-form EGF needs every parameter bound to a rational")

    a1, a2, b1, b2, lam = params.values()
    p = as_rational(q_binding) + lam
    one = Fraction(1)
    t = PowerSeries.variable(order, one)
    branch = egf_branch(params)
    logging.debug(f"EGF branch {branch} at q={q_binding}")

    if branch == "both_zero":
        return PowerSeries.exp_linear(a2 + b2 * p, order)
    if branch == "b1_zero":
        exponent = t * a2 + (PowerSeries.exp_linear(a1, order) - one) * (b2 * p / a1)
        return exponent.exp()

    alpha = -(1 + b2 / b1)
    if branch == "a1_zero":
        base = PowerSeries.constant(one, order) - t * (b1 * p)
    else:
        base = PowerSeries.constant(one, order) + (one - PowerSeries.exp_linear(a1, order)) * (b1 * p / a1)
    return PowerSeries.exp_linear(a2, order) * base.pow(alpha)


def row_value(tri: Triangle, n: int, q) -> Fraction:
    """T_n(q) at a rational q."""
    q = as_rational(q)
    return sum((tri.entry(n, k) * q ** k for k in range(n + 1)), Fraction(0))


def egf_check(tri: Triangle, q_binding) -> Witness | None:
    """n!·[t^n] of the closed form equals T_n(q) for every built row."""
    series = egf_closed_form(tri.params, q_binding, tri.max_row)
    for n, coefficient in enumerate(series.coeffs):
        got = coefficient * factorial(n)
        expected = row_value(tri, n, q_binding)
        if got != expected:
            return Witness(n, -1, expected, got)
    return None


def column0_egf_check(tri: Triangle) -> Witness | None:
    """The closed form at q = 0 generates the first column, since T_n(0) = T_{n,0}."""
    series = egf_closed_form(tri.params, 0, tri.max_row)
    for n, value in enumerate(series.egf_values()):
        if value != tri.entry(n, 0):
            return Witness(n, 0, tri.entry(n, 0), value)
    return None
