# triangle/explicit.py
from fractions import Fraction
from math import comb, factorial

from errors import PreconditionError
from triangle.params import Params


def _rising_product(params: Params, i: int) -> Fraction:
    # prod_{j=1}^{i} (b2 + b1·j)
    product = Fraction(1)
    for j in range(1, i + 1):
        product *= params.b2 + params.b1 * j
    return product


def _finite_difference(params: Params, n: int, i: int) -> Fraction:
    # sum_j C(i,j)(-1)^{i-j}(a2 + a1·j)^n, the i-th difference of a degree-n polynomial
    return sum(
        (comb(i, j) * (-1) ** (i - j) * (params.a2 + params.a1 * j) ** n for j in range(i + 1)),
        Fraction(0),
    )


def explicit_term(params: Params, n: int, k: int, i: int) -> Fraction:
    """The i-th term of the outer sum of the closed form for T_{n,k}."""
    if not params.is_numeric:
        raise PreconditionError("The closed form needs every parameter bound to a rational")
    if i < k:
        return Fraction(0)

    lam_power = params.lam ** (i - k)
    if params.a1 != 0:
        return (
            _rising_product(params, i)
            / params.a1 ** i
            * comb(i, k)
            * lam_power
            * _finite_difference(params, n, i)
            / factorial(i)
        )
    if i > n:
        return Fraction(0)
    return _rising_product(params, i) * comb(n, i) * comb(i, k) * lam_power * params.a2 ** (n - i)


def explicit_entry(params: Params, n: int, k: int) -> Fraction:
    """
    T_{n,k} from the closed form, split on a1 != 0 versus a1 = 0.

    The outer sum over i >= k stops at i = n: beyond that the finite
    difference of a degree-n polynomial vanishes (a1 != 0) or the binomial
    C(n,i) does (a1 = 0).
    """
    if k < 0 or k > n:
        return Fraction(0)
    return sum((explicit_term(params, n, k, i) for i in range(k, n + 1)), Fraction(0))
