# jacobi/series.py
import logging

from errors import UsageError
from jacobi.coefficients import JacobiCF
from ring.power_series import PowerSeries
from ring.scalar import Scalar


def cf_to_series(cf: JacobiCF, order: int) -> list[Scalar]:
    """
    Coefficients of t^0..t^order of the J-fraction.

    Dynamic programming over weighted Motzkin paths that return to height 0:
    up steps weigh 1, a level step at height i weighs s_i, a down step from
    height i+1 weighs r_{i+1}. Heights above order - step can never come
    back down in time, so they are dropped.
    """
    if order < 0:
        raise UsageError(f"Series order must be >= 0, got {order}")
    if cf.horizon < order:
        raise UsageError(f"Continued fraction horizon {cf.horizon} is shorter than the order {order}")

    zero, one = cf.ring.zero(), cf.ring.one()
    heights = [one]
    series = [one]
    for step in range(1, order + 1):
        top = min(step, order - step)
        current = []
        for h in range(top + 1):
            value = zero
            if h < len(heights):
                value = value + heights[h] * cf.s[h]
            if 1 <= h <= len(heights):
                value = value + heights[h - 1]
            if h + 1 < len(heights):
                value = value + heights[h + 1] * cf.r[h]
            current.append(value)
        heights = current
        series.append(heights[0])
    logging.debug(f"Expanded J-fraction through t^{order}")
    return series


def cf_to_series_nested(cf: JacobiCF, order: int) -> list[Scalar]:
    """
    The same coefficients from the literal nested fraction, evaluated from the
    bottom up with truncated power-series reciprocals.

    A path touching height d+1 has length at least 2d+2, so levels below
    order // 2 + 1 never influence t^0..t^order.
    """
    if cf.horizon < order:
        raise UsageError(f"Continued fraction horizon {cf.horizon} is shorter than the order {order}")

    zero, one = cf.ring.zero(), cf.ring.one()
    t = PowerSeries.variable(order, one)
    t_squared = t * t
    depth = min(order // 2, cf.horizon - 1)
    tail = PowerSeries.constant(one, order)
    for level in range(depth, -1, -1):
        r_next = cf.r[level] if level < depth else zero
        denominator = PowerSeries.constant(one, order) - t * cf.s[level] - t_squared * tail * r_next
        tail = denominator.reciprocal()
    return list(tail.coeffs)
