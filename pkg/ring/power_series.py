# ring/power_series.py
from fractions import Fraction
from math import factorial
from typing import Sequence

from errors import UsageError
from ring.multipoly import MultiPoly
from ring.rational import as_rational
from ring.scalar import Scalar, common_ring


class PowerSeries:
    """
    Truncated formal power series in t, exact for t^0..t^order.

    Coefficients are Scalars of a single ring. Nothing beyond the
    truncation order is ever reported.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Scalar], order: int | None = None):
        coeffs = [c if isinstance(c, MultiPoly) else as_rational(c) for c in coeffs]
        if not coeffs:
            raise UsageError("A power series needs at least its constant coefficient")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise UsageError(f"Truncation order must be >= 0, got {order}")
        common_ring(coeffs)

        zero = coeffs[0] * 0
        coeffs = coeffs[: order + 1] + [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    # construction

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int, one: Scalar = Fraction(1)) -> "PowerSeries":
        """The series t (with the ring fixed by `one`)."""
        return cls([one * 0, one], order)

    @classmethod
    def exp_linear(cls, rate: Scalar, order: int) -> "PowerSeries":
        """e^{rate·t} = sum rate^n t^n / n!."""
        coeffs = [rate * 0 + 1]
        for n in range(1, order + 1):
            coeffs.append(coeffs[-1] * rate * Fraction(1, n))
        return cls(coeffs, order)

    # arithmetic

    def _lift(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(self.coeffs[0] * 0 + other, self.order)

    def __add__(self, other):
        other = self._lift(other)
        order = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        coeffs = []
        for n in range(order + 1):
            total = self.coeffs[0] * other.coeffs[n]
            for k in range(1, n + 1):
                total = total + self.coeffs[k] * other.coeffs[n - k]
            coeffs.append(total)
        return PowerSeries(coeffs, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={list(self.coeffs)})"

    # transcendental operations

    def exp(self) -> "PowerSeries":
        if self.coeffs[0] != 0:
            raise UsageError("ps_exp needs a zero constant term")
        f = self.coeffs
        g = [f[0] + 1]
        for n in range(1, self.order + 1):
            total = f[1] * g[n - 1]
            for k in range(2, n + 1):
                total = total + f[k] * g[n - k] * k
            g.append(total * Fraction(1, n))
        return PowerSeries(g, self.order)

    def log(self) -> "PowerSeries":
        if self.coeffs[0] != 1:
            raise UsageError("ps_log needs constant term 1")
        f = self.coeffs
        g = [f[0] * 0]
        for n in range(1, self.order + 1):
            total = f[n] * n
            for k in range(1, n):
                total = total - g[k] * f[n - k] * k
            g.append(total * Fraction(1, n))
        return PowerSeries(g, self.order)

    def pow(self, alpha) -> "PowerSeries":
        """f^alpha = exp(alpha·log f) for a rational alpha and constant term 1."""
        if self.coeffs[0] != 1:
            raise UsageError("ps_pow needs constant term 1")
        return (self.log() * as_rational(alpha)).exp()

    def reciprocal(self) -> "PowerSeries":
        """1/f for a rational, nonzero constant term."""
        head = self.coeffs[0]
        if head == 0:
            raise UsageError("Cannot invert a series with zero constant term")
        if isinstance(head, MultiPoly):
            if not head.is_constant():
                raise UsageError("Reciprocal needs a rational constant term")
            head = head.constant_term()
        inverse = 1 / head
        h = [self.coeffs[0] * 0 + inverse]
        for n in range(1, self.order + 1):
            total = self.coeffs[1] * h[n - 1]
            for k in range(2, n + 1):
                total = total + self.coeffs[k] * h[n - k]
            h.append(-total * inverse)
        return PowerSeries(h, self.order)

    def egf_values(self) -> list[Scalar]:
        """n!·[t^n], i.e. the sequence whose exponential generating function this is."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


def ps_arith(op: str, f: PowerSeries, g: PowerSeries) -> PowerSeries:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise UsageError(f"Unknown power series operation '{op}'")


def ps_exp(f: PowerSeries) -> PowerSeries:
    return f.exp()


def ps_log(f: PowerSeries) -> PowerSeries:
    return f.log()


def ps_pow(f: PowerSeries, alpha) -> PowerSeries:
    return f.pow(alpha)
