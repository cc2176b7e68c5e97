# positivity/univariate.py
from fractions import Fraction
from typing import Iterable

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ

from errors import UsageError
from ring.multipoly import MultiPoly, to_qq
from ring.rational import as_rational

# the row and Turán polynomials are all univariate in this one indeterminate
X = Symbol("x")


def sympy_rational(value) -> Rational:
    value = as_rational(value)
    return Rational(value.numerator, value.denominator)


def fraction_of(value) -> Fraction:
    """A sympy Rational (or Integer) as a Fraction."""
    return Fraction(int(value.p), int(value.q))


class UniPoly:
    """
    Univariate polynomial over Q backed by a sympy Poly.

    `coeffs` lists the coefficients lowest power first with trailing zeros
    stripped, so the zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("poly", "coeffs")

    def __init__(self, coeffs: Iterable = ()):
        rep = [to_qq(c) for c in coeffs]
        self._set(Poly(list(reversed(rep)) or [0], X, domain=QQ))

    def _set(self, poly: Poly):
        self.poly = poly
        coeffs = [] if poly.is_zero else [fraction_of(c) for c in reversed(poly.all_coeffs())]
        self.coeffs = tuple(coeffs)

    @classmethod
    def of(cls, poly: Poly) -> "UniPoly":
        result = object.__new__(cls)
        result._set(poly.set_domain(QQ))
        return result

    @classmethod
    def from_multipoly(cls, p, var: str = "q") -> "UniPoly":
        """A polynomial whose only indeterminate is `var` (or a rational constant)."""
        if not isinstance(p, MultiPoly):
            return cls([p])
        if var not in p.vars:
            if not p.is_constant():
                raise UsageError(f"Expected a polynomial in {var} only, got one in {p.vars}")
            return cls([p.constant_term()])
        index = p.vars.index(var)
        if any(e for exponents in p.terms for i, e in enumerate(exponents) if i != index):
            raise UsageError(f"Expected a polynomial in {var} only, got one in {p.vars}")
        coeffs = [Fraction(0)] * (p.degree(var) + 1)
        for exponents, coefficient in p.terms.items():
            coeffs[exponents[index]] += coefficient
        return cls(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "UniPoly":
        return cls([0] * degree + [coefficient])

    # inspection

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        return fraction_of(self.poly.eval(sympy_rational(x)))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    # arithmetic

    def __add__(self, other: "UniPoly") -> "UniPoly":
        return UniPoly.of(self.poly + other.poly)

    def __neg__(self) -> "UniPoly":
        return UniPoly.of(-self.poly)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return UniPoly.of(self.poly - other.poly)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly.of(self.poly * sympy_rational(other))
        return UniPoly.of(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        return UniPoly.of(self.poly ** exponent)

    def __divmod__(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        quotient, remainder = self.poly.div(divisor.poly)
        return UniPoly.of(quotient), UniPoly.of(remainder)

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return divmod(self, divisor)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly.of(self.poly.diff(X))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return UniPoly.of(self.poly.monic())

    def strip_zero_roots(self) -> tuple["UniPoly", int]:
        """(p / x^m, m) with m the multiplicity of the root 0."""
        m = 0
        while m < len(self.coeffs) and self.coeffs[m] == 0:
            m += 1
        return UniPoly(self.coeffs[m:]), m


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    return UniPoly.of(f.poly.gcd(g.poly)).monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), made monic."""
    if p.degree <= 0:
        return p.monic()
    return UniPoly.of(p.poly.sqf_part()).monic()


def squarefree_factors(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """
    Monic, pairwise coprime, squarefree factors with their multiplicities,
    p = lc(p)·f_1^k_1·f_2^k_2···, lowest multiplicity first.
    """
    if p.is_zero():
        raise UsageError("The zero polynomial has no squarefree decomposition")
    _, factors = p.poly.sqf_list()
    return sorted(
        ((UniPoly.of(factor).monic(), multiplicity) for factor, multiplicity in factors if factor.degree() > 0),
        key=lambda pair: pair[1],
    )
