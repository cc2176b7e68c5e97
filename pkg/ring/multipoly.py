# ring/multipoly.py
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from errors import RingMismatchError, UsageError
from ring.rational import as_rational, format_rational

# every ring is a subset of these indeterminates, kept in this order
VARIABLE_ORDER = ("a1", "a2", "b1", "b2", "lam", "q")


def canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    """Return the given indeterminate names deduplicated and in canonical order."""
    names = set(names)
    unknown = names - set(VARIABLE_ORDER)
    if unknown:
        raise UsageError(f"Unknown indeterminate(s) {sorted(unknown)}; allowed: {list(VARIABLE_ORDER)}")
    return tuple(name for name in VARIABLE_ORDER if name in names)


@lru_cache(maxsize=None)
def poly_ring(vars: tuple[str, ...]):
    """The sympy ring Q[vars] backing every MultiPoly over `vars`."""
    if not vars:
        raise UsageError("A polynomial ring needs at least one indeterminate")
    return ring(list(vars), QQ)[0]


def to_qq(value):
    value = as_rational(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _grlex_key(exponents: tuple[int, ...]):
    return (sum(exponents), exponents)


class MultiPoly:
    """
    Multivariate polynomial with rational coefficients over named indeterminates.

    Arithmetic runs on a sympy sparse polynomial in Q[vars]; this class pins
    the variable names to the canonical order, keeps polynomials from
    different rings apart (RingMismatchError) and promotes ints and Fractions
    to constants. Instances are immutable.
    """

    __slots__ = ("vars", "poly")

    def __init__(self, vars: Iterable[str], terms: Mapping[Iterable[int], object] | None = None):
        vars = tuple(vars)
        if vars != canonical_vars(vars) or len(set(vars)) != len(vars):
            raise UsageError(f"Ring variables must be distinct and in canonical order, got {vars}")

        collected: dict[tuple[int, ...], object] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(vars) or any(e < 0 for e in exponents):
                raise UsageError(f"Exponent vector {exponents} does not fit ring {vars}")
            collected[exponents] = collected.get(exponents, QQ.zero) + to_qq(coefficient)

        self.vars = vars
        self.poly = poly_ring(vars).from_dict(collected)

    @classmethod
    def _wrap(cls, vars: tuple[str, ...], poly: PolyElement) -> "MultiPoly":
        result = object.__new__(cls)
        result.vars = vars
        result.poly = poly
        return result

    # construction

    @classmethod
    def constant(cls, vars: Iterable[str], value) -> "MultiPoly":
        vars = canonical_vars(vars)
        return cls._wrap(vars, poly_ring(vars).ground_new(to_qq(value)))

    @classmethod
    def generator(cls, vars: Iterable[str], name: str) -> "MultiPoly":
        vars = canonical_vars(vars)
        if name not in vars:
            raise UsageError(f"Variable '{name}' is not in ring {vars}")
        return cls._wrap(vars, poly_ring(vars).gens[vars.index(name)])

    # inspection

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {exponents: from_qq(c) for exponents, c in self.poly.items()}

    def is_zero(self) -> bool:
        return not self.poly

    def is_constant(self) -> bool:
        return self.poly.is_ground

    def constant_term(self) -> Fraction:
        return from_qq(self.poly.coeff(1))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.poly), default=0)

    def degree(self, name: str) -> int:
        return max(self.poly.degree(self._index(name)), 0)

    def is_coefficientwise_nonneg(self) -> bool:
        return all(c > 0 for c in self.poly.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lexicographic order, highest first."""
        return [(e, from_qq(self.poly[e])) for e in sorted(self.poly, key=_grlex_key, reverse=True)]

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UsageError(f"Variable '{name}' is not in ring {self.vars}") from None

    # arithmetic

    def _coerce(self, other) -> PolyElement | None:
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise RingMismatchError(f"Ring mismatch: {self.vars} vs {other.vars}")
            return other.poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.poly.ring.ground_new(to_qq(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.vars, self.poly + other)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap(self.vars, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.vars, self.poly - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.vars, other - self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.vars, self.poly * other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError(f"Polynomial powers need a nonnegative integer exponent, got {exponent!r}")
        return MultiPoly._wrap(self.vars, self.poly ** exponent)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.exact_div(MultiPoly._wrap(self.vars, other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MultiPoly._wrap(self.vars, other).exact_div(self)

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Divide in Q[vars], raising ArithmeticError when the division is not exact."""
        divisor = self._coerce(divisor)
        if divisor is None or not divisor:
            raise ZeroDivisionError("Polynomial division by zero")
        try:
            return MultiPoly._wrap(self.vars, self.poly.exquo(divisor))
        except ExactQuotientFailed:
            raise ArithmeticError("Polynomial division is not exact") from None

    # comparison

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.poly == other.poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.poly == self.poly.ring.ground_new(to_qq(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.poly)

    # ring changes

    def bind(self, bindings: Mapping[str, object]):
        """
        Substitute rationals for some variables.

        Returns a polynomial over the remaining variables, or a Fraction when
        every variable is bound. 0**0 is 1.
        """
        for name in bindings:
            if name not in self.vars:
                raise UsageError(f"Cannot bind '{name}': not in ring {self.vars}")
        values = {name: to_qq(value) for name, value in bindings.items()}
        remaining = tuple(v for v in self.vars if v not in values)
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        bound = [(i, values[v]) for i, v in enumerate(self.vars) if v in values]

        collected: dict[tuple[int, ...], object] = {}
        for exponents, coefficient in self.poly.items():
            for i, value in bound:
                coefficient = coefficient * value ** exponents[i]
            key = tuple(exponents[i] for i in keep)
            collected[key] = collected.get(key, QQ.zero) + coefficient

        if not remaining:
            return from_qq(collected.get((), QQ.zero))
        return MultiPoly._wrap(remaining, poly_ring(remaining).from_dict(collected))

    def extend(self, vars: Iterable[str]) -> "MultiPoly":
        """Embed into a ring with more variables."""
        target = canonical_vars(vars)
        if not set(self.vars) <= set(target):
            raise RingMismatchError(f"Cannot embed ring {self.vars} into {target}")
        positions = [target.index(v) for v in self.vars]
        result = {}
        for exponents, coefficient in self.poly.items():
            key = [0] * len(target)
            for position, e in zip(positions, exponents):
                key[position] = e
            result[tuple(key)] = coefficient
        return MultiPoly._wrap(target, poly_ring(target).from_dict(result))

    def substitute(self, mapping: Mapping[str, object], target_vars: Iterable[str]) -> "MultiPoly":
        """
        Replace variables by polynomials of the target ring.

        Variables not in the mapping must exist in the target ring and are
        carried over unchanged.
        """
        target = canonical_vars(target_vars)
        images = []
        for name in self.vars:
            if name in mapping:
                image = mapping[name]
                images.append(image if isinstance(image, MultiPoly) else MultiPoly.constant(target, image))
            else:
                images.append(MultiPoly.generator(target, name))
        for image in images:
            if image.vars != target:
                raise RingMismatchError(f"Substitution image lives in {image.vars}, expected {target}")

        powers: dict[tuple[int, int], PolyElement] = {}
        result = poly_ring(target).zero
        for exponents, coefficient in self.poly.items():
            term = poly_ring(target).ground_new(coefficient)
            for i, e in enumerate(exponents):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = images[i].poly ** e
                    term = term * powers[(i, e)]
            result = result + term
        return MultiPoly._wrap(target, result)

    def derivative(self, name: str) -> "MultiPoly":
        """Formal partial derivative."""
        return MultiPoly._wrap(self.vars, self.poly.diff(self.poly.ring.gens[self._index(name)]))

    def coefficients(self, name: str) -> list:
        """
        Coefficients in `name`, lowest power first, as polynomials over the other variables.

        Over a one-variable ring the coefficients are Fractions.
        """
        index = self._index(name)
        rest = tuple(v for v in self.vars if v != name)
        buckets: list[dict] = [{} for _ in range(self.degree(name) + 1)]
        for exponents, coefficient in self.poly.items():
            buckets[exponents[index]][exponents[:index] + exponents[index + 1:]] = coefficient
        if not rest:
            return [from_qq(bucket.get((), QQ.zero)) for bucket in buckets]
        return [MultiPoly._wrap(rest, poly_ring(rest).from_dict(bucket)) for bucket in buckets]

    # serialization

    def to_records(self) -> list[dict]:
        return [
            {"exponents": list(exponents), "coefficient": format_rational(coefficient)}
            for exponents, coefficient in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, vars: Iterable[str], records: Iterable[Mapping]) -> "MultiPoly":
        terms: dict = {}
        for record in records:
            exponents = tuple(record["exponents"])
            if exponents in terms:
                raise UsageError(f"Duplicate exponent vector {list(exponents)} in polynomial records")
            terms[exponents] = as_rational(record["coefficient"])
        return cls(vars, terms)

    def __str__(self):
        if not self.poly:
            return "0"
        parts = []
        for exponents, coefficient in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exponents) if e]
            if not factors:
                parts.append(format_rational(coefficient))
            elif coefficient == 1:
                parts.append("*".join(factors))
            elif coefficient == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{format_rational(coefficient)}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self.vars}, {self})"
