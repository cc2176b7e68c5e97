# ring/scalar.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from errors import RingMismatchError, UsageError
from ring.multipoly import MultiPoly, canonical_vars
from ring.rational import as_rational, format_rational

# element of the working ring: a rational, or a polynomial over a declared set of indeterminates
Scalar = Union[Fraction, MultiPoly]


@dataclass(frozen=True)
class Ring:
    """The working ring: Q when `vars` is empty, Q[vars] otherwise."""

    vars: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vars", canonical_vars(self.vars))

    @property
    def symbolic(self) -> bool:
        return bool(self.vars)

    def const(self, value) -> Scalar:
        value = as_rational(value)
        return MultiPoly.constant(self.vars, value) if self.vars else value

    def zero(self) -> Scalar:
        return self.const(0)

    def one(self) -> Scalar:
        return self.const(1)

    def gen(self, name: str) -> MultiPoly:
        return MultiPoly.generator(self.vars, name)

    def extended(self, *names: str) -> "Ring":
        return Ring(canonical_vars(self.vars + names))

    def embed(self, value) -> Scalar:
        """Bring a scalar from a subring (or an int) into this ring."""
        if isinstance(value, MultiPoly):
            if value.vars == self.vars:
                return value
            return value.extend(self.vars)
        return self.const(value)

    def contains(self, value) -> bool:
        return ring_of(value) == self


def ring_of(value) -> Ring:
    if isinstance(value, MultiPoly):
        return Ring(value.vars)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Ring(())
    raise UsageError(f"{value!r} is not a scalar")


def common_ring(values: Iterable) -> Ring:
    """The single ring shared by all values; a usage error if they disagree."""
    rings = {ring_of(v) for v in values}
    if len(rings) > 1:
        raise RingMismatchError(f"Scalars from different rings combined: {sorted(r.vars for r in rings)}")
    return rings.pop() if rings else Ring(())


def scalar_arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    """Exact ring operation with strict ring checking; `neg` ignores y."""
    if op == "neg":
        return -x
    # a bare rational joins the ring of the polynomial it meets
    ring = common_ring([v for v in (x, y) if isinstance(v, MultiPoly)])
    x, y = ring.embed(x), ring.embed(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise UsageError(f"Unknown scalar operation '{op}'")


def poly_bind(p: MultiPoly, bindings: Mapping[str, object]) -> Scalar:
    return p.bind(bindings)


def poly_is_coefficientwise_nonneg(p: MultiPoly) -> bool:
    return p.is_coefficientwise_nonneg()


def is_nonnegative(value: Scalar) -> bool:
    """Numeric: value >= 0. Symbolic: every coefficient >= 0."""
    if isinstance(value, MultiPoly):
        return value.is_coefficientwise_nonneg()
    return value >= 0


def is_zero(value: Scalar) -> bool:
    return value == 0


def bind_scalar(value: Scalar, bindings: Mapping[str, object]) -> Scalar:
    """Bind only the variables the scalar actually has; rationals pass through."""
    if not isinstance(value, MultiPoly):
        return value
    relevant = {k: v for k, v in bindings.items() if k in value.vars}
    return value.bind(relevant) if relevant else value


def format_scalar(value: Scalar):
    """Rational -> 'num/den' string; MultiPoly -> list of {exponents, coefficient} records."""
    if isinstance(value, MultiPoly):
        return value.to_records()
    return format_rational(value)


def parse_scalar(data, vars: Iterable[str] = ()) -> Scalar:
    vars = canonical_vars(vars)
    if isinstance(data, str):
        value = as_rational(data)
        return MultiPoly.constant(vars, value) if vars else value
    if isinstance(data, list):
        if not vars:
            raise UsageError("Polynomial records need a declared variable list")
        return MultiPoly.from_records(vars, data)
    raise UsageError(f"Cannot decode scalar from {data!r}")
