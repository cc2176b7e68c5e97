# triangle/params.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from errors import UsageError
from ring.multipoly import MultiPoly
from ring.scalar import Ring, Scalar, format_scalar

PARAM_NAMES = ("a1", "a2", "b1", "b2", "lam")


@dataclass(frozen=True)
class Params:
    """The five parameters (a1, a2, b1, b2, lam), all living in `ring`."""

    a1: Scalar
    a2: Scalar
    b1: Scalar
    b2: Scalar
    lam: Scalar
    ring: Ring = Ring(())

    def __post_init__(self):
        for name in PARAM_NAMES:
            value = getattr(self, name)
            if self.ring.symbolic:
                object.__setattr__(self, name, self.ring.embed(value))
            elif isinstance(value, MultiPoly):
                raise UsageError(f"Parameter {name} is symbolic but the ring is Q")
            else:
                object.__setattr__(self, name, self.ring.const(value))

    @classmethod
    def numeric(cls, a1, a2, b1, b2, lam) -> "Params":
        return cls(a1, a2, b1, b2, lam, Ring(()))

    @classmethod
    def from_mapping(cls, values: Mapping[str, object], extra_vars: tuple[str, ...] = ()) -> "Params":
        """
        Build from {name: rational-or-'sym'}; 'sym' promotes the name to an indeterminate.

        `extra_vars` adds indeterminates (usually q) to the ring up front.
        """
        missing = [name for name in PARAM_NAMES if name not in values]
        if missing:
            raise UsageError(f"Missing parameter(s): {', '.join(missing)}")
        symbolic = tuple(name for name in PARAM_NAMES if values[name] == "sym")
        ring = Ring(symbolic + tuple(extra_vars))
        bound = {
            name: ring.gen(name) if values[name] == "sym" else ring.const(values[name])
            for name in PARAM_NAMES
        }
        return cls(ring=ring, **bound)

    @classmethod
    def symbolic(cls, with_q: bool = False) -> "Params":
        """All five parameters free, optionally with q already in the ring."""
        return cls.from_mapping({name: "sym" for name in PARAM_NAMES}, ("q",) if with_q else ())

    def values(self) -> tuple[Scalar, ...]:
        return (self.a1, self.a2, self.b1, self.b2, self.lam)

    def as_dict(self) -> dict[str, Scalar]:
        return dict(zip(PARAM_NAMES, self.values()))

    @property
    def is_numeric(self) -> bool:
        return not self.ring.symbolic

    @property
    def in_positivity_regime(self) -> bool:
        """True when all five are bound to nonnegative rationals."""
        return self.is_numeric and all(v >= 0 for v in self.values())

    def satisfies_root_hypothesis(self) -> bool:
        """Nonnegative parameters with a1(b1+b2) >= b1·a2."""
        return self.in_positivity_regime and self.a1 * (self.b1 + self.b2) >= self.b1 * self.a2

    def with_ring(self, ring: Ring) -> "Params":
        """Re-embed into a larger ring (for example one that also holds q)."""
        return Params(*self.values(), ring=ring)

    def bind(self, bindings: Mapping[str, object]) -> "Params":
        """Specialize some indeterminates to rationals; the ring shrinks accordingly."""
        ring = Ring(tuple(v for v in self.ring.vars if v not in bindings))
        values = []
        for value in self.values():
            if isinstance(value, MultiPoly):
                relevant = {k: v for k, v in bindings.items() if k in value.vars}
                value = value.bind(relevant) if relevant else value
            values.append(value)
        return Params(*[_restrict(v, ring) for v in values], ring=ring)

    def describe(self) -> dict[str, object]:
        return {name: format_scalar(value) for name, value in self.as_dict().items()}

    def __str__(self):
        return ", ".join(f"{name}={value}" for name, value in self.as_dict().items())


def _restrict(value: Scalar, ring: Ring) -> Scalar:
    # after binding, a polynomial may already be in `ring` or be a constant of a bigger ring
    if isinstance(value, MultiPoly) and value.vars != ring.vars:
        if value.is_constant():
            return ring.const(value.constant_term())
        if set(value.vars) <= set(ring.vars):
            return value.extend(ring.vars)
        raise UsageError(f"Parameter {value} does not fit ring {ring.vars}")
    if isinstance(value, Fraction) and ring.symbolic:
        return ring.const(value)
    return value
