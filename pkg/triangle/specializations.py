# triangle/specializations.py
from enum import Enum
from fractions import Fraction

from errors import UsageError
from ring.rational import as_rational
from triangle.params import Params


class SpecializationId(str, Enum):
    STIRLING2 = "stirling2"
    TANNY_GEOMETRIC = "tanny_geometric"
    WHITNEY = "whitney"
    ASSOC_WHITNEY = "assoc_whitney"
    RIORDAN_A049020 = "riordan_a049020"
    FALLING_FACTORIAL_A008279 = "falling_factorial_a008279"
    A154602 = "a154602"


# (a1, a2, b1, b2, lam); "m" marks the Whitney parameter
_BINDINGS = {
    SpecializationId.STIRLING2: (1, 0, 0, 1, 0),
    SpecializationId.TANNY_GEOMETRIC: (1, 0, 1, 0, 0),
    SpecializationId.WHITNEY: ("m", 1, 0, 1, 0),
    SpecializationId.ASSOC_WHITNEY: ("m", 1, 1, 0, 0),
    SpecializationId.RIORDAN_A049020: (1, 0, 0, 1, 1),
    SpecializationId.FALLING_FACTORIAL_A008279: (0, 1, 1, 0, 0),
    SpecializationId.A154602: (2, 0, 0, 1, 1),
}

NEEDS_M = {SpecializationId.WHITNEY, SpecializationId.ASSOC_WHITNEY}


def specialization_params(spec_id: SpecializationId | str, m=None) -> Params:
    """Exact parameter binding of a named member of the family."""
    try:
        spec_id = SpecializationId(spec_id)
    except ValueError:
        known = ", ".join(s.value for s in SpecializationId)
        raise UsageError(f"Unknown specialization '{spec_id}'. Known: {known}") from None

    if spec_id in NEEDS_M:
        if m is None:
            raise UsageError(f"Specialization '{spec_id.value}' needs the parameter m")
        m = as_rational(m)
    elif m is not None:
        raise UsageError(f"Specialization '{spec_id.value}' takes no parameter m")

    values = [m if v == "m" else Fraction(v) for v in _BINDINGS[spec_id]]
    return Params.numeric(*values)


def parse_specialization(text: str) -> Params:
    """'whitney:2' or 'stirling2' -> Params."""
    name, _, m = text.partition(":")
    return specialization_params(name.strip(), m.strip() or None)
