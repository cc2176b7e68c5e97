# paramspec.py
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from errors import UsageError
from ring.rational import parse_rational
from triangle.params import PARAM_NAMES, Params
from triangle.specializations import SpecializationId, parse_specialization

BINDING_PATTERN = re.compile(r"^\s*(a1|a2|b1|b2|lam|q)\s*=\s*(sym|[+-]?\d+(?:\s*/\s*\d+)?)\s*$")
POSITIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+(?:/\d+)?(?:\s*,\s*[+-]?\d+(?:/\d+)?){4}\s*$")
REGISTRY_PATTERN = re.compile(r"^\s*([a-z0-9_]+)(?::([+-]?\d+(?:/\d+)?))?\s*$")

SYMBOLIC = "sym"


@dataclass(frozen=True)
class ParamSpec:
    """Parsed --params text: the five parameters plus an optional q binding."""

    params: Params
    q: Fraction | str | None = None

    @property
    def q_is_symbolic(self) -> bool:
        return self.q == SYMBOLIC


def parse_param_spec(text: str) -> ParamSpec:
    """
    Accepts 'a1=<rat>|sym,...,lam=<rat>|sym[,q=<rat>|sym]', a bare list
    'a1,a2,b1,b2,lam' of rationals, or a registry name such as 'stirling2'
    or 'whitney:2'.
    """
    if not text or not text.strip():
        raise UsageError("Empty parameter specification")

    if POSITIONAL_PATTERN.match(text):
        values = [parse_rational(part) for part in text.split(",")]
        return ParamSpec(Params.numeric(*values))

    if "=" not in text:
        match = REGISTRY_PATTERN.match(text)
        if not match:
            raise UsageError(f"Cannot parse parameter specification '{text}'")
        return ParamSpec(parse_specialization(text.strip()))

    bindings: dict[str, str] = {}
    for part in text.split(","):
        match = BINDING_PATTERN.match(part)
        if not match:
            raise UsageError(f"Invalid binding '{part.strip()}'; expected name=<rational>|sym with name in {PARAM_NAMES + ('q',)}")
        name, value = match.groups()
        if name in bindings:
            raise UsageError(f"Parameter '{name}' bound twice")
        bindings[name] = value

    q = bindings.pop("q", None)
    values = {name: value if value == SYMBOLIC else parse_rational(value) for name, value in bindings.items()}
    # q is never a parameter; a free q only tells the commands to keep it symbolic
    params = Params.from_mapping(values)
    logging.debug(f"Parsed parameters {params} with q={q}")
    return ParamSpec(params, q if q in (None, SYMBOLIC) else parse_rational(q))


def registry_names() -> list[str]:
    return [member.value for member in SpecializationId]
