# ring/rational.py
import re
from fractions import Fraction

from errors import UsageError

# "p/q" or a plain integer, optional sign on the numerator only
RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction into a reduced Fraction; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageError(f"Refusing inexact value {value!r}; use an int, Fraction or 'p/q' string.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise UsageError(f"Cannot interpret {value!r} as a rational.")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or an integer string into a Fraction."""
    match = RATIONAL_PATTERN.match(text)
    if not match:
        raise UsageError(f"Invalid rational '{text}': expected 'p/q' or an integer.")

    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise UsageError(f"Invalid rational '{text}': zero denominator.")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    """Serialize as 'num/den', or 'num' when the denominator is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
