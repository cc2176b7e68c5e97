# positivity/sturm.py
import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import UsageError
from positivity.univariate import UniPoly, fraction_of, sympy_rational
from ring.rational import format_rational

# None stands for -inf as a left endpoint and +inf as a right endpoint
Endpoint = Fraction | None


@dataclass(frozen=True)
class RootBox:
    """Half-open isolating interval (lo, hi] holding exactly one real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def as_dict(self) -> dict[str, str]:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """f, f', then negated remainders, for the squarefree part f of p."""
    if p.is_zero():
        raise UsageError("Sturm sequence of the zero polynomial")
    return [UniPoly.of(f) for f in p.poly.sturm()]


def _endpoint(x: Endpoint):
    return None if x is None else sympy_rational(x)


def count_roots_in(
    p: UniPoly,
    lo: Endpoint = None,
    hi: Endpoint = None,
    lo_closed: bool = False,
    hi_closed: bool = True,
) -> int:
    """
    Number of distinct real roots of p between lo and hi.

    The Sturm count covers the closed interval [lo, hi]; the openness flags
    then drop a root sitting exactly on a finite endpoint.
    """
    if p.is_zero():
        raise UsageError("Cannot count the roots of the zero polynomial")
    if lo is not None and hi is not None and lo > hi:
        raise UsageError(f"Empty interval ({lo}, {hi})")
    if p.degree < 1:
        return 0
    if lo is not None and lo == hi:
        return int(lo_closed and hi_closed and p(lo) == 0)

    count = p.poly.count_roots(_endpoint(lo), _endpoint(hi))
    if hi is not None and not hi_closed and p(hi) == 0:
        count -= 1
    if lo is not None and not lo_closed and p(lo) == 0:
        count -= 1
    return count


def _isolated(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    # pull hi below a neighbouring root until (lo, hi] holds exactly one root
    while count_roots_in(p, lo, hi) != 1:
        mid = (lo + hi) / 2
        if count_roots_in(p, lo, mid):
            hi = mid
        else:
            lo = mid
    return hi


def isolate_roots(p: UniPoly) -> list[RootBox]:
    """
    Disjoint half-open boxes, in increasing order, one per distinct real root,
    each tagged with the root's multiplicity in p.

    sympy isolates the roots as closed intervals that may degenerate to a
    rational root or share an endpoint with a neighbour; each becomes the
    half-open box (lo, hi] that holds that root alone.
    """
    if p.is_zero():
        raise UsageError("Cannot isolate the roots of the zero polynomial")
    if p.degree < 1:
        return []

    boxes: list[RootBox] = []
    for (a, b), multiplicity in p.poly.intervals():
        lo, hi = fraction_of(a), fraction_of(b)
        if lo == hi:
            lo = boxes[-1].hi if boxes else hi - 1
        else:
            if boxes and boxes[-1].hi > lo:
                lo = boxes[-1].hi
            hi = _isolated(p, lo, hi)
        boxes.append(RootBox(lo, hi, multiplicity))
    logging.debug(f"Isolated {len(boxes)} real roots of a degree-{p.degree} polynomial")
    return boxes


def refine_box(p: UniPoly, box: RootBox, width: Fraction) -> RootBox:
    """Bisect `box` until it is at most `width` wide, keeping the half with the root."""
    lo, hi = box.lo, box.hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots_in(p, lo, mid):
            hi = mid
        else:
            lo = mid
    return RootBox(lo, hi, box.multiplicity)
