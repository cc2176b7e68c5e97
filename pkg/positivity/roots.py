# positivity/roots.py
import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import PreconditionError, UsageError
from jacobi.first_column import column0_polynomial
from positivity.sturm import Endpoint, RootBox, count_roots_in, isolate_roots
from positivity.univariate import UniPoly, poly_gcd, squarefree_factors
from triangle.build import Triangle, Witness, build_triangle
from triangle.params import Params


def real_roots_with_multiplicity(p: UniPoly) -> list[RootBox]:
    """Isolating boxes of the distinct real roots of p, each tagged with its multiplicity."""
    return isolate_roots(p)


def _tag_multiplicities(boxes: list[RootBox], polys: dict[str, UniPoly]) -> dict[str, list[RootBox]]:
    """
    For boxes isolating the distinct roots of a common multiple, find the
    multiplicity of each root in each polynomial through its squarefree factors.
    A box holding no root of a polynomial gets no entry for it.
    """
    tagged = {}
    for name, poly in polys.items():
        factors = squarefree_factors(poly)
        entries = []
        for box in boxes:
            for factor, multiplicity in factors:
                if count_roots_in(factor, box.lo, box.hi):
                    entries.append(RootBox(box.lo, box.hi, multiplicity))
                    break
        tagged[name] = entries
    return tagged


def _expanded(boxes: list[RootBox], index: dict[tuple[Fraction, Fraction], int]) -> list[int]:
    # root positions repeated by multiplicity, in increasing order
    positions = []
    for box in boxes:
        positions.extend([index[(box.lo, box.hi)]] * box.multiplicity)
    return positions


def interlacing_check(g: UniPoly, f: UniPoly) -> int | None:
    """
    Whether the roots of g interlace those of f, allowing ties:
    r_n <= s_{n-1} <= r_{n-1} <= ... <= s_1 <= r_1.

    Returns None on success, otherwise the (0-based, ascending) position of
    the first root of g out of place.
    """
    if f.degree != g.degree + 1:
        raise PreconditionError(f"Interlacing needs deg f = deg g + 1, got {f.degree} and {g.degree}")
    if f.leading <= 0 or g.leading <= 0:
        raise PreconditionError("Interlacing needs standard polynomials (positive leading coefficients)")

    boxes = isolate_roots(f * g)
    tagged = _tag_multiplicities(boxes, {"f": f, "g": g})
    index = {(box.lo, box.hi): i for i, box in enumerate(boxes)}
    f_roots = _expanded(tagged["f"], index)
    g_roots = _expanded(tagged["g"], index)
    if len(f_roots) != f.degree or len(g_roots) != g.degree:
        raise PreconditionError("Interlacing needs real-rooted polynomials")

    for i, s in enumerate(g_roots):
        if not f_roots[i] <= s <= f_roots[i + 1]:
            logging.debug(f"Root {i} of g is out of place")
            return i
    return None


@dataclass(frozen=True)
class RootReport:
    """Distinct real roots of T_n(q) and the open interval they should lie in."""

    n: int
    boxes: tuple[RootBox, ...]
    lo: Endpoint
    hi: Fraction
    lo_closed: bool
    hi_closed: bool
    inside: bool


def root_interval(params: Params) -> tuple[Endpoint, Fraction]:
    """(-λ - a1/b1, -λ); the left end is -inf when b1 = 0."""
    lo = -params.lam - params.a1 / params.b1 if params.b1 != 0 else None
    return lo, -params.lam


def interval_closure(params: Params) -> tuple[bool, bool]:
    """
    Which ends of the root interval may hold a root: the right end -λ when
    a2 = 0, the left end when a1(b1+b2) = b1·a2 (then T_n vanishes there).
    """
    lo_closed = params.b1 != 0 and params.a1 * (params.b1 + params.b2) == params.b1 * params.a2
    return lo_closed, params.a2 == 0


def _check_regime(params: Params):
    if not params.is_numeric:
        raise PreconditionError("Real-rootedness checks need every parameter bound to a rational")
    if not params.in_positivity_regime:
        raise PreconditionError(f"Parameters must be nonnegative, got {params}")
    if not params.satisfies_root_hypothesis():
        raise PreconditionError(f"Hypothesis a1(b1+b2) >= b1·a2 fails for {params}")
    if params.a1 == 0 or params.b1 + params.b2 == 0:
        raise PreconditionError(f"Degenerate parameters {params}: T_n(q) is constant or has a repeated root")


def row_polynomial_values(tri: Triangle, n: int) -> UniPoly:
    return UniPoly(tri.rows[n])


def _root_count_witness(
    p: UniPoly, n: int, lo: Endpoint, hi: Fraction, closure: tuple[bool, bool]
) -> Witness | None:
    if p.degree != n:
        return Witness(n, -1, n, p.degree)
    repeated = poly_gcd(p, p.derivative()).degree
    if repeated > 0:
        return Witness(n, -1, n, p.degree - repeated)
    count = count_roots_in(p, lo, hi, lo_closed=closure[0], hi_closed=closure[1])
    if count != n:
        return Witness(n, -1, n, count)
    return None


def real_rooted_in_interval_check(params: Params, n: int, tri: Triangle | None = None) -> Witness | None:
    """
    T_n(q) has n simple real roots strictly inside (-λ - a1/b1, -λ).

    An end where T_n must vanish (see interval_closure) is taken closed
    instead. The witness reports (n, -1, n, roots found).
    """
    _check_regime(params)
    if n == 0:
        return None
    tri = tri or build_triangle(params, n)
    lo, hi = root_interval(params)
    witness = _root_count_witness(row_polynomial_values(tri, n), n, lo, hi, interval_closure(params))
    if witness:
        logging.debug(f"T_{n}(q) fails the root check: {witness}")
    return witness


def _split_at(p: UniPoly, box: RootBox, point: Fraction) -> RootBox:
    # shrink a box straddling `point` to the side that holds its root
    if not box.lo < point < box.hi:
        return box
    if count_roots_in(p, box.lo, point):
        return RootBox(box.lo, point, box.multiplicity)
    return RootBox(point, box.hi, box.multiplicity)


def root_report(params: Params, n: int) -> RootReport:
    """
    Isolating boxes for T_n(q), split at the interval ends so that a root
    inside the interval gets a box inside it too.
    """
    if not params.is_numeric:
        raise UsageError("Root isolation needs every parameter bound to a rational")
    tri = build_triangle(params, n)
    p = row_polynomial_values(tri, n)
    if params.in_positivity_regime:
        lo, hi = root_interval(params)
        lo_closed, hi_closed = interval_closure(params)
    else:
        lo, hi = None, Fraction(0)
        lo_closed, hi_closed = False, params.a2 == 0
    if p.degree < 1:
        return RootReport(n=n, boxes=(), lo=lo, hi=hi, lo_closed=lo_closed, hi_closed=hi_closed, inside=True)

    boxes = []
    for box in isolate_roots(p):
        if lo is not None:
            box = _split_at(p, box, lo)
        boxes.append(_split_at(p, box, hi))
    on_lo = lo is not None and p(lo) == 0
    inside = (
        all((lo is None or box.lo >= lo or (on_lo and box.hi == lo)) and box.hi <= hi for box in boxes)
        and (hi_closed or p(hi) != 0)
        and (lo_closed or not on_lo)
    )
    return RootReport(
        n=n, boxes=tuple(boxes), lo=lo, hi=hi, lo_closed=lo_closed, hi_closed=hi_closed, inside=inside
    )


def column0_roots_check(params: Params, n: int) -> Witness | None:
    """𝒯_n(λ) = T_{n,0} has n simple real roots in (-a1/b1, 0), the other four parameters bound."""
    at_zero = Params(params.a1, params.a2, params.b1, params.b2, Fraction(0), ring=params.ring)
    _check_regime(at_zero)
    if n == 0:
        return None
    p = UniPoly.from_multipoly(column0_polynomial(at_zero, n), "lam")
    lo, hi = root_interval(at_zero)
    return _root_count_witness(p, n, lo, hi, interval_closure(at_zero))
