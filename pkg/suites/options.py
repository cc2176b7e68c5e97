# suites/options.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from errors import PreconditionError
from oracle.paths import DEFAULT_PATH_GUARD
from paramspec import ParamSpec
from positivity.lcx import LcxWitness
from positivity.minors import MinorWitness
from positivity.stability import StabilityReport
from ring.multipoly import MultiPoly
from ring.scalar import Scalar, bind_scalar, format_scalar
from serialization.documents import SuiteReport, cell_witness_to_document, minor_witness_to_document
from triangle.build import Triangle, Witness, build_triangle, row_polynomial
from triangle.params import Params
from triangle.specializations import SpecializationId, specialization_params


# rows checked when none are requested; symbolic rows grow much faster
DEFAULT_ROWS = 8
SYMBOLIC_DEFAULT_ROWS = 4


@dataclass(frozen=True)
class SuiteOptions:
    """Bounds and parameters shared by every verification suite."""

    spec: Optional[ParamSpec] = None
    rows: Optional[int] = None
    order: int = 3
    shift: int = 0
    matrix_size: int = 6
    symbolic: bool = False
    guard: int = DEFAULT_PATH_GUARD

    def __post_init__(self):
        if self.rows is None:
            rows = DEFAULT_ROWS if self.params.is_numeric else SYMBOLIC_DEFAULT_ROWS
            object.__setattr__(self, "rows", rows)

    @property
    def params(self) -> Params:
        """--params when given, all five free with --symbolic, else the Stirling family."""
        if self.spec is not None:
            return self.spec.params
        if self.symbolic:
            return Params.symbolic()
        return specialization_params(SpecializationId.STIRLING2)

    @property
    def q(self) -> Fraction | None:
        """A rational q binding, or None when q stays free."""
        if self.spec is None or self.spec.q_is_symbolic:
            return None
        return self.spec.q

    def numeric_params(self, suite: str) -> Params:
        params = self.params
        if not params.is_numeric:
            raise PreconditionError(f"Suite '{suite}' needs every parameter bound to a rational")
        return params

    def regime_params(self, suite: str, roots: bool = False) -> Params:
        """
        Parameters for a suite whose claim only holds in the positivity regime.

        Every bound parameter, and q when bound, must be nonnegative; free
        parameters pass. With `roots` the parameters must also be numeric and
        satisfy a1(b1+b2) >= b1·a2.
        """
        params = self.numeric_params(suite) if roots else self.params
        negative = [name for name, value in params.as_dict().items() if _bound_negative(value)]
        if self.q is not None and self.q < 0:
            negative.append("q")
        if negative:
            raise PreconditionError(f"Suite '{suite}' needs nonnegative parameters, got negative {', '.join(negative)}")
        if roots and not params.satisfies_root_hypothesis():
            raise PreconditionError(f"Suite '{suite}' needs a1(b1+b2) >= b1·a2, which fails for {params}")
        return params

    def triangle(self, max_row: int | None = None) -> Triangle:
        return build_triangle(self.params, self.rows if max_row is None else max_row)


def _bound_negative(value: Scalar) -> bool:
    if isinstance(value, MultiPoly):
        return value.is_constant() and value.constant_term() < 0
    return value < 0


def row_sequence(tri: Triangle, length: int, q: Fraction | None = None) -> list[Scalar]:
    """T_0(q), ..., T_{length-1}(q); polynomials in q unless q is bound."""
    seq = [row_polynomial(tri, n) for n in range(length)]
    if q is None:
        return seq
    return [bind_scalar(value, {"q": q}) for value in seq]


def witness_payload(witness) -> dict[str, Any]:
    """JSON-ready form of whatever a check returned."""
    if isinstance(witness, Witness):
        return cell_witness_to_document(witness).model_dump()
    if isinstance(witness, MinorWitness):
        return minor_witness_to_document(witness).model_dump()
    if isinstance(witness, LcxWitness):
        return {"depth": witness.depth, "index": witness.index, "value": format_scalar(witness.value)}
    if isinstance(witness, StabilityReport):
        return {
            "stable": witness.stable,
            "method": witness.method,
            "max_real_part": witness.max_real_part,
        }
    if isinstance(witness, dict):
        return witness
    return {"value": str(witness)}


def passed(suite: str, detail: str) -> SuiteReport:
    return SuiteReport(suite=suite, passed=True, detail=detail)


def failed(suite: str, detail: str, witness) -> SuiteReport:
    return SuiteReport(suite=suite, passed=False, detail=detail, witness=witness_payload(witness))
