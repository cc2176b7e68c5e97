# serialization/documents.py
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from errors import UsageError
from jacobi.coefficients import JacobiCF
from positivity.minors import MinorWitness
from positivity.roots import RootReport
from positivity.stability import StabilityReport
from positivity.sturm import RootBox
from positivity.univariate import UniPoly
from ring.multipoly import MultiPoly
from ring.rational import format_rational, parse_rational
from ring.scalar import Ring, Scalar, format_scalar, parse_scalar
from triangle.build import Triangle, Witness
from triangle.params import PARAM_NAMES, Params

TRIANGLE_SCHEMA = "swr.triangle.v1"
CF_SCHEMA = "swr.cf.v1"


class TermRecord(BaseModel):
    exponents: List[int]
    coefficient: str


# a rational "p/q" string, or the term records of a polynomial
WireScalar = Union[str, List[TermRecord]]


def to_wire(value: Scalar) -> WireScalar:
    return format_scalar(value)


def from_wire(value: WireScalar, vars: List[str]) -> Scalar:
    if isinstance(value, list):
        value = [record.model_dump() if isinstance(record, TermRecord) else record for record in value]
    return parse_scalar(value, vars)


class TriangleDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_id: Literal["swr.triangle.v1"] = Field(TRIANGLE_SCHEMA, alias="schema")
    ring: Literal["rational", "symbolic"]
    vars: List[str] = Field(default_factory=list)
    params: Dict[str, WireScalar]
    rows: List[List[WireScalar]]


class CFDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_id: Literal["swr.cf.v1"] = Field(CF_SCHEMA, alias="schema")
    vars: List[str] = Field(default_factory=list)
    s: List[WireScalar]
    r: List[WireScalar]


class MinorWitnessDocument(BaseModel):
    rows: List[int]
    cols: List[int]
    minor: WireScalar
    vars: List[str] = Field(default_factory=list)


class CellWitnessDocument(BaseModel):
    n: int
    k: int
    expected: WireScalar
    got: WireScalar
    vars: List[str] = Field(default_factory=list)


class RootBoxDocument(BaseModel):
    lo: str
    hi: str
    multiplicity: int = 1


class RootReportDocument(BaseModel):
    n: int
    interval: Dict[str, Optional[str]]
    lo_closed: bool
    hi_closed: bool
    inside: bool
    boxes: List[RootBoxDocument]


class StabilityDocument(BaseModel):
    n: int
    polynomial: List[str]
    stable: bool
    method: str
    max_real_part: Optional[float] = None
    zero_polynomial: bool = False


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    skipped: bool = False
    detail: str = ""
    witness: Optional[Dict[str, Any]] = None


# triangles

def triangle_to_document(tri: Triangle) -> TriangleDocument:
    return TriangleDocument(
        ring="symbolic" if tri.ring.symbolic else "rational",
        vars=list(tri.ring.vars),
        params={name: to_wire(value) for name, value in tri.params.as_dict().items()},
        rows=[[to_wire(value) for value in row] for row in tri.rows],
    )


def triangle_from_document(doc: TriangleDocument) -> Triangle:
    if (doc.ring == "symbolic") != bool(doc.vars):
        raise UsageError(f"Ring '{doc.ring}' does not match variables {doc.vars}")
    ring = Ring(tuple(doc.vars))
    missing = [name for name in PARAM_NAMES if name not in doc.params]
    if missing:
        raise UsageError(f"Triangle document lacks parameter(s) {missing}")
    params = Params(*(from_wire(doc.params[name], doc.vars) for name in PARAM_NAMES), ring=ring)
    rows = tuple(tuple(from_wire(value, doc.vars) for value in row) for row in doc.rows)
    for n, row in enumerate(rows):
        if len(row) != n + 1:
            raise UsageError(f"Row {n} has {len(row)} entries, expected {n + 1}")
    return Triangle(params=params, rows=rows)


# continued fractions

def cf_to_document(cf: JacobiCF) -> CFDocument:
    return CFDocument(
        vars=list(cf.ring.vars),
        s=[to_wire(value) for value in cf.s],
        r=[to_wire(value) for value in cf.r],
    )


def cf_from_document(doc: CFDocument) -> JacobiCF:
    return JacobiCF(
        s=tuple(from_wire(value, doc.vars) for value in doc.s),
        r=tuple(from_wire(value, doc.vars) for value in doc.r),
        ring=Ring(tuple(doc.vars)),
    )


# witnesses and reports

def _vars_of(*values) -> List[str]:
    return next((list(v.vars) for v in values if isinstance(v, MultiPoly)), [])


def minor_witness_to_document(witness: MinorWitness) -> MinorWitnessDocument:
    return MinorWitnessDocument(
        rows=list(witness.rows), cols=list(witness.cols), minor=to_wire(witness.minor), vars=_vars_of(witness.minor)
    )


def minor_witness_from_document(doc: MinorWitnessDocument) -> MinorWitness:
    return MinorWitness(rows=tuple(doc.rows), cols=tuple(doc.cols), minor=from_wire(doc.minor, doc.vars))


def cell_witness_to_document(witness: Witness) -> CellWitnessDocument:
    return CellWitnessDocument(
        n=witness.n,
        k=witness.k,
        expected=to_wire(witness.expected),
        got=to_wire(witness.got),
        vars=_vars_of(witness.expected, witness.got),
    )


def cell_witness_from_document(doc: CellWitnessDocument) -> Witness:
    return Witness(n=doc.n, k=doc.k, expected=from_wire(doc.expected, doc.vars), got=from_wire(doc.got, doc.vars))


def root_box_to_document(box: RootBox) -> RootBoxDocument:
    return RootBoxDocument(lo=format_rational(box.lo), hi=format_rational(box.hi), multiplicity=box.multiplicity)


def root_box_from_document(doc: RootBoxDocument) -> RootBox:
    return RootBox(lo=parse_rational(doc.lo), hi=parse_rational(doc.hi), multiplicity=doc.multiplicity)


def root_report_to_document(report: RootReport) -> RootReportDocument:
    return RootReportDocument(
        n=report.n,
        interval={
            "lo": None if report.lo is None else format_rational(report.lo),
            "hi": format_rational(report.hi),
        },
        lo_closed=report.lo_closed,
        hi_closed=report.hi_closed,
        inside=report.inside,
        boxes=[root_box_to_document(box) for box in report.boxes],
    )


def stability_to_document(n: int, polynomial: UniPoly, report: StabilityReport) -> StabilityDocument:
    return StabilityDocument(
        n=n,
        polynomial=[format_rational(c) for c in polynomial.coeffs],
        stable=report.stable,
        method=report.method,
        max_real_part=report.max_real_part,
        zero_polynomial=report.zero_polynomial,
    )
