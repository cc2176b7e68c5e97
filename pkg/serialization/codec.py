# serialization/codec.py
import csv
import io
import json

from pydantic import ValidationError

from errors import UsageError
from jacobi.coefficients import JacobiCF
from ring.multipoly import MultiPoly
from ring.rational import format_rational
from serialization.documents import (
    CFDocument,
    TriangleDocument,
    cf_from_document,
    cf_to_document,
    to_wire,
    triangle_from_document,
    triangle_to_document,
)
from triangle.build import Triangle

FORMATS = ("json", "csv")


def emit_triangle(tri: Triangle, fmt: str = "json") -> str:
    """Triangle JSON per the swr.triangle.v1 schema, or CSV rows n,k,value."""
    if fmt == "json":
        return triangle_to_document(tri).model_dump_json(by_alias=True)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(tri.rows):
            for k, value in enumerate(row):
                writer.writerow([n, k, str(value) if isinstance(value, MultiPoly) else format_rational(value)])
        return buffer.getvalue()
    raise UsageError(f"Unknown format '{fmt}'; expected one of {', '.join(FORMATS)}")


def parse_triangle(text: str) -> Triangle:
    try:
        return triangle_from_document(TriangleDocument.model_validate_json(text))
    except ValidationError as e:
        raise UsageError(f"Invalid triangle document: {e.error_count()} error(s), first: {e.errors()[0]['msg']}") from e


def emit_cf(cf: JacobiCF) -> str:
    return cf_to_document(cf).model_dump_json(by_alias=True)


def parse_cf(text: str) -> JacobiCF:
    try:
        return cf_from_document(CFDocument.model_validate_json(text))
    except ValidationError as e:
        raise UsageError(f"Invalid continued-fraction document: {e.errors()[0]['msg']}") from e


def emit_series(values) -> str:
    """A JSON array of wire scalars."""
    return json.dumps([to_wire(v) for v in values])
