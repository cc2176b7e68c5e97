# serialization/bfile.py
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import requests
from pydantic import BaseModel, ConfigDict, Field

from errors import BFileError, UsageError
from triangle.build import Triangle, Witness

# "index value", whitespace separated; values may be negative
RECORD_PATTERN = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")
SEQUENCE_ID_PATTERN = re.compile(r"^A\d{6}$")

OEIS_URL = "https://oeis.org/{id}/b{digits}.txt"


class FixtureParameters(BaseModel):
    """How a triangle sequence is laid out in its b-file, and which family produces it."""

    model_config = ConfigDict(populate_by_name=True)

    specialization: str
    bfile: str
    offset: int = 0
    first_row: int = Field(0, alias="firstRow")
    first_col: int = Field(0, alias="firstCol")
    m: Optional[str] = None

    def linear_index(self, n: int, k: int) -> int:
        """Position of T(n,k) when the triangle is read by rows."""
        before = sum(row - self.first_col + 1 for row in range(self.first_row, n))
        return self.offset + before + k - self.first_col


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    records: tuple[tuple[int, int], ...]

    @property
    def offset(self) -> int:
        return self.records[0][0] if self.records else 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.records)


def parse_bfile(text: str, sequence_id: str = "") -> BFile:
    """Skip blank and '#' lines; every other line must be 'index value' with increasing indices."""
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = RECORD_PATTERN.match(line)
        if not match:
            raise BFileError(f"{sequence_id or 'b-file'} line {number}: expected 'index value', got {line!r}")
        index, value = int(match.group(1)), int(match.group(2))
        if records and index <= records[-1][0]:
            raise BFileError(f"{sequence_id or 'b-file'} line {number}: index {index} is not increasing")
        records.append((index, value))
    return BFile(sequence_id=sequence_id, records=tuple(records))


def load_bfile(path: str, sequence_id: str = "") -> BFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        # error
        error_msg = f"Cannot read b-file {path}: {e.strerror or e}"
        logging.error(error_msg)
        raise BFileError(error_msg) from e
    return parse_bfile(text, sequence_id or Path(path).stem)


def compare_with_triangle(bfile: BFile, fixture: FixtureParameters, tri: Triangle, rows: int) -> Witness | None:
    """
    Compare the first `rows` rows of the b-file triangle (rows first_row..) with `tri`.

    A b-file that stops early is a usage error, not a counterexample.
    """
    last_row = fixture.first_row + rows - 1
    if last_row > tri.max_row:
        raise UsageError(f"Comparison needs rows up to {last_row}, the triangle has 0..{tri.max_row}")

    values = bfile.as_dict()
    for n in range(fixture.first_row, last_row + 1):
        for k in range(fixture.first_col, n + 1):
            index = fixture.linear_index(n, k)
            if index not in values:
                raise BFileError(f"{bfile.sequence_id}: insufficient terms for {rows} rows (missing index {index})")
            if tri.entry(n, k) != values[index]:
                logging.debug(f"{bfile.sequence_id} differs at T({n},{k})")
                return Witness(n, k, values[index], tri.entry(n, k))
    return None


def fetch_bfile(sequence_id: str, dest: str, timeout: float = 30) -> Path:
    """Download the b-file of an OEIS sequence to `dest`."""
    if not SEQUENCE_ID_PATTERN.match(sequence_id):
        raise UsageError(f"Invalid OEIS id '{sequence_id}'; expected A followed by six digits")

    url = OEIS_URL.format(id=sequence_id, digits=sequence_id[1:])
    try:
        # debug
        logging.debug(f"Fetching {url}")
        response = requests.get(url, timeout=timeout)
        response.raise_for_status()
    except requests.RequestException as e:
        error_msg = f"Could not download {url}: {e}"
        logging.error(error_msg)
        raise BFileError(error_msg) from e

    parse_bfile(response.text, sequence_id)
    target = Path(dest)
    target.write_text(response.text)
    return target
