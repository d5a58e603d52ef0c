"""Tabular output shared by the CLI: typed columns, CSV and JSON renderings.

Column types:

``rational``  Fraction, written ``"num/den"`` (always with a denominator)
``decimal``   float, rounded to 12 significant digits
``int``       integer
``text``      anything else, as a string

Both renderings go through :func:`encode`, so a CSV and a JSON dump of the
same record decode to identical values.
"""
from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

TYPES = ("rational", "decimal", "int", "text")
_RATIONAL = re.compile(r"^-?\d+/\d+$")


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def round12(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        return x
    return float(f"{x:.12g}")


def encode(value, kind: str):
    """The JSON-ready form of one cell."""
    if value is None:
        return None
    if kind == "rational":
        if isinstance(value, float):
            raise TypeError("a float in a rational column")
        return format_rational(value)
    if kind == "decimal":
        return round12(value)
    if kind == "int":
        return int(value)
    return str(value)


def decode(raw, kind: str):
    if raw is None or raw == "":
        return None
    if kind == "rational":
        if not _RATIONAL.match(str(raw)):
            raise ValueError(f"not a rational: {raw!r}")
        return Fraction(raw)
    if kind == "decimal":
        return float(raw)
    if kind == "int":
        return int(raw)
    return str(raw)


@dataclass
class Record:
    columns: list[str]
    types: dict[str, str]
    rows: list[dict[str, Any]] = field(default_factory=list)
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for c in self.columns:
            if self.types.get(c) not in TYPES:
                raise ValueError(f"column {c!r} has no valid type")

    def add(self, **row) -> None:
        extra = set(row) - set(self.columns)
        if extra:
            raise KeyError(f"unknown columns {sorted(extra)}")
        self.rows.append(row)

    def encoded_rows(self) -> list[list]:
        return [[encode(r.get(c), self.types[c]) for c in self.columns] for r in self.rows]

    def to_json(self) -> str:
        payload = {
            "meta": self.meta,
            "columns": self.columns,
            "types": [self.types[c] for c in self.columns],
            "rows": [dict(zip(self.columns, r)) for r in self.encoded_rows()],
        }
        return json.dumps(payload, indent=1, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.encoded_rows():
            w.writerow(["" if v is None else (f"{v:.12g}" if isinstance(v, float) else v) for v in row])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")

    def values(self) -> list[list]:
        """Decoded cell values, as a reader of either rendering would see them."""
        return [[decode(v, self.types[c]) for c, v in zip(self.columns, r)] for r in self.encoded_rows()]


def parse_json(text: str) -> tuple[list[str], list[list]]:
    data = json.loads(text)
    cols = data["columns"]
    types = dict(zip(cols, data["types"]))
    return cols, [[decode(r[c], types[c]) for c in cols] for r in data["rows"]]


def parse_csv(text: str, types: dict[str, str]) -> tuple[list[str], list[list]]:
    """Decode CSV output; the column types come from the matching JSON or record."""
    reader = csv.reader(io.StringIO(text))
    cols = next(reader)
    return cols, [[decode(v, types[c]) for c, v in zip(cols, row)] for row in reader]
