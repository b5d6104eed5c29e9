"""Uniform CSV/JSON serialization for CLI result tables.

Every command produces one Table. CSV cells: None -> empty, floats ->
12 significant digits, everything else str(). JSON keeps native types
(None -> null) so round-tripping stays lossless.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import Sequence, TextIO

CSV = "csv"
JSON = "json"
FORMATS: tuple[str, ...] = (CSV, JSON)


def format_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


@dataclass
class Table:
    header: tuple[str, ...]
    rows: list[tuple]

    def write_csv(self, stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([format_cell(cell) for cell in row])

    def write_json(self, stream: TextIO) -> None:
        records = [dict(zip(self.header, row)) for row in self.rows]
        json.dump(records, stream, indent=2)
        stream.write("\n")

    def write(self, stream: TextIO, fmt: str) -> None:
        if fmt == CSV:
            self.write_csv(stream)
        elif fmt == JSON:
            self.write_json(stream)
        else:
            raise ValueError(f"unknown format {fmt!r}")
