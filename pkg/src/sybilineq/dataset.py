"""Dataset ingestion: named groups of wealth records.

Two file layouts are supported. ``long`` is a CSV with a header row and
``group,wealth`` records; ``row`` holds one comma-separated distribution per
line, with the line number as the group name.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

from .econ import WealthDistribution, make_distribution
from .errors import DatasetParseError, NegativeWealthError


@dataclass(frozen=True)
class Dataset:
    """Groups in input order, each a validated wealth distribution."""

    groups: dict[str, WealthDistribution]

    def __len__(self) -> int:
        return len(self.groups)


def _parse_wealth(text: str, line: int, column: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DatasetParseError(line, column, f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise DatasetParseError(line, column, f"non-finite wealth: {text!r}")
    if value < 0:
        raise NegativeWealthError(column - 1, value, line=line)
    return value


def _parse_long(path: str) -> dict[str, list[float]]:
    groups: dict[str, list[float]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or len(header) < 2:
            raise DatasetParseError(1, 1, "expected a CSV header with 2 columns")
        for line, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) < 2:
                raise DatasetParseError(line, 1, "expected 2 columns: group,wealth")
            name = row[0].strip()
            groups.setdefault(name, []).append(
                _parse_wealth(row[1].strip(), line, 2)
            )
    return groups


def _parse_row(path: str) -> dict[str, list[float]]:
    groups: dict[str, list[float]] = {}
    with open(path) as fh:
        for line, text in enumerate(fh, start=1):
            text = text.strip()
            if not text:
                continue
            values = [
                _parse_wealth(cell.strip(), line, col)
                for col, cell in enumerate(text.split(","), start=1)
            ]
            groups[str(line)] = values
    return groups


def parse_dataset(path: str, fmt: str = "long") -> Dataset:
    """Read and validate a dataset file; rejects negative or non-numeric
    wealth with line diagnostics."""
    if fmt == "long":
        raw = _parse_long(path)
    elif fmt == "row":
        raw = _parse_row(path)
    else:
        raise ValueError(f"format must be 'long' or 'row', got {fmt!r}")
    groups: dict[str, WealthDistribution] = {}
    for name, values in raw.items():
        groups[name] = make_distribution(values)
    return Dataset(groups)
