"""Tabular indicator-pair encoding: one (a, b) cell per object and parameter pair."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

from .core import BipolarSoftSet
from .errors import DimensionMismatch, LabelMismatch
from .space import ParameterSpace


class CellValue(Enum):
    """One table cell: approve (1,0), reject (0,1), or abstain (0,0).

    The pair (1,1) has no member, so an approving-and-rejecting cell is
    unrepresentable by construction.
    """

    POSITIVE = (1, 0)
    NEGATIVE = (0, 1)
    NEUTRAL = (0, 0)

    @property
    def pair(self) -> tuple[int, int]:
        return self.value

    @classmethod
    def from_pair(cls, a: int, b: int) -> "CellValue":
        try:
            return cls((a, b))
        except ValueError:
            raise ValueError(f"no cell value for pair ({a!r}, {b!r})") from None


@dataclass(frozen=True)
class TabularForm:
    """An m-by-n matrix of cells with object row labels and parameter-pair column labels."""

    row_labels: tuple[str, ...]
    col_labels: tuple[tuple[str, str], ...]
    cells: tuple[tuple[CellValue, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) != len(self.row_labels):
            raise DimensionMismatch(
                f"{len(self.row_labels)} row labels but {len(self.cells)} cell rows"
            )
        width = len(self.col_labels)
        for label, row in zip(self.row_labels, self.cells):
            if len(row) != width:
                raise DimensionMismatch(
                    f"row {label!r} has {len(row)} cells, expected {width}"
                )


def to_table(bss: BipolarSoftSet) -> TabularForm:
    """Encode a bipolar soft set as its indicator matrix; orders follow the space."""
    space = bss.space
    cells = []
    for i in range(space.m):
        bit = 1 << i
        cells.append(tuple(
            CellValue.POSITIVE if p & bit else CellValue.NEGATIVE if q & bit else CellValue.NEUTRAL
            for p, q in zip(bss.pos_masks, bss.neg_masks)
        ))
    return TabularForm(space.universe, space.pairs, tuple(cells))


def from_table(table: TabularForm, space: ParameterSpace) -> BipolarSoftSet:
    """Decode an indicator matrix back into a bipolar soft set over ``space``.

    Exact inverse of :func:`to_table` for tables it produced.
    """
    if len(table.row_labels) != space.m or len(table.col_labels) != space.n:
        raise DimensionMismatch(
            f"table is {len(table.row_labels)}x{len(table.col_labels)}, "
            f"space is {space.m}x{space.n}"
        )
    if table.row_labels != space.universe:
        raise LabelMismatch("row labels do not match the universe")
    if table.col_labels != space.pairs:
        raise LabelMismatch("column labels do not match the space's parameter pairs")
    pos = [0] * space.n
    neg = [0] * space.n
    for i, row in enumerate(table.cells):
        bit = 1 << i
        for j, cell in enumerate(row):
            if cell is CellValue.POSITIVE:
                pos[j] |= bit
            elif cell is CellValue.NEGATIVE:
                neg[j] |= bit
    return BipolarSoftSet(space, tuple(pos), tuple(neg))


def _cell_text(cell: CellValue) -> str:
    a, b = cell.pair
    return f"({a},{b})"


def render_table_text(table: TabularForm) -> str:
    """Plain-text rendering with ``(1,0)``-style cells."""
    header = [""] + [f"({p},{q})" for p, q in table.col_labels]
    body = [
        [label] + [_cell_text(c) for c in row]
        for label, row in zip(table.row_labels, table.cells)
    ]
    widths = [max(len(line[k]) for line in [header] + body) for k in range(len(header))]
    lines = []
    for line in [header] + body:
        lines.append("  ".join(text.ljust(w) for text, w in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_table_csv(table: TabularForm) -> str:
    """CSV rendering; cells serialize as quoted ``1,0`` pairs."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["object"] + [f"({p},{q})" for p, q in table.col_labels])
    for label, row in zip(table.row_labels, table.cells):
        writer.writerow([label] + [f"{a},{b}" for a, b in (c.pair for c in row)])
    return out.getvalue()


def table_document(table: TabularForm) -> dict:
    """JSON-ready dict form of a table."""
    return {
        "rows": list(table.row_labels),
        "columns": [{"pos": p, "neg": q} for p, q in table.col_labels],
        "cells": [[list(c.pair) for c in row] for row in table.cells],
    }
