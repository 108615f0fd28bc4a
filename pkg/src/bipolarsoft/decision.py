"""Score-based selection: count approving and rejecting cells per object, pick the argmax."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .core import BipolarSoftSet


@dataclass(frozen=True)
class ScoreRow:
    """Counts for one object: approving cells, rejecting cells, and their difference."""

    object_id: str
    c_plus: int
    c_minus: int
    score: int


@dataclass(frozen=True)
class DecisionResult:
    rows: tuple[ScoreRow, ...]
    max_score: int
    optimal: tuple[str, ...]


def scores(bss: BipolarSoftSet) -> tuple[ScoreRow, ...]:
    """One row per object in universe order; score = approvals - rejections."""
    rows = []
    for i, u in enumerate(bss.space.universe):
        bit = 1 << i
        c_plus = sum(1 for p in bss.pos_masks if p & bit)
        c_minus = sum(1 for q in bss.neg_masks if q & bit)
        rows.append(ScoreRow(u, c_plus, c_minus, c_plus - c_minus))
    return tuple(rows)


def decide(bss: BipolarSoftSet) -> DecisionResult:
    """Score every object and report *all* maximizers, in universe order.

    Ties are never broken silently; the caller chooses among ``optimal``.
    """
    rows = scores(bss)
    best = max(row.score for row in rows)
    winners = tuple(row.object_id for row in rows if row.score == best)
    return DecisionResult(rows, best, winners)


def render_scores_text(result: DecisionResult) -> str:
    header = ("object", "c+", "c-", "score")
    body = [
        (row.object_id, str(row.c_plus), str(row.c_minus), str(row.score))
        for row in result.rows
    ]
    widths = [max(len(line[k]) for line in [header] + body) for k in range(4)]
    lines = []
    for line in [header] + body:
        cells = [line[0].ljust(widths[0])] + [
            text.rjust(w) for text, w in zip(line[1:], widths[1:])
        ]
        lines.append("  ".join(cells).rstrip())
    lines.append(f"max score: {result.max_score}")
    lines.append("optimal: " + ", ".join(result.optimal))
    return "\n".join(lines) + "\n"


def render_scores_csv(result: DecisionResult) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["object", "c_plus", "c_minus", "score"])
    for row in result.rows:
        writer.writerow([row.object_id, row.c_plus, row.c_minus, row.score])
    return out.getvalue()


def scores_document(result: DecisionResult) -> dict:
    """JSON-ready dict form of a decision."""
    return {
        "rows": [
            {
                "object": row.object_id,
                "c_plus": row.c_plus,
                "c_minus": row.c_minus,
                "score": row.score,
            }
            for row in result.rows
        ],
        "max_score": result.max_score,
        "optimal": list(result.optimal),
    }
