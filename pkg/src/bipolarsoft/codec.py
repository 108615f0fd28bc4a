"""Canonical ``.bss.json`` document format.

A document has three top-level keys:

* ``universe`` — array of object ids, order significant;
* ``pairs`` — array of ``{"pos": ..., "neg": ...}`` parameter objects whose
  order defines the negation pairing;
* ``assignments`` — array of ``{"param", "positive", "negative"}`` rows.
  Parameters without a row carry the neutral pair.

Canonical output sorts members in universe order, lists assignments in
parameter order, omits all-neutral rows, indents by two spaces and ends
lines with LF, so equal values serialize to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import BipolarSoftSet
from .errors import InvalidSpace, ParseError
from .space import ParameterSpace

_TOP_KEYS = ("universe", "pairs", "assignments")


def to_document(bss: BipolarSoftSet) -> dict:
    """Canonical dict form of a bipolar soft set."""
    space = bss.space
    assignments = []
    for e in space.positive_params:
        pos = bss.pos(e)
        neg = bss.neg(e)
        if pos or neg:
            assignments.append(
                {"param": e, "positive": list(pos), "negative": list(neg)}
            )
    return {
        "universe": list(space.universe),
        "pairs": [{"pos": p, "neg": q} for p, q in space.pairs],
        "assignments": assignments,
    }


def serialize(bss: BipolarSoftSet) -> str:
    """Canonical text form; equal values yield byte-identical output."""
    return json.dumps(to_document(bss), indent=2, ensure_ascii=False) + "\n"


def _expect_list(value, location: str) -> list:
    if not isinstance(value, list):
        raise ParseError("expected an array", location)
    return value


def _expect_str(value, location: str) -> str:
    if not isinstance(value, str):
        raise ParseError("expected a string", location)
    return value


def _expect_object(value, location: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(value, dict):
        raise ParseError("expected an object", location)
    missing = [k for k in keys if k not in value]
    if missing:
        raise ParseError(f"missing key {missing[0]!r}", location)
    extra = [k for k in value if k not in keys]
    if extra:
        raise ParseError(f"unexpected key {extra[0]!r}", location)
    return value


def _member_list(value, location: str) -> list[str]:
    members = _expect_list(value, location)
    seen = set()
    for j, u in enumerate(members):
        _expect_str(u, f"{location}[{j}]")
        if u in seen:
            raise ParseError(f"duplicate member {u!r}", f"{location}[{j}]")
        seen.add(u)
    return members


def from_document(doc) -> BipolarSoftSet:
    """Decode a document dict; schema violations raise :class:`ParseError`.

    Content-level problems keep their domain errors: overlapping
    positive/negative members raise :class:`DisjointnessViolation`,
    undeclared ids raise :class:`UnknownObject` / :class:`UnknownParameter`.
    """
    _expect_object(doc, "document", _TOP_KEYS)

    universe = _expect_list(doc["universe"], "universe")
    for i, u in enumerate(universe):
        _expect_str(u, f"universe[{i}]")

    positive = []
    negative = []
    for i, pair in enumerate(_expect_list(doc["pairs"], "pairs")):
        _expect_object(pair, f"pairs[{i}]", ("pos", "neg"))
        positive.append(_expect_str(pair["pos"], f"pairs[{i}].pos"))
        negative.append(_expect_str(pair["neg"], f"pairs[{i}].neg"))

    try:
        space = ParameterSpace.from_pairs(universe, zip(positive, negative))
    except InvalidSpace as exc:
        raise ParseError(str(exc), "document") from exc

    assignment = {}
    for i, row in enumerate(_expect_list(doc["assignments"], "assignments")):
        loc = f"assignments[{i}]"
        _expect_object(row, loc, ("param", "positive", "negative"))
        param = _expect_str(row["param"], f"{loc}.param")
        if param in assignment:
            raise ParseError(f"duplicate parameter {param!r}", f"{loc}.param")
        assignment[param] = (
            _member_list(row["positive"], f"{loc}.positive"),
            _member_list(row["negative"], f"{loc}.negative"),
        )
    return BipolarSoftSet.from_assignment(space, assignment)


def parse(text: str) -> BipolarSoftSet:
    """Decode document text produced by :func:`serialize` (or any valid variant)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    return from_document(doc)


def load(path: str | Path) -> BipolarSoftSet:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(bss: BipolarSoftSet, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(serialize(bss))
