"""Parameter spaces: an object universe plus positive parameters paired with their negations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InvalidSpace, UnknownObject, UnknownParameter


def _distinct(kind: str, ids: tuple[str, ...]) -> None:
    seen = set()
    for x in ids:
        if not isinstance(x, str) or not x:
            raise InvalidSpace(f"{kind} identifier must be a non-empty string, got {x!r}")
        if x in seen:
            raise InvalidSpace(f"duplicate {kind} identifier {x!r}")
        seen.add(x)


@dataclass(frozen=True)
class ParameterSpace:
    """Universe of objects plus two aligned parameter lists.

    ``positive_params[k]`` and ``negative_params[k]`` form one
    property/negation pair; the positional pairing *is* the negation
    bijection.  Identifiers are opaque strings.  All orderings are
    significant: they fix the canonical layout of every derived value
    (membership masks, tables, serialized documents).
    """

    universe: tuple[str, ...]
    positive_params: tuple[str, ...]
    negative_params: tuple[str, ...]

    def __post_init__(self) -> None:
        for name in ("universe", "positive_params", "negative_params"):
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))
        if not self.universe:
            raise InvalidSpace("universe must contain at least one object")
        if not self.positive_params:
            raise InvalidSpace("at least one parameter pair is required")
        if len(self.positive_params) != len(self.negative_params):
            raise InvalidSpace("positive and negative parameter lists must pair up one-to-one")
        _distinct("object", self.universe)
        _distinct("positive parameter", self.positive_params)
        _distinct("negative parameter", self.negative_params)
        overlap = set(self.positive_params) & set(self.negative_params)
        if overlap:
            raise InvalidSpace(
                f"parameters cannot be both positive and negative: {sorted(overlap)}"
            )

    @classmethod
    def from_pairs(
        cls, universe: Iterable[str], pairs: Iterable[tuple[str, str]]
    ) -> "ParameterSpace":
        """Build from an explicit (positive, negative) pair list."""
        pair_list = list(pairs)
        return cls(
            tuple(universe),
            tuple(p for p, _ in pair_list),
            tuple(q for _, q in pair_list),
        )

    @property
    def m(self) -> int:
        return len(self.universe)

    @property
    def n(self) -> int:
        return len(self.positive_params)

    @cached_property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(zip(self.positive_params, self.negative_params))

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    @cached_property
    def object_index(self) -> dict[str, int]:
        return {u: i for i, u in enumerate(self.universe)}

    @cached_property
    def param_index(self) -> dict[str, int]:
        return {e: k for k, e in enumerate(self.positive_params)}

    def negation(self, param: str) -> str:
        """The negative parameter paired with ``param``."""
        try:
            return self.negative_params[self.param_index[param]]
        except KeyError:
            raise UnknownParameter(param) from None

    def mask_of(self, members: Iterable[str]) -> int:
        """Bit mask selecting ``members``; bit ``i`` stands for ``universe[i]``."""
        index = self.object_index
        mask = 0
        for u in members:
            try:
                mask |= 1 << index[u]
            except (KeyError, TypeError):
                raise UnknownObject(u) from None
        return mask

    def members(self, mask: int) -> tuple[str, ...]:
        """Objects selected by ``mask``, in universe order."""
        return tuple(u for i, u in enumerate(self.universe) if mask >> i & 1)
