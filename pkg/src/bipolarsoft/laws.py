"""Brute-force law checking over enumerated and seeded-random instances.

Every algebraic law the library relies on is registered in a catalogue and
can be checked against any instance source.  A law either holds on every
supplied instance or the check stops at the first counterexample, which is
stored in serialized form so the violation can be replayed later.

Two catalogued laws are expected to fail: the unconditional excluded-middle
forms, which break on any instance with a neutral cell.  Their corrected
conditional forms are catalogued separately and must hold.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from . import codec
from .core import BipolarSoftSet
from .errors import BoundsTooLarge, UnknownLaw
from .products import and_product, or_product
from .space import ParameterSpace

MAX_EXHAUSTIVE_CELLS = 12  # 3^12 sets; anything larger is declined


# -- deterministic instance generation ---------------------------------------

_MASK64 = (1 << 64) - 1


def _splitmix64(seed: int) -> Iterator[int]:
    """64-bit integer stream, fully determined by the single seed."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


@lru_cache(maxsize=None)
def standard_space(m: int, n: int) -> ParameterSpace:
    """The generated m-object, n-pair space shared by all instances of one size."""
    return ParameterSpace(
        tuple(f"u{i}" for i in range(1, m + 1)),
        tuple(f"e{j}" for j in range(1, n + 1)),
        tuple(f"not-e{j}" for j in range(1, n + 1)),
    )


def _draw(space: ParameterSpace, stream: Iterator[int]) -> BipolarSoftSet:
    # one stream value per cell, reduced to approve/reject/abstain
    pos = []
    neg = []
    for _ in range(space.n):
        p = 0
        q = 0
        for i in range(space.m):
            r = next(stream) % 3
            if r == 0:
                p |= 1 << i
            elif r == 1:
                q |= 1 << i
        pos.append(p)
        neg.append(q)
    return BipolarSoftSet(space, tuple(pos), tuple(neg))


def gen_bss(seed: int, max_m: int = 6, max_n: int = 4) -> BipolarSoftSet:
    """One random instance; sizes and cells are drawn from the seeded stream."""
    if max_m < 1 or max_n < 1:
        raise ValueError("size bounds must be positive")
    stream = _splitmix64(seed)
    m = 1 + next(stream) % max_m
    n = 1 + next(stream) % max_n
    return _draw(standard_space(m, n), stream)


def random_tuples(
    seed: int, count: int, arity: int, max_m: int = 6, max_n: int = 4
) -> Iterator[tuple[BipolarSoftSet, ...]]:
    """``count`` operand tuples; each tuple shares one randomly sized space."""
    if max_m < 1 or max_n < 1:
        raise ValueError("size bounds must be positive")
    stream = _splitmix64(seed)
    for _ in range(count):
        m = 1 + next(stream) % max_m
        n = 1 + next(stream) % max_n
        space = standard_space(m, n)
        yield tuple(_draw(space, stream) for _ in range(arity))


def enumerate_bss(m: int, n: int) -> Iterator[BipolarSoftSet]:
    """Every one of the 3^(m*n) sets over the standard m-by-n space, exactly once."""
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    if m * n > MAX_EXHAUSTIVE_CELLS:
        raise BoundsTooLarge(
            f"3^{m * n} sets exceed the enumerable limit of 3^{MAX_EXHAUSTIVE_CELLS}"
        )
    space = standard_space(m, n)
    # all disjoint (pos, neg) column states over m objects: 3^m of them
    columns = []
    for states in itertools.product((0, 1, 2), repeat=m):
        p = 0
        q = 0
        for i, s in enumerate(states):
            if s == 0:
                p |= 1 << i
            elif s == 1:
                q |= 1 << i
        columns.append((p, q))
    for combo in itertools.product(columns, repeat=n):
        yield BipolarSoftSet(
            space, tuple(c[0] for c in combo), tuple(c[1] for c in combo)
        )


def exhaustive_tuples(m: int, n: int, arity: int) -> Iterator[tuple[BipolarSoftSet, ...]]:
    """All ordered ``arity``-tuples of the exhaustively enumerated sets."""
    pool = list(enumerate_bss(m, n))
    if arity == 1:
        return ((a,) for a in pool)
    return itertools.product(pool, repeat=arity)


# -- the law catalogue --------------------------------------------------------

Violation = Optional[dict]


@dataclass(frozen=True)
class Law:
    law_id: str
    arity: int
    must_hold: bool
    description: str
    evaluate: Callable[..., Violation]


@dataclass(frozen=True)
class LawReport:
    """Outcome of checking one law; a failed check carries a replayable witness."""

    law_id: str
    must_hold: bool
    instances_checked: int
    holds: bool
    counterexample: Optional[dict]

    def to_json(self) -> dict:
        return {
            "law": self.law_id,
            "must_hold": self.must_hold,
            "instances_checked": self.instances_checked,
            "holds": self.holds,
            "counterexample": self.counterexample,
        }


_CATALOGUE: dict[str, Law] = {}


def _register(law_id: str, arity: int, description: str, must_hold: bool = True):
    def wrap(fn: Callable[..., Violation]) -> Callable[..., Violation]:
        _CATALOGUE[law_id] = Law(law_id, arity, must_hold, description, fn)
        return fn

    return wrap


def _refute(reason: str) -> dict:
    return {"parameter": None, "reason": reason}


def _differs(left: BipolarSoftSet, right: BipolarSoftSet) -> Violation:
    """None if structurally equal, else the first divergent parameter's cells."""
    if left.pos_masks == right.pos_masks and left.neg_masks == right.neg_masks:
        return None
    space = left.space
    for e, lp, ln, rp, rn in zip(
        space.positive_params, left.pos_masks, left.neg_masks,
        right.pos_masks, right.neg_masks,
    ):
        if lp != rp or ln != rn:
            return {
                "parameter": e,
                "reason": "sides disagree",
                "left": {"positive": list(space.members(lp)), "negative": list(space.members(ln))},
                "right": {"positive": list(space.members(rp)), "negative": list(space.members(rn))},
            }
    return None


@_register("subset-reflexive", 1, "A is a subset of itself")
def _subset_reflexive(a):
    return None if a.is_subset_of(a) else _refute("A not a subset of itself")


@_register("subset-transitive", 3, "A subset of B and B subset of C implies A subset of C")
def _subset_transitive(a, b, c):
    if a.is_subset_of(b) and b.is_subset_of(c) and not a.is_subset_of(c):
        return _refute("chain premises hold but the conclusion fails")
    return None


@_register("subset-bounded-below", 1, "the null set is a subset of everything")
def _subset_bounded_below(a):
    null = BipolarSoftSet.null(a.space)
    return None if null.is_subset_of(a) else _refute("null not below A")


@_register("subset-bounded-above", 1, "everything is a subset of the absolute set")
def _subset_bounded_above(a):
    absolute = BipolarSoftSet.absolute(a.space)
    return None if a.is_subset_of(absolute) else _refute("A not below absolute")


@_register("union-idempotent", 1, "A ∪ A = A")
def _union_idempotent(a):
    return _differs(a.union(a), a)


@_register("union-null-identity", 1, "A ∪ null = A")
def _union_null_identity(a):
    return _differs(a.union(BipolarSoftSet.null(a.space)), a)


@_register("union-absolute-absorbing", 1, "A ∪ absolute = absolute")
def _union_absolute_absorbing(a):
    absolute = BipolarSoftSet.absolute(a.space)
    return _differs(a.union(absolute), absolute)


@_register("union-commutative", 2, "A ∪ B = B ∪ A")
def _union_commutative(a, b):
    return _differs(a.union(b), b.union(a))


@_register("union-associative", 3, "A ∪ (B ∪ C) = (A ∪ B) ∪ C")
def _union_associative(a, b, c):
    return _differs(a.union(b.union(c)), a.union(b).union(c))


@_register("union-absorption", 2, "A ∪ (A ∩ B) = A")
def _union_absorption(a, b):
    return _differs(a.union(a.intersection(b)), a)


@_register("intersection-idempotent", 1, "A ∩ A = A")
def _intersection_idempotent(a):
    return _differs(a.intersection(a), a)


@_register("intersection-null-absorbing", 1, "A ∩ null = null")
def _intersection_null_absorbing(a):
    null = BipolarSoftSet.null(a.space)
    return _differs(a.intersection(null), null)


@_register("intersection-absolute-identity", 1, "A ∩ absolute = A")
def _intersection_absolute_identity(a):
    return _differs(a.intersection(BipolarSoftSet.absolute(a.space)), a)


@_register("intersection-commutative", 2, "A ∩ B = B ∩ A")
def _intersection_commutative(a, b):
    return _differs(a.intersection(b), b.intersection(a))


@_register("intersection-associative", 3, "A ∩ (B ∩ C) = (A ∩ B) ∩ C")
def _intersection_associative(a, b, c):
    return _differs(a.intersection(b.intersection(c)), a.intersection(b).intersection(c))


@_register("intersection-absorption", 2, "A ∩ (A ∪ B) = A")
def _intersection_absorption(a, b):
    return _differs(a.intersection(a.union(b)), a)


@_register(
    "distributive-intersection-over-union", 3, "A ∩ (B ∪ C) = (A ∩ B) ∪ (A ∩ C)"
)
def _distributive_intersection_over_union(a, b, c):
    return _differs(
        a.intersection(b.union(c)),
        a.intersection(b).union(a.intersection(c)),
    )


@_register(
    "distributive-union-over-intersection", 3, "A ∪ (B ∩ C) = (A ∪ B) ∩ (A ∪ C)"
)
def _distributive_union_over_intersection(a, b, c):
    return _differs(
        a.union(b.intersection(c)),
        a.union(b).intersection(a.union(c)),
    )


@_register("complement-involution", 1, "complement of the complement restores A")
def _complement_involution(a):
    return _differs(a.complement().complement(), a)


@_register("complement-null", 1, "complement of null is absolute")
def _complement_null(a):
    return _differs(
        BipolarSoftSet.null(a.space).complement(), BipolarSoftSet.absolute(a.space)
    )


@_register("complement-absolute", 1, "complement of absolute is null")
def _complement_absolute(a):
    return _differs(
        BipolarSoftSet.absolute(a.space).complement(), BipolarSoftSet.null(a.space)
    )


@_register("demorgan-union", 2, "complement of A ∪ B equals Aᶜ ∩ Bᶜ")
def _demorgan_union(a, b):
    return _differs(a.union(b).complement(), a.complement().intersection(b.complement()))


@_register("demorgan-intersection", 2, "complement of A ∩ B equals Aᶜ ∪ Bᶜ")
def _demorgan_intersection(a, b):
    return _differs(a.intersection(b).complement(), a.complement().union(b.complement()))


@_register("demorgan-and-product", 2, "complement of A ∧ B equals Aᶜ ∨ Bᶜ")
def _demorgan_and_product(a, b):
    return _differs(and_product(a, b).complement(), or_product(a.complement(), b.complement()))


@_register("demorgan-or-product", 2, "complement of A ∨ B equals Aᶜ ∧ Bᶜ")
def _demorgan_or_product(a, b):
    return _differs(or_product(a, b).complement(), and_product(a.complement(), b.complement()))


@_register(
    "excluded-middle-union",
    1,
    "A ∪ Aᶜ approves exactly the non-neutral cells, rejects nothing, "
    "and is absolute precisely when A is complete",
)
def _excluded_middle_union(a):
    joined = a.union(a.complement())
    space = a.space
    for e, p, q, ap, aq in zip(
        space.positive_params, joined.pos_masks, joined.neg_masks,
        a.pos_masks, a.neg_masks,
    ):
        if q:
            return {"parameter": e, "reason": "A ∪ Aᶜ has a nonempty rejecting set"}
        if p != ap | aq:
            return {"parameter": e, "reason": "A ∪ Aᶜ approves more or less than A's decided cells"}
    if (joined == BipolarSoftSet.absolute(space)) != a.is_complete():
        return _refute("A ∪ Aᶜ = absolute does not coincide with A being complete")
    return None


@_register(
    "excluded-middle-intersection",
    1,
    "A ∩ Aᶜ rejects exactly the non-neutral cells, approves nothing, "
    "and is null precisely when A is complete",
)
def _excluded_middle_intersection(a):
    met = a.intersection(a.complement())
    space = a.space
    for e, p, q, ap, aq in zip(
        space.positive_params, met.pos_masks, met.neg_masks,
        a.pos_masks, a.neg_masks,
    ):
        if p:
            return {"parameter": e, "reason": "A ∩ Aᶜ has a nonempty approving set"}
        if q != ap | aq:
            return {"parameter": e, "reason": "A ∩ Aᶜ rejects more or less than A's decided cells"}
    if (met == BipolarSoftSet.null(space)) != a.is_complete():
        return _refute("A ∩ Aᶜ = null does not coincide with A being complete")
    return None


@_register(
    "excluded-middle-unconditional",
    1,
    "A ∪ Aᶜ = absolute (fails whenever A has a neutral cell)",
    must_hold=False,
)
def _excluded_middle_unconditional(a):
    return _differs(a.union(a.complement()), BipolarSoftSet.absolute(a.space))


@_register(
    "excluded-middle-intersection-unconditional",
    1,
    "A ∩ Aᶜ = null (fails whenever A has a neutral cell)",
    must_hold=False,
)
def _excluded_middle_intersection_unconditional(a):
    return _differs(a.intersection(a.complement()), BipolarSoftSet.null(a.space))


# -- checking -----------------------------------------------------------------


def catalogue() -> tuple[Law, ...]:
    """All registered laws, in registration order."""
    return tuple(_CATALOGUE.values())


def get_law(law_id: str) -> Law:
    try:
        return _CATALOGUE[law_id]
    except KeyError:
        raise UnknownLaw(law_id) from None


def check_law(law_id: str, instances: Iterable) -> LawReport:
    """Evaluate one law on every instance, stopping at the first counterexample.

    ``instances`` yields either bare sets (unary laws) or operand tuples of
    the law's arity; all operands of a tuple must share a space.
    """
    law = get_law(law_id)
    checked = 0
    for item in instances:
        operands = item if isinstance(item, tuple) else (item,)
        if len(operands) != law.arity:
            raise ValueError(
                f"law {law_id!r} takes {law.arity} operand(s), got {len(operands)}"
            )
        checked += 1
        violation = law.evaluate(*operands)
        if violation is not None:
            witness = {"operands": [codec.to_document(o) for o in operands]}
            witness.update(violation)
            return LawReport(law_id, law.must_hold, checked, False, witness)
    return LawReport(law_id, law.must_hold, checked, True, None)


def recheck(report: LawReport) -> bool:
    """True iff the report's stored counterexample still violates its law."""
    if report.holds or not report.counterexample:
        return False
    law = get_law(report.law_id)
    operands = tuple(
        codec.from_document(doc) for doc in report.counterexample["operands"]
    )
    return law.evaluate(*operands) is not None


def run_catalogue(
    law_ids: Optional[Iterable[str]] = None,
    exhaustive: Optional[tuple[int, int]] = (2, 2),
    random_count: int = 1000,
    seed: int = 1,
    random_bounds: tuple[int, int] = (6, 4),
) -> list[LawReport]:
    """Check selected laws (default: all) over exhaustive plus random instances."""
    if law_ids is None:
        selected = catalogue()
    else:
        selected = tuple(get_law(law_id) for law_id in law_ids)
    reports = []
    for law in selected:
        sources = []
        if exhaustive is not None:
            sources.append(exhaustive_tuples(exhaustive[0], exhaustive[1], law.arity))
        if random_count:
            sources.append(
                random_tuples(seed, random_count, law.arity, *random_bounds)
            )
        reports.append(check_law(law.law_id, itertools.chain.from_iterable(sources)))
    return reports
