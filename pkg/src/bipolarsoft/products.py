"""And/or-products: combine two sets over one space into one over the squared space."""

from __future__ import annotations

from .core import BipolarSoftSet, ensure_same_space
from .space import ParameterSpace


def product_space(base: ParameterSpace) -> ParameterSpace:
    """Square a space: one parameter per ordered pair of base parameters.

    Positive ids are ``(e,e')`` composites in lexicographic base order, each
    paired with the composite of the two negations.  The result is an
    ordinary space, so products nest.
    """
    pos = []
    neg = []
    for e, ne in base.pairs:
        for ep, nep in base.pairs:
            pos.append(f"({e},{ep})")
            neg.append(f"({ne},{nep})")
    return ParameterSpace(base.universe, tuple(pos), tuple(neg))


def and_product(a: BipolarSoftSet, b: BipolarSoftSet) -> BipolarSoftSet:
    """Approve where both operands approve; reject where either rejects."""
    ensure_same_space(a, b)
    pos = []
    neg = []
    for pa, na in zip(a.pos_masks, a.neg_masks):
        for pb, nb in zip(b.pos_masks, b.neg_masks):
            pos.append(pa & pb)
            neg.append(na | nb)
    return BipolarSoftSet(product_space(a.space), tuple(pos), tuple(neg))


def or_product(a: BipolarSoftSet, b: BipolarSoftSet) -> BipolarSoftSet:
    """Approve where either operand approves; reject where both reject."""
    ensure_same_space(a, b)
    pos = []
    neg = []
    for pa, na in zip(a.pos_masks, a.neg_masks):
        for pb, nb in zip(b.pos_masks, b.neg_masks):
            pos.append(pa | pb)
            neg.append(na & nb)
    return BipolarSoftSet(product_space(a.space), tuple(pos), tuple(neg))
