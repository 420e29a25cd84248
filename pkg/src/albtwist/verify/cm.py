"""Automorphisms of curves given as coordinate substitutions."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.poly import MultiPoly
from ..algebra.rewrite import normal_form
from .ratmap import RationalMap


@dataclass(frozen=True)
class CMReport:
    preserves_curve: bool
    residue: MultiPoly
    order: int | None

    @property
    def ok(self) -> bool:
        return self.preserves_curve and self.order is not None


def verify_cm_automorphism(curve, rmap: RationalMap, order_limit: int = 48) -> CMReport:
    """Pull the curve equation back along ``rmap`` and reduce it modulo the curve."""
    rels = curve.relations()
    order = max(curve.order, *(p.order for _, n, d in rmap.images for p in (n, d)))
    lifted = RationalMap(tuple((v, n.lift(order), d.lift(order)) for v, n, d in rmap.images))
    residue = normal_form(lifted.pullback(curve.equation().lift(order)), rels)
    preserves = not residue
    k = lifted.order(rels, order_limit) if preserves else None
    return CMReport(preserves_curve=preserves, residue=residue, order=k)
