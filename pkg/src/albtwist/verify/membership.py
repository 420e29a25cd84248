"""Symbolic checks that the twist points and quotient relations hold on the product."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.poly import MultiPoly
from ..algebra.rewrite import RewriteStats, normal_form
from ..cover import TowerPresentation, TwistPoint

CORRUPTIONS = ("drop_denominator", "wrong_power", "swap_index", "scale")


@dataclass(frozen=True)
class PointCheck:
    index: int
    residue: MultiPoly
    steps: int

    @property
    def ok(self) -> bool:
        return not self.residue


@dataclass(frozen=True)
class MembershipReport:
    checks: tuple[PointCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def point_residue(tower: TowerPresentation, pt: TwistPoint) -> tuple[MultiPoly, int]:
    """den^n * (twist equation at pt), reduced modulo the product relations."""
    eq = tower.twist_eq.subst({"x": pt.x, "y": pt.y})
    cleared = eq.subst_fraction("z", pt.z_num, pt.z_den, clear=tower.n)
    stats = RewriteStats()
    return normal_form(cleared, tower.product_relations, stats), stats.steps


def verify_membership(tower: TowerPresentation, points=None) -> MembershipReport:
    pts = tower.points if points is None else tuple(points)
    checks = []
    for i, pt in enumerate(pts, start=1):
        res, steps = point_residue(tower, pt)
        checks.append(PointCheck(index=i, residue=res, steps=steps))
    return MembershipReport(tuple(checks))


def corrupt_point(tower: TowerPresentation, index: int, kind: str) -> TwistPoint:
    """A deliberately wrong variant of point ``index`` (1-based) for negative controls."""
    pt = tower.points[index - 1]
    order = tower.spec.order
    w1 = MultiPoly.var("w1", order)
    if kind == "drop_denominator":
        num = pt.z_num if index > 1 else MultiPoly.var("w1", order)
        return TwistPoint(pt.x, pt.y, num, MultiPoly.const(1, order))
    if kind == "wrong_power":
        return TwistPoint(pt.x, pt.y, pt.z_num * w1, pt.z_den)
    if kind == "swap_index":
        j = index % tower.m + 1 if tower.m > 1 else 2
        return TwistPoint(MultiPoly.var(f"x{j}", order), MultiPoly.var(f"y{j}", order), pt.z_num, pt.z_den)
    if kind == "scale":
        return TwistPoint(pt.x, pt.y, pt.z_num * 2, pt.z_den)
    raise ValueError(f"unknown corruption {kind!r}; expected one of {CORRUPTIONS}")


@dataclass(frozen=True)
class DescentReport:
    exponent: int
    residues: tuple[MultiPoly, ...]

    @property
    def ok(self) -> bool:
        return not any(self.residues)


def verify_descent(tower: TowerPresentation, exponent: int | None = None) -> DescentReport:
    """Substitute z_i -> w1^exponent * w_{i+1} (exponent n-1 by default) and reduce."""
    n = tower.n
    k = n - 1 if exponent is None else exponent
    w1 = MultiPoly.var("w1", tower.spec.order)
    out = []
    for i, rel in enumerate(tower.quotient_relations, start=1):
        img = w1 ** k * MultiPoly.var(f"w{i + 1}", tower.spec.order)
        out.append(normal_form(rel.subst({f"z{i}": img}), tower.product_relations))
    return DescentReport(exponent=k, residues=tuple(out))
