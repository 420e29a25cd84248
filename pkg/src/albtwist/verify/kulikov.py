"""Two decompositions F = G^a + H^b and whether their pencils differ."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..algebra.linalg import rank
from ..algebra.poly import MultiPoly, _lcm


class KulikovError(ValueError):
    pass


@dataclass(frozen=True)
class KulikovReport:
    a: int
    b: int
    identities: tuple[bool, bool]
    rank: int

    @property
    def ok(self) -> bool:
        return all(self.identities) and self.rank >= 3

    @property
    def surface_image_n(self) -> int | None:
        """n = ab for which the image of X_n in its Albanese is a surface."""
        return self.a * self.b if self.ok else None


def _check_degree(p: MultiPoly, what: str, expected: int) -> None:
    if not p:
        return
    homog, d = p.is_homogeneous()
    if not homog:
        raise KulikovError(f"{what} is not homogeneous")
    if d != expected:
        raise KulikovError(f"degree mismatch: deg {what} = {d}, expected {expected}")


def coefficient_rank(polys) -> int:
    order = 1
    for p in polys:
        order = _lcm(order, p.order)
    polys = [p.lift(order) for p in polys]
    names = sorted({v for p in polys for v in p.used_vars()})
    polys = [p.with_vars(names) for p in polys]
    monos = sorted({e for p in polys for e in p.terms})
    return rank([[p.terms.get(e, 0) for e in monos] for p in polys], order)


def verify_kulikov(F: MultiPoly, dec1, dec2, a: int, b: int) -> KulikovReport:
    if a < 2 or b < 2:
        raise KulikovError("need a, b >= 2")
    if gcd(a, b) != 1:
        raise KulikovError(f"gcd(a, b) = {gcd(a, b)} != 1")
    homog, deg = F.is_homogeneous()
    if not homog:
        raise KulikovError("F is not homogeneous")
    if deg % a or deg % b:
        raise KulikovError(f"degree mismatch: deg F = {deg} not divisible by a = {a} and b = {b}")
    powers, ids = [], []
    for i, (G, H) in enumerate((dec1, dec2), start=1):
        _check_degree(G, f"G{i}", deg // a)
        _check_degree(H, f"H{i}", deg // b)
        ga, hb = G ** a, H ** b
        ids.append(ga + hb == F)
        powers += [ga, hb]
    return KulikovReport(a=a, b=b, identities=tuple(ids), rank=coefficient_rank(powers))
