"""Cyclic covers w^n = f(x, y), their m-fold products, quotients and twists."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .algebra.cyclo import CycloNum
from .algebra.poly import MultiPoly, PolyError, _lcm
from .algebra.rewrite import Relation, RelationSet


class CoverError(ValueError):
    pass


class BranchLocus(str, enum.Enum):
    CURVE_ONLY = "CurveOnly"
    CURVE_AND_LINE_AT_INFINITY = "CurveAndLineAtInfinity"


@dataclass(frozen=True)
class CoverSpec:
    n: int
    f: MultiPoly
    r: int
    e: int
    n0: int
    F: MultiPoly
    affine_eq: MultiPoly
    weighted_eq: MultiPoly
    branch_locus: BranchLocus
    order: int

    @property
    def weights(self) -> dict[str, int]:
        return {"u0": 1, "u1": 1, "u2": 1, "u3": self.e}

    @property
    def printed_weights(self) -> tuple[int, int, int, int]:
        # the weight vector as printed in the source, kept for reports
        return (1, 1, 1, self.n0)


def make_cover(f: MultiPoly, n: int) -> CoverSpec:
    if n < 2:
        raise CoverError("cover degree n must be >= 2")
    extra = set(f.used_vars()) - {"x", "y"}
    if extra:
        raise CoverError(f"f must be a polynomial in x, y only; found {sorted(extra)}")
    r = f.total_degree()
    if r < 2:
        raise CoverError(f"f must have degree >= 2 (got {r})")
    order = _lcm(f.order, n)
    f = f.lift(order).with_vars(("x", "y"))
    e = -(-r // n)
    n0 = n * e - r
    F = f.homogenize("u0", {"x": "u1", "y": "u2"})
    w = MultiPoly.var("w", order)
    affine = w ** n - f
    u0, u3 = MultiPoly.var("u0", order), MultiPoly.var("u3", order)
    weighted = u3 ** n - u0 ** n0 * F
    branch = BranchLocus.CURVE_ONLY if n0 == 0 else BranchLocus.CURVE_AND_LINE_AT_INFINITY
    return CoverSpec(n=n, f=f, r=r, e=e, n0=n0, F=F, affine_eq=affine, weighted_eq=weighted,
                     branch_locus=branch, order=order)


@dataclass(frozen=True)
class TwistPoint:
    """A point (x, y, num/den) on the twist; num/den kept unreduced."""

    x: MultiPoly
    y: MultiPoly
    z_num: MultiPoly
    z_den: MultiPoly

    def support(self) -> set[str]:
        out = set()
        for p in (self.x, self.y, self.z_num, self.z_den):
            out |= set(p.used_vars())
        return out


@dataclass(frozen=True)
class TowerPresentation:
    spec: CoverSpec
    m: int
    product_relations: RelationSet
    quotient_relations: tuple[MultiPoly, ...]
    twist_eq: MultiPoly
    points: tuple[TwistPoint, ...]

    @property
    def n(self) -> int:
        return self.spec.n

    def f_at(self, i: int) -> MultiPoly:
        return self.spec.f.rename({"x": f"x{i}", "y": f"y{i}"})


def build_tower(spec: CoverSpec, m: int) -> TowerPresentation:
    if m < 1:
        raise CoverError("m must be >= 1")
    n, order = spec.n, spec.order
    fs = [spec.f.rename({"x": f"x{i}", "y": f"y{i}"}) for i in range(1, m + 1)]
    product = RelationSet(tuple(Relation(f"w{i}", n, fs[i - 1]) for i in range(1, m + 1)))
    quotient = tuple(
        MultiPoly.var(f"z{i}", order) ** n - fs[0] ** (n - 1) * fs[i]
        for i in range(1, m)
    )
    z = MultiPoly.var("z", order)
    twist = fs[0] * z ** n - spec.f
    one = MultiPoly.const(1, order)
    pts = [TwistPoint(MultiPoly.var("x1", order), MultiPoly.var("y1", order), one, one)]
    w1 = MultiPoly.var("w1", order)
    for i in range(2, m + 1):
        pts.append(TwistPoint(MultiPoly.var(f"x{i}", order), MultiPoly.var(f"y{i}", order),
                              MultiPoly.var(f"w{i}", order), w1))
    return TowerPresentation(spec=spec, m=m, product_relations=product, quotient_relations=quotient,
                             twist_eq=twist, points=tuple(pts))


def twist_points(tower: TowerPresentation) -> list[TwistPoint]:
    return list(tower.points)


# the order-n automorphism and its cocycle ---------------------------------------


@dataclass(frozen=True)
class CocycleTable:
    group_order: int
    entries: dict[int, int]

    def compose(self, i: int, j: int) -> int:
        return (self.entries[i] + self.entries[j]) % self.group_order


@dataclass
class CocycleReport:
    table: CocycleTable
    preserves_equation: bool
    tau_order: int
    order_ok: bool
    power_orders: dict[int, int]
    proper_powers: list[int]
    law_ok: bool
    identity_ok: bool
    inverse_ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.preserves_equation and self.order_ok and self.law_ok and self.identity_ok and self.inverse_ok


def _tau_power(spec: CoverSpec, j: int) -> dict[str, MultiPoly]:
    z = CycloNum.zeta(spec.order, (spec.order // spec.n) * j)
    return {"w": MultiPoly.var("w", spec.order).scale(z)}


def _compose_on_w(first: dict[str, MultiPoly], second: dict[str, MultiPoly]) -> MultiPoly:
    """Image of w under (first o second): apply second, then first."""
    return second["w"].subst(first)


def cocycle(spec: CoverSpec) -> CocycleReport:
    """Table a_{gamma^j} = tau^j, checked against the actual substitutions."""
    n = spec.n
    w = MultiPoly.var("w", spec.order)
    table = CocycleTable(group_order=n, entries={j: j for j in range(n)})
    maps = {j: _tau_power(spec, j) for j in range(n)}
    failures = []

    preserves = spec.affine_eq.subst(maps[1]) == spec.affine_eq
    if not preserves:
        failures.append("tau does not preserve w^n = f")

    # order of tau by iterated composition
    img = w
    tau_order = 0
    for k in range(1, n + 1):
        img = img.subst(maps[1])
        if img == w:
            tau_order = k
            break
    order_ok = tau_order == n
    if not order_ok:
        failures.append(f"tau has order {tau_order}, expected {n}")

    power_orders = {j: n // gcd(j, n) for j in range(1, n)}
    proper = [j for j in range(1, n) if power_orders[j] < n]

    identity_ok = maps[table.entries[0]]["w"] == w
    law_ok = True
    inverse_ok = True
    for i in range(n):
        for j in range(n):
            lhs = maps[table.entries[(i + j) % n]]["w"]
            # the Galois action on automorphisms defined over k is trivial
            rhs = _compose_on_w(maps[table.entries[i]], maps[table.entries[j]])
            if lhs != rhs:
                law_ok = False
                failures.append(f"cocycle law fails at ({i}, {j})")
        inv = _compose_on_w(maps[table.entries[i]], maps[table.entries[(-i) % n]])
        if inv != w:
            inverse_ok = False
            failures.append(f"a_u * u(a_u^-1) != 1 at {i}")
    return CocycleReport(table=table, preserves_equation=preserves, tau_order=tau_order, order_ok=order_ok,
                         power_orders=power_orders, proper_powers=proper, law_ok=law_ok,
                         identity_ok=identity_ok, inverse_ok=inverse_ok, failures=failures)


# pencils -------------------------------------------------------------------------------


@dataclass(frozen=True)
class PencilSpec:
    F1: MultiPoly
    F2: MultiPoly
    points: tuple[tuple[object, object], ...]
    exponents: tuple[int, ...]
    ell: int
    n: int

    @property
    def s(self) -> int:
        return self.F1.total_degree()


def pencil_factor(p: PencilSpec) -> tuple[MultiPoly, MultiPoly]:
    """Assemble f = prod (b_i F1(1,x,y) - a_i F2(1,x,y))^{s_i} and the curve D_ell."""
    h1, d1 = p.F1.is_homogeneous()
    h2, d2 = p.F2.is_homogeneous()
    if not (h1 and h2) or d1 != d2:
        raise CoverError("F1 and F2 must be homogeneous of the same degree")
    if len(p.points) != len(p.exponents) or not p.points:
        raise CoverError("need one exponent per pencil point")
    if any(s < 1 for s in p.exponents):
        raise CoverError("exponents must be positive")
    s = d1
    total = sum(p.exponents)
    failed = []
    if total % p.ell:
        failed.append("ℓ ∤ Σs_i")
    if (s * total) % p.n:
        failed.append("n ∤ s·Σs_i")
    if p.n % p.ell:
        failed.append("ℓ ∤ n")
    if failed:
        raise CoverError("pencil divisibility violated: " + ", ".join(failed))
    try:
        g1 = p.F1.dehomogenize("u0", {"u1": "x", "u2": "y"})
        g2 = p.F2.dehomogenize("u0", {"u1": "x", "u2": "y"})
    except PolyError as exc:
        raise CoverError(str(exc)) from exc
    order = _lcm(p.F1.order, p.F2.order)
    f = MultiPoly.const(1, order)
    v0, v1, v2 = (MultiPoly.var(v, order) for v in ("v0", "v1", "v2"))
    rhs = MultiPoly.const(1, order)
    for (a, b), k in zip(p.points, p.exponents):
        f = f * (g1 * b - g2 * a) ** k
        rhs = rhs * (v0 * b - v1 * a) ** k
    return f, v2 ** p.ell - rhs
