"""Elliptic and genus-2 curve data with exact invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.cyclo import CycloNum, as_cyclo
from ..algebra.poly import MultiPoly
from ..algebra.resultant import discriminant
from ..algebra.rewrite import Relation, RelationSet


class CurveError(ValueError):
    pass


def weierstrass_invariants(a1, a2, a3, a4, a6):
    """(b2, b4, b6, b8, c4, c6, disc) from the a-invariants."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return b2, b4, b6, b8, c4, c6, disc


def j_from_ainvariants(a1, a2, a3, a4, a6):
    *_, c4, _, disc = weierstrass_invariants(a1, a2, a3, a4, a6)
    if disc == 0:
        raise CurveError("singular Weierstrass equation")
    return c4 ** 3 / disc


def j_from_quartic(coeffs):
    """j of y^2 = a x^4 + b x^3 + c x^2 + d x + e (a may be 0 for a cubic).

    Uses the classical invariants I, J of the binary quartic.
    """
    a, b, c, d, e = coeffs
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c
    denom = 4 * I ** 3 - J * J
    if denom == 0:
        raise CurveError("quartic has a repeated root")
    return 6912 * I ** 3 / denom


@dataclass(frozen=True)
class EllipticCurveData:
    label: str
    a1: CycloNum
    a2: CycloNum
    a3: CycloNum
    a4: CycloNum
    a6: CycloNum

    def __post_init__(self):
        if self.discriminant == 0:
            raise CurveError(f"{self.label}: discriminant is zero")

    @classmethod
    def from_ainvariants(cls, label, a1=0, a2=0, a3=0, a4=0, a6=0, order: int = 1):
        vals = [as_cyclo(v, order) if not isinstance(v, CycloNum) else v.lift(order) for v in (a1, a2, a3, a4, a6)]
        return cls(label, *vals)

    @property
    def order(self) -> int:
        return self.a1.order

    @property
    def ainvs(self) -> tuple[CycloNum, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def discriminant(self) -> CycloNum:
        return weierstrass_invariants(*self.ainvs)[-1]

    @property
    def j_invariant(self) -> CycloNum:
        return j_from_ainvariants(*self.ainvs)

    def is_short(self) -> bool:
        return not self.a1 and not self.a3

    def rhs(self) -> MultiPoly:
        x = MultiPoly.var("x", self.order)
        return x ** 3 + x ** 2 * self.a2 + x * self.a4 + self.a6

    def equation(self) -> MultiPoly:
        x, y = MultiPoly.var("x", self.order), MultiPoly.var("y", self.order)
        return y ** 2 + x * y * self.a1 + y * self.a3 - self.rhs()

    def relations(self) -> RelationSet:
        if not self.is_short():
            raise CurveError("rewriting needs a1 = a3 = 0")
        return RelationSet((Relation("y", 2, self.rhs()),))

    def rhs_coeffs(self) -> list[CycloNum]:
        """Coefficients of x^3 + a2 x^2 + a4 x + a6, low degree first."""
        return [self.a6, self.a4, self.a2, CycloNum.one(self.order)]

    def __str__(self):
        return f"{self.label}: {self.equation()} = 0"


@dataclass(frozen=True)
class Genus2CurveData:
    """y^2 = q(x) with q squarefree of degree 5 or 6."""

    label: str
    q: MultiPoly
    involution: object = None  # RationalMap, kept untyped to avoid a cycle

    def __post_init__(self):
        extra = set(self.q.used_vars()) - {"x"}
        if extra:
            raise CurveError("q must be a polynomial in x")
        if self.q.degree("x") not in (5, 6):
            raise CurveError("genus 2 needs deg q in {5, 6}")
        if discriminant(self.q.with_vars(("x",)), "x").is_zero():
            raise CurveError(f"{self.label}: q is not squarefree")

    @property
    def order(self) -> int:
        return self.q.order

    def equation(self) -> MultiPoly:
        return MultiPoly.var("y", self.order) ** 2 - self.q

    def relations(self) -> RelationSet:
        return RelationSet((Relation("y", 2, self.q),))

    def rhs_coeffs(self) -> list[CycloNum]:
        parts = self.q.with_vars(("x",)).coefficients_in("x")
        d = max(parts)
        return [parts[k].constant_term() if k in parts else CycloNum.zero(self.order) for k in range(d + 1)]

    def __str__(self):
        return f"{self.label}: y^2 = {self.q}"


def rational_roots(coeffs) -> list[Fraction]:
    """Distinct rational roots of a polynomial with rational coefficients (low degree first)."""
    cs = [Fraction(c.to_fraction() if isinstance(c, CycloNum) else c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = []
    if cs[0] == 0:
        roots.append(Fraction(0))
        while cs and cs[0] == 0:
            cs.pop(0)
    den = 1
    for c in cs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    lead, const = abs(ints[-1]), abs(ints[0])
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and _horner(ints, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _horner(ints, x):
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc
