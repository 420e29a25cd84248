"""Rational 2- and 3-isogenies of short Weierstrass curves and j-matching."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.cyclo import CycloNum
from .curves import EllipticCurveData, CurveError, j_from_ainvariants, rational_roots, weierstrass_invariants


class IsogenyError(ValueError):
    pass


@dataclass(frozen=True)
class KernelQuotient:
    kernel_x: Fraction
    kernel_poly: str
    ainvs: tuple[Fraction, ...]
    j_invariant: Fraction

    @property
    def label(self) -> str:
        return "y^2 = x^3 + ({1})x^2 + ({3})x + ({4})".format(*(str(a) for a in self.ainvs))


@dataclass(frozen=True)
class IsogenyReport:
    curve: str
    ell: int
    j_invariant: Fraction
    quotients: tuple[KernelQuotient, ...]

    @property
    def matched(self) -> tuple[KernelQuotient, ...]:
        return tuple(q for q in self.quotients if q.j_invariant == self.j_invariant)

    @property
    def verdict(self) -> str:
        if not self.quotients:
            return "no evidence at this degree"
        if self.matched:
            return f"evidence of CM by sqrt(-{self.ell})"
        return "no j-match at this degree"

    @property
    def ok(self) -> bool:
        return bool(self.matched)


def division_polynomial(curve: EllipticCurveData, ell: int) -> list[Fraction]:
    """x-part of the ell-division polynomial, low degree first."""
    b2, b4, b6, b8, *_ = (c.to_fraction() for c in weierstrass_invariants(*curve.ainvs))
    if ell == 2:
        # 4x^3 + b2 x^2 + 2 b4 x + b6; same roots as the cubic when a1 = a3 = 0
        return [b6, 2 * b4, b2, Fraction(4)]
    if ell == 3:
        return [b8, 3 * b6, 3 * b4, b2, Fraction(3)]
    raise IsogenyError("ell must be 2 or 3")


def _fmt_linear(x0: Fraction) -> str:
    if x0 == 0:
        return "x"
    return f"x - {x0}" if x0 > 0 else f"x + {-x0}"


def velu_quotient(curve: EllipticCurveData, x0: Fraction, ell: int) -> tuple[Fraction, ...]:
    """a-invariants of E / <P> for a kernel point with x-coordinate x0."""
    _, a2, _, a4, a6 = (c.to_fraction() for c in curve.ainvs)
    fx = x0 ** 3 + a2 * x0 ** 2 + a4 * x0 + a6
    gx = 3 * x0 ** 2 + 2 * a2 * x0 + a4
    if ell == 2:
        v, u = gx, Fraction(0)
    else:
        v, u = 2 * gx, 4 * fx
    t = v
    w = u + x0 * v
    b2 = 4 * a2
    return (Fraction(0), a2, Fraction(0), a4 - 5 * t, a6 - b2 * t - 7 * w)


def verify_isogeny_cm(curve: EllipticCurveData, ell: int) -> IsogenyReport:
    if ell not in (2, 3):
        raise IsogenyError("ell must be 2 or 3")
    if not curve.is_short():
        raise IsogenyError("curve must have a1 = a3 = 0")
    if not all(c.is_rational() for c in curve.ainvs):
        raise IsogenyError("kernel enumeration needs rational coefficients")
    j = curve.j_invariant.to_fraction()
    quotients = []
    for x0 in rational_roots(division_polynomial(curve, ell)):
        ainvs = velu_quotient(curve, x0, ell)
        try:
            jq = j_from_ainvariants(*(CycloNum.from_rational(a) for a in ainvs)).to_fraction()
        except CurveError:
            continue
        quotients.append(KernelQuotient(kernel_x=x0, kernel_poly=_fmt_linear(x0), ainvs=ainvs, j_invariant=jq))
    return IsogenyReport(curve=curve.label, ell=ell, j_invariant=j, quotients=tuple(quotients))
