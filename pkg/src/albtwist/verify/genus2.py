"""Elliptic quotients of a genus-2 curve y^2 = q(x) by an extra involution."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.cyclo import CycloNum
from ..algebra.poly import MultiPoly, NotDivisible
from ..algebra.rewrite import normal_form
from .curves import Genus2CurveData, j_from_quartic
from .ratmap import RationalMap


class SplitError(ValueError):
    pass


@dataclass(frozen=True)
class SplitReport:
    curve: str
    c: CycloNum
    s: CycloNum
    quotients: tuple[MultiPoly, MultiPoly]
    j_values: tuple[CycloNum, CycloNum]
    expected: tuple[CycloNum, ...] | None

    @property
    def ok(self) -> bool | None:
        if self.expected is None:
            return None
        return sorted(map(str, self.j_values)) == sorted(map(str, self.expected))


def check_involution(curve: Genus2CurveData, sigma: RationalMap) -> tuple[bool, bool]:
    """(sigma preserves the curve, sigma o sigma = id), both modulo y^2 = q."""
    rels = curve.relations()
    preserves = not normal_form(sigma.pullback(curve.equation()), rels)
    if not preserves:
        return False, False
    return True, sigma.compose(sigma, rels).is_identity(rels)


def _involution_constants(sigma: RationalMap, order: int) -> tuple[CycloNum, CycloNum]:
    """Read (c, s) from x -> c/x, y -> s*y/x^3."""
    imgs = sigma.as_dict()
    x = MultiPoly.var("x", order)
    y = MultiPoly.var("y", order)
    xn, xd = imgs["x"]
    yn, yd = imgs.get("y", (y, MultiPoly.const(1, order)))
    try:
        kx = xd.exact_divide(x)
        ky = yd.exact_divide(x ** 3)
        sy = yn.exact_divide(y)
    except NotDivisible as exc:
        raise SplitError("involution is not of the form x -> c/x, y -> s*y/x^3") from exc
    if not (xn.is_constant() and kx.is_constant() and ky.is_constant() and sy.is_constant()):
        raise SplitError("involution is not of the form x -> c/x, y -> s*y/x^3")
    c = xn.constant_term() / kx.constant_term()
    s = sy.constant_term() / ky.constant_term()
    return c, s


def _laurent_in_u(coeffs: dict[int, CycloNum], c: CycloNum, order: int) -> list[CycloNum]:
    """Write a sigma-invariant Laurent polynomial sum a_k x^k as a polynomial in u = x + c/x."""
    rem = dict(coeffs)
    out: dict[int, CycloNum] = {}
    zero = CycloNum.zero(order)
    while True:
        rem = {k: v for k, v in rem.items() if v}
        if not rem:
            break
        top = max(rem)
        if top < 0:
            raise SplitError("quotient function is not invariant under the involution")
        if top == 0:
            out[0] = out.get(0, zero) + rem[0]
            break
        a = rem[top]
        out[top] = a
        # subtract a * (x + c/x)^top
        binom = 1
        for i in range(top + 1):
            k = top - 2 * i
            rem[k] = rem.get(k, zero) - a * binom * c ** i
            binom = binom * (top - i) // (i + 1)
    deg = max(out) if out else 0
    return [out.get(k, zero) for k in range(deg + 1)]


def _quotient_rhs(curve: Genus2CurveData, c: CycloNum, k: CycloNum) -> list[CycloNum]:
    """eta^2 in terms of u for eta = y (x + k) / x^2."""
    order = curve.order
    x = MultiPoly.var("x", order)
    num = (curve.q * (x + k) ** 2).with_vars(("x",))
    coeffs = {e[0] - 4: v for e, v in num.terms.items()}
    return _laurent_in_u(coeffs, c, order)


def _poly_in(var: str, cs: list[CycloNum], order: int) -> MultiPoly:
    u = MultiPoly.var(var, order)
    out = MultiPoly.zero(order)
    for i, a in enumerate(cs):
        out = out + u ** i * a
    return out


def verify_genus2_split(curve: Genus2CurveData, sigma: RationalMap | None = None, expected=None) -> SplitReport:
    sigma = sigma or curve.involution
    if sigma is None:
        raise SplitError(f"{curve.label} carries no involution")
    order = curve.order
    imgs = sigma.as_dict()
    if "x" in imgs and imgs["x"][0] == MultiPoly.var("x") and imgs["x"][1] == 1:
        raise SplitError("hyperelliptic involution: the quotient is rational, not elliptic")
    preserves, invol = check_involution(curve, sigma)
    if not preserves:
        raise SplitError("supplied map does not preserve the curve")
    if not invol:
        raise SplitError("supplied map is not an involution on the curve")
    c, s = _involution_constants(sigma, order)
    quotients, js = [], []
    for sign in (1, -1):
        k = s * sign / c
        rhs = _quotient_rhs(curve, c, k)
        if len(rhs) not in (4, 5):
            raise SplitError("quotient is not of genus one")
        padded = rhs + [CycloNum.zero(order)] * (5 - len(rhs))
        quotients.append(_poly_in("u", rhs, order))
        js.append(j_from_quartic(list(reversed(padded))))
    exp = None if expected is None else tuple(expected)
    return SplitReport(curve=curve.label, c=c, s=s, quotients=tuple(quotients), j_values=tuple(js), expected=exp)
