"""Projective dual of a smooth plane cubic by elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..algebra.linalg import det, poly_det
from ..algebra.poly import MultiPoly, NotDivisible
from ..algebra.resultant import resultant

COORDS = ("u0", "u1", "u2")


class DualError(ValueError):
    pass


def _quadric_row(q: MultiPoly) -> list:
    q = q.with_vars(COORDS)
    monos = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    return [q.terms.get(m, 0) for m in monos]


def smoothness_resultant(F3: MultiPoly):
    """A nonzero multiple of Res(F_u0, F_u1, F_u2): zero iff the partials share a projective zero.

    Three ternary quadrics Q_i have a common zero exactly when the 6x6 matrix of
    coefficients of Q_0, Q_1, Q_2 and the partials of their Jacobian determinant is singular.
    """
    F3 = F3.with_vars(COORDS)
    qs = [F3.diff(v) for v in COORDS]
    jac = poly_det([[q.diff(v) for v in COORDS] for q in qs])
    rows = [_quadric_row(q) for q in qs] + [_quadric_row(jac.diff(v)) for v in COORDS]
    return det(rows, F3.order)


def is_smooth_cubic(F3: MultiPoly) -> bool:
    return not smoothness_resultant(F3).is_zero()


def _check_cubic(F3: MultiPoly) -> MultiPoly:
    extra = set(F3.used_vars()) - set(COORDS)
    if extra:
        raise DualError(f"cubic must be in u0, u1, u2; found {sorted(extra)}")
    homog, d = F3.is_homogeneous()
    if not homog or d != 3:
        raise DualError("input must be homogeneous of degree 3")
    return F3.with_vars(COORDS)


def _normalize(p: MultiPoly) -> MultiPoly:
    if all(c.is_rational() for c in p.terms.values()):
        fr = [c.to_fraction() for c in p.terms.values()]
        den = 1
        for q in fr:
            den = den * q.denominator // gcd(den, q.denominator)
        num = 0
        for q in fr:
            num = gcd(num, int(q * den))
        scale = Fraction(den, num)
    else:
        scale = p.leading_term()[1].inverse()
    out = p.scale(scale)
    return -out if out.leading_term()[1].is_rational() and out.leading_term()[1].to_fraction() < 0 else out


def dual_cubic(F3: MultiPoly) -> MultiPoly:
    """The sextic in dual coordinates (u0:u1:u2) vanishing on lines tangent to F3 = 0."""
    F3 = _check_cubic(F3)
    if not is_smooth_cubic(F3):
        raise DualError("dual degree < 6; Plücker count fails (cubic is singular)")
    order = F3.order
    a, b, c, t = (MultiPoly.var(v, order) for v in ("a", "b", "c", "t"))
    # restrict to the line a*u0 + b*u1 + c*u2 = 0 through u2 = -(a*u0 + b*u1)/c, chart u0 = 1
    g = F3.subst({"u0": 1, "u1": t}).subst_fraction("u2", -(a + b * t), c, clear=3)
    lead = g.coefficients_in("t").get(3)
    if lead is None:
        raise DualError("restricted cubic dropped degree; input is reducible")
    res = resultant(g, g.diff("t"), "t")
    try:
        res = res.exact_divide(lead)
    except NotDivisible as exc:
        raise DualError("elimination left an unexpected factor") from exc
    # strip the powers of c introduced by clearing denominators
    while res.terms and c.divides(res):
        res = res.exact_divide(c)
    out = res.rename({"a": "u0", "b": "u1", "c": "u2"}).with_vars(COORDS)
    homog, d = out.is_homogeneous()
    if not homog or d != 6:
        raise DualError(f"dual degree {d if homog else 'mixed'} != 6; Plücker count fails")
    return _normalize(out)
