"""Sylvester resultants of multivariate polynomials."""

from __future__ import annotations

from .linalg import poly_det
from .poly import MultiPoly, PolyError


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list[list[MultiPoly]]:
    dp, dq = p.degree(var), q.degree(var)
    if var not in p.used_vars() or var not in q.used_vars() or dp < 1 or dq < 1:
        raise PolyError(f"both polynomials must involve {var!r} with positive degree")
    cp, cq = p.coefficients_in(var), q.coefficients_in(var)
    zero = MultiPoly.zero()
    size = dp + dq
    rows = []
    for i in range(dq):
        row = [zero] * size
        for k in range(dp + 1):
            row[i + dp - k] = cp.get(k, zero)
        rows.append(row)
    for i in range(dp):
        row = [zero] * size
        for k in range(dq + 1):
            row[i + dq - k] = cq.get(k, zero)
        rows.append(row)
    return rows


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Res_var(p, q) as the determinant of the Sylvester matrix."""
    out = poly_det(sylvester_matrix(p, q, var))
    # the result no longer involves var
    return out.trim() if out.terms else MultiPoly.zero(max(p.order, q.order))


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    """Disc_var(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p)."""
    d = p.degree(var)
    lead = p.coefficients_in(var)[d]
    res = resultant(p, p.diff(var), var)
    out = res.exact_divide(lead)
    return out if (d * (d - 1) // 2) % 2 == 0 else -out
