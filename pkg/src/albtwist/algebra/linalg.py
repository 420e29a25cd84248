"""Small exact linear algebra over Q(zeta_n) and over polynomial rings."""

from __future__ import annotations

from .cyclo import CycloNum, as_cyclo
from .poly import MultiPoly, _lcm


def _common(orders) -> int:
    out = 1
    for o in orders:
        out = _lcm(out, o)
    return out


def rank(rows: list[list], order: int = 1) -> int:
    """Row rank by Gaussian elimination with exact field arithmetic."""
    if rows:
        order = _common([order] + [c.order for r in rows for c in r if isinstance(c, CycloNum)])
    m = [[as_cyclo(c, order) for c in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        for i in range(r + 1, len(m)):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(rows: list[list], order: int = 1) -> CycloNum:
    n = len(rows)
    if rows:
        order = _common([order] + [c.order for r in rows for c in r if isinstance(c, CycloNum)])
    m = [[as_cyclo(c, order) for c in r] for r in rows]
    sign = 1
    acc = CycloNum.one(order)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return CycloNum.zero(order)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        acc = acc * m[col][col]
        inv = m[col][col].inverse()
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return acc if sign > 0 else -acc


def poly_det(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free (Bareiss) determinant of a matrix of polynomials."""
    n = len(rows)
    if n == 0:
        return MultiPoly.const(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return MultiPoly.zero()
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_divide(prev) if k else num
            m[i][k] = MultiPoly.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d
