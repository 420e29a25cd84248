"""Random inputs shared by the test modules."""

from __future__ import annotations

import random

from albtwist.algebra import CycloNum, MultiPoly


def random_f(rng: random.Random, n: int, degree: int, cyclotomic: bool, dense: bool) -> MultiPoly:
    """A polynomial in x, y of exact total degree ``degree``."""
    order = n if cyclotomic else 1
    x, y = MultiPoly.var("x", order), MultiPoly.var("y", order)
    monos = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    if not dense:
        monos = rng.sample(monos, k=min(len(monos), rng.randint(2, 4)))
    if not any(i + j == degree for i, j in monos):
        monos.append((degree, 0))
    out = MultiPoly.zero(order)
    for i, j in monos:
        c = CycloNum.from_rational(rng.choice([-3, -2, -1, 1, 2, 3]), order)
        if cyclotomic and rng.random() < 0.5:
            c = c * CycloNum.zeta(order, rng.randrange(1, n))
        out = out + x ** i * y ** j * c
    if out.total_degree() != degree:
        out = out + x ** degree
    return out


def random_poly(rng: random.Random, names=("x", "y", "z"), order: int = 1, terms: int = 4, max_exp: int = 3):
    out = MultiPoly.zero(order)
    for _ in range(terms):
        mono = MultiPoly.const(1, order)
        for v in names:
            mono = mono * MultiPoly.var(v, order) ** rng.randint(0, max_exp)
        c = CycloNum.from_rational(rng.randint(-5, 5), order)
        if order > 1:
            c = c + CycloNum.zeta(order, rng.randrange(order)) * rng.randint(-2, 2)
        out = out + mono * c
    return out
