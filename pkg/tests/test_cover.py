import random

import pytest

from albtwist.algebra import MultiPoly, variables
from albtwist.cover import (BranchLocus, CoverError, PencilSpec, build_tower, cocycle, make_cover, pencil_factor,
                            twist_points)
from albtwist.parser import parse_poly

from helpers import random_f


def test_cover_invariants():
    spec = make_cover(parse_poly("x^6 + y^6 + 1"), 6)
    assert (spec.e, spec.n0, spec.branch_locus) == (1, 0, BranchLocus.CURVE_ONLY)
    spec = make_cover(parse_poly("x^3 - y^2"), 2)
    assert (spec.e, spec.n0, spec.branch_locus) == (2, 1, BranchLocus.CURVE_AND_LINE_AT_INFINITY)
    spec = make_cover(parse_poly("x^5 + y + 1"), 3)
    assert (spec.e, spec.n0) == (2, 1)
    assert spec.F.subst({"u0": 1}).rename({"u1": "x", "u2": "y"}) == spec.f


def test_weighted_equation_homogeneous():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.choice((2, 3, 4, 5, 6))
        spec = make_cover(random_f(rng, n, rng.randint(2, 7), cyclotomic=False, dense=False), n)
        assert spec.weighted_eq.is_homogeneous(spec.weights) == (True, n * spec.e)


@pytest.mark.parametrize("f,n", [("x + y", 2), ("x*z + 1", 2), ("x^2", 1)])
def test_cover_errors(f, n):
    with pytest.raises(CoverError):
        make_cover(parse_poly(f), n)


def test_tower_shape():
    spec = make_cover(parse_poly("y^2 - x^3 - 1"), 2)
    t = build_tower(spec, 2)
    x1, y1, x2, y2, z1 = variables("x1 y1 x2 y2 z1")
    f1, f2 = y1 ** 2 - x1 ** 3 - 1, y2 ** 2 - x2 ** 3 - 1
    assert [r.rhs for r in t.product_relations] == [f1, f2]
    assert t.quotient_relations == (z1 ** 2 - f1 * f2,)
    assert len(build_tower(spec, 1).quotient_relations) == 0
    pts = twist_points(build_tower(spec, 4))
    assert len(pts) == 4
    sup = [p.support() for p in pts[1:]]
    for i in range(len(sup)):
        for j in range(i + 1, len(sup)):
            assert sup[i] & sup[j] == {"w1"}


@pytest.mark.parametrize("n", range(2, 13))
def test_cocycle(n):
    rep = cocycle(make_cover(parse_poly("x^2 + y^3 + 1"), n))
    assert rep.ok and rep.tau_order == n
    if n == 6:
        assert rep.power_orders[2] == 3 and 2 in rep.proper_powers


def test_pencil():
    u1, u2 = MultiPoly.var("u1"), MultiPoly.var("u2")
    f, d = pencil_factor(PencilSpec(u1, u2, ((1, 2), (3, 4)), (1, 1), ell=2, n=2))
    x, y = variables("x y")
    assert f == (2 * x - y) * (4 * x - 3 * y)
    v0, v1, v2 = variables("v0 v1 v2")
    assert d == v2 ** 2 - (2 * v0 - v1) * (4 * v0 - 3 * v1)
    with pytest.raises(CoverError, match="ℓ ∤ n"):
        pencil_factor(PencilSpec(u1, u2, ((1, 2), (3, 4), (0, 1)), (1, 1, 1), ell=3, n=2))
    pencil_factor(PencilSpec(u1 ** 2, u2 ** 2, ((1, 2), (3, 4)), (1, 2), ell=3, n=6))
