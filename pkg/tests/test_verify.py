import random

import pytest

from albtwist.catalog import catalog_get, find_two_power_decomposition
from albtwist.cover import build_tower, make_cover
from albtwist.parser import parse_poly
from albtwist.verify import (CORRUPTIONS, CurveError, EllipticCurveData, Genus2CurveData, KulikovError,
                             ProbeError, RationalMap, SplitError, check_involution, corrupt_point,
                             j_from_quartic, probe_prime, probe_primes, rational_roots, verify_cm_automorphism,
                             verify_descent, verify_genus2_split, verify_isogeny_cm, verify_kulikov,
                             verify_membership)
from albtwist.verify.isogeny import division_polynomial
from albtwist.verify.probe import count_curve, smallest_root_of_unity

from helpers import random_f

P = parse_poly


def test_curve_invariants():
    e = EllipticCurveData.from_ainvariants("E", a4=-1)
    assert e.j_invariant == 1728
    assert EllipticCurveData.from_ainvariants("F", a6=1).j_invariant == 0
    with pytest.raises(CurveError):
        EllipticCurveData.from_ainvariants("bad")
    # y^2 = x^4 - 1 has j = 1728 as well
    assert j_from_quartic([1, 0, 0, 0, -1]) == 1728
    with pytest.raises(CurveError):
        Genus2CurveData("sq", P("(x^3 - 1)^2"))
    assert rational_roots([-6, 11, -6, 1]) == [1, 2, 3]


@pytest.mark.parametrize("kind", CORRUPTIONS)
def test_every_corruption_caught(kind):
    rng = random.Random(hash(kind) % 1000)
    for _ in range(5):
        n = rng.choice((2, 3, 4))
        tower = build_tower(make_cover(random_f(rng, n, 3, cyclotomic=False, dense=True), n), 2)
        assert verify_membership(tower).ok
        for idx in (1, 2):
            assert not verify_membership(tower, [corrupt_point(tower, idx, kind)]).ok


def test_descent_exponent():
    tower = build_tower(make_cover(P("x^3 + y^2 + 1"), 3), 2)
    assert verify_descent(tower).ok
    assert not verify_descent(tower, 4).ok


def test_cm_order_is_minimal():
    e_i = catalog_get("E_i").object
    sq = RationalMap.of({"x": P("x", 4), "y": P("-y", 4)})
    assert verify_cm_automorphism(e_i, sq).order == 2
    wrong = RationalMap.of({"x": P("2*x"), "y": P("y")})
    rep = verify_cm_automorphism(e_i, wrong)
    assert not rep.preserves_curve and not rep.ok


def test_ratmap_compose_and_pullback():
    inv = RationalMap.of({"x": (1, P("x")), "y": (P("y"), P("x^3"))})
    assert inv.compose(inv).is_identity()
    assert inv.pullback(P("x^2 + 1")) == P("1 + x^2")


def test_isogeny_reports():
    e1 = catalog_get("E1").object
    rep = verify_isogeny_cm(e1, 2)
    assert rep.ok and rep.verdict.startswith("evidence")
    e2 = catalog_get("E2").object
    assert verify_isogeny_cm(e2, 3).verdict == "no evidence at this degree"
    assert division_polynomial(catalog_get("E_rho").object, 3)[-1] == 3


def test_split_errors_and_involution():
    c2 = catalog_get("C2").object
    assert check_involution(c2, c2.involution) == (True, True)
    hyper = RationalMap.of({"x": P("x"), "y": P("-y")})
    with pytest.raises(SplitError):
        verify_genus2_split(c2, hyper)
    rep = verify_genus2_split(c2)
    assert len(rep.quotients) == 2 and rep.ok is None


def test_kulikov_scaling_and_errors():
    F = catalog_get("tokunaga_F").object
    d1, d2 = find_two_power_decomposition(F, 2, 3).decompositions
    base = verify_kulikov(F, (d1.G, d1.H), (d2.G, d2.H), 2, 3)
    assert base.ok and base.surface_image_n == 6
    c = 3
    scaled = verify_kulikov(F * c ** 6, (d1.G * c ** 3, d1.H * c ** 2), (d2.G * c ** 3, d2.H * c ** 2), 2, 3)
    assert scaled.ok and scaled.rank == base.rank
    F6 = P("u0^6 + u1^6")
    with pytest.raises(KulikovError, match="gcd"):
        verify_kulikov(F6, (P("u0^3"), P("u1^2")), (P("u1^3"), P("u0^2")), 2, 4)
    with pytest.raises(KulikovError, match="homogeneous"):
        verify_kulikov(P("u0^5 + u1"), (P("u0^3"), P("u1^2")), (P("u1^3"), P("u0^2")), 2, 3)
    with pytest.raises(KulikovError, match="degree mismatch"):
        verify_kulikov(F6, (P("u0^2"), P("u1^2")), (P("u1^3"), P("u0^2")), 2, 3)


def test_probe_paths_and_errors():
    e_rho = catalog_get("E_rho").object
    for p in (7, 13, 19, 31):
        pr = probe_prime({"E": e_rho}, p, 3)
        assert pr.ok and len(set(pr.cross_checks["E"].values())) == 1
    assert smallest_root_of_unity(7, 3) == 2
    assert count_curve([1, 0, 0, 1], 5)["table"] == 6
    with pytest.raises(ProbeError):
        probe_prime({"E": e_rho}, 9, 3)
    with pytest.raises(ProbeError, match="bad reduction"):
        probe_prime({"E": e_rho}, 3, 3)
    with pytest.raises(ProbeError):
        probe_prime({"f": P("zeta*x + y", 3)}, 5, 3)
    many = probe_primes({"E": e_rho}, [19, 7, 13], 3)
    assert list(many) == [7, 13, 19]


def test_probe_kpoints():
    tower = build_tower(make_cover(P("y^2 - x^3 - 1"), 2), 2)
    pr = probe_prime({"T": tower}, 7, 2)
    assert pr.kpoint and all(c.status in ("pass", "skipped") for c in pr.kpoint)
    assert pr.ok
