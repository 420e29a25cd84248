import random

import pytest

from albtwist.catalog import (CatalogError, DualError, SearchError, catalog_get, catalog_keys, certify,
                              dual_cubic, find_two_power_decomposition, is_smooth_cubic)
from albtwist.parser import parse_poly
from albtwist.verify import EllipticCurveData, Genus2CurveData

P = parse_poly
U = ("u0", "u1", "u2")


def test_keys_and_objects():
    keys = catalog_keys()
    for k in ("E_rho", "E_i", "C1", "C2", "E1", "E2", "tokunaga_F", "fermat_cubic"):
        assert k in keys
    assert isinstance(catalog_get("E1").object, EllipticCurveData)
    assert isinstance(catalog_get("C2").object, Genus2CurveData)
    assert catalog_get("tokunaga_F").printed != str(catalog_get("tokunaga_F").object)


def test_unknown_key_suggests():
    with pytest.raises(CatalogError) as info:
        catalog_get("E_tau")
    msg = str(info.value)
    assert "E_rho" in msg and "E_i" in msg


def test_j_invariants():
    assert catalog_get("E1").object.j_invariant == 8000
    assert str(catalog_get("E2").object.j_invariant) == "64000/37"


def _random_smooth_cubic(rng):
    while True:
        terms = [(i, j, 3 - i - j) for i in range(4) for j in range(4 - i)]
        F = sum((P(f"u0^{i}*u1^{j}*u2^{k}") * rng.randint(-3, 3) for i, j, k in terms), P("0"))
        homog, d = F.is_homogeneous()
        if F and homog and d == 3 and is_smooth_cubic(F):
            return F


def test_dual_degree_battery():
    rng = random.Random(11)
    for _ in range(20):
        D = dual_cubic(_random_smooth_cubic(rng))
        assert D.is_homogeneous() == (True, 6)


@pytest.mark.parametrize("t", [1, 2, -5])
def test_dual_vanishes_on_tangents(t):
    # (1 : -1 : 0) lies on every member of the Hesse-type family below
    F = P(f"u0^3 + u1^3 + u2^3 + {t}*u0*u1*u2")
    D = dual_cubic(F)
    pt = {"u0": 1, "u1": -1, "u2": 0}
    grad = [F.diff(v).evaluate(pt) for v in U]
    assert D.evaluate(dict(zip(U, grad))).is_zero()
    assert not D.evaluate({"u0": 1, "u1": 2, "u2": 3}).is_zero()


def test_dual_rejections():
    assert not is_smooth_cubic(P("u0*u1*u2"))
    with pytest.raises(DualError, match="singular"):
        dual_cubic(P("u2*u0^2 - u1^3 - u1^2*u0"))
    with pytest.raises(DualError):
        dual_cubic(P("u0^4 + u1^4"))


def test_search_reexpands():
    F = catalog_get("tokunaga_F").object
    s = find_two_power_decomposition(F, 2, 3)
    assert s.exhausted and len(s.decompositions) == 2
    for d in s.decompositions:
        assert d.G ** 2 + d.H ** 3 == F
    assert certify(F, s).rank == 3


def test_search_degenerate_form():
    s = find_two_power_decomposition(P("u0^6"), 2, 3, bounds=(-1, 1))
    assert s.decompositions
    assert s.distinct_pair() is None
    assert certify(P("u0^6"), s) is None


def test_search_errors():
    with pytest.raises(SearchError):
        find_two_power_decomposition(P("u0^5 + u1^5"), 2, 3)
    with pytest.raises(SearchError):
        find_two_power_decomposition(P("zeta*u0^6", 3), 2, 3)
    with pytest.raises(SearchError):
        find_two_power_decomposition(P("u0^6 + u1"), 2, 3)
