import pytest

from albtwist.cover import make_cover
from albtwist.parser import parse_poly
from albtwist.rank import (CrossCheck, RankError, albanese_dim_bound, albanese_structure, endo_rank,
                           factored_curve, predict_rank, rank_constant)


def test_structures():
    assert albanese_structure(3, 2).describe() == "E_rho^2"
    assert albanese_structure(5, 4).describe() == "J(C1)^2"
    assert albanese_structure(8, 4, 1, 1).describe() == "J(C2)^1 x E_i^2"
    assert albanese_structure(12, 4, 2, 0).describe() == "E_i^4"


def test_endo_ranks():
    assert endo_rank(albanese_structure(4, 3)) == 18
    assert endo_rank(albanese_structure(10, 4)) == 16  # 4 * 2^2
    assert endo_rank(albanese_structure(8, 4, 1, 1)) == 2 + 2 + 8
    assert endo_rank(albanese_structure(12, 4, 1, 1)) == 16


@pytest.mark.parametrize("args", [(2, 2), (7, 2), (5, 3), (8, 4), (8, 4, 1, 2), (3, -1)])
def test_input_errors(args):
    with pytest.raises(RankError):
        rank_constant(*args)


def test_prediction_labels():
    p = predict_rank(3, 3, 2)
    assert (p.paper_rank, p.cross_check, p.relation) == (24, CrossCheck.CONSISTENT, "=")
    assert p.conditional
    assert not predict_rank(1, 3, 2, assumption1=True, surface_image=True).conditional
    assert predict_rank(1, 5, 2).cross_check is CrossCheck.PAPER_EXCEEDS
    assert predict_rank(1, 12, 2, 1, 0).cross_check is CrossCheck.COMPUTATION_EXCEEDS
    p8 = predict_rank(1, 8, 4, 1, 1)
    assert p8.relation == ">=" and p8.consistent_with_claim


def test_bound_enforced():
    spec = make_cover(parse_poly("x^2 + y^2 - 1"), 2)
    bound = albanese_dim_bound(factored_curve(spec, [(spec.f, 1)]))
    with pytest.raises(RankError):
        predict_rank(1, 3, 2, bound=bound)


def test_factorization_checked():
    spec = make_cover(parse_poly("(x^2 + y^2 - 1)*(x - y)"), 3)
    fc = factored_curve(spec, [(parse_poly("x^2 + y^2 - 1"), 1), (parse_poly("x - y"), 1)])
    assert albanese_dim_bound(fc) == (0, 1)
    with pytest.raises(RankError):
        factored_curve(spec, [(parse_poly("x - y"), 1)])
