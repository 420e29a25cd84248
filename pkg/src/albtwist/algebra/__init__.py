from .cyclo import CycloError, CycloNum, Rational, cyclo_arith, cyclotomic_poly, euler_phi
from .poly import MultiPoly, NotDivisible, PolyError, homogenize, is_homogeneous, poly_root, poly_subst, variables
from .resultant import discriminant, resultant
from .rewrite import Relation, RelationSet, RewriteStats, normal_form

__all__ = [
    "CycloError", "CycloNum", "Rational", "cyclo_arith", "cyclotomic_poly", "euler_phi",
    "MultiPoly", "NotDivisible", "PolyError", "homogenize", "is_homogeneous", "poly_root",
    "poly_subst", "variables", "discriminant", "resultant", "Relation", "RelationSet",
    "RewriteStats", "normal_form",
]
