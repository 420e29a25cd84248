"""Desk-scale verification: twist membership, CM maps, splittings, pencils and prime probes."""

from .cm import CMReport, verify_cm_automorphism
from .curves import CurveError, EllipticCurveData, Genus2CurveData, j_from_ainvariants, j_from_quartic, rational_roots
from .genus2 import SplitError, SplitReport, check_involution, verify_genus2_split
from .isogeny import IsogenyError, IsogenyReport, verify_isogeny_cm
from .kulikov import KulikovError, KulikovReport, verify_kulikov
from .membership import (CORRUPTIONS, DescentReport, MembershipReport, corrupt_point, verify_descent,
                         verify_membership)
from .probe import PrimeProbe, ProbeError, probe_prime, probe_primes
from .ratmap import RationalMap

__all__ = [
    "CMReport", "verify_cm_automorphism", "CurveError", "EllipticCurveData", "Genus2CurveData",
    "j_from_ainvariants", "j_from_quartic", "rational_roots", "SplitError", "SplitReport",
    "check_involution", "verify_genus2_split", "IsogenyError", "IsogenyReport", "verify_isogeny_cm",
    "KulikovError", "KulikovReport", "verify_kulikov", "CORRUPTIONS", "DescentReport",
    "MembershipReport", "corrupt_point", "verify_descent", "verify_membership", "PrimeProbe",
    "ProbeError", "probe_prime", "probe_primes", "RationalMap",
]
