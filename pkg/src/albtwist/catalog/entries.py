"""Named curves and polynomials with their printed forms and recorded discrepancies."""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from functools import lru_cache

from ..algebra.poly import MultiPoly
from ..parser import parse_poly
from ..verify.curves import EllipticCurveData, Genus2CurveData
from ..verify.cm import verify_cm_automorphism
from ..verify.genus2 import check_involution
from ..verify.ratmap import RationalMap


class CatalogError(KeyError):
    def __str__(self):
        return self.args[0] if self.args else ""


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    object: object
    provenance: str
    caveats: tuple[str, ...] = ()
    printed: str | None = None
    extras: dict = field(default_factory=dict, compare=False, hash=False)

    def summary(self) -> str:
        return str(self.object)


_TOKUNAGA_F_PRINTED = "u0^3*u1^3 - 3*u0*u1*u2*(u2^3-8) + 2*(u2^6 + 20*u0^3*u2^3 - 8*u0^6)"
_TOKUNAGA_F = "u0^3*u1^3 - 3*u0*u1*u2*(u2^3-8*u0^3) + 2*(u2^6 + 20*u0^3*u2^3 - 8*u0^6)"
_SIGN_CAVEAT = ("affine and projective Tokunaga sextics differ in the sign of the y^3 term "
                "(-20 y^3 vs +20 u0^3 u2^3); both variants are stored and neither is preferred")


@lru_cache(maxsize=1)
def _build() -> dict[str, CatalogEntry]:
    P = parse_poly
    out = {}

    def add(e: CatalogEntry):
        out[e.key] = e

    add(CatalogEntry("E_rho", EllipticCurveData.from_ainvariants("E_rho", a6=1), "y^2=x^3+1",
                     extras={"cm_map": RationalMap.of({"x": P("zeta*x", 3), "y": P("y", 3)})}))
    add(CatalogEntry("E_i", EllipticCurveData.from_ainvariants("E_i", a4=1), "y^2=x^3+x",
                     extras={"cm_map": RationalMap.of({"x": P("-x", 4), "y": P("zeta*y", 4)})}))
    add(CatalogEntry("C1", Genus2CurveData("C1", P("x^5+1")), "y^2=x^5+1",
                     extras={"cm_map": RationalMap.of({"x": P("zeta*x", 5), "y": P("y", 5)})}))
    add(CatalogEntry("C2", Genus2CurveData("C2", P("x^5+x"),
                                           RationalMap.of({"x": (1, P("x")), "y": (P("y"), P("x^3"))})),
                     "y^2=x^5+x",
                     caveats=("both elliptic quotients of J(C2) by (x,y) -> (1/x, y/x^3) have j = 8000; "
                              "they do not match {j(E1), j(E2)}",)))
    add(CatalogEntry("E1", EllipticCurveData.from_ainvariants("E1", a2=1, a4=-3, a6=1), "y^2=x^3+x^2-3x+1"))
    add(CatalogEntry("E2", EllipticCurveData.from_ainvariants("E2", a2=-1, a4=-3, a6=1), "y^2=x^3-x^2-3x+1",
                     caveats=("j(E2) = 64000/37 is not an integer, so E2 has no complex multiplication",)))
    add(CatalogEntry("tokunaga_f_thm13", P("x^3 - 3*x*y*(y^3-8) + 2*(y^6-20*y^3-8)"),
                     "x^3 -3 x y(y^3-8)+2(y^6 -20 y^3 -8)", caveats=(_SIGN_CAVEAT,)))
    add(CatalogEntry("tokunaga_f_prop", P("x^3 - 3*x*y*(y^3-8) + 2*(y^6+20*y^3-8)"),
                     "affine chart u0 = 1 of u0^3u1^3 -3 u0 u1 u2(u2^3-8)+ 2(u2^6+ 20 u0^3 u2^3 -8 u0^6)",
                     caveats=(_SIGN_CAVEAT,)))
    add(CatalogEntry("tokunaga_F", P(_TOKUNAGA_F),
                     "u_0^3u_1^3 -3 u_0 u_1 u_2( u_2^3-8)+ 2(u_2^6+ 20 u_0^3 u_2^3 -8 u_0^6)",
                     caveats=("printed factor (u2^3 - 8) is not homogeneous; stored with (u2^3 - 8 u0^3)",
                              _SIGN_CAVEAT),
                     printed=str(P(_TOKUNAGA_F_PRINTED))))
    add(CatalogEntry("tokunaga_F_thm13", P("x^3 - 3*x*y*(y^3-8) + 2*(y^6-20*y^3-8)").homogenize(
        "u0", {"x": "u1", "y": "u2"}), "projective closure of tokunaga_f_thm13", caveats=(_SIGN_CAVEAT,)))
    add(CatalogEntry("fermat_cubic", P("u0^3 + u1^3 + u2^3"), "test fixture"))
    _self_check(out)
    return out


def _self_check(entries: dict[str, CatalogEntry]) -> None:
    # discriminants and squarefreeness are enforced by the curve constructors
    for e in entries.values():
        cm = e.extras.get("cm_map")
        if cm is not None and not verify_cm_automorphism(e.object, cm).ok:
            raise RuntimeError(f"catalog entry {e.key}: stored automorphism fails")
        inv = getattr(e.object, "involution", None)
        if inv is not None and check_involution(e.object, inv) != (True, True):
            raise RuntimeError(f"catalog entry {e.key}: stored involution fails")


def catalog_keys() -> list[str]:
    return list(_build())


def catalog_get(key: str) -> CatalogEntry:
    entries = _build()
    if key not in entries:
        close = difflib.get_close_matches(key, list(entries), n=5, cutoff=0.3)
        hint = close or list(entries)
        raise CatalogError(f"unknown catalog key {key!r}; did you mean: {', '.join(hint)}")
    return entries[key]
