"""Bounded search for decompositions F = G^a + H^b of a ternary form."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .. import kernels
from ..algebra.poly import MultiPoly, _lcm, poly_root
from ..verify.kulikov import KulikovReport, coefficient_rank, verify_kulikov

COORDS = ("u0", "u1", "u2")


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    G: MultiPoly
    H: MultiPoly


@dataclass
class DecompositionSearch:
    a: int
    b: int
    bounds: tuple[int, int]
    order: int
    candidates: int
    survivors: int
    decompositions: list[Decomposition]
    truncated: bool = False
    seconds: float = field(default=0.0, compare=False)

    @property
    def exhausted(self) -> bool:
        """True when every lattice point in the box was screened and every survivor examined."""
        return not self.truncated

    def distinct_pair(self) -> tuple[Decomposition, Decomposition] | None:
        """Two decompositions whose pencils {G^a, H^b} differ, if any."""
        for d1, d2 in itertools.combinations(self.decompositions, 2):
            if coefficient_rank([d1.G ** self.a, d1.H ** self.b, d2.G ** self.a, d2.H ** self.b]) >= 3:
                return d1, d2
        return None


def _monomials(deg: int) -> list[tuple[int, int, int]]:
    return [(i, j, deg - i - j) for i in range(deg, -1, -1) for j in range(deg - i, -1, -1)]


def _sample_points(count: int) -> list[tuple[int, int, int]]:
    pts = [p for p in itertools.product(range(-2, 3), repeat=3) if all(p)]
    pts.sort(key=lambda p: (sum(abs(x) for x in p), p))
    return pts[:count]


def _eval_int(F: MultiPoly, pt) -> int:
    vals = dict(zip(COORDS, pt))
    return int(F.evaluate(vals).to_fraction())


def find_two_power_decomposition(F: MultiPoly, a: int, b: int, bounds: tuple[int, int] = (-4, 4),
                                 order: int = 12, samples: int = 14, limit: int = 100_000) -> DecompositionSearch:
    """All (G, H) with H in the integer box ``bounds`` and G over Q(zeta_order).

    Every H in the box is screened by the kernel filter at integer sample points;
    survivors are confirmed by exact root extraction and re-expansion.
    """
    extra = set(F.used_vars()) - set(COORDS)
    if extra:
        raise SearchError(f"F must be a form in u0, u1, u2; found {sorted(extra)}")
    if not all(c.is_rational() for c in F.terms.values()):
        raise SearchError("search lattice needs F with rational coefficients")
    homog, deg = F.is_homogeneous()
    if not homog:
        raise SearchError("F is not homogeneous")
    if a < 2 or b < 2 or deg % a or deg % b:
        raise SearchError(f"degree incompatibility: deg F = {deg} with a = {a}, b = {b}")
    den = 1
    for c in F.terms.values():
        den = _lcm(den, c.to_fraction().denominator)
    F = F.with_vars(COORDS)
    Fi = F.scale(den)  # integer form; H is searched for den*F - den*H^b, so scale H^b as well
    monos = _monomials(deg // b)
    pts = _sample_points(samples)
    fvals = [_eval_int(Fi, p) for p in pts]
    mvals = [[p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2] for e in monos] for p in pts]
    lo, hi = [bounds[0]] * len(monos), [bounds[1]] * len(monos)
    start = time.perf_counter()
    idxs = kernels.lattice_filter(fvals, mvals, lo, hi, a, b, hscale=den, limit=limit)
    order = _lcm(order, F.order)
    found: list[Decomposition] = []
    for idx in idxs:
        coefs = kernels.decode_lattice_index(idx, lo, hi)
        H = MultiPoly(COORDS, {e: c for e, c in zip(monos, coefs) if c}, F.order)
        G = poly_root((F - H ** b).lift(order), a, order)
        if G is None or G ** a + H ** b != F:
            continue
        if any(d.H == H for d in found):
            continue  # same H forces the same G^a
        found.append(Decomposition(G=G, H=H))
    return DecompositionSearch(a=a, b=b, bounds=tuple(bounds), order=order, candidates=(bounds[1] - bounds[0] + 1) ** len(monos),
                               survivors=len(idxs), decompositions=found, truncated=len(idxs) >= limit,
                               seconds=time.perf_counter() - start)


def certify(F: MultiPoly, search: DecompositionSearch) -> KulikovReport | None:
    pair = search.distinct_pair()
    if pair is None:
        return None
    d1, d2 = pair
    return verify_kulikov(F, (d1.G, d1.H), (d2.G, d2.H), search.a, search.b)
