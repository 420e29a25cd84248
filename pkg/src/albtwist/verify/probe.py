"""Reduction of curves, covers and twist points modulo a prime, with exact counts."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..algebra.cyclo import CycloNum, euler_phi
from ..algebra.poly import MultiPoly
from ..algebra.resultant import discriminant
from ..cover import TowerPresentation
from .curves import EllipticCurveData, Genus2CurveData


class ProbeError(ValueError):
    pass


@dataclass(frozen=True)
class KpointCheck:
    sample: int
    index: int
    status: str  # "pass", "fail" or "skipped" (denominator vanishes mod p)


@dataclass
class PrimeProbe:
    p: int
    n: int
    root_of_unity: int | None
    root_choices: int
    counts: dict[str, int] = field(default_factory=dict)
    cross_checks: dict[str, dict[str, int]] = field(default_factory=dict)
    kpoint: list[KpointCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        agree = all(len(set(v.values())) == 1 for v in self.cross_checks.values())
        return agree and all(k.status != "fail" for k in self.kpoint)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def smallest_root_of_unity(p: int, n: int) -> int | None:
    """Least g in [1, p) of multiplicative order exactly n, or None."""
    if (p - 1) % n:
        return None
    primes = [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]
    for g in range(1, p):
        if pow(g, n, p) == 1 and all(pow(g, n // q, p) != 1 for q in primes):
            return g
    return None


def _coeff_objects(obj) -> list[CycloNum]:
    if isinstance(obj, EllipticCurveData):
        return list(obj.ainvs)
    if isinstance(obj, Genus2CurveData):
        return list(obj.q.terms.values())
    if isinstance(obj, MultiPoly):
        return list(obj.terms.values())
    if isinstance(obj, TowerPresentation):
        return list(obj.spec.f.terms.values())
    raise ProbeError(f"cannot reduce object of type {type(obj).__name__}")


def _reduce(c: CycloNum, p: int, n: int, root: int | None) -> int:
    if c.is_rational():
        q = c.to_fraction()
        return q.numerator * pow(q.denominator, -1, p) % p
    if root is None or n % c.order:
        raise ProbeError(f"coefficient in Q(zeta_{c.order}) cannot be reduced with an order-{n} root mod {p}")
    return c.mod_p(p, pow(root, n // c.order, p))


def _curve_rhs_mod_p(obj, p: int, n: int, root: int | None) -> list[int]:
    """q(x) mod p with the curve isomorphic to y^2 = q(x); low degree first."""
    if isinstance(obj, Genus2CurveData):
        return [_reduce(c, p, n, root) for c in obj.rhs_coeffs()]
    a1, a2, a3, a4, a6 = (_reduce(c, p, n, root) for c in obj.ainvs)
    inv4 = pow(4, -1, p)
    # complete the square: (y + (a1 x + a3)/2)^2 = x^3 + a2 x^2 + a4 x + a6 + (a1 x + a3)^2 / 4
    return [(a6 + a3 * a3 * inv4) % p, (a4 + 2 * a1 * a3 * inv4) % p, (a2 + a1 * a1 * inv4) % p, 1]


def _curve_disc_mod_p(obj, p: int, n: int, root: int | None) -> int:
    if isinstance(obj, EllipticCurveData):
        return _reduce(obj.discriminant, p, n, root)
    lead = obj.rhs_coeffs()[-1]
    d = discriminant(obj.q.with_vars(("x",)), "x").constant_term()
    return _reduce(d * lead, p, n, root)


def count_curve(q_mod_p: list[int], p: int) -> dict[str, int]:
    """Projective point counts of y^2 = q(x) by three independent paths."""
    xs = np.arange(p, dtype=np.int64)
    qvals = kernels.poly_values_mod_p(q_mod_p, xs, p)
    deg = len(q_mod_p) - 1
    lc = q_mod_p[-1] % p
    if deg % 2:
        infinity = 1
    else:
        infinity = 1 + (1 if pow(lc, (p - 1) // 2, p) == 1 else -1)
    return {
        "table": kernels.affine_count_table(qvals, p) + infinity,
        "naive": kernels.affine_count_naive(qvals, p) + infinity,
        "character": kernels.affine_count_character(qvals, p) + infinity,
    }


def _poly_grid(f: MultiPoly, p: int, n: int, root: int | None) -> np.ndarray:
    g = f.with_vars(("x", "y"))
    exps = np.array([e for e in g.terms], dtype=np.int64).reshape(-1, 2)
    coeffs = np.array([_reduce(c, p, n, root) for c in g.terms.values()], dtype=np.int64)
    return kernels.grid_values(exps, coeffs, p)


def _nth_root_table(p: int, n: int) -> dict[int, int]:
    table: dict[int, int] = {}
    for w in range(p - 1, -1, -1):
        table[pow(w, n, p)] = w
    return table


def _kpoint_checks(tower: TowerPresentation, p: int, n: int, root: int | None, samples: int) -> list[KpointCheck]:
    rng = random.Random(p * 1_000_003 + n)
    roots = _nth_root_table(p, tower.n)
    f = tower.spec.f
    out = []
    for s in range(samples):
        vals: dict[str, int] = {}
        for i in range(1, tower.m + 1):
            for _ in range(500):
                x, y = rng.randrange(p), rng.randrange(p)
                v = f.eval_mod_p({"x": x, "y": y}, p, _root_for(f, n, root, p))
                if v in roots:
                    break
            else:
                raise ProbeError(f"no F_{p} point found on w^{tower.n} = f")
            vals.update({f"x{i}": x, f"y{i}": y, f"w{i}": roots[v]})
        for j, pt in enumerate(tower.points, start=1):
            den = pt.z_den.eval_mod_p(vals, p)
            if den == 0:
                out.append(KpointCheck(s, j, "skipped"))
                continue
            z = pt.z_num.eval_mod_p(vals, p) * pow(den, -1, p) % p
            env = dict(vals, x=pt.x.eval_mod_p(vals, p), y=pt.y.eval_mod_p(vals, p), z=z)
            val = tower.twist_eq.eval_mod_p(env, p, _root_for(tower.twist_eq, n, root, p))
            out.append(KpointCheck(s, j, "pass" if val == 0 else "fail"))
    return out


def _root_for(poly: MultiPoly, n: int, root: int | None, p: int) -> int | None:
    if root is None or n % poly.order:
        return None
    return pow(root, n // poly.order, p)


def probe_prime(objects, p: int, n: int, samples: int = 4) -> PrimeProbe:
    """Reduce every object mod p and count points exhaustively."""
    if not is_prime(p):
        raise ProbeError(f"{p} is not prime")
    if n < 1:
        raise ProbeError("n must be positive")
    items = list(objects.items()) if isinstance(objects, dict) else [(_label(o, i), o) for i, o in enumerate(objects)]
    coeffs = [c for _, o in items for c in _coeff_objects(o)]
    cyclotomic = any(not c.is_rational() for c in coeffs)
    root = smallest_root_of_unity(p, n)
    if cyclotomic and root is None:
        raise ProbeError(f"p = {p} is not 1 mod {n}: cyclotomic coefficients have no reduction mod p")
    bad = sorted({c.denominator() for c in coeffs if c.denominator() % p == 0})
    if bad:
        raise ProbeError(f"p = {p} divides coefficient denominator(s) {bad}")
    probe = PrimeProbe(p=p, n=n, root_of_unity=root, root_choices=euler_phi(n) if root else 0)
    for label, obj in items:
        if isinstance(obj, (EllipticCurveData, Genus2CurveData)):
            if p == 2:
                raise ProbeError(f"{label}: p = 2 is excluded for curves y^2 = q(x)")
            if _curve_disc_mod_p(obj, p, n, root) == 0:
                raise ProbeError(f"{label}: p = {p} divides the discriminant (bad reduction)")
            counts = count_curve(_curve_rhs_mod_p(obj, p, n, root), p)
            probe.counts[label] = counts["table"]
            probe.cross_checks[label] = counts
        elif isinstance(obj, MultiPoly):
            grid = _poly_grid(obj, p, n, root)
            probe.counts[f"{label}:curve"] = int((grid == 0).sum())
            probe.counts[f"{label}:cover"] = kernels.cover_affine_count(grid, p, n)
        else:
            grid = _poly_grid(obj.spec.f, p, n, root)
            probe.counts[f"{label}:cover"] = kernels.cover_affine_count(grid, p, obj.n)
            probe.kpoint.extend(_kpoint_checks(obj, p, n, root, samples))
    return probe


def probe_primes(objects, primes, n: int, workers: int = 4) -> dict[int, PrimeProbe]:
    """Independent probes over several primes; the result is keyed by prime."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {p: pool.submit(probe_prime, objects, p, n) for p in primes}
    return {p: futures[p].result() for p in sorted(futures)}


def _label(obj, i: int) -> str:
    return getattr(obj, "label", None) or f"object{i}"
