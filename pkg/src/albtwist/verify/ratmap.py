"""Rational maps given by numerator/denominator pairs, compared modulo a curve."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..algebra.poly import MultiPoly
from ..algebra.rewrite import RelationSet, normal_form


def _as_poly(v, order: int = 1) -> MultiPoly:
    return v if isinstance(v, MultiPoly) else MultiPoly.const(v, order)


def subst_cleared(p: MultiPoly, images: Mapping[str, tuple[MultiPoly, MultiPoly]], clear: Mapping[str, int]) -> MultiPoly:
    """p(v = num_v/den_v) * prod den_v^clear_v, as a polynomial."""
    names = [v for v in images if v in p.vars]
    for v in names:
        if clear[v] < p.degree(v):
            raise ValueError(f"clearing power for {v} below its degree")
    idx = [p.vars.index(v) for v in names]
    keep = [i for i, v in enumerate(p.vars) if v not in images]
    keep_vars = tuple(p.vars[i] for i in keep)
    groups: dict[tuple, dict] = {}
    for e, c in p.terms.items():
        groups.setdefault(tuple(e[i] for i in idx), {})[tuple(e[i] for i in keep)] = c
    cache: dict = {}

    def pw(v, which, k):
        key = (v, which, k)
        if key not in cache:
            cache[key] = images[v][which] ** k
        return cache[key]

    out = MultiPoly.zero(p.order)
    for key, rest in groups.items():
        part = MultiPoly._raw(keep_vars, rest, p.order)
        for v, k in zip(names, key):
            part = part * pw(v, 0, k) * pw(v, 1, clear[v] - k)
        out = out + part
    # variables absent from p still contribute their clearing factor
    for v in images:
        if v not in p.vars and clear.get(v, 0):
            out = out * images[v][1] ** clear[v]
    return out


@dataclass(frozen=True)
class RationalMap:
    """v -> num_v / den_v for each listed variable; others are fixed."""

    images: tuple[tuple[str, MultiPoly, MultiPoly], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, object]) -> "RationalMap":
        items = []
        for v, img in sorted(mapping.items()):
            if isinstance(img, tuple):
                num, den = img
            else:
                num, den = img, 1
            items.append((v, _as_poly(num), _as_poly(den)))
        return cls(tuple(items))

    @classmethod
    def identity(cls, names) -> "RationalMap":
        return cls.of({v: MultiPoly.var(v) for v in names})

    def as_dict(self) -> dict[str, tuple[MultiPoly, MultiPoly]]:
        return {v: (n, d) for v, n, d in self.images}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v for v, _, _ in self.images)

    def pullback(self, p: MultiPoly) -> MultiPoly:
        """p o self with denominators cleared by their degree in p."""
        imgs = self.as_dict()
        clear = {v: max(p.degree(v), 0) for v in imgs}
        return subst_cleared(p, imgs, clear)

    def compose(self, inner: "RationalMap", rels: RelationSet | None = None) -> "RationalMap":
        """self o inner: apply inner first."""
        imgs = inner.as_dict()
        names = set(self.names) | set(inner.names)
        out = {}
        mine = self.as_dict()
        for v in sorted(names):
            num, den = mine.get(v, (MultiPoly.var(v), MultiPoly.const(1)))
            clear = {u: max(num.degree(u), den.degree(u), 0) for u in imgs}
            n2 = subst_cleared(num, imgs, clear)
            d2 = subst_cleared(den, imgs, clear)
            if rels is not None:
                n2, d2 = normal_form(n2, rels), normal_form(d2, rels)
            out[v] = (n2, d2)
        return RationalMap.of(out)

    def equals(self, other: "RationalMap", rels: RelationSet | None = None) -> bool:
        a, b = self.as_dict(), other.as_dict()
        for v in set(a) | set(b):
            n1, d1 = a.get(v, (MultiPoly.var(v), MultiPoly.const(1)))
            n2, d2 = b.get(v, (MultiPoly.var(v), MultiPoly.const(1)))
            diff = n1 * d2 - n2 * d1
            if rels is not None:
                diff = normal_form(diff, rels)
            if diff:
                return False
        return True

    def is_identity(self, rels: RelationSet | None = None) -> bool:
        return self.equals(RationalMap.identity(self.names), rels)

    def order(self, rels: RelationSet | None = None, limit: int = 48) -> int | None:
        """Smallest k >= 1 with self^k = id, or None if none up to ``limit``."""
        power = self
        for k in range(1, limit + 1):
            if power.is_identity(rels):
                return k
            power = self.compose(power, rels)
        return None

    def __str__(self):
        parts = []
        for v, n, d in self.images:
            parts.append(f"{v} -> {n}" if d == 1 else f"{v} -> ({n})/({d})")
        return ", ".join(parts)
