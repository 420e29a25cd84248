"""Normal forms modulo triangular binomial relations ``v^k = g``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import MultiPoly, PolyError


@dataclass(frozen=True)
class Relation:
    var: str
    exponent: int
    rhs: MultiPoly

    def as_poly(self) -> MultiPoly:
        return MultiPoly.var(self.var) ** self.exponent - self.rhs


@dataclass(frozen=True)
class RelationSet:
    """Rewrite rules v_i^{k_i} -> g_i with no g_j mentioning any v_i."""

    relations: tuple[Relation, ...] = field(default_factory=tuple)

    def __post_init__(self):
        names = [r.var for r in self.relations]
        if len(set(names)) != len(names):
            raise PolyError("rewrite variables must be distinct")
        for r in self.relations:
            if r.exponent < 1:
                raise PolyError("relation exponent must be positive")
            clash = set(r.rhs.used_vars()) & set(names)
            if clash:
                raise PolyError(f"relation for {r.var} mentions rewrite variable(s) {sorted(clash)}")

    @classmethod
    def uniform(cls, pairs, exponent: int) -> "RelationSet":
        return cls(tuple(Relation(v, exponent, g) for v, g in pairs))

    def variables(self) -> tuple[str, ...]:
        return tuple(r.var for r in self.relations)

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)


@dataclass
class RewriteStats:
    steps: int = 0


def normal_form(p: MultiPoly, rels: RelationSet, stats: RewriteStats | None = None) -> MultiPoly:
    """Reduce every rewrite-variable exponent below its relation exponent.

    Because right-hand sides are free of rewrite variables a single pass is
    enough: v^e becomes v^(e mod k) * g^(e div k).  ``stats.steps`` counts the
    individual v^k -> g applications.
    """
    active = [r for r in rels if r.var in p.vars]
    if not active:
        return p
    idx = [p.vars.index(r.var) for r in active]
    buckets: dict[tuple, dict] = {}
    steps = 0
    for e, c in p.terms.items():
        qs = []
        ne = list(e)
        for r, i in zip(active, idx):
            q, rem = divmod(e[i], r.exponent)
            qs.append(q)
            ne[i] = rem
            steps += q
        buckets.setdefault(tuple(qs), {})[tuple(ne)] = c
    if stats is not None:
        stats.steps += steps
    cache: dict = {}
    out = MultiPoly.zero(p.order).with_vars(p.vars)
    for qs, terms in buckets.items():
        part = MultiPoly._raw(p.vars, terms, p.order)
        for r, q in zip(active, qs):
            if q:
                key = (r.var, q)
                if key not in cache:
                    cache[key] = r.rhs ** q
                part = part * cache[key]
        out = out + part
    return out
