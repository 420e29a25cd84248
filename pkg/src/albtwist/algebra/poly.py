"""Sparse multivariate polynomials with coefficients in Q(zeta_n).

Variables are kept in natural-sort order (``u0 < u1 < x < x1 < x2 < y``) and
every polynomial is a map from exponent tuples to nonzero coefficients.
Polynomials with different variable sets or cyclotomic orders combine by
merging the rings and lifting coefficients into Q(zeta_lcm).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping

from .cyclo import CycloError, CycloNum, as_cyclo, format_cyclo, format_rational

_DIGITS = re.compile(r"(\d+)")


class PolyError(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


def var_key(name: str):
    """Natural sort key: ``x2`` sorts before ``x10``."""
    return tuple(int(t) if t.isdigit() else t for t in _DIGITS.split(name))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class MultiPoly:
    """Immutable sparse polynomial; see module docstring for conventions."""

    __slots__ = ("vars", "terms", "order")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple, CycloNum] | None = None, order: int = 1):
        vs = tuple(vars)
        if list(vs) != sorted(vs, key=var_key) or len(set(vs)) != len(vs):
            canon = tuple(sorted(set(vs), key=var_key))
            pos = [canon.index(v) for v in vs]
            merged: dict = {}
            for exp, c in (terms or {}).items():
                e = [0] * len(canon)
                for i, k in zip(pos, exp):
                    e[i] += k
                key = tuple(e)
                c = as_cyclo(c, order)
                merged[key] = merged[key] + c if key in merged else c
            vs, terms = canon, merged
        self.vars = vs
        self.order = order
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(vs):
                raise PolyError("exponent vector does not match ring arity")
            c = as_cyclo(c, order)
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, vars: tuple, terms: dict, order: int) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj.order = order
        return obj

    # constructors -------------------------------------------------------------

    @classmethod
    def var(cls, name: str, order: int = 1) -> "MultiPoly":
        return cls._raw((name,), {(1,): CycloNum.one(order)}, order)

    @classmethod
    def const(cls, value, order: int | None = None) -> "MultiPoly":
        if isinstance(value, CycloNum):
            order = value.order if order is None else order
        order = order or 1
        c = as_cyclo(value, order)
        return cls._raw((), {(): c} if c else {}, order)

    @classmethod
    def zero(cls, order: int = 1) -> "MultiPoly":
        return cls._raw((), {}, order)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, order: int | None = None) -> "MultiPoly":
        if isinstance(coeff, CycloNum) and order is None:
            order = coeff.order
        order = order or 1
        vs = tuple(sorted((v for v, e in exps.items() if e), key=var_key))
        if any(e < 0 for e in exps.values()):
            raise PolyError("negative exponent")
        c = as_cyclo(coeff, order)
        return cls._raw(vs, {tuple(exps[v] for v in vs): c} if c else {}, order)

    # ring management ------------------------------------------------------------

    def with_vars(self, vars: Iterable[str]) -> "MultiPoly":
        """Re-express in a larger ring; all used variables must be present."""
        target = tuple(sorted(set(vars) | set(self.vars), key=var_key))
        if target == self.vars:
            return self
        idx = [target.index(v) for v in self.vars]
        n = len(target)
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * n
            for i, k in zip(idx, exp):
                e[i] = k
            terms[tuple(e)] = c
        return MultiPoly._raw(target, terms, self.order)

    def lift(self, order: int) -> "MultiPoly":
        if order == self.order:
            return self
        return MultiPoly._raw(self.vars, {e: c.lift(order) for e, c in self.terms.items()}, order)

    def _align(self, other: "MultiPoly"):
        if self.order != other.order:
            order = _lcm(self.order, other.order)
            a, b = self.lift(order), other.lift(order)
        else:
            a, b = self, other
        if a.vars != b.vars:
            vs = tuple(sorted(set(a.vars) | set(b.vars), key=var_key))
            a, b = a.with_vars(vs), b.with_vars(vs)
        return a, b

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, CycloNum):
            return MultiPoly.const(other)
        if isinstance(other, (int, _RationalABC)):
            return MultiPoly.const(other, self.order)
        return NotImplemented

    def used_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def trim(self) -> "MultiPoly":
        """Drop variables that do not occur."""
        used = self.used_vars()
        if used == self.vars:
            return self
        idx = [self.vars.index(v) for v in used]
        return MultiPoly._raw(used, {tuple(e[i] for i in idx): c for e, c in self.terms.items()}, self.order)

    # arithmetic -------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MultiPoly._raw(a.vars, terms, a.order)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        if not a.terms or not b.terms:
            return MultiPoly._raw(a.vars, {}, a.order)
        terms: dict = {}
        get = terms.get
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                s = get(e)
                terms[e] = p if s is None else s + p
        return MultiPoly._raw(a.vars, {e: c for e, c in terms.items() if c}, a.order)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = as_cyclo(c, self.order) if not isinstance(c, CycloNum) else c
        if c.order != self.order:
            order = _lcm(c.order, self.order)
            return self.lift(order).scale(c.lift(order))
        if not c:
            return MultiPoly._raw(self.vars, {}, self.order)
        return MultiPoly._raw(self.vars, {e: v * c for e, v in self.terms.items()}, self.order)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.order).with_vars(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison -------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, _RationalABC, CycloNum)):
            other = MultiPoly.const(other) if isinstance(other, CycloNum) else MultiPoly.const(other, self.order)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        t = self.trim()
        return hash(frozenset((tuple(zip(t.vars, e)), c) for e, c in t.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # structure ------------------------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> CycloNum:
        return self.terms.get((0,) * len(self.vars), CycloNum.zero(self.order))

    def coeff_of(self, exps: Mapping[str, int]) -> CycloNum:
        if any(v not in self.vars for v, e in exps.items() if e):
            return CycloNum.zero(self.order)
        key = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(key, CycloNum.zero(self.order))

    def coefficients_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Split as sum of c_k * var^k; the c_k do not involve var."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly._raw(rest, t, self.order) for k, t in out.items()}

    def homogeneous_components(self) -> dict[int, "MultiPoly"]:
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly._raw(self.vars, t, self.order) for d, t in out.items()}

    def is_homogeneous(self, weights: Mapping[str, int] | None = None) -> tuple[bool, int | dict]:
        """Return (True, degree) or (False, {term text: degree})."""
        w = [1 if weights is None else weights.get(v, 1) for v in self.vars]
        degs = {}
        for e, c in self.terms.items():
            degs[e] = sum(a * b for a, b in zip(e, w))
        values = set(degs.values())
        if len(values) <= 1:
            return True, (values.pop() if values else 0)
        report = {}
        for e, d in degs.items():
            report[str(MultiPoly._raw(self.vars, {e: self.terms[e]}, self.order))] = d
        return False, report

    def leading_term(self) -> tuple[tuple, CycloNum]:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[tuple, CycloNum]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def diff(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly._raw(self.vars, {}, self.order)
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[ne] = c * e[i]
        return MultiPoly._raw(self.vars, terms, self.order)

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.vars, {e: fn(c) for e, c in self.terms.items()}, self.order)

    # substitution ------------------------------------------------------------------------

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables; targets may collide with existing ones."""
        new_vars = [mapping.get(v, v) for v in self.vars]
        if len(set(new_vars)) == len(new_vars):
            return MultiPoly(new_vars, self.terms, self.order)
        canon = tuple(sorted(set(new_vars), key=var_key))
        pos = [canon.index(v) for v in new_vars]
        terms: dict = {}
        for e, c in self.terms.items():
            ne = [0] * len(canon)
            for i, k in zip(pos, e):
                ne[i] += k
            ne = tuple(ne)
            terms[ne] = terms[ne] + c if ne in terms else c
        return MultiPoly(canon, terms, self.order)

    def subst(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Simultaneous substitution of polynomials or scalars for variables."""
        for v in assignment:
            if v not in self.vars:
                raise PolyError(f"unknown variable {v!r} (ring: {', '.join(self.vars) or 'none'})")
        if not assignment:
            return self
        idx = {v: self.vars.index(v) for v in assignment}
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        keep_vars = tuple(self.vars[i] for i in keep)
        images = {v: (val if isinstance(val, MultiPoly) else MultiPoly.const(val) if isinstance(val, CycloNum) else MultiPoly.const(val, self.order))
                  for v, val in assignment.items()}
        power_cache: dict = {}

        def power(v, k):
            key = (v, k)
            if key not in power_cache:
                power_cache[key] = images[v] ** k
            return power_cache[key]

        # group terms by the exponents of substituted variables
        groups: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[idx[v]] for v in assignment)
            groups.setdefault(key, {})[tuple(e[i] for i in keep)] = c
        result = MultiPoly.zero(self.order).with_vars(keep_vars)
        names = list(assignment)
        for key, rest in groups.items():
            part = MultiPoly._raw(keep_vars, rest, self.order)
            for v, k in zip(names, key):
                if k:
                    part = part * power(v, k)
            result = result + part
        return result

    def subst_fraction(self, var: str, num: "MultiPoly", den: "MultiPoly", clear: int | None = None) -> "MultiPoly":
        """den^clear * p(var = num/den); clear defaults to deg_var(p)."""
        if var not in self.vars:
            raise PolyError(f"unknown variable {var!r}")
        parts = self.coefficients_in(var)
        top = max(parts) if parts else 0
        clear = top if clear is None else clear
        if clear < top:
            raise PolyError("clearing power below degree")
        out = MultiPoly.zero(self.order)
        for k, c in parts.items():
            out = out + c * num ** k * den ** (clear - k)
        return out

    def evaluate(self, values: Mapping[str, object]) -> CycloNum:
        missing = [v for v in self.used_vars() if v not in values]
        if missing:
            raise PolyError(f"no value for {', '.join(missing)}")
        res = self.subst({v: values[v] for v in self.vars if v in values})
        return res.constant_term() if res.terms else CycloNum.zero(res.order)

    def eval_mod_p(self, values: Mapping[str, int], p: int, root: int | None = None) -> int:
        acc = 0
        for e, c in self.terms.items():
            if c.is_rational():
                cv = c.numerators()[0] * pow(c.denominator(), -1, p) % p
            else:
                if root is None:
                    raise CycloError("cyclotomic coefficient needs a root of unity mod p")
                cv = c.mod_p(p, root)
            t = cv
            for v, k in zip(self.vars, e):
                if k:
                    t = t * pow(values[v], k, p) % p
            acc += t
        return acc % p

    # homogenization -------------------------------------------------------------------------

    def homogenize(self, new_var: str, rename: Mapping[str, str] | None = None) -> "MultiPoly":
        if new_var in self.vars:
            raise PolyError(f"{new_var!r} already in ring")
        d = self.total_degree()
        src = self.rename(rename) if rename else self
        if rename and new_var in src.vars:
            raise PolyError(f"{new_var!r} already in ring")
        vs = tuple(sorted(src.vars + (new_var,), key=var_key))
        pos = vs.index(new_var)
        terms = {}
        for e, c in src.terms.items():
            ne = e[:pos] + (d - sum(e),) + e[pos:]
            terms[ne] = c
        return MultiPoly._raw(vs, terms, self.order)

    def dehomogenize(self, var: str, rename: Mapping[str, str] | None = None) -> "MultiPoly":
        res = self.subst({var: 1}) if var in self.vars else self
        return res.rename(rename) if rename else res

    # division ---------------------------------------------------------------------------

    def exact_divide(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient when other divides self exactly; raises NotDivisible otherwise."""
        a, b = self._align(other)
        if not b.terms:
            raise ZeroDivisionError("division by zero polynomial")
        lb, cb = b.leading_term()
        inv = cb.inverse()
        rem = dict(a.terms)
        quot: dict = {}
        while rem:
            le = max(rem, key=_grlex_key)
            lc = rem[le]
            qe = tuple(x - y for x, y in zip(le, lb))
            if any(k < 0 for k in qe):
                raise NotDivisible("leading monomial not divisible")
            qc = lc * inv
            quot[qe] = qc
            for e, c in b.terms.items():
                te = tuple(x + y for x, y in zip(qe, e))
                s = rem.get(te)
                v = -(qc * c) if s is None else s - qc * c
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return MultiPoly._raw(a.vars, quot, a.order)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_divide(self)
        except NotDivisible:
            return False
        return True

    # printing -----------------------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r}, order={self.order})"


def _grlex_key(e: tuple):
    return (sum(e), e)


def _mono_str(vars, exp) -> str:
    parts = []
    for v, k in zip(vars, exp):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    """Canonical text: graded-lex term order, explicit '*', 'zeta' for zeta_n."""
    if not p.terms:
        return "0"
    pieces: list[tuple[str, str]] = []
    for e, c in p.sorted_terms():
        mono = _mono_str(p.vars, e)
        if c.is_rational():
            q = c.to_fraction()
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
        else:
            sign = "+"
            body = f"({format_cyclo(c)})"
            if mono:
                body = f"{body}*{mono}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def variables(names: str, order: int = 1) -> list[MultiPoly]:
    """``x, y = variables("x y")``."""
    return [MultiPoly.var(n, order) for n in names.replace(",", " ").split()]


def zeta_const(order: int, power: int = 1) -> MultiPoly:
    return MultiPoly.const(CycloNum.zeta(order, power))


def poly_subst(p: MultiPoly, assignment: Mapping[str, object]) -> MultiPoly:
    return p.subst(assignment)


def homogenize(f: MultiPoly, new_var: str, rename: Mapping[str, str] | None = None) -> MultiPoly:
    return f.homogenize(new_var, rename)


def is_homogeneous(p: MultiPoly, weights: Mapping[str, int] | None = None):
    return p.is_homogeneous(weights)


def cyclo_root(c: CycloNum, k: int, order: int | None = None) -> CycloNum | None:
    """Some gamma in Q(zeta_order) with gamma^k == c, for rational c; else None."""
    order = order or c.order
    if c.order != order:
        c = c.lift(order)
    if not c:
        return CycloNum.zero(order)
    if not c.is_rational():
        return None
    q = c.to_fraction()
    if k == 2:
        return rational_sqrt(q, order)
    rn, rd = _int_root(abs(q.numerator), k), _int_root(q.denominator, k)
    if rn is None or rd is None:
        return None
    base = CycloNum.from_rational(Fraction(rn, rd), order)
    for j in range(order):
        cand = base * CycloNum.zeta(order, j) if order > 1 else base
        if cand ** k == c:
            return cand
        cand = -cand
        if cand ** k == c:
            return cand
    return None


def _squarefree_split(n: int) -> tuple[int, list[int]]:
    """n = m^2 * prod(primes), primes distinct."""
    m, primes, d = 1, [], 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        m *= d ** (e // 2)
        if e % 2:
            primes.append(d)
        d += 1
    if n > 1:
        primes.append(n)
    return m, primes


def _gauss_sum(q: int, order: int) -> CycloNum:
    """sum of (j/q) zeta_q^j; its square is (-1)^((q-1)/2) q."""
    step = order // q
    out = CycloNum.zero(order)
    for j in range(1, q):
        leg = pow(j, (q - 1) // 2, q)
        out = out + CycloNum.zeta(order, step * j) * (1 if leg == 1 else -1)
    return out


def rational_sqrt(q: Fraction, order: int) -> CycloNum | None:
    """A square root of the rational q inside Q(zeta_order), or None if it lies outside."""
    if q == 0:
        return CycloNum.zero(order)
    # sqrt(a/b) = sqrt(a*b)/b
    n = q.numerator * q.denominator
    m, primes = _squarefree_split(abs(n))
    root = CycloNum.from_rational(Fraction(m, q.denominator), order)
    sign = -1 if n < 0 else 1
    for p in primes:
        if p == 2:
            if order % 8:
                return None
            z = CycloNum.zeta(order, order // 8)
            root = root * (z + z ** 7)  # sqrt(2)
        else:
            if order % p:
                return None
            root = root * _gauss_sum(p, order)
            if p % 4 == 3:
                sign = -sign  # the Gauss sum supplied sqrt(-p)
    if sign < 0:
        if order % 4:
            return None
        root = root * CycloNum.zeta(order, order // 4)
    assert root * root == CycloNum.from_rational(q, order)
    return root


def _int_root(n: int, k: int) -> int | None:
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    # large values: integer Newton
    lo, hi = 0, 1 << ((n.bit_length() + k - 1) // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


def poly_root(p: MultiPoly, k: int, order: int | None = None) -> MultiPoly | None:
    """Exact k-th root of p with coefficients in Q(zeta_order), if one exists.

    Terms are recovered from the top down: with G known down to some term,
    the leading term of p - G^k is k * LT(G)^(k-1) * (next term).
    """
    order = order or p.order
    p = p.lift(order) if p.order != order else p
    if not p.terms:
        return p
    le, lc = p.leading_term()
    if any(x % k for x in le):
        return None
    gamma = cyclo_root(lc, k, order)
    if gamma is None:
        return None
    g = MultiPoly._raw(p.vars, {tuple(x // k for x in le): gamma}, order)
    lead_e = tuple(x // k for x in le)
    denom_c = (gamma ** (k - 1)) * k
    denom_e = tuple(x * (k - 1) for x in lead_e)
    last = lead_e
    while True:
        r = p - g ** k
        if not r.terms:
            return g
        re_, rc = r.leading_term()
        te = tuple(x - y for x, y in zip(re_, denom_e))
        if any(x < 0 for x in te) or _grlex_key(te) >= _grlex_key(last):
            return None
        g = g + MultiPoly._raw(p.vars, {te: rc / denom_c}, order)
        last = te
