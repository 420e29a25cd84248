"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored in the power basis ``1, zeta, ..., zeta^(phi(n)-1)``
reduced modulo the n-th cyclotomic polynomial.  Internally the coefficient
vector is kept as integer numerators over one positive common denominator,
which keeps multiplication in pure integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction


class CycloError(ArithmeticError):
    pass


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_int_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_int_div(a: list[int], b: list[int]) -> list[int]:
    # b monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for i, bc in enumerate(b):
                a[k - db + i] -= c * bc
    if any(a[:db]):
        raise CycloError("inexact cyclotomic division")
    return q


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows give zeta^k mod Phi_n for k < 2*phi(n) - 1."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(2 * phi - 1, 1)):
        rows.append(tuple(cur))
        # multiply by zeta
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * poly[i]
    return tuple(rows)


def _reduce_int(vec: list[int], n: int) -> list[int]:
    phi = euler_phi(n)
    if len(vec) <= phi:
        return vec + [0] * (phi - len(vec))
    table = _reduction_table(n)
    out = vec[:phi]
    for k in range(phi, len(vec)):
        c = vec[k]
        if c:
            row = table[k]
            for i in range(phi):
                out[i] += c * row[i]
    return out


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if g == 1:
            break
        g = gcd(g, c)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


class CycloNum:
    """An element of Q(zeta_n), immutable and hashable."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs=None, *, _raw=None):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.order = order
        if _raw is not None:
            self._num, self._den = _raw
        else:
            phi = euler_phi(order)
            coeffs = [Fraction(c) for c in (coeffs or [])]
            den = 1
            for c in coeffs:
                den = den * c.denominator // gcd(den, c.denominator)
            ints = [c.numerator * (den // c.denominator) for c in coeffs]
            # longer input is read as an unreduced polynomial in zeta
            if len(ints) > phi:
                ints = _reduce_long(ints, order)
            self._num, self._den = _normalize(ints + [0] * (phi - len(ints)), den)
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def _make(cls, order: int, num: list[int], den: int) -> "CycloNum":
        return cls(order, _raw=_normalize(num, den))

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "CycloNum":
        q = Fraction(value)
        num = [0] * euler_phi(order)
        num[0] = q.numerator
        return cls(order, _raw=(tuple(num), q.denominator) if q else (tuple(num), 1))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycloNum":
        return cls._make(order, _reduce_power(power % order, order), 1)

    @classmethod
    def zero(cls, order: int = 1) -> "CycloNum":
        return cls(order, _raw=(tuple([0] * euler_phi(order)), 1))

    @classmethod
    def one(cls, order: int = 1) -> "CycloNum":
        return cls.from_rational(1, order)

    # inspection -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def phi(self) -> int:
        return len(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CycloError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def denominator(self) -> int:
        return self._den

    def numerators(self) -> tuple[int, ...]:
        return self._num

    # coercion ---------------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise CycloError(f"order mismatch: Q(zeta_{self.order}) vs Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycloNum.from_rational(other, self.order)
        return NotImplemented

    def lift(self, order: int) -> "CycloNum":
        """Embed into Q(zeta_order) via zeta_n -> zeta_order^(order/n)."""
        if order == self.order:
            return self
        if order % self.order:
            raise CycloError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        vec = [0] * ((self.phi - 1) * step + 1)
        for j, c in enumerate(self._num):
            vec[j * step] = c
        return CycloNum._make(order, _reduce_long(vec, order), self._den)

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return CycloNum._make(self.order, [a + b for a, b in zip(self._num, other._num)], d1)
        return CycloNum._make(self.order, [a * d2 + b * d1 for a, b in zip(self._num, other._num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, _raw=(tuple(-c for c in self._num), self._den))

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
        a, b = self._num, other._num
        if len(a) == 1:
            return CycloNum._make(self.order, [a[0] * b[0]], self._den * other._den)
        if other.is_rational():
            c = b[0]
            return CycloNum._make(self.order, [x * c for x in a], self._den * other._den)
        if self.is_rational():
            c = a[0]
            return CycloNum._make(self.order, [x * c for x in b], self._den * other._den)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CycloNum._make(self.order, _reduce_int(prod, self.order), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_n)")
        if self.is_rational():
            return CycloNum.from_rational(Fraction(self._den, self._num[0]), self.order)
        # extended Euclid in Q[t] against Phi_n
        r0 = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r1 = [Fraction(c, self._den) for c in self._num]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        r1 = _strip(r1)
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _strip(r)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant
        c = r1[0]
        return CycloNum(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            if other.order != self.order:
                if other.order % self.order == 0:
                    return self.lift(other.order) == other
                if self.order % other.order == 0:
                    return other.lift(self.order) == self
                return self.is_rational() and other.is_rational() and self.to_fraction() == other.to_fraction()
            return self._den == other._den and self._num == other._num
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.order, self._num, self._den))
        return self._hash

    # reduction to finite fields -----------------------------------------------

    def mod_p(self, p: int, root: int) -> int:
        """Image under zeta -> root in F_p; root must have exact order n."""
        if self._den % p == 0:
            raise CycloError(f"prime {p} divides a denominator")
        acc = 0
        for c in reversed(self._num):
            acc = (acc * root + c) % p
        return acc * pow(self._den, -1, p) % p

    # printing -----------------------------------------------------------------

    def __repr__(self):
        return f"CycloNum({self.order}, {self})"

    def __str__(self):
        return format_cyclo(self)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyclo(c: CycloNum, var: str = "zeta") -> str:
    """Canonical text: polynomial in ``var`` with descending powers."""
    parts = []
    for j in range(c.phi - 1, -1, -1):
        q = Fraction(c._num[j], c._den)
        if not q:
            continue
        mag = abs(q)
        if j == 0:
            body = format_rational(mag)
        else:
            mono = var if j == 1 else f"{var}^{j}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append(("-" if q < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# helpers for Q[t] arithmetic used by inverse ---------------------------------


def _reduce_power(power: int, order: int) -> list[int]:
    vec = [0] * (power + 1)
    vec[power] = 1
    return _reduce_long(vec, order)


def _reduce_long(vec: list[int], order: int) -> list[int]:
    poly = cyclotomic_poly(order)
    phi = len(poly) - 1
    vec = list(vec)
    for k in range(len(vec) - 1, phi - 1, -1):
        c = vec[k]
        if c:
            vec[k] = 0
            for i in range(phi):
                vec[k - phi + i] -= c * poly[i]
    vec = vec[:phi]
    return vec + [0] * (phi - len(vec))


def _strip(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) <= db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for i, bc in enumerate(b):
                a[k - db + i] -= c * bc
    return q, _strip(a[:db] or [Fraction(0)])


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """Dispatch form of the field operations; ``op`` in add/sub/mul/div."""
    if a.order != b.order:
        raise CycloError(f"order mismatch: {a.order} vs {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def as_cyclo(value, order: int) -> CycloNum:
    """Coerce int/Fraction/CycloNum into Q(zeta_order), lifting if needed."""
    if isinstance(value, CycloNum):
        return value.lift(order) if value.order != order else value
    return CycloNum.from_rational(value, order)


def common_order(a: int, b: int) -> int:
    """Smallest order into which both fields embed canonically."""
    return a * b // gcd(a, b)
