"""Integer inner loops: finite-field point counts and the decomposition filter.

Each kernel has a numba-compiled version and a pure numpy version with the
same signature.  The numba path is used when numba imports and the
environment variable ``ALBTWIST_NO_NUMBA`` is unset (or ``0``); the
``backend()`` function reports the choice.  Both paths are exact integer
code, so results must agree bit for bit.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _numba_requested() -> bool:
    return os.environ.get("ALBTWIST_NO_NUMBA", "0").lower() in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and _numba_requested()


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


# modular helpers -------------------------------------------------------------------


def root_counts(p: int, n: int) -> np.ndarray:
    """counts[v] = #{w in F_p : w^n = v}."""
    w = np.arange(p, dtype=np.int64)
    vals = _powmod_np(w, n, p)
    return np.bincount(vals, minlength=p).astype(np.int64)


def _powmod_np(base: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.ones_like(base) % p
    b = base % p
    while e:
        if e & 1:
            result = result * b % p
        e >>= 1
        if e:
            b = b * b % p
    return result


def poly_values_mod_p(coeffs: list[int], xs: np.ndarray, p: int) -> np.ndarray:
    """Horner evaluation of a univariate polynomial (low degree first)."""
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % p
    return acc


# point counts on y^2 = q(x) -------------------------------------------------------------


@njit(cache=True)
def _count_by_table_nb(qvals, counts):
    total = 0
    for v in qvals:
        total += counts[v]
    return total


def _count_by_table_np(qvals, counts):
    return int(counts[qvals].sum())


@njit(cache=True)
def _count_naive_nb(qvals, p):
    total = 0
    for x in range(qvals.shape[0]):
        v = qvals[x]
        for y in range(p):
            if (y * y) % p == v:
                total += 1
    return total


def _count_naive_np(qvals, p):
    ys = np.arange(p, dtype=np.int64)
    sq = ys * ys % p
    total = 0
    chunk = max(1, 2_000_000 // max(p, 1))
    for start in range(0, qvals.shape[0], chunk):
        block = qvals[start:start + chunk]
        total += int((sq[None, :] == block[:, None]).sum())
    return total


@njit(cache=True)
def _powmod_scalar(b, e, p):
    result = 1
    b = b % p
    while e > 0:
        if e & 1:
            result = result * b % p
        e >>= 1
        b = b * b % p
    return result


@njit(cache=True)
def _char_sum_nb(qvals, p):
    total = 0
    half = (p - 1) // 2
    for v in qvals:
        if v == 0:
            total += 1
        else:
            total += 2 if _powmod_scalar(v, half, p) == 1 else 0
    return total


def _char_sum_np(qvals, p):
    leg = _powmod_np(qvals, (p - 1) // 2, p)
    return int(np.where(qvals == 0, 1, np.where(leg == 1, 2, 0)).sum())


def affine_count_table(qvals: np.ndarray, p: int) -> int:
    counts = root_counts(p, 2)
    if USE_NUMBA:
        return int(_count_by_table_nb(qvals, counts))
    return _count_by_table_np(qvals, counts)


def affine_count_naive(qvals: np.ndarray, p: int) -> int:
    if USE_NUMBA:
        return int(_count_naive_nb(qvals, p))
    return _count_naive_np(qvals, p)


def affine_count_character(qvals: np.ndarray, p: int) -> int:
    """1 + chi(q(x)) summed over x, with chi from Euler's criterion."""
    if USE_NUMBA:
        return int(_char_sum_nb(qvals, p))
    return _char_sum_np(qvals, p)


# cover counts: w^n = f(x, y) ---------------------------------------------------------------


@njit(cache=True)
def _grid_values_nb(exps, coeffs, p):
    out = np.zeros((p, p), dtype=np.int64)
    for x in range(p):
        for y in range(p):
            acc = 0
            for t in range(exps.shape[0]):
                acc = (acc + coeffs[t] * _powmod_scalar(x, exps[t, 0], p) % p
                       * _powmod_scalar(y, exps[t, 1], p)) % p
            out[x, y] = acc
    return out


def _grid_values_np(exps, coeffs, p):
    xs = np.arange(p, dtype=np.int64)
    out = np.zeros((p, p), dtype=np.int64)
    for (a, b), c in zip(exps, coeffs):
        col = c * _powmod_np(xs, int(a), p) % p
        row = _powmod_np(xs, int(b), p)
        out = (out + col[:, None] * row[None, :]) % p
    return out


def grid_values(exps: np.ndarray, coeffs: np.ndarray, p: int) -> np.ndarray:
    """Values of sum c_t x^a_t y^b_t over the whole F_p x F_p grid."""
    exps = np.asarray(exps, dtype=np.int64).reshape(-1, 2)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if USE_NUMBA:
        return _grid_values_nb(exps, coeffs, p)
    return _grid_values_np(exps, coeffs, p)


def cover_affine_count(values: np.ndarray, p: int, n: int) -> int:
    counts = root_counts(p, n)
    flat = values.reshape(-1)
    if USE_NUMBA:
        return int(_count_by_table_nb(flat, counts))
    return _count_by_table_np(flat, counts)


# lattice filter for F = G^a + H^b ----------------------------------------------------------


@njit(cache=True)
def _is_power_ratio(r, ref, a):
    # r * ref^(a-1) must be an a-th power of an integer; pass when too large to decide
    v = float(r)
    for _ in range(a - 1):
        v *= float(ref)
    if v == 0.0:
        return True
    if a % 2 == 0 and v < 0:
        return False
    mag = abs(v)
    if mag > 9.0e15:
        return True
    root = int(round(mag ** (1.0 / a)))
    exact = 1
    target = 1
    for _ in range(a - 1):
        target *= ref
    target *= r
    if target < 0:
        target = -target
    for cand in (root - 1, root, root + 1):
        if cand < 0:
            continue
        exact = 1
        for _ in range(a):
            exact *= cand
        if exact == target:
            return True
    return False


@njit(cache=True)
def _lattice_filter_nb(fvals, mvals, lo, hi, a, b, hscale, out):
    k, t = mvals.shape
    coef = lo.copy()
    found = 0
    idx = 0
    while True:
        ref = 0
        ok = True
        for j in range(k):
            h = 0
            for s in range(t):
                h += coef[s] * mvals[j, s]
            hb = 1
            for _ in range(b):
                hb *= h
            r = fvals[j] - hscale * hb
            if ref == 0:
                # first nonzero value fixes the constant c in r = c * K^a
                ref = r
                continue
            if not _is_power_ratio(r, ref, a):
                ok = False
                break
        if ok:
            if found < out.shape[0]:
                out[found] = idx
            found += 1
        # advance mixed-radix counter
        s = 0
        while s < t:
            if coef[s] < hi[s]:
                coef[s] += 1
                break
            coef[s] = lo[s]
            s += 1
        if s == t:
            break
        idx += 1
    return found


def _lattice_filter_np(fvals, mvals, lo, hi, a, b, hscale, limit):
    k, t = mvals.shape
    ranges = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    sizes = [len(r) for r in ranges]
    total = int(np.prod(sizes))
    survivors = []
    chunk = 200_000
    for start in range(0, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        # decode mixed radix, first coefficient varies fastest
        coefs = np.empty((ids.shape[0], t), dtype=np.int64)
        rem = ids.copy()
        for s in range(t):
            coefs[:, s] = ranges[s][rem % sizes[s]]
            rem //= sizes[s]
        h = coefs @ mvals.T  # (cands, k)
        r = fvals[None, :] - hscale * h ** b
        ok = np.ones(ids.shape[0], dtype=bool)
        ref = np.zeros(ids.shape[0], dtype=np.int64)
        for j in range(k):
            rj = r[:, j]
            has_ref = ref != 0
            test = has_ref & ok
            if test.any():
                ok[test] = _power_ratio_np(rj[test], ref[test], a)
            newref = (~has_ref) & (rj != 0)
            ref[newref] = rj[newref]
        survivors.extend(ids[ok].tolist())
        if len(survivors) > limit:
            break
    return survivors


def _power_ratio_np(r, ref, a):
    v = r.astype(np.float64) * ref.astype(np.float64) ** (a - 1)
    out = np.ones(r.shape[0], dtype=bool)
    zero = v == 0
    neg_even = (v < 0) & (a % 2 == 0)
    out[neg_even] = False
    mag = np.abs(v)
    decide = ~zero & ~neg_even & (mag <= 9.0e15)
    if decide.any():
        target = np.abs(r[decide] * ref[decide] ** (a - 1))
        root = np.rint(mag[decide] ** (1.0 / a)).astype(np.int64)
        hit = np.zeros(root.shape[0], dtype=bool)
        for delta in (-1, 0, 1):
            cand = np.maximum(root + delta, 0)
            hit |= cand ** a == target
        out[decide] = hit
    return out


def lattice_filter(fvals, mvals, lo, hi, a: int, b: int, hscale: int = 1, limit: int = 100_000) -> list[int]:
    """Indices of lattice points H passing the a-th power test at every sample point.

    Candidates are enumerated in mixed radix with the first coefficient varying
    fastest; index i decodes to coefficients lo + digits(i).
    """
    fvals = np.asarray(fvals, dtype=np.int64)
    mvals = np.asarray(mvals, dtype=np.int64)
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    if USE_NUMBA:
        out = np.zeros(limit, dtype=np.int64)
        found = _lattice_filter_nb(fvals, mvals, lo, hi, a, b, hscale, out)
        return out[:min(found, limit)].tolist()
    return _lattice_filter_np(fvals, mvals, lo, hi, a, b, hscale, limit)[:limit]


def decode_lattice_index(idx: int, lo, hi) -> list[int]:
    coefs = []
    for l, h in zip(lo, hi):
        size = h - l + 1
        coefs.append(l + idx % size)
        idx //= size
    return coefs
