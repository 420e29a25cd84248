"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is warmed up once (so numba compilation is excluded) and then
timed; results from both backends are checked for equality.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from albtwist import kernels


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def cases():
    p = 10007
    qvals = kernels.poly_values_mod_p([1, 0, 0, 1], np.arange(p, dtype=np.int64), p)
    counts = kernels.root_counts(p, 2)
    yield ("table count p=10007", lambda: kernels._count_by_table_nb(qvals, counts),
           lambda: kernels._count_by_table_np(qvals, counts))
    yield ("character sum p=10007", lambda: kernels._char_sum_nb(qvals, p), lambda: kernels._char_sum_np(qvals, p))
    small = 1009
    qs = kernels.poly_values_mod_p([1, 0, 0, 1], np.arange(small, dtype=np.int64), small)
    yield ("naive count p=1009", lambda: kernels._count_naive_nb(qs, small), lambda: kernels._count_naive_np(qs, small))
    exps = np.array([[3, 0], [0, 2], [1, 1], [0, 0]], dtype=np.int64)
    coeffs = np.array([1, 5, 2, 1], dtype=np.int64)
    yield ("grid p=401", lambda: kernels._grid_values_nb(exps, coeffs, 401).sum(),
           lambda: kernels._grid_values_np(exps, coeffs, 401).sum())
    pts = [(a, b, c) for a in (1, 2, -1) for b in (1, -2, 2) for c in (1, 2)][:14]
    fvals = np.array([a ** 6 + b ** 6 + c ** 6 for a, b, c in pts], dtype=np.int64)
    monos = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    mvals = np.array([[a ** i * b ** j * c ** k for i, j, k in monos] for a, b, c in pts], dtype=np.int64)
    lo, hi = np.full(6, -4), np.full(6, 4)

    def nb():
        out = np.zeros(1000, dtype=np.int64)
        k = kernels._lattice_filter_nb(fvals, mvals, lo, hi, 2, 3, 1, out)
        return out[:k].tolist()

    yield ("lattice filter 9^6", nb, lambda: kernels._lattice_filter_np(fvals, mvals, lo, hi, 2, 3, 1, 1000))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed")
    print(f"{'kernel':<24}{'numba ms':>12}{'numpy ms':>12}{'ratio':>8}")
    for name, f_nb, f_np in cases():
        t_nb, r_nb = best_of(f_nb, args.repeat)
        t_np, r_np = best_of(f_np, args.repeat)
        if r_nb != r_np:
            raise SystemExit(f"{name}: backends disagree ({r_nb} vs {r_np})")
        print(f"{name:<24}{t_nb * 1e3:>12.2f}{t_np * 1e3:>12.2f}{t_np / max(t_nb, 1e-9):>8.1f}")


if __name__ == "__main__":
    main()
