"""The ten acceptance criteria, one test each.

Each test records a single PASS/FAIL line in ``RESULTS``; the conftest prints
them after the run, and ``python tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time

import pytest

from albtwist.algebra import CycloNum
from albtwist.catalog import (DualError, catalog_get, certify, dual_cubic, find_two_power_decomposition)
from albtwist.cover import build_tower, make_cover
from albtwist.parser import parse_poly
from albtwist.rank import CrossCheck, RankError, albanese_dim_bound, factored_curve, predict_rank, rank_constant
from albtwist.verify import (CORRUPTIONS, RationalMap, SplitError, corrupt_point, probe_prime,
                             verify_cm_automorphism, verify_descent, verify_genus2_split, verify_kulikov,
                             verify_membership)

from helpers import random_f

RESULTS: dict[int, str] = {}


def record(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(RESULTS[num])


def timed(fn, *args, **kwargs):
    t = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t


def test_criterion_01_rank_constants():
    cases = [((3, 2, None, None), 8), ((4, 3, None, None), 18), ((6, 1, None, None), 2),
             ((8, 4, 1, 1), 8), ((12, 4, 1, 1), 8)]
    rank_constant(3, 2)  # first call pays for imports and caches
    worst, bad = 0.0, []
    for args, want in cases:
        got, dt = timed(rank_constant, *args)
        worst = max(worst, dt)
        if got != want or not isinstance(got, int):
            bad.append((args, got, want))
    ok = not bad and worst < 1e-3
    record(1, ok, f"5 constants exact, slowest {worst * 1e6:.1f} us")
    assert not bad, bad
    assert worst < 1e-3


def test_criterion_02_cross_check_matrix():
    start = time.perf_counter()
    problems = []
    checked = 0
    for n in (3, 4, 5, 6, 8, 10, 12):
        for d in range(0, 11):
            if n in (5, 8, 10, 12) and d % 2:
                continue
            splits = [(k, d // 2 - k) for k in range(d // 2 + 1)] if n in (8, 12) else [(None, None)]
            for n1, n2 in splits:
                pred = predict_rank(1, n, d, n1, n2)
                checked += 1
                if n in (3, 4, 6):
                    good = pred.cross_check is CrossCheck.CONSISTENT and pred.endo_rank == pred.c_n
                elif n in (5, 10, 12):
                    # only the zero variety (d = 0) has nothing to disagree about
                    good = (pred.cross_check is CrossCheck.CONSISTENT) if d == 0 else \
                        pred.cross_check is not CrossCheck.CONSISTENT
                else:
                    good = pred.relation == ">=" and pred.endo_rank >= pred.paper_rank
                if not good:
                    problems.append((n, d, n1, n2, pred.cross_check, pred.endo_rank, pred.c_n))
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1.0
    record(2, ok, f"{checked} (n, d, n1, n2) cases; 3/4/6 agree, 5/10/12 flagged, 8 is '>='; {elapsed:.3f} s")
    assert not problems, problems[:5]
    assert elapsed < 1.0


def test_criterion_03_twist_identity_suite():
    rng = random.Random(20240611)
    start = time.perf_counter()
    failures, caught, corruptions = [], 0, 0
    for trial in range(100):
        n = rng.choice((2, 3, 4, 6))
        m = rng.choice((1, 2, 3))
        f = random_f(rng, n, rng.randint(2, 4), cyclotomic=trial % 2 == 1, dense=rng.random() < 0.5)
        tower = build_tower(make_cover(f, n), m)
        if not verify_membership(tower).ok or not verify_descent(tower).ok:
            failures.append((str(f), n, m))
        idx = rng.randint(1, m)
        bad = corrupt_point(tower, idx, CORRUPTIONS[trial % len(CORRUPTIONS)])
        corruptions += 1
        caught += not verify_membership(tower, [bad]).ok
    elapsed = time.perf_counter() - start
    ok = not failures and caught == corruptions and elapsed < 60
    record(3, ok, f"100 towers pass, {caught}/{corruptions} corruptions caught, {elapsed:.1f} s")
    assert not failures, failures[:3]
    assert caught == corruptions
    assert elapsed < 60


def test_criterion_04_dimension_bound():
    tok = make_cover(catalog_get("tokunaga_f_thm13").object, 6)
    conic = make_cover(parse_poly("x^2 + y^2 - 1"), 2)
    quintic = make_cover(parse_poly("x^5 + y^5 + 1"), 3)
    got = [albanese_dim_bound(factored_curve(s, [(s.f, 1)])) for s in (tok, conic, quintic)]
    square = make_cover(parse_poly("(x^2 + y^2 - 1)^2"), 2)
    with pytest.raises(RankError):
        albanese_dim_bound(factored_curve(square, [(parse_poly("x^2 + y^2 - 1"), 2)]))
    ok = got == [(0, 10), (0, 0), (0, 4)]
    record(4, ok, f"bounds {got}; gcd-violating input raises")
    assert ok


def test_criterion_05_cm_checks():
    P = parse_poly
    cases = [
        ("E_rho", RationalMap.of({"x": P("zeta*x", 3), "y": P("y", 3)}), 3),
        ("E_i", RationalMap.of({"x": P("-x", 4), "y": P("zeta*y", 4)}), 4),
        ("C1", RationalMap.of({"x": P("zeta*x", 5), "y": P("y", 5)}), 5),
    ]
    detail, ok = [], True
    for key, rmap, want in cases:
        curve = catalog_get(key).object
        rep, dt = timed(verify_cm_automorphism, curve, rmap)
        good = rep.ok and rep.order == want and dt < 0.010
        ok &= good
        detail.append(f"{key}: order {rep.order} in {dt * 1e3:.2f} ms")
    record(5, ok, "; ".join(detail))
    assert ok, detail


def test_criterion_06_genus2_split():
    c1 = catalog_get("C1").object
    shape = RationalMap.of({"x": (1, parse_poly("x")), "y": (parse_poly("y"), parse_poly("x^3"))})
    with pytest.raises(SplitError):
        verify_genus2_split(c1, shape)
    expected = [catalog_get("E1").object.j_invariant, catalog_get("E2").object.j_invariant]
    rep = verify_genus2_split(catalog_get("C2").object, expected=expected)
    got = sorted(str(j) for j in rep.j_values)
    want = sorted(str(j) for j in expected)
    ok = got == want
    record(6, ok, f"split j-values {got} vs catalog {want}; C1 with the same map is rejected")
    assert ok, f"quotient j-invariants {got} differ from {{j(E1), j(E2)}} = {want}"


def test_criterion_07_prime_probes():
    e_rho, e_i = catalog_get("E_rho").object, catalog_get("E_i").object
    probe_prime({"E": e_rho}, 13, 3)  # one-time kernel compilation stays outside the timed block
    start = time.perf_counter()
    fixed = [probe_prime({"E": e_rho}, 7, 3).counts["E"], probe_prime({"E": e_rho}, 5, 3).counts["E"],
             probe_prime({"E": e_i}, 7, 4).counts["E"]]
    extra_rho = [p for p in (11, 17, 23, 29, 41, 47, 53, 59, 71, 83)]
    extra_i = [p for p in (11, 19, 23, 31, 43, 47, 59, 67, 71, 79)]
    pattern_bad = []
    for p in extra_rho:
        pr = probe_prime({"E": e_rho}, p, 3)
        if pr.counts["E"] != p + 1 or not pr.ok:
            pattern_bad.append(("E_rho", p, pr.counts["E"]))
    for p in extra_i:
        pr = probe_prime({"E": e_i}, p, 4)
        if pr.counts["E"] != p + 1 or not pr.ok:
            pattern_bad.append(("E_i", p, pr.counts["E"]))
    elapsed = time.perf_counter() - start
    ok = fixed == [12, 6, 8] and not pattern_bad and elapsed < 1.0
    record(7, ok, f"counts {fixed}; p+1 on 20 supersingular primes; {elapsed:.3f} s")
    assert fixed == [12, 6, 8]
    assert not pattern_bad, pattern_bad
    assert elapsed < 1.0


def fermat_tangent_lines(count: int):
    """Tangent lines at non-flex points (1, z^a, z^b), z = zeta_9, a = 1, b = 2 (mod 3), and permutations."""
    lines = []
    for a in (1, 4, 7):
        for b in (2, 5, 8):
            pt = [CycloNum.one(9), CycloNum.zeta(9, a), CycloNum.zeta(9, b)]
            for perm in ((0, 1, 2), (1, 0, 2)):
                q = [pt[i] for i in perm]
                lines.append((q, [3 * c * c for c in q]))
    return lines[:count]


def test_criterion_08_dual_cubic():
    F = catalog_get("fermat_cubic").object
    D, dt = timed(dual_cubic, F)
    homog, deg = D.is_homogeneous()
    vanish = 0
    lines = fermat_tangent_lines(10)
    for pt, line in lines:
        assert F.evaluate(dict(zip(("u0", "u1", "u2"), pt))).is_zero()
        vanish += D.lift(9).evaluate(dict(zip(("u0", "u1", "u2"), line))).is_zero()
    singular_rejected = False
    try:
        dual_cubic(parse_poly("u2*u0^2 - u1^3 - u1^2*u0"))
    except DualError:
        singular_rejected = True
    ok = homog and deg == 6 and vanish == 10 and singular_rejected and dt < 30
    record(8, ok, f"degree {deg}, vanishes on {vanish}/10 tangent lines, singular input rejected, {dt:.2f} s")
    assert ok


def test_criterion_09_kulikov():
    P = parse_poly
    F = P("u0^6 + u1^6")
    same = verify_kulikov(F, (P("u0^3"), P("u1^2")), (P("u0^3"), P("u1^2")), 2, 3)
    swapped = verify_kulikov(F, (P("u0^3"), P("u1^2")), (P("u1^3"), P("u0^2")), 2, 3)
    tok = catalog_get("tokunaga_F").object
    search, dt = timed(find_two_power_decomposition, tok, 2, 3)
    report = certify(tok, search)
    for d in search.decompositions:
        assert d.G ** 2 + d.H ** 3 == tok
    if report is not None:
        outcome = f"two span-distinct decompositions, verify_kulikov = {report.ok} (rank {report.rank})"
        good = report.ok
    else:
        outcome = f"search exhausted ({search.candidates} candidates) without two distinct pencils"
        good = search.exhausted
    ok = not same.ok and not swapped.ok and good and dt < 600
    record(9, ok, f"fixtures false; corrected sextic: {outcome}; {dt:.2f} s")
    assert ok


def _cli(args, path):
    return subprocess.run([sys.executable, "-m", "albtwist", "--json", str(path), *args],
                          capture_output=True, text=True)


def test_criterion_10_determinism(tmp_path):
    commands = [
        ["predict", "--n", "3", "--d", "2", "--m", "3"],
        ["construct", "--f", "y^2-x^3-1", "--n", "2", "--m", "2"],
        ["probe", "--target", "E_rho", "--prime", "7", "--prime", "13", "--n", "3"],
        ["verify", "kulikov", "--F", "tokunaga_F", "--search"],
    ]
    same = 0
    for i, cmd in enumerate(commands):
        a, b = tmp_path / f"a{i}.json", tmp_path / f"b{i}.json"
        ra, rb = _cli(cmd, a), _cli(cmd, b)
        assert ra.returncode == rb.returncode == 0, ra.stderr
        same += a.read_bytes() == b.read_bytes()
    ok = same == len(commands)
    record(10, ok, f"{same}/{len(commands)} commands gave byte-identical JSON across two runs")
    assert ok


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[:fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except Exception:  # the line has been recorded already
                pass
