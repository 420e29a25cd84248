"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a verdict fails, 2 for usage or
parse errors, 3 when a precondition of the requested computation fails.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.cyclo import CycloNum, format_rational
from .algebra.poly import MultiPoly, PolyError
from .catalog import (CatalogError, DualError, SearchError, catalog_get, catalog_keys, certify, dual_cubic,
                      find_two_power_decomposition)
from .cover import CoverError, build_tower, cocycle, make_cover
from .parser import ParseError, parse_poly
from .rank import RankError, albanese_dim_bound, factored_curve, predict_rank
from .verify import (CORRUPTIONS, CurveError, EllipticCurveData, Genus2CurveData, IsogenyError, KulikovError,
                     ProbeError, RationalMap, SplitError, corrupt_point, probe_primes, verify_cm_automorphism,
                     verify_descent, verify_genus2_split, verify_isogeny_cm, verify_kulikov, verify_membership)

SCHEMA = "albtwist-report/1"
PRECONDITION_ERRORS = (CoverError, RankError, ProbeError, DualError, SearchError, KulikovError, SplitError,
                       IsogenyError, CatalogError, CurveError, PolyError)


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: list[str]
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    caveats: list[str] = field(default_factory=list)
    passed: bool = True
    lines: list[str] = field(default_factory=list)

    def say(self, text: str = "") -> None:
        self.lines.append(text)

    def add_caveats(self, items) -> None:
        for c in items:
            if c not in self.caveats:
                self.caveats.append(c)

    def document(self, timing: float | None) -> dict:
        doc = {"schema_version": SCHEMA, "command": self.command, "inputs": self.inputs,
               "results": self.results, "caveats": self.caveats, "verdict": "pass" if self.passed else "fail"}
        if timing is not None:
            doc["timing"] = {"seconds": round(timing, 6)}
        return doc


def canonical(obj):
    """Convert results into JSON-ready values with canonical exact strings."""
    if isinstance(obj, (MultiPoly, CycloNum)):
        return str(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def dumps(doc: dict) -> str:
    return json.dumps(canonical(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# input helpers ----------------------------------------------------------------------


def _poly(text: str, n: int | None = None) -> MultiPoly:
    return parse_poly(text, n)


def _target(key_or_expr: str, n: int | None):
    """A catalog entry when the key exists, otherwise a parsed expression."""
    if key_or_expr in catalog_keys():
        return catalog_get(key_or_expr)
    if any(ch in key_or_expr for ch in "+-*^()") or key_or_expr.islower():
        return _poly(key_or_expr, n)
    return catalog_get(key_or_expr)  # raises with suggestions


def _parse_map(specs: list[str], n: int | None) -> RationalMap:
    """``var=EXPR`` or ``var=NUM // DEN`` items."""
    images = {}
    for item in specs:
        if "=" not in item:
            raise UsageError(f"map item {item!r} must look like var=EXPR")
        var, rhs = (s.strip() for s in item.split("=", 1))
        if "//" in rhs:
            num, den = rhs.split("//", 1)
            images[var] = (_poly(num, n), _poly(den, n))
        else:
            images[var] = _poly(rhs, n)
    return RationalMap.of(images)


def _factors(specs: list[str]) -> list[tuple[MultiPoly, int]]:
    out = []
    for item in specs:
        expr, _, mult = item.rpartition(":") if ":" in item else (item, "", "1")
        out.append((_poly(expr), int(mult)))
    return out


def _points_text(tower) -> list[str]:
    out = []
    for pt in tower.points:
        z = str(pt.z_num) if pt.z_den == 1 else f"{pt.z_num}/{pt.z_den}"
        out.append(f"({pt.x}, {pt.y}, {z})")
    return out


# subcommands ------------------------------------------------------------------------


def cmd_construct(args, rep: Report) -> None:
    f = _poly(args.f, args.n)
    spec = make_cover(f, args.n)
    tower = build_tower(spec, args.m)
    mem = verify_membership(tower)
    desc = verify_descent(tower)
    rep.inputs.update(f=f, n=args.n, m=args.m)
    twist_sym = f"f(x1,y1)*z^{args.n} = f(x,y)"
    rep.results.update(
        cover={"r": spec.r, "e": spec.e, "n0": spec.n0, "F": spec.F, "affine_equation": f"{spec.affine_eq} = 0",
               "weighted_equation": f"{spec.weighted_eq} = 0", "weights": [1, 1, 1, spec.e],
               "branch_locus": spec.branch_locus},
        tower={"product_relations": [f"w{i}^{args.n} = {r.rhs}" for i, r in enumerate(tower.product_relations, 1)],
               "quotient_relations": [f"{q} = 0" for q in tower.quotient_relations],
               "twist": twist_sym, "twist_expanded": f"{tower.twist_eq} = 0"},
        points=_points_text(tower),
        membership=[{"point": c.index, "pass": c.ok, "rewrite_steps": c.steps, "residue": c.residue}
                    for c in mem.checks],
        descent={"pass": desc.ok, "residues": list(desc.residues)},
    )
    rep.add_caveats([
        f"e = ceil(r/n) = {spec.e}; the printed condition e >= n/r would allow n0 = ne - r < 0",
        f"u3 carries weight e = {spec.e}; printed weight vector is (1,1,1,n0) = {spec.printed_weights}",
        "the points are checked for membership only; their independence in the Mordell-Weil group is assumed",
    ])
    rep.passed = mem.ok and desc.ok
    rep.say(f"cover: {spec.affine_eq} = 0   (r = {spec.r}, e = {spec.e}, n0 = {spec.n0}, {spec.branch_locus.value})")
    rep.say(f"weighted: {spec.weighted_eq} = 0 in P(1,1,1,{spec.e})")
    rep.say(f"twist: {twist_sym}")
    for i, (txt, c) in enumerate(zip(_points_text(tower), mem.checks), 1):
        rep.say(f"  P{i} = {txt}: {'pass' if c.ok else 'FAIL'} ({c.steps} rewrite steps)")
    rep.say(f"descent: {'pass' if desc.ok else 'FAIL'}")


def cmd_predict(args, rep: Report) -> None:
    bound = None
    rep.inputs.update(n=args.n, d=args.d, m=args.m, n1=args.n1, n2=args.n2)
    if args.f:
        spec = make_cover(_poly(args.f), args.n)
        fc = factored_curve(spec, _factors(args.factor) if args.factor else [(spec.f, 1)])
        bound = albanese_dim_bound(fc)
        rep.inputs["f"] = spec.f
        rep.results["dimension_bound"] = list(bound)
    pred = predict_rank(args.m, args.n, args.d, args.n1, args.n2, bound=bound,
                        assumption1=args.assumption1, surface_image=args.surface_image)
    rep.results.update(c_n=pred.c_n, paper_rank=pred.paper_rank, relation=pred.relation,
                       endo_rank=pred.endo_rank, cross_check=pred.cross_check,
                       albanese=pred.structure.describe(), conditional=pred.conditional,
                       torsion=pred.torsion_note)
    rep.add_caveats(pred.notes)
    rep.passed = pred.consistent_with_claim
    rep.say(f"Alb(X_{args.n}) ~ {pred.structure.describe()}")
    rep.say(f"rank {pred.relation} {pred.paper_rank}  (c_n = {pred.c_n}, m = {args.m})")
    rep.say(f"endomorphism count: {pred.endo_rank}  -> {pred.cross_check.value}")
    if pred.conditional:
        rep.say("conditional on Assumption 1 and the surface image")


def _curve_entry(key: str):
    entry = catalog_get(key)
    if not isinstance(entry.object, (EllipticCurveData, Genus2CurveData)):
        raise UsageError(f"{key} is not a curve")
    return entry


def cmd_verify(args, rep: Report) -> None:
    kind = args.check
    rep.inputs["check"] = kind
    if kind in ("membership", "descent", "cocycle"):
        if not args.f or args.n is None:
            raise UsageError(f"verify {kind} needs --f and --n")
        spec = make_cover(_poly(args.f, args.n), args.n)
        rep.inputs.update(f=spec.f, n=args.n)
        if kind == "cocycle":
            c = cocycle(spec)
            rep.results.update(table={str(k): f"tau^{v}" for k, v in c.table.entries.items()},
                               tau_order=c.tau_order, power_orders=c.power_orders, proper_powers=c.proper_powers,
                               preserves_equation=c.preserves_equation, law=c.law_ok, failures=c.failures)
            rep.passed = c.ok
            rep.say(f"cocycle gamma^j -> tau^j, tau of order {c.tau_order}: {'pass' if c.ok else 'FAIL'}")
            return
        tower = build_tower(spec, args.m)
        rep.inputs["m"] = args.m
        if kind == "descent":
            d = verify_descent(tower, args.exponent)
            rep.inputs["exponent"] = d.exponent
            rep.results.update(residues=list(d.residues))
            rep.passed = d.ok
            rep.say(f"descent with z_i -> w1^{d.exponent} w_(i+1): {'pass' if d.ok else 'FAIL'}")
            return
        points = None
        if args.corrupt:
            if args.index is None or not 1 <= args.index <= args.m:
                raise UsageError("--corrupt needs --index between 1 and m")
            points = [corrupt_point(tower, args.index, args.corrupt)]
            rep.inputs.update(corrupt=args.corrupt, index=args.index)
        mem = verify_membership(tower, points)
        labels = [args.index] if points else [c.index for c in mem.checks]
        rep.results["points"] = [{"point": i, "pass": c.ok, "rewrite_steps": c.steps, "residue": c.residue}
                                 for i, c in zip(labels, mem.checks)]
        rep.passed = mem.ok
        for i, c in zip(labels, mem.checks):
            rep.say(f"P{i}: {'pass' if c.ok else 'FAIL'} ({c.steps} rewrite steps)")
        return
    if kind == "kulikov":
        _verify_kulikov(args, rep)
        return
    if not args.target:
        raise UsageError(f"verify {kind} needs --target")
    entry = _curve_entry(args.target)
    rep.inputs["target"] = args.target
    rep.add_caveats(entry.caveats)
    curve = entry.object
    if kind == "cm":
        rmap = _parse_map(args.map, args.n) if args.map else entry.extras.get("cm_map")
        if rmap is None:
            raise UsageError(f"{args.target} has no stored automorphism; pass --map")
        r = verify_cm_automorphism(curve, rmap)
        rep.inputs["map"] = str(rmap)
        rep.results.update(preserves_curve=r.preserves_curve, order=r.order, residue=r.residue)
        rep.passed = r.ok
        rep.say(f"{rmap}: {'pass' if r.ok else 'FAIL'}, order {r.order}")
    elif kind == "isogeny":
        if not isinstance(curve, EllipticCurveData):
            raise UsageError("isogeny check needs an elliptic curve")
        r = verify_isogeny_cm(curve, args.ell)
        rep.inputs["ell"] = args.ell
        rep.results.update(j_invariant=r.j_invariant, verdict=r.verdict,
                           quotients=[{"kernel": q.kernel_poly, "a_invariants": list(q.ainvs),
                                       "j_invariant": q.j_invariant} for q in r.quotients])
        rep.passed = r.ok
        rep.say(f"j = {format_rational(r.j_invariant)}; {r.verdict}")
        for q in r.quotients:
            rep.say(f"  kernel {q.kernel_poly}: {q.label}, j = {format_rational(q.j_invariant)}")
    elif kind == "split":
        if not isinstance(curve, Genus2CurveData):
            raise UsageError("split check needs a genus-2 curve")
        sigma = _parse_map(args.map, args.n) if args.map else None
        expected = [catalog_get("E1").object.j_invariant, catalog_get("E2").object.j_invariant]
        r = verify_genus2_split(curve, sigma, expected=expected)
        rep.results.update(quotients=[f"eta^2 = {q}" for q in r.quotients], j_values=list(r.j_values),
                           expected=list(expected), match=r.ok)
        rep.add_caveats(catalog_get("E2").caveats)
        rep.passed = bool(r.ok)
        rep.say(f"quotients: {'; '.join(f'eta^2 = {q}' for q in r.quotients)}")
        rep.say(f"j = {{{', '.join(map(str, r.j_values))}}} vs {{{', '.join(map(str, expected))}}}: "
                f"{'match' if r.ok else 'MISMATCH'}")


def _verify_kulikov(args, rep: Report) -> None:
    if not args.F:
        raise UsageError("verify kulikov needs --F")
    F = catalog_get(args.F).object if args.F in catalog_keys() else _poly(args.F, args.n)
    rep.inputs.update(F=F, a=args.a, b=args.b)
    if args.F in catalog_keys():
        rep.add_caveats(catalog_get(args.F).caveats)
    if args.search:
        lo, hi = args.bounds
        s = find_two_power_decomposition(F, args.a, args.b, (lo, hi), order=args.field_order)
        rep.inputs.update(bounds=[lo, hi], field_order=s.order)
        rep.results["search"] = {"candidates": s.candidates, "survivors": s.survivors, "exhausted": s.exhausted,
                                 "decompositions": [{"G": d.G, "H": d.H} for d in s.decompositions]}
        rep.say(f"searched {s.candidates} H in [{lo}, {hi}]: {len(s.decompositions)} decomposition(s)")
        for d in s.decompositions:
            rep.say(f"  G = {d.G}\n  H = {d.H}")
        report = certify(F, s)
        if report is None:
            rep.results["outcome"] = "search bounds exhausted without two distinct pencils"
            rep.passed = False
            rep.say("outcome: search bounds exhausted without two distinct pencils")
            return
    else:
        if not all((args.g1, args.h1, args.g2, args.h2)):
            raise UsageError("give --g1 --h1 --g2 --h2, or --search")
        dec1 = (_poly(args.g1, args.n), _poly(args.h1, args.n))
        dec2 = (_poly(args.g2, args.n), _poly(args.h2, args.n))
        report = verify_kulikov(F, dec1, dec2, args.a, args.b)
    rep.results.update(identities=list(report.identities), rank=report.rank, distinct_pencils=report.ok,
                       surface_image_n=report.surface_image_n)
    rep.passed = report.ok
    rep.say(f"identities {report.identities}, rank {report.rank}: {'pass' if report.ok else 'FAIL'}")


def cmd_probe(args, rep: Report) -> None:
    target = _target(args.target, args.n)
    label = args.target
    if isinstance(target, MultiPoly):
        obj = build_tower(make_cover(target, args.n), args.m) if args.m else target
        label = "f"
    else:
        rep.add_caveats(target.caveats)
        obj = target.object
        label = target.key
    rep.inputs.update(target=args.target, primes=args.prime, n=args.n)
    probes = probe_primes({label: obj}, args.prime, args.n)
    out = {}
    for p, pr in probes.items():
        out[str(p)] = {"root_of_unity": pr.root_of_unity, "root_choices": pr.root_choices, "counts": pr.counts,
                       "cross_checks": pr.cross_checks,
                       "kpoint": [{"sample": k.sample, "point": k.index, "status": k.status} for k in pr.kpoint]}
        rep.passed = rep.passed and pr.ok
        counts = ", ".join(f"{k}: {v}" for k, v in sorted(pr.counts.items()))
        rep.say(f"p = {p}: {counts}")
    rep.results["probes"] = out


def cmd_catalog(args, rep: Report) -> None:
    if args.action == "list":
        rep.results["keys"] = catalog_keys()
        for k in catalog_keys():
            rep.say(f"{k:18s} {catalog_get(k).object}")
        return
    if not args.key:
        raise UsageError("catalog show needs a key")
    e = catalog_get(args.key)
    rep.inputs["key"] = args.key
    rep.results.update(key=e.key, object=str(e.object), source_form=e.provenance, printed=e.printed)
    if isinstance(e.object, EllipticCurveData):
        rep.results.update(j_invariant=e.object.j_invariant, discriminant=e.object.discriminant)
    rep.add_caveats(e.caveats)
    rep.say(f"{e.key}: {e.object}")
    rep.say(f"source form: {e.provenance}")
    if e.printed:
        rep.say(f"printed form: {e.printed}")


def cmd_dual(args, rep: Report) -> None:
    F3 = catalog_get(args.cubic).object if args.cubic in catalog_keys() else _poly(args.cubic, args.n)
    D = dual_cubic(F3)
    rep.inputs["cubic"] = F3
    rep.results.update(dual=D, degree=D.total_degree())
    rep.say(f"dual: {D}")


# argument parsing -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="albtwist", description="Exact checks for twists of cyclic multiple planes.")
    p.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the JSON report")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="cover, tower, twist and points")
    c.add_argument("--f", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)

    r = sub.add_parser("predict", help="rank prediction")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--n1", type=int)
    r.add_argument("--n2", type=int)
    r.add_argument("--f", help="curve f(x, y); enforces the dimension bound")
    r.add_argument("--factor", action="append", default=[], help="factor of f as EXPR or EXPR:mult (repeatable)")
    r.add_argument("--assumption1", action="store_true")
    r.add_argument("--surface-image", action="store_true")

    v = sub.add_parser("verify", help="verification checks")
    v.add_argument("check", choices=["membership", "descent", "cm", "isogeny", "split", "kulikov", "cocycle"])
    v.add_argument("--f")
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--exponent", type=int)
    v.add_argument("--corrupt", choices=CORRUPTIONS)
    v.add_argument("--index", type=int)
    v.add_argument("--target")
    v.add_argument("--map", action="append", default=[], help="var=EXPR or var=NUM // DEN (repeatable)")
    v.add_argument("--ell", type=int, default=2)
    v.add_argument("--F")
    v.add_argument("--g1")
    v.add_argument("--h1")
    v.add_argument("--g2")
    v.add_argument("--h2")
    v.add_argument("--a", type=int, default=2)
    v.add_argument("--b", type=int, default=3)
    v.add_argument("--search", action="store_true")
    v.add_argument("--bounds", type=int, nargs=2, default=[-4, 4], metavar=("LO", "HI"))
    v.add_argument("--field-order", type=int, default=12)

    pr = sub.add_parser("probe", help="point counts modulo primes")
    pr.add_argument("--target", required=True)
    pr.add_argument("--prime", type=int, action="append", required=True)
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--m", type=int, help="for an expression target, also check the twist points of this tower")

    k = sub.add_parser("catalog", help="named objects")
    k.add_argument("action", choices=["list", "show"])
    k.add_argument("key", nargs="?")

    d = sub.add_parser("dual", help="dual of a smooth plane cubic")
    d.add_argument("--cubic", required=True)
    d.add_argument("--n", type=int)
    return p


COMMANDS = {"construct": cmd_construct, "predict": cmd_predict, "verify": cmd_verify, "probe": cmd_probe,
            "catalog": cmd_catalog, "dual": cmd_dual}


def _echo(argv: list[str]) -> list[str]:
    # output options do not change the computation, so they stay out of the report
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--json":
            skip = True
        elif not (a.startswith("--json=") or a == "--timing"):
            out.append(a)
    return out


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    rep = Report(command=_echo(argv))
    start = time.perf_counter()
    try:
        COMMANDS[args.cmd](args, rep)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except PRECONDITION_ERRORS as exc:
        print(f"precondition failed: {exc}", file=err)
        return 3
    elapsed = time.perf_counter() - start
    for line in rep.lines:
        print(line, file=out)
    for c in rep.caveats:
        print(f"caveat: {c}", file=out)
    if args.json:
        text = dumps(rep.document(elapsed if args.timing else None))
        if args.json == "-":
            out.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    return 0 if rep.passed else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
