"""Command-line entry point.

Exit status is 0 when every reported check passes, 1 when any check fails,
and 2 on a usage error.  Machine-readable output (CSV, DOT, JSON) is
deterministic for fixed flags and seed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import checks
from .apartment import corner_set, enclosure, normalize_fixed_point, parse_point
from .building import CurveSpec, cusp_count, pic_order, quotient_ball, stabilizer_order_sl2
from .chevalley import conjugation_polynomials, structure_constants
from .ffield import GF, Poly, RationalFunction, factor, rr_dim
from .ideals import ConjContext, sandwich, sl2_example, sl3_example
from .rootsys import highest_root, parse_type, weyl_word
from .subsets import check_conditions, is_weyl_stable, psi_basis, psi_theta
from . import _exact


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, default=str) + "\n"


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _root(a) -> str:
    return " ".join(map(str, a))


def _ints(text: str) -> list[int]:
    return [int(s) for s in text.split(",") if s.strip()]


def _irreducible(spec: str):
    rs = parse_type(spec)
    if len(rs.type_list) != 1:
        raise UsageError(f"{spec}: an irreducible type is required")
    return rs


# ------------------------------------------------------------------ rootsys

def cmd_rootsys_show(args) -> int:
    rs = parse_type(args.type)
    if args.json:
        _emit(_json(rs.to_json()), None)
    else:
        print(f"{rs.name}: rank {rs.rank}, {len(rs.roots)} roots, highest root {_root(highest_root(rs))}")
    return 0


# ------------------------------------------------------------------ subsets

def cmd_subsets_verify(args) -> int:
    rs = _irreducible(args.type)
    rows = []
    psi = psi_basis(rs)
    flags = check_conditions(psi)
    rows.append(("psi_basis", "C1", flags["C1"]))
    rows.append(("psi_basis", "C2", flags["C2"]))
    rows.append(("psi_basis", "rank", len(psi) == rs.rank and _exact.det(psi.elements) != 0))
    if args.all_theta:
        from itertools import combinations
        for k in range(rs.rank):
            for theta in combinations(range(rs.rank), k):
                sub = psi_theta(rs, theta)
                tag = "psi_theta{" + " ".join(str(i + 1) for i in theta) + "}"
                f = check_conditions(sub)
                rows += [(tag, "C1", f["C1"]), (tag, "C2", f["C2"]),
                         (tag, "W_Theta-stable", is_weyl_stable(sub, theta)), (tag, "nonempty", len(sub) > 0)]
    _emit(_csv(["subset", "check", "result"], [(a, b, "pass" if ok else "fail") for a, b, ok in rows]), None)
    return 0 if all(ok for *_, ok in rows) else 1


# ---------------------------------------------------------------- chevalley

def cmd_chevalley_constants(args) -> int:
    rs = parse_type(args.type)
    sc = structure_constants(rs)
    rows = [(_root(a), _root(b), r, s, c) for (a, b, r, s), c in sorted(sc.C.items())]
    if args.csv:
        _emit(_csv(["alpha", "beta", "r", "s", "c"], rows), None)
    else:
        _emit(_json([dict(zip(["alpha", "beta", "r", "s", "c"], r)) for r in rows]), None)
    return 0


def _psi_arg(rs, text: str):
    if text == "basis":
        return psi_basis(rs)
    if text.startswith("theta:"):
        return psi_theta(rs, [i - 1 for i in _ints(text[6:])])
    raise UsageError("--psi takes 'basis' or 'theta:i,j,...' (1-based simple roots)")


def cmd_chevalley_conj(args) -> int:
    rs = _irreducible(args.type)
    table = conjugation_polynomials(structure_constants(rs), _psi_arg(rs, args.psi))
    _emit(_json({
        "psi": [list(a) for a in table.psi],
        "order": [list(a) for a in table.order],
        "variables": [str(g) for g in table.gens],
        "P": [[str(p) for p in row] for row in table.P],
        "triangular": table.is_triangular(),
    }), None)
    return 0 if table.is_triangular() else 1


# ---------------------------------------------------------------- apartment

def _points(text: str):
    return [parse_point(p) for p in text.split(";") if p.strip()]


def cmd_apartment_corners(args) -> int:
    rs = parse_type(args.type)
    theta = [i - 1 for i in _ints(args.theta)]
    pts = corner_set(rs, parse_point(args.tip), theta)
    _emit(_json({"corners": [[str(c) for c in p] for p in pts]}), None)
    return 0


def cmd_apartment_enclosure(args) -> int:
    rs = parse_type(args.type)
    _emit(_json(enclosure(rs, _points(args.points)).to_json()), None)
    return 0


def cmd_apartment_fixed(args) -> int:
    rs = parse_type(args.type)
    w = weyl_word(rs, [i - 1 for i in _ints(args.word)])
    x = parse_point(args.x)
    v = _ints(args.v) if args.v else [0] * rs.rank
    try:
        z, e = normalize_fixed_point(rs, w, v, x)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(_json({"z": [str(c) for c in z], "x_plus_z": [str(a + b) for a, b in zip(x, z)], "e": e}), None)
    return 0


# ------------------------------------------------------------------- ffield

def parse_rational(F: GF, text: str) -> RationalFunction:
    """Rational function in t with integer coefficients, reduced into F_q."""
    import sympy

    t = sympy.Symbol("t")
    expr = sympy.together(sympy.sympify(str(text).replace("^", "**"), locals={"t": t}))
    num, den = sympy.fraction(expr)

    def to_poly(e) -> Poly:
        coeffs = sympy.Poly(e, t).all_coeffs()[::-1]
        if any(not c.is_integer for c in coeffs):
            raise UsageError(f"{text}: coefficients must be integers")
        return Poly(F, [_field_int(F, int(c)) for c in coeffs])

    d = to_poly(den)
    if not d:
        raise UsageError(f"{text}: zero denominator mod {F.p}")
    return RationalFunction(to_poly(num), d)


def _field_int(F: GF, a: int) -> int:
    return F.from_int(a) if a >= 0 else F.neg(F.from_int(-a))


def cmd_ffield_rr(args) -> int:
    try:
        d = rr_dim(args.degJ, args.m, args.genus, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(d)
    return 0


def cmd_ffield_factor(args) -> int:
    F = GF(args.q)
    f = parse_rational(F, args.poly)
    if not f.is_polynomial():
        raise UsageError("factor takes a polynomial")
    if not f:
        raise UsageError("cannot factor zero")
    parts = factor(f.num)
    print(" * ".join(f"({g})^{k}" if k > 1 else f"({g})" for g, k in parts) or "1")
    return 0


# ------------------------------------------------------------------- ideals

def _context(args) -> ConjContext:
    F = GF(args.q)
    if args.example:
        t = RationalFunction.t_power(F, 1)
        if args.example == "sl2":
            return sl2_example(F, t)
        if args.example == "sl2-inv":
            return sl2_example(F, t.inverse())
        return sl3_example(F)
    if not args.h_file:
        raise UsageError("give --h-file or --example")
    with open(args.h_file, encoding="utf-8") as fh:
        rows = json.load(fh)
    h = [[parse_rational(F, x) for x in row] for row in rows]
    if len(h) != args.n or any(len(r) != args.n for r in h):
        raise UsageError(f"h must be {args.n} x {args.n}")
    try:
        return ConjContext(F, h)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_ideals_sandwich(args) -> int:
    ctx = _context(args)
    i, j = _ints(args.alpha)
    if not (1 <= i <= ctx.n and 1 <= j <= ctx.n and i != j):
        raise UsageError("--alpha takes two distinct 1-based indices")
    rep = sandwich(ctx, (i - 1, j - 1))
    _emit(_json({**rep.to_json(), "context": ctx.to_json()}), None)
    return 0 if rep.lower_ok and rep.upper_ok else 1


# ----------------------------------------------------------------- building

def cmd_building_quotient(args) -> int:
    try:
        Q = quotient_ball(args.n, args.q, args.radius)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = Q.to_dot() if args.emit == "dot" else _json(Q.to_json())
    _emit(text, args.out)
    return 0


def cmd_building_cusps(args) -> int:
    try:
        curve = CurveSpec(args.genus, args.q, tuple(_ints(args.curve)) if args.genus == 1 else ())
        _emit(_json({"pic_order": pic_order(curve), "rank": args.rank, "cusps": cusp_count(curve, args.rank)}), None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_building_stab(args) -> int:
    if args.q > 5 or args.m > 6:
        raise UsageError("stabilizer enumeration needs q <= 5 and m <= 6")
    _emit(_json({"m": args.m, "q": args.q, "order": stabilizer_order_sl2(args.m, args.q)}), None)
    return 0


# ------------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    wanted = list(checks.ALL) if args.which == "all" else _ints(args.which)
    if any(k not in checks.ALL for k in wanted):
        raise UsageError(f"criteria are numbered 1..{len(checks.ALL)}")
    scaled = {
        2: dict(max_rank=min(args.max_rank, 6)),
        4: dict(seed=args.seed),
        5: dict(max_rank=min(args.max_rank, 4), seed=args.seed),
        7: dict(seed=args.seed),
        11: dict(seed=args.seed),
    }
    results = []
    for k in wanted:
        results += checks.ALL[k](**scaled.get(k, {}))
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit(_csv(["criterion", "check", "result"], [(r.criterion, r.name, "pass" if r.passed else "fail")
                                                   for r in results]), args.out)
    return 0 if all(r.passed for r in results) else 1


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="btquot", description="Exact root-system, unipotent-group and building computations.")
    top = p.add_subparsers(dest="module", required=True)

    def group(name, help_):
        sp = top.add_parser(name, help=help_)
        return sp.add_subparsers(dest="action", required=True)

    g = group("rootsys", "root systems")
    s = g.add_parser("show")
    s.add_argument("--type", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rootsys_show)

    g = group("subsets", "closed subsets of positive roots")
    s = g.add_parser("verify")
    s.add_argument("--type", required=True)
    s.add_argument("--all-theta", action="store_true")
    s.set_defaults(func=cmd_subsets_verify)

    g = group("chevalley", "structure constants and conjugation polynomials")
    s = g.add_parser("constants")
    s.add_argument("--type", required=True)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_chevalley_constants)
    s = g.add_parser("conj-table")
    s.add_argument("--type", required=True)
    s.add_argument("--psi", default="basis")
    s.set_defaults(func=cmd_chevalley_conj)

    g = group("apartment", "affine apartment geometry")
    s = g.add_parser("corners")
    s.add_argument("--type", required=True)
    s.add_argument("--tip", required=True)
    s.add_argument("--theta", default="")
    s.set_defaults(func=cmd_apartment_corners)
    s = g.add_parser("enclosure")
    s.add_argument("--type", required=True)
    s.add_argument("--points", required=True, help="points separated by ';', coordinates by ','")
    s.set_defaults(func=cmd_apartment_enclosure)
    s = g.add_parser("fixed")
    s.add_argument("--type", required=True)
    s.add_argument("--word", default="", help="1-based simple reflections, applied right to left")
    s.add_argument("--v", default="")
    s.add_argument("--x", required=True)
    s.set_defaults(func=cmd_apartment_fixed)

    g = group("ffield", "finite fields and F_q[t]")
    s = g.add_parser("rr")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--degJ", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--d", type=int, default=1)
    s.set_defaults(func=cmd_ffield_rr)
    s = g.add_parser("factor")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--poly", required=True)
    s.set_defaults(func=cmd_ffield_factor)

    g = group("ideals", "ideal bounds for arithmetic unipotent groups")
    s = g.add_parser("sandwich")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--h-file")
    s.add_argument("--example", choices=["sl2", "sl2-inv", "sl3"])
    s.add_argument("--alpha", required=True, help="1-based pair i,j")
    s.set_defaults(func=cmd_ideals_sandwich)

    g = group("building", "building quotients and cusps")
    s = g.add_parser("quotient")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--emit", choices=["dot", "json"], default="dot")
    s.add_argument("out", nargs="?")
    s.set_defaults(func=cmd_building_quotient)
    s = g.add_parser("cusps")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--curve", default="")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--rank", type=int, required=True)
    s.set_defaults(func=cmd_building_cusps)
    s = g.add_parser("stab")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_building_stab)

    s = top.add_parser("verify", help="run acceptance checks")
    s.add_argument("which", nargs="?", default="all", help="'all' or comma-separated criterion numbers")
    s.add_argument("--max-rank", type=int, default=6)
    s.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"btquot: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
