"""Command-line interface: ``w3cft <command> [options]``.

Exit status is 0 on success, 1 on a usage error and 2 when an invariant
check fails.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import re
import sys
from fractions import Fraction

from . import __version__
from .charges import KacCharge, degenerate_image, h_of
from .fusion import MODES, degenerate_spectrum, fuse_deg_deg, fuse_deg_generic
from .rational import ModelError, RationalModel, kac_table, potts_content
from .records import Record
from .sl3 import z3_charge
from .spin import (
    FIELDS,
    PREDICTED_SECTORS,
    ConstraintSpec,
    SPEC_DIR,
    curve_tables,
    on_wall,
    orbit_points,
    solve,
)
from .virasoro import vir_curves

USAGE, INVARIANT = 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ parsing

_NUMBER = re.compile(r"^\s*(sqrt\((?P<root>[^)]+)\)|(?P<plain>[-+0-9./eE]+))\s*$")


def parse_number(token: str, exact: bool):
    """A rational (``3/4``, ``0.75``), or ``sqrt(r)`` when not exact."""
    m = _NUMBER.match(token)
    if not m:
        raise UsageError(f"cannot parse number {token!r}")
    try:
        if m.group("root") is not None:
            if exact:
                raise UsageError(f"{token!r} is irrational; drop --exact or use --squared")
            return math.sqrt(float(Fraction(m.group("root"))))
        value = Fraction(m.group("plain"))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse number {token!r}") from None
    return value if exact else float(value)


def parse_grid(spec: str, exact: bool) -> list:
    """``MIN:MAX:STEPS`` into ``STEPS`` evenly spaced values, both ends included."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be MIN:MAX:STEPS, got {spec!r}")
    lo, hi = parse_number(parts[0], exact), parse_number(parts[1], exact)
    try:
        steps = int(parts[2])
    except ValueError:
        raise UsageError(f"STEPS must be an integer, got {parts[2]!r}") from None
    if steps < 2:
        raise UsageError("a grid needs at least 2 steps")
    if not 0 < lo < hi:
        raise UsageError(f"grid needs 0 < MIN < MAX, got {parts[0]}:{parts[1]}")
    return [lo + (hi - lo) * k / (steps - 1) for k in range(steps)] if not exact else [
        lo + (hi - lo) * Fraction(k, steps - 1) for k in range(steps)
    ]


def parse_charge(token: str) -> KacCharge:
    """A field name from the spin catalogue or four comma-separated indices ``n1,n2,m1,m2``."""
    if token in FIELDS:
        return FIELDS[token]
    parts = token.split(",")
    if len(parts) != 4:
        raise UsageError(f"charge must be a field name {sorted(FIELDS)} or n1,n2,m1,m2; got {token!r}")
    try:
        return KacCharge(*(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse charge {token!r}") from None


def parse_pair(token: str, what: str) -> tuple[int, int]:
    parts = token.split(":")
    if len(parts) != 2:
        raise UsageError(f"{what} must be A:B, got {token!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"{what} must hold integers, got {token!r}") from None


def _model(p: int, pp: int) -> RationalModel:
    try:
        return RationalModel(p, pp)
    except ModelError as exc:
        raise UsageError(str(exc)) from None


def _tab(c: KacCharge) -> str:
    return str(c)


# ------------------------------------------------------------------ commands

_INDEX_COLS = ("n1", "n2", "m1", "m2")


def cmd_kac_table(args) -> Record:
    model = _model(args.p, args.pp)
    try:
        fields = kac_table(model)
    except ModelError as exc:
        raise UsageError(str(exc)) from None
    wcol = "w_factor_over_b" if args.exact else "w_factor"
    cols = ["triple", *_INDEX_COLS, "q", "h", wcol]
    types = {"triple": "text", "q": "int", "h": "rational", wcol: "rational" if args.exact else "decimal"}
    types.update({c: "rational" for c in _INDEX_COLS})
    rec = Record(cols, types, meta={"command": "kac-table", "model": [model.p, model.pp]})
    for f in fields:
        rec.add(
            triple=" = ".join(_tab(c) for c in f.triple),
            **dict(zip(_INDEX_COLS, f.indices.indices)),
            q=f.q,
            h=f.h,
            **{wcol: f.w_factor_over_b if args.exact else f.w_factor},
        )
    return rec


_CURVE_SETS = {
    "w3-psi": ("c", "h_sigma", "h_sigma1", "h_sigma2", "h_psi", "h_psi1"),
    "w3-eps": ("c", "h_sigma", "h_sigma1", "h_sigma2", "h_eps"),
    "virasoro": ("c", "h_spin", "h21", "h13", "h12", "sqrtQ", "n"),
}
_DEFAULT_GRIDS = {
    # (b grid, b^2 grid for --exact)
    "w3": ("sqrt(1/2):sqrt(2):61", "1/2:2:61"),
    "virasoro": ("1/2:sqrt(5/2):61", "1/4:5/2:61"),
}


def cmd_curves(args) -> Record:
    family = "virasoro" if args.which == "virasoro" else "w3"
    squared = args.squared or (args.exact and args.grid is None)
    grid_spec = args.grid
    if grid_spec is None:
        grid_spec = _DEFAULT_GRIDS[family][1 if squared else 0]
    grid = parse_grid(grid_spec, args.exact)
    if family == "virasoro":
        rows = vir_curves(grid, squared=squared, exact=args.exact)
    else:
        rows = curve_tables(grid, squared=squared, exact=args.exact)
    value_cols = _CURVE_SETS[args.which]
    key = "b2" if args.exact else "b"
    cols = [key, *value_cols]
    types = {c: ("rational" if args.exact else "decimal") for c in cols}
    types.update({c: "decimal" for c in ("sqrtQ", "n") if c in types})
    rec = Record(cols, types, meta={"command": "curves", "which": args.which, "grid": grid_spec,
                                    "squared": squared})
    for r in rows:
        rec.add(**{c: r[c] for c in cols})
    return rec


def cmd_orbits(args) -> Record:
    names = list(FIELDS)[:3] if args.field == "all" else [args.field]
    p_min, p_max = parse_pair(args.p_range, "--p-range")
    if not 1 <= p_min <= p_max <= 100:
        raise UsageError("p range must lie within [1, 100]")
    cols = ["field", "p", "b2", "image", "x", "y", "on_wall"]
    types = {"field": "text", "p": "int", "b2": "rational", "image": "text", "x": "decimal",
             "y": "decimal", "on_wall": "int"}
    rec = Record(cols, types, meta={"command": "orbits", "fields": names})
    for p in range(p_min, p_max + 1):
        b2 = Fraction(p, p + 1)
        for name in names:
            for pt in orbit_points(FIELDS[name], math.sqrt(b2)):
                rec.add(field=name, p=p, b2=b2, image=pt.label, x=pt.x, y=pt.y,
                        on_wall=int(on_wall((pt.x, pt.y))))
    return rec


def _load_spec(token: str) -> ConstraintSpec:
    path = SPEC_DIR / f"{token}.json" if (SPEC_DIR / f"{token}.json").exists() else token
    try:
        return ConstraintSpec.load(path)
    except FileNotFoundError:
        raise UsageError(f"no spec file {token!r}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed spec {token!r}: {exc}") from None


def cmd_spin_search(args) -> Record:
    spec = _load_spec(args.spec)
    if args.cutoff is not None and spec.regime == "degenerate":
        spec = dataclasses.replace(spec, cutoff=args.cutoff)
    res = solve(spec)
    cols = ["kind", "status", "charge", *_INDEX_COLS, "class", "h", "w_factor", "witnesses"]
    types = {c: "text" for c in cols}
    types.update({c: "rational" for c in _INDEX_COLS})
    rec = Record(cols, types, meta={"command": "spin-search", "spec": spec.to_dict(), "status": res.status})
    for sol in res.solutions:
        wit = [w.as_dict() for w in sol.witnesses]
        rec.add(kind="point", status=res.status, charge=_tab(sol.charge),
                **dict(zip(_INDEX_COLS, sol.charge.indices)), **{"class": sol.classification.value},
                h=str(sol.h), w_factor=str(sol.w), witnesses=json.dumps(wit, default=str))
    for fam in res.families:
        rec.add(kind=f"family(dim={fam.dim})", status=res.status, charge=fam.describe())
    if not res.solutions and not res.families:
        rec.add(kind="none", status=res.status)
    return rec


def cmd_fusion(args) -> Record:
    a = parse_charge(args.a)
    if args.spectrum:
        if args.b is not None:
            raise UsageError("--spectrum takes a single field")
        cutoff = args.cutoff or 4
        if cutoff < 1:
            raise UsageError("--cutoff must be at least 1")
        pred = PREDICTED_SECTORS.get((args.a, args.spectrum))
        cols = ["lam", "mu", "q_lam", "q_mu"] + (["predicted"] if pred else [])
        types = {"lam": "text", "mu": "text", "q_lam": "int", "q_mu": "int", "predicted": "int"}
        rec = Record(cols, types, meta={"command": "fusion", "field": _tab(a), "mode": args.spectrum,
                                        "cutoff": cutoff, "sector": str(pred) if pred else None,
                                        "terms": "completely degenerate only"})
        for lam, mu in degenerate_spectrum(a, cutoff, args.spectrum):
            row = dict(lam=f"{lam[0]},{lam[1]}", mu=f"{mu[0]},{mu[1]}", q_lam=z3_charge(lam), q_mu=z3_charge(mu))
            if pred:
                row["predicted"] = int(pred.contains(lam, mu))
            rec.add(**row)
        return rec
    if args.b is None:
        raise UsageError("fusion needs two fields, or one with --spectrum")
    b = parse_charge(args.b)
    model = _model(*parse_pair(args.model, "--model")) if args.model else None
    cols = ["product", *_INDEX_COLS, "multiplicity", "h"]
    types = {"product": "text", "multiplicity": "int", "h": "rational" if model else "text"}
    types.update({c: "rational" for c in _INDEX_COLS})
    rec = Record(cols, types, meta={"command": "fusion", "a": _tab(a), "b": _tab(b),
                                    "model": [model.p, model.pp] if model else None,
                                    "terms": "completely degenerate only"})
    da = degenerate_image(a)
    if da is None:
        raise UsageError(f"the first field {a} must be completely degenerate")
    if degenerate_image(b) is not None:
        out = fuse_deg_deg(da, degenerate_image(b), model=model)
    else:
        if model is not None:
            raise UsageError("--model applies to degenerate x degenerate fusion only")
        out = fuse_deg_generic(*da.reps(), b)
    for term, n in sorted(out.terms.items(), key=lambda t: str(t[0])):
        c = term.indices if model else term
        rec.add(product=_tab(c), **dict(zip(_INDEX_COLS, c.indices)), multiplicity=n,
                h=term.h if model else str(h_of(c)))
    return rec


def cmd_potts(args) -> Record:
    rep = potts_content()
    if args.fusions:
        rec = Record(["fusion", "product", "multiplicity"],
                     {"fusion": "text", "product": "text", "multiplicity": "int"},
                     meta={"command": "potts", "table": "fusions"})
        for name, terms in rep.fusions.items():
            for t, n in terms.items():
                rec.add(fusion=name, product=t, multiplicity=n)
        return rec
    wtype = "decimal"
    rec = Record(["name", "triple", "q", "h", "w"],
                 {"name": "text", "triple": "text", "q": "int", "h": "rational", "w": wtype},
                 meta={"command": "potts", "table": "fields"})
    for row in rep.rows():
        rec.add(**row)
    return rec


def cmd_check(args):
    from .checks import run_checks

    results = run_checks()
    rec = Record(["check", "status", "seconds", "detail"],
                 {"check": "text", "status": "text", "seconds": "decimal", "detail": "text"},
                 meta={"command": "check"})
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if r.passed and r.flagged:
            status = "PASS (flagged)"
        rec.add(check=r.name, status=status, seconds=round(r.seconds, 3), detail=r.detail.strip())
    rec.meta["failed"] = sum(not r.passed for r in results)
    return rec


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default csv; check prints text unless set)")
    common.add_argument("--exact", action="store_true", help="exact rationals only, no decimals")
    common.add_argument("--cutoff", type=int, default=None, help="bound on l1+l2 and m1+m2")
    common.add_argument("--grid", default=None, help="MIN:MAX:STEPS; values may be a/b or sqrt(a/b)")
    common.add_argument("--out", default=None, help="write to FILE instead of stdout")

    parser = _Parser(prog="w3cft", description="W3 Coulomb-gas fusion and spin-field tools")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kac-table", parents=[common], help="fields of M(p, p')")
    p.add_argument("p", type=int)
    p.add_argument("pp", type=int, metavar="p'")
    p.set_defaults(func=cmd_kac_table)

    p = sub.add_parser("curves", parents=[common], help="conformal dimensions along b")
    p.add_argument("which", choices=tuple(_CURVE_SETS))
    p.add_argument("--squared", action="store_true", help="grid values are b^2 rather than b")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("orbits", parents=[common], help="Weyl orbits of spin-field charges, b^2=p/(p+1)")
    p.add_argument("field", choices=("sigma", "sigma1", "sigma2", "all"))
    p.add_argument("--p-range", default="1:20", help="PMIN:PMAX within [1, 100]")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("spin-search", parents=[common], help="solve a constraint spec")
    p.add_argument("spec", help="spec file, or a bundled name: sigma, sigma1, sigma2")
    p.set_defaults(func=cmd_spin_search)

    p = sub.add_parser("fusion", parents=[common], help="fusion products and spectra")
    p.add_argument("a", help="field name or n1,n2,m1,m2")
    p.add_argument("b", nargs="?", help="second field")
    p.add_argument("--model", default=None, help="P:PP; map products into the Kac table")
    p.add_argument("--spectrum", choices=MODES, default=None,
                   help="list degenerate (lam, mu) passing the membership test")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("potts", parents=[common], help="three-state Potts content")
    p.add_argument("--fusions", action="store_true", help="print the spin-field fusions")
    p.set_defaults(func=cmd_potts)

    p = sub.add_parser("check", parents=[common], help="run the invariant suite")
    p.set_defaults(func=cmd_check)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"w3cft {args.command}: {exc}", file=sys.stderr)
        return USAGE
    if args.command == "check" and args.format is None:
        lines = [f"{r['status']:<15} {r['check']}" + (f"  [{r['detail']}]" if r["detail"] else "")
                 for r in rec.rows]
        lines.append(f"{len(rec.rows) - rec.meta['failed']}/{len(rec.rows)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(rec.render(args.format or "csv"), args.out)
    if args.command == "check" and rec.meta["failed"]:
        return INVARIANT
    return 0


if __name__ == "__main__":
    sys.exit(main())
