"""Command line front end: ``ltfourier <command> [options]``."""
from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .lubin_tate import DEFAULT_TRUNC
from .mahler import MahlerBasis, mahler_expand, pairing_monomial, parse_polynomial, graded_poly
from .padic import different_valuation
from .period import period_exponents
from .report import dumps, emit_report, jsonable
from .suites import SUITES, Settings, UsageError, build_field, build_group, make_manifest, run_suite

PRECISION_ENV = "LTFOURIER_PRECISION"
INT_KEYS = {"p", "f", "e", "pi", "trunc", "prec", "deg", "mmax", "nmax", "assertion"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int)
    sp.add_argument("--f", type=int)
    sp.add_argument("--e", type=int)
    sp.add_argument("--pi", type=int, help="prime element (integer, only when e = 1)")
    sp.add_argument("--trunc", type=int, help=f"truncation order (default {DEFAULT_TRUNC})")
    sp.add_argument("--prec", type=int, help="working precision in ord_p units")
    sp.add_argument("--frobenius", choices=("default", "multiplicative"))
    sp.add_argument("--config", help="file of key=value lines; flags take precedence")
    sp.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ltfourier", description="Lubin-Tate groups and generalized Mahler expansions.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sp = sub.add_parser("field", help="field invariants")
    _common(sp)
    sp = sub.add_parser("constants", help="period and radius exponents")
    _common(sp)
    sp = sub.add_parser("ltgroup", help="emit a series of the formal group")
    _common(sp)
    sp.add_argument("--emit", default="group_law",
                    help="group_law | log | exp | frobenius | derivation | endo:A")
    sp = sub.add_parser("torsion", help="torsion valuations from Newton polygons")
    _common(sp)
    sp.add_argument("--n", type=int, default=1)
    sp = sub.add_parser("mahler", help="basis polynomials or the expansion of a polynomial")
    _common(sp)
    sp.add_argument("--expand", help='polynomial in x, e.g. "x^2 - 3*x"')
    sp.add_argument("--mmax", type=int)
    sp = sub.add_parser("pairing", help="{Z^m, x^n}")
    _common(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("verify", help="run a verification suite")
    _common(sp)
    sp.add_argument("--suite", help="one of: " + ", ".join(sorted(SUITES)))
    sp.add_argument("--deg", type=int)
    sp.add_argument("--mmax", type=int)
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--assertion", type=int, help="assertion precision (default 20)")
    sp.add_argument("--manifest", help="re-run the suite recorded in this manifest")
    sp.add_argument("--manifest-out", help="write a run manifest here")
    return ap


def read_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            k, v = (t.strip() for t in line.split("=", 1))
            k = k.replace("-", "_")
            try:
                out[k] = int(v) if k in INT_KEYS else v
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: {k} must be an integer") from exc
    return out


def settings_from(args) -> tuple[Settings, dict]:
    """Merge built-in defaults < environment precision < config file < flags."""
    merged: dict = {}
    env = os.environ.get(PRECISION_ENV)
    if env:
        try:
            merged["prec"] = int(env)
        except ValueError as exc:
            raise UsageError(f"{PRECISION_ENV} must be an integer") from exc
    extra: dict = {}
    if getattr(args, "config", None):
        for k, v in read_config(args.config).items():
            if k in Settings.__dataclass_fields__:
                merged[k] = v
            elif k == "suite":
                extra[k] = v
            else:
                raise UsageError(f"unknown config key {k!r}")
    for k in Settings.__dataclass_fields__:
        v = getattr(args, k, None)
        if v is not None:
            merged[k] = v
    if getattr(args, "suite", None) is None and "suite" in extra:
        args.suite = extra.pop("suite")
    return Settings.from_json(merged), extra


def _out(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_field(args, st: Settings) -> int:
    F = build_field(st)
    data = F.to_json()
    data.update({"q": F.q, "degree": F.degree, "different_valuation": jsonable(different_valuation(F))})
    if args.json:
        _out(dumps(data))
    else:
        _out(f"{F!r}: p={F.p} f={F.f} e={F.e} q={F.q} degree={F.degree}")
        _out(f"unramified modulus {list(F.unramified_modulus)}")
        _out(f"Eisenstein modulus {[list(c) for c in F.eisenstein_modulus]}")
        _out(f"ord_p of the different = {different_valuation(F)}")
    return 0


def constants_of(st: Settings) -> dict:
    F = build_field(st)
    s, r = period_exponents(F)
    return {"s": s, "r": r, "different_valuation": different_valuation(F),
            "torsion_radius_exponent": Fraction(1, F.e * (F.q - 1)),
            "disk_threshold": Fraction(F.q, F.e * (F.q - 1))}


def cmd_constants(args, st: Settings) -> int:
    c = constants_of(st)
    if args.json:
        _out(dumps(jsonable(c)))
    else:
        _out(f"s = {c['s']}")
        _out(f"r = {c['r']}")
        _out(f"different valuation = {c['different_valuation']}")
        _out(f"torsion radius exponent = {c['torsion_radius_exponent']}")
        _out(f"disk preimage threshold = {c['disk_threshold']}")
    return 0


def cmd_ltgroup(args, st: Settings) -> int:
    G = build_group(st)
    what = args.emit
    if what == "group_law":
        obj = G.group_law()
    elif what == "log":
        obj = G.formal_log()
    elif what == "exp":
        obj = G.formal_exp()
    elif what == "frobenius":
        obj = G.frobenius
    elif what == "derivation":
        obj = G.invariant_differential_series()
    elif what.startswith("endo:"):
        try:
            a = int(what[5:])
        except ValueError as exc:
            raise UsageError("endo:A needs an integer A") from exc
        obj = G.endomorphism(a)
    else:
        raise UsageError(f"unknown series {what!r}")
    _out(dumps(obj.to_json()) if args.json else str(obj))
    return 0


def cmd_torsion(args, st: Settings) -> int:
    G = build_group(st)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    vals = G.torsion_valuations(args.n)
    if args.json:
        _out(dumps({"n": args.n, "valuations": [{"valuation": jsonable(v), "multiplicity": k} for v, k in vals]}))
    else:
        for v, k in vals:
            _out(f"valuation {v} multiplicity {k}")
    return 0


def cmd_mahler(args, st: Settings) -> int:
    G = build_group(st)
    F = G.field
    if args.expand:
        try:
            poly = parse_polynomial(args.expand)
        except (SyntaxError, ValueError) as exc:
            raise UsageError(f"cannot parse {args.expand!r}: {exc}") from exc
        basis = MahlerBasis(G, max(len(poly) - 1, 1))
        ex = mahler_expand(basis, graded_poly(F, poly))
        if args.json:
            _out(dumps(ex.to_json()))
        else:
            for m, c in enumerate(ex.coefficients):
                _out(f"c_{m} = {c}")
        return 0
    mmax = args.mmax if args.mmax is not None else 6
    basis = MahlerBasis(G, mmax)
    if args.json:
        _out(dumps({"P": [[c.to_json() for c in basis.poly(m)] for m in range(mmax + 1)]}))
    else:
        for m in range(mmax + 1):
            _out(f"P_{m}(Y) = " + " + ".join(f"({c})*Y^{j}" for j, c in enumerate(basis.poly(m)) if not c.is_zero()))
    return 0


def cmd_pairing(args, st: Settings) -> int:
    if args.m < 0 or args.n < 0:
        raise UsageError("--m and --n must be non-negative")
    G = build_group(st, N=max(st.trunc, args.n + 1))
    basis = MahlerBasis(G, max(args.n, 1))
    val = pairing_monomial(basis, args.m, args.n)
    _out(dumps(val.to_json()) if args.json else str(val))
    return 0


def cmd_verify(args, st: Settings) -> int:
    name = args.suite
    if args.manifest:
        import json
        with open(args.manifest) as fh:
            man = json.load(fh)
        name = man["suite"]
        st = Settings.from_json(man["settings"])
    if not name:
        raise UsageError("--suite is required")
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    t0 = time.perf_counter()
    cases = run_suite(name, st)
    wall = int((time.perf_counter() - t0) * 1000)
    _out(emit_report(cases, "json" if args.json else "table"))
    if args.manifest_out:
        with open(args.manifest_out, "w") as fh:
            fh.write(dumps(make_manifest(name, st, cases, wall)) + "\n")
    return 0 if all(c.holds for c in cases) else 1


HANDLERS = {
    "field": cmd_field, "constants": cmd_constants, "ltgroup": cmd_ltgroup, "torsion": cmd_torsion,
    "mahler": cmd_mahler, "pairing": cmd_pairing, "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        st, _ = settings_from(args)
        return HANDLERS[args.command](args, st)
    except (UsageError, OSError) as exc:
        sys.stderr.write(f"ltfourier: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
