"""Named verification suites returning lists of :class:`Case`."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from . import __version__
from .amice import dirac_transform, mellin_demo, units_support_check
from .lubin_tate import (LubinTateGroup, associativity_defect, compose_bivariate, identity_defect,
                         multiplicative_frobenius, symmetry_defect)
from .mahler import (MahlerBasis, NormTables, coefficient_bound_experiment, finite_difference,
                     graded_equal, graded_poly, mahler_expand, norm_estimate_43, norm_estimate_44,
                     pairing_identity_suite, pm_property_suite)
from .padic import PadicField, different_valuation, make_field
from .period import period_exponents
from .report import Case
from .series import MultiSeries, TruncSeries


class UsageError(ValueError):
    """Settings that a suite cannot run with."""


@dataclass
class Settings:
    p: int = 3
    f: int = 1
    e: int = 1
    pi: int | None = None
    trunc: int = 16
    prec: int = 80
    assertion: int = 20
    deg: int = 8
    mmax: int | None = None
    nmax: int | None = None
    frobenius: str = "default"

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, d: dict) -> "Settings":
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise UsageError(f"unknown settings: {sorted(unknown)}")
        return cls(**d)


def build_field(st: Settings) -> PadicField:
    try:
        return make_field(st.p, st.f, st.e, precision=st.prec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def build_group(st: Settings, field: PadicField | None = None, N: int | None = None) -> LubinTateGroup:
    F = field or build_field(st)
    N = st.trunc if N is None else N
    if st.frobenius == "multiplicative":
        if F.degree != 1:
            raise UsageError("the multiplicative Frobenius needs L = Q_p")
        return LubinTateGroup(F, F.p, multiplicative_frobenius(F), N)
    if st.frobenius != "default":
        raise UsageError(f"unknown Frobenius choice {st.frobenius!r}")
    try:
        return LubinTateGroup(F, st.pi, None, N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cap(value, default):
    return default if value is None else value


def suite_constants(st: Settings) -> list[Case]:
    F = build_field(st)
    s, r = period_exponents(F)
    dv = different_valuation(F)
    q, e, p = F.q, F.e, F.p
    expected_s = Fraction(1, p - 1) - Fraction(1, e * (q - 1))
    return [
        Case("constants", {"name": "s"}, s, expected_s, s == expected_s),
        Case("constants", {"name": "different"}, dv, dv, True),
        Case("constants", {"name": "r"}, r, s + dv, r == s + dv),
        Case("constants", {"name": "torsion_radius"}, Fraction(1, e * (q - 1)), Fraction(1, e * (q - 1)), True),
        Case("constants", {"name": "disk_threshold"}, Fraction(q, e * (q - 1)), Fraction(q, e * (q - 1)), True),
    ]


def suite_ltaxioms(st: Settings) -> list[Case]:
    G = build_group(st)
    F, prec = G.field, st.assertion
    law = G.group_law()
    cases = [
        Case("ltaxioms", {"axiom": "identity"}, identity_defect(law, prec), None, identity_defect(law, prec) is None),
        Case("ltaxioms", {"axiom": "symmetry"}, symmetry_defect(law, prec), None, symmetry_defect(law, prec) is None),
    ]
    assoc = associativity_defect(law, prec)
    cases.append(Case("ltaxioms", {"axiom": "associativity"}, assoc, None, assoc is None))
    minv = min(c.valuation() for c in law.terms.values() if not c.is_zero())
    cases.append(Case("ltaxioms", {"axiom": "integrality"}, minv, Fraction(0), minv >= 0))
    fX = law.compose_into(G.frobenius)
    Xf = MultiSeries.from_univariate(G.frobenius, 2, 0)
    Yf = MultiSeries.from_univariate(G.frobenius, 2, 1)
    comm = law.substitute([Xf, Yf])
    cases.append(Case("ltaxioms", {"axiom": "frobenius_endomorphism"}, fX.first_difference(comm, prec),
                      None, fX.equals(comm, prec)))
    names = [("1", F.one()), ("-1", -F.one()), ("2", F(2)), ("pi", G.pi), ("pi+1", G.pi + 1)]
    for an, a in names:
        for bn, b in names:
            Ea, Eb = G.endomorphism(a), G.endomorphism(b)
            prod = Ea.compose(Eb)
            d = prod.first_difference(G.endomorphism(a * b), prec)
            cases.append(Case("ltaxioms", {"axiom": "[a][b]=[ab]", "a": an, "b": bn}, d, None, d is None))
            s = compose_bivariate(law, Ea, Eb)
            d = s.first_difference(G.endomorphism(a + b), prec)
            cases.append(Case("ltaxioms", {"axiom": "F([a],[b])=[a+b]", "a": an, "b": bn}, d, None, d is None))
    log = G.formal_log()
    add = law.compose_into(log) - MultiSeries.from_univariate(log, 2, 0) - MultiSeries.from_univariate(log, 2, 1)
    cases.append(Case("ltaxioms", {"axiom": "log_additive"}, None, None, add.is_zero(prec)))
    ident = TruncSeries.variable(F, G.N)
    d = G.formal_exp().compose(log).first_difference(ident, prec)
    cases.append(Case("ltaxioms", {"axiom": "exp_log"}, d, None, d is None))
    return cases


def _torsion_levels(F: PadicField) -> int:
    return 3 if F.q < 9 else 2


def suite_torsion(st: Settings) -> list[Case]:
    G = build_group(st)
    F = G.field
    q, e = F.q, F.e
    cases = []
    for n in range(1, _torsion_levels(F) + 1):
        got = G.torsion_valuations(n)
        want = [(Fraction(1, e * q ** (n - 1) * (q - 1)), q ** n - q ** (n - 1))]
        cases.append(Case("lemma32", {"kind": "torsion", "n": n}, got, want, got == want))
    thr = Fraction(q, e * (q - 1))
    for v in (thr / 3, thr / 2, thr, thr + Fraction(1, 7), 2 * thr, 3 * thr):
        law = G.disk_preimage_law(v)
        if v <= thr:
            want = [(v / q, q)]
        else:
            want = sorted([(v - Fraction(1, e), 1), (Fraction(1, e * (q - 1)), q - 1)], reverse=True)
        got = sorted(law.valuations, reverse=True)
        regime_ok = law.regime == ("single-slope" if v <= thr else "split")
        cases.append(Case("lemma32", {"kind": "disk", "v_r": v}, {"regime": law.regime, "valuations": got},
                          {"valuations": want}, regime_ok and got == want))
    return cases


def suite_basis(st: Settings) -> list[Case]:
    G = build_group(st)
    mmax = _cap(st.mmax, 12)
    basis = MahlerBasis(G, max(mmax, 8))
    cases = pm_property_suite(basis, mmax, 8, st.assertion)
    if G.is_multiplicative:
        F = G.field
        for m in range(mmax + 1):
            # coefficients of binom(Y, m) from the falling factorial, computed over Q
            poly = [Fraction(1)]
            for k in range(m):
                poly = [Fraction(0)] + poly
                for j in range(len(poly) - 1):
                    poly[j] -= k * poly[j + 1]
            fact = math.factorial(m)
            ok = all((basis.coeffs[m][j] - F(c / fact)).is_zero(st.assertion) for j, c in enumerate(poly))
            cases.append(Case("lemma42", {"property": "binomial", "m": m}, "P_m", "binom(Y,m)", ok))
    return cases


def suite_shifted_norm(st: Settings) -> list[Case]:
    G = build_group(st)
    mmax, nmax = _cap(st.mmax, 40), _cap(st.nmax, 3)
    basis = MahlerBasis(G, mmax)
    tables = NormTables(basis)
    cases = []
    omega = G.period_value
    if omega is not None:
        # the concrete period must make every P_i(Omega) integral
        for i in range(mmax + 1):
            v = basis.at(i, omega).valuation()
            cases.append(Case("lemma43", {"kind": "period_integrality", "i": i}, v, Fraction(0), v >= 0))
    for aname, a in (("0", 0), ("1", 1), ("pi", G.pi)):
        for n in range(1, nmax + 1):
            for m in range(mmax + 1):
                r = norm_estimate_43(basis, m, a, n, tables)
                cases.append(Case("lemma43", {"kind": "estimate", "m": m, "n": n, "a": aname}, r.lhs, r.rhs, r.holds,
                                  {"exact": r.exact, "certificate": r.certificate}))
    return cases


def suite_norm_growth(st: Settings) -> list[Case]:
    G = build_group(st)
    mmax, nmax = _cap(st.mmax, 40), _cap(st.nmax, 3)
    basis = MahlerBasis(G, mmax)
    tables = NormTables(basis)
    cases = []
    for n in range(1, nmax + 1):
        for m in range(1, mmax + 1):
            r = norm_estimate_44(basis, m, n, tables)
            cases.append(Case("lemma44", {"m": m, "n": n}, r.lhs, r.rhs, r.holds))
    return cases


def suite_pairing(st: Settings) -> list[Case]:
    nmax = _cap(st.nmax, 6)
    G = build_group(st, N=max(st.trunc, nmax + 1))
    basis = MahlerBasis(G, max(nmax, _cap(st.mmax, 6)))
    return pairing_identity_suite(basis, nmax, _cap(st.mmax, 6), st.assertion)


def suite_round_trip(st: Settings) -> list[Case]:
    G = build_group(st)
    F = G.field
    basis = MahlerBasis(G, st.deg)
    cases = []
    for n in range(st.deg + 1):
        f = graded_poly(F, [0] * n + [1])
        ex = mahler_expand(basis, f)
        ok = graded_equal(ex.reconstruct(), f, st.assertion)
        cases.append(Case("thm47", {"kind": "round_trip", "n": n}, ex.coefficients, f"x^{n}", ok))
        if G.is_multiplicative:
            one = F.one()
            for m, c in enumerate(ex.coefficients):
                oracle = finite_difference([0] * n + [1], m)
                val = c.evaluate(one)
                cases.append(Case("thm47", {"kind": "finite_difference", "n": n, "m": m}, val, oracle,
                                  (val - F(oracle)).is_zero(st.assertion)))
    return cases


def suite_mellin(st: Settings) -> list[Case]:
    if st.f != 1 or st.e != 1 or st.p < 3:
        raise UsageError("the Mellin check runs over Q_p with p >= 3")
    p = st.p
    nmax = _cap(st.nmax, 6)
    cases = []
    for a in sorted({1, 2, p - 1}):
        for n in range(nmax + 1):
            i = n % (p - 1)
            t = mellin_demo(p, a, n, i, precision=st.prec)
            cases.append(Case("prop51", {"kind": "mellin", "a": a, "n": n, "i": i}, t.lhs, t.rhs, t.agree(15),
                              {"mid": t.mid}))
    F = make_field(p, precision=st.prec)
    for a in sorted({1, 2, p - 1}):
        r = units_support_check(p, dirac_transform(F, a, 8), 8)
        cases.append(Case("prop51", {"kind": "support", "F": f"(1+Z)^{a}"}, r.supported, True, r.supported))
    r = units_support_check(p, [1], 8)
    cases.append(Case("prop51", {"kind": "support", "F": "1"}, r.supported, False, not r.supported))
    return cases


def suite_experiment(st: Settings) -> list[Case]:
    G = build_group(st)
    return coefficient_bound_experiment(G, _cap(st.mmax, 30))


SUITES = {
    "constants": suite_constants,
    "ltaxioms": suite_ltaxioms,
    "lemma32": suite_torsion,
    "lemma42": suite_basis,
    "lemma43": suite_shifted_norm,
    "lemma44": suite_norm_growth,
    "lemma46": suite_pairing,
    "thm47": suite_round_trip,
    "prop51": suite_mellin,
    "experiment": suite_experiment,
}


def run_suite(name: str, st: Settings) -> list[Case]:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](st)


def make_manifest(name: str, st: Settings, cases: list[Case], wall_ms: int) -> dict:
    return {
        "tool_version": __version__,
        "suite": name,
        "field": build_field(st).to_json(),
        "settings": st.to_json(),
        "report": {"cases": [c.to_json() for c in cases]},
        "wall_clock_ms": int(wall_ms),
    }
