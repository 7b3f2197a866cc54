"""Generalized Mahler basis P_m, the pairing {F, f}, expansions and norm estimates."""
from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lubin_tate import LubinTateGroup
from .padic import PadicElement, PadicField, vp
from .period import PeriodRing, PeriodScalar, period_exponents
from .report import Case
from .series import ASSERTION_PRECISION, TruncSeries

GradedPoly = list  # coefficient of x^n, as PeriodScalar


class MahlerBasis:
    """P_0, ..., P_M of a Lubin-Tate group with coefficients a[m][j]."""

    def __init__(self, group: LubinTateGroup, M: int):
        self.group = group
        self.field = group.field
        self.M = M
        self.ring = PeriodRing(self.field)
        self.s = self.ring.s
        self.coeffs = group.pm_coefficients(M)
        self._d: list | None = None

    def poly(self, m: int) -> list[PadicElement]:
        return self.coeffs[m]

    def degree(self, m: int) -> int:
        cs = self.coeffs[m]
        for j in range(len(cs) - 1, -1, -1):
            if not cs[j].is_zero():
                return j
        return -1

    def at(self, m: int, y) -> PadicElement:
        """P_m(y) for a field element y."""
        y = self.field.coerce(y)
        out = self.field.zero()
        for c in reversed(self.coeffs[m]):
            out = out * y + c
        return out

    def at_omega(self, m: int, a=1) -> PeriodScalar:
        """P_m(a*Omega) as a graded scalar."""
        a = self.field.coerce(a)
        terms, apow = {}, self.field.one()
        for j, c in enumerate(self.coeffs[m]):
            terms[j] = c * apow
            apow = apow * a
        return PeriodScalar(self.field, terms, self.s)

    def graded(self, m: int) -> GradedPoly:
        """The polynomial x -> P_m(x*Omega) with graded coefficients a[m][j] Omega^j."""
        return [PeriodScalar(self.field, {j: c}, self.s) for j, c in enumerate(self.coeffs[m])]

    def coefficient_valuation(self, m: int, j: int):
        return self.coeffs[m][j].valuation()

    def d_matrix(self, T: int) -> list[list[PadicElement]]:
        """d[m][n] = (invariant derivation applied n times to Z^m) at 0, for m, n <= T."""
        if self._d is not None and len(self._d) > T:
            return self._d
        F, G = self.field, self.group
        out = []
        for m in range(T + 1):
            h = TruncSeries.monomial(F, m, T)
            row = []
            for n in range(T + 1):
                row.append(h[0])
                if n < T:
                    h = G.invariant_derivation(h)
            out.append(row)
        self._d = out
        return out


def mahler_basis(group: LubinTateGroup, M: int) -> MahlerBasis:
    return MahlerBasis(group, M)


# -- graded polynomials -------------------------------------------------------

def graded_poly(field: PadicField, coeffs: Sequence) -> GradedPoly:
    R = PeriodRing(field)
    return [R.coerce(c) for c in coeffs]


def graded_equal(f: GradedPoly, g: GradedPoly, prec=ASSERTION_PRECISION) -> bool:
    n = max(len(f), len(g))
    for k in range(n):
        a = f[k] if k < len(f) else None
        b = g[k] if k < len(g) else None
        if a is None:
            a, b = b, None
        d = a if b is None else a - b
        if not d.is_zero(prec):
            return False
    return True


def graded_add(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    n = max(len(f), len(g))
    out = []
    for k in range(n):
        if k < len(f) and k < len(g):
            out.append(f[k] + g[k])
        else:
            out.append(f[k] if k < len(f) else g[k])
    return out


def poly_shift(field: PadicField, f: GradedPoly, a) -> GradedPoly:
    """x -> f(a + x)."""
    a = field.coerce(a)
    out = [f[0] * 0 for _ in f]
    apow = [field.one()]
    for _ in range(len(f)):
        apow.append(apow[-1] * a)
    for n, c in enumerate(f):
        for k in range(n + 1):
            out[k] = out[k] + c * (apow[n - k] * math.comb(n, k))
    return out


def poly_scale_arg(field: PadicField, f: GradedPoly, a) -> GradedPoly:
    """x -> f(a x)."""
    a = field.coerce(a)
    return [c * a ** n for n, c in enumerate(f)]


def poly_derivative(f: GradedPoly) -> GradedPoly:
    return [f[n] * n for n in range(1, len(f))] or [f[0] * 0]


def poly_times_x(f: GradedPoly) -> GradedPoly:
    return [f[0] * 0] + list(f)


def poly_value(field: PadicField, f: GradedPoly, a) -> PeriodScalar:
    a = field.coerce(a)
    out = f[-1]
    for c in reversed(f[:-1]):
        out = out * a + c
    return out


def parse_polynomial(text: str) -> list[Fraction]:
    """Rational coefficients of a polynomial in x written like "3*x^2 - x/2 + 1"."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node) -> list[Fraction]:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return [Fraction(node.value)]
        if isinstance(node, ast.Name) and node.id == "x":
            return [Fraction(0), Fraction(1)]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return [-c for c in v] if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)
                        and node.right.value >= 0):
                    raise ValueError("exponents must be non-negative integers")
                out = [Fraction(1)]
                for _ in range(node.right.value):
                    out = _pmul(out, a)
                return out
            b = ev(node.right)
            if isinstance(node.op, ast.Add):
                return _padd(a, b)
            if isinstance(node.op, ast.Sub):
                return _padd(a, [-c for c in b])
            if isinstance(node.op, ast.Mult):
                return _pmul(a, b)
            if isinstance(node.op, ast.Div):
                if len(b) != 1 or b[0] == 0:
                    raise ValueError("can only divide by a nonzero constant")
                return [c / b[0] for c in a]
        raise ValueError(f"unsupported polynomial syntax: {text!r}")

    out = ev(tree)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# -- P_m properties -------------------------------------------------------------

def pm_property_suite(basis: MahlerBasis, mmax: int | None = None, kmax: int = 8,
                      prec=ASSERTION_PRECISION) -> list[Case]:
    F = basis.field
    mmax = basis.M if mmax is None else mmax
    a = basis.coeffs
    cases = []
    p1 = (a[0][0] - 1).is_zero(prec) and (a[1][1] - 1).is_zero(prec) and a[1][0].is_zero(prec)
    cases.append(Case("lemma42", {"property": 1}, "P0,P1", "1,Y", p1))
    fact = 1
    for m in range(1, mmax + 1):
        fact *= m
        cases.append(Case("lemma42", {"property": 2, "m": m}, a[m][0], 0, a[m][0].is_zero(prec)))
        lead = a[m][m]
        ok = (lead - F(Fraction(1, fact))).is_zero(prec) and basis.degree(m) == m
        cases.append(Case("lemma42", {"property": 3, "m": m}, lead.valuation(), -vp(fact, F.p), ok))
    # (4): coefficient of Y^u Y'^w on both sides
    for m in range(mmax + 1):
        bad = None
        for u in range(m + 1):
            for w in range(m + 1 - u):
                lhs = a[m][u + w] * math.comb(u + w, u)
                rhs = F.zero()
                for i in range(u, m - w + 1):
                    rhs = rhs + a[i][u] * a[m - i][w]
                if not (lhs - rhs).is_zero(prec):
                    bad = (u, w)
                    break
            if bad:
                break
        cases.append(Case("lemma42", {"property": 4, "m": m}, "P_m(Y+Y')", "sum P_i(Y)P_j(Y')",
                          bad is None, {"first_bad_monomial": list(bad)} if bad else {}))
    # (6): (P_m(d) Z^k)(0) = (1/m!) (d/dZ)^m Z^k at 0 = [m == k]
    d = basis.d_matrix(max(mmax, kmax))
    for k in range(kmax + 1):
        for m in range(mmax + 1):
            lhs = F.zero()
            for j in range(m + 1):
                lhs = lhs + a[m][j] * d[k][j]
            rhs = F.one() if m == k else F.zero()
            cases.append(Case("lemma42", {"property": 6, "m": m, "k": k}, lhs, rhs,
                              (lhs - rhs).is_zero(prec)))
    return cases


# -- pairing ------------------------------------------------------------------

def pairing_monomial(basis: MahlerBasis, m: int, n: int) -> PeriodScalar:
    """{Z^m, x^n} = Omega^(-n) * d[m][n]."""
    if m > n:
        return basis.ring.zero()
    d = basis.d_matrix(n)
    return PeriodScalar(basis.field, {-n: d[m][n]}, basis.s)


def pairing(basis: MahlerBasis, Fser: TruncSeries, f: Sequence) -> PeriodScalar:
    """{F, f} for a series F (field or period coefficients) and a polynomial f."""
    R = basis.ring
    f = [R.coerce(c) for c in f]
    deg = len(f) - 1
    if Fser.trunc < deg:
        raise ValueError(f"series truncated at {Fser.trunc} cannot pair with degree {deg}")
    if Fser.ring != R:
        Fser = Fser.change_ring(R)
    d = basis.d_matrix(deg)
    out = R.zero()
    for n, c in enumerate(f):
        if c.is_zero():
            continue
        acc = R.zero()
        for m in range(n + 1):
            Fm = Fser.coeffs[m]
            if Fm.is_zero():
                continue
            acc = acc + Fm * d[m][n]
        out = out + (acc * c).shift_grade(-n)
    return out


def _monomial(R, n: int, coeff=1) -> GradedPoly:
    return [R.zero()] * n + [R.coerce(coeff)]


def pairing_identity_suite(basis: MahlerBasis, nmax: int = 6, mmax: int = 6,
                           prec=ASSERTION_PRECISION) -> list[Case]:
    G, F, R = basis.group, basis.field, basis.ring
    T = nmax + 1
    if T > G.N:
        raise ValueError("group truncation too small for the pairing suite")
    pi = G.pi
    family = [(f"Z^{m}", TruncSeries.monomial(R, m, T)) for m in range(mmax + 1)]
    family += [(f"F_a[a={name}]", G.gm_hom_series(a, T)) for name, a in (("1", 1), ("pi", pi))]
    polys = [(f"x^{n}", _monomial(R, n)) for n in range(nmax + 1)]
    scalars = [("0", F.zero()), ("1", F.one()), ("pi", pi), ("2", F(2))]
    cases: list[Case] = []

    def add(item, Fname, fname, lhs, rhs, extra=None):
        params = {"item": item, "F": Fname, "f": fname}
        params.update(extra or {})
        cases.append(Case("lemma46", params, lhs, rhs, (lhs - rhs).is_zero(prec)))

    one = TruncSeries.constant(R, 1, T)
    log = G.formal_log(T).change_ring(R)
    omega = R.omega()
    for fname, f in polys:
        add(1, "1", fname, pairing(basis, one, f), f[0])
    for aname, a in scalars[1:3]:
        Fa = G.gm_hom_series(a, T)
        for fname, f in polys:
            add(2, f"F_a[a={aname}]", fname, pairing(basis, Fa, f),
                poly_value(F, f, a) - f[0], {"a": aname})
    for aname, a in scalars:
        Fa = G.gm_hom_series(a, T)
        for Fname, Fs in family:
            for fname, f in polys:
                lhs = pairing(basis, Fa * Fs, f)
                rhs = pairing(basis, Fs, graded_add(poly_shift(F, f, a), [-c for c in f]))
                add(4, Fname, fname, lhs, rhs, {"a": aname})
    for aname, a in scalars[1:]:
        endo = G.endomorphism(a).truncate(T).change_ring(R)
        for Fname, Fs in family:
            comp = Fs.compose(endo)
            for fname, f in polys:
                add(6, Fname, fname, pairing(basis, Fs, poly_scale_arg(F, f, a)),
                    pairing(basis, comp, f), {"a": aname})
    for Fname, Fs in family:
        lF = (log * Fs).scale(omega)
        dF = G.invariant_derivation(Fs).scale(omega.inverse())
        for fname, f in polys:
            add(7, Fname, fname, pairing(basis, Fs, poly_derivative(f)), pairing(basis, lF, f))
            if len(f) <= nmax:
                add(8, Fname, fname, pairing(basis, Fs, poly_times_x(f)), pairing(basis, dF, f))
        for m in range(min(nmax, basis.M) + 1):
            add(9, Fname, f"P_{m}", pairing(basis, Fs, basis.graded(m)), Fs.coeffs[m])
    return cases


# -- expansions -----------------------------------------------------------------

@dataclass
class MahlerExpansion:
    basis: MahlerBasis
    coefficients: list  # PeriodScalar c_m

    def reconstruct(self) -> GradedPoly:
        R = self.basis.ring
        out = [R.zero()] * len(self.coefficients)
        for m, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            out = graded_add(out, [c * t for t in self.basis.graded(m)])
        return out

    def to_json(self) -> dict:
        return {"coefficients": [c.to_json() for c in self.coefficients]}


def mahler_expand(basis: MahlerBasis, f: Sequence) -> MahlerExpansion:
    R = basis.ring
    f = [R.coerce(c) for c in f]
    deg = len(f) - 1
    if deg > basis.M:
        raise ValueError(f"degree {deg} exceeds the basis cap {basis.M}")
    coeffs = [pairing(basis, TruncSeries.monomial(R, m, deg), f) for m in range(deg + 1)]
    return MahlerExpansion(basis, coeffs)


# -- norm estimates ---------------------------------------------------------------

@dataclass(frozen=True)
class Estimate:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    exact: bool
    certificate: str


class NormTables:
    """Exponents of ||P_k(Y Omega)||_{0,n} and valuation bounds of P_i(a Omega), cached per basis."""

    def __init__(self, basis: MahlerBasis):
        self.basis = basis
        self.e = basis.field.e
        self.vals = [[c.valuation() for c in row] for row in basis.coeffs]
        self._w: dict = {}
        self._v: dict = {}

    def w0(self, k: int, n: int) -> Fraction:
        key = (k, n)
        if key not in self._w:
            step = self.basis.s + Fraction(n, self.e)
            self._w[key] = min(v + j * step for j, v in enumerate(self.vals[k]) if v != math.inf)
        return self._w[key]

    def at_omega_bound(self, i: int, a: PadicElement) -> tuple[Fraction | float, bool]:
        """(termwise bound of v(P_i(a Omega)), exact)."""
        key = (i, a.shift, a.coeffs)
        if key not in self._v:
            self._v[key] = self.basis.at_omega(i, a).valuation_bound()
        return self._v[key]


def norm_estimate_43(basis: MahlerBasis, m: int, a, n: int, tables: NormTables | None = None) -> Estimate:
    """Gauss-norm exponents of ||P_m(Y Omega)||_{a,n} and max_{i<=m} ||P_i(Y Omega)||_{0,n}.

    The left side is exact when a = 0 or a concrete period is known.  Otherwise it is
    the termwise lower bound from P_m(Y + a) = sum P_i(a) P_(m-i)(Y); when that bound
    falls short the case is reported with certificate "uncertified" and holds = False.
    """
    F = basis.field
    a = F.coerce(a)
    T = tables or NormTables(basis)
    rhs = min(T.w0(i, n) for i in range(m + 1))
    omega = basis.group.period_value
    if a.is_zero():
        lhs, exact, cert = T.w0(m, n), True, "exact"
    elif omega is not None:
        lhs, exact, cert = _lhs_concrete(basis, m, a, omega, n), True, "exact"
    else:
        lhs = min(T.at_omega_bound(i, a)[0] + T.w0(m - i, n) for i in range(m + 1))
        exact = False
        cert = "termwise" if lhs >= rhs else "uncertified"
    return Estimate(lhs, rhs, lhs >= rhs, exact, cert)


def _lhs_concrete(basis: MahlerBasis, m: int, a: PadicElement, omega: PadicElement, n: int) -> Fraction:
    # coefficient of (Y-a)^l in P_m(Y Omega) is Omega^l sum_{i+k=m} P_i(a Omega) a[k][l]
    F = basis.field
    A = basis.coeffs
    b = a * omega
    pb = [basis.at(i, b) for i in range(m + 1)]
    best = math.inf
    om = F.one()
    for l in range(m + 1):
        c = F.zero()
        for k in range(l, m + 1):
            c = c + pb[m - k] * A[k][l]
        c = c * om
        om = om * omega
        v = c.valuation()
        if v != math.inf:
            best = min(best, v + Fraction(l * n, F.e))
    return best


def norm_estimate_44(basis: MahlerBasis, m: int, n: int, tables: NormTables | None = None) -> Estimate:
    if m < 1:
        raise ValueError("the estimate is stated for m >= 1")
    F = basis.field
    T = tables or NormTables(basis)
    lhs = T.w0(m, n)
    bound = Fraction(1, F.p - 1) - Fraction(m, F.e * F.q ** (n - 1) * (F.q - 1))
    return Estimate(lhs, bound, lhs > bound, True, "exact")


# -- convergence ----------------------------------------------------------------

@dataclass(frozen=True)
class Convergence:
    level: bool
    global_: bool
    alpha: Fraction | float
    beta: Fraction | float
    threshold: Fraction


def linear_profile(vals: Sequence, tail: int = 4) -> tuple[Fraction | float, Fraction | float]:
    """(alpha, beta) with v(c_m) = alpha*m + beta on the last ``tail`` differences."""
    if vals and all(v == math.inf for v in vals[-tail - 1:]):
        return math.inf, math.inf
    if len(vals) < tail + 1 or any(v == math.inf for v in vals[-tail - 1:]):
        raise ValueError("valuation profile is not eventually linear")
    tailv = [Fraction(v) for v in vals[-tail - 1:]]
    diffs = {b - a for a, b in zip(tailv, tailv[1:])}
    if len(diffs) != 1:
        raise ValueError("valuation profile is not eventually linear")
    alpha = diffs.pop()
    M = len(vals) - 1
    return alpha, tailv[-1] - alpha * M


def convergence_check(profile, field: PadicField, n: int) -> Convergence:
    """Criterion for sum c_m P_m(y Omega) given v(c_m) (a list, or an (alpha, beta) pair)."""
    if isinstance(profile, tuple) and len(profile) == 2:
        alpha, beta = Fraction(profile[0]), Fraction(profile[1])
    else:
        alpha, beta = linear_profile(list(profile))
    thr = Fraction(1, field.e * field.q ** (n - 1) * (field.q - 1))
    return Convergence(alpha > thr, alpha > 0, alpha, beta, thr)


# -- experiment -----------------------------------------------------------------

def coefficient_bound_experiment(group: LubinTateGroup, cap: int) -> list[Case]:
    """Termwise check of v(P_{m+1}(Omega)/Omega) >= -m/(e(q-1)); misses are inconclusive, not failures."""
    basis = MahlerBasis(group, cap + 1)
    F = basis.field
    cases = []
    for m in range(1, cap + 1):
        vals = basis.coeffs[m + 1]
        bound = min(c.valuation() + (j - 1) * basis.s for j, c in enumerate(vals) if not c.is_zero())
        target = Fraction(-m, F.e * (F.q - 1))
        outcome = "pass" if bound >= target else "inconclusive"
        cases.append(Case("experiment", {"m": m}, bound, target, True, {"outcome": outcome}))
    return cases


def finite_difference(f: Sequence[Fraction], m: int) -> Fraction:
    """Delta^m f(0) for a polynomial with rational coefficients."""
    def val(x):
        return sum(Fraction(c) * x ** k for k, c in enumerate(f))
    return sum((-1) ** (m - k) * math.comb(m, k) * val(k) for k in range(m + 1))


__all__ = [
    "MahlerBasis", "MahlerExpansion", "mahler_basis", "pm_property_suite", "pairing_monomial",
    "pairing", "pairing_identity_suite", "mahler_expand", "norm_estimate_43", "norm_estimate_44",
    "convergence_check", "coefficient_bound_experiment", "parse_polynomial", "graded_poly",
    "graded_equal", "NormTables", "period_exponents",
]
