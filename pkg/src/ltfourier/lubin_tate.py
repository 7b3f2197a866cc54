"""Lubin-Tate formal groups: group law, endomorphisms, logarithm, torsion."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .newton import NewtonPolygon, newton_polygon
from .padic import PadicElement, PadicField, PrecisionError
from .period import PeriodRing
from .series import (ASSERTION_PRECISION, MultiSeries, TruncSeries, exp_log_precision_requirement,
                     reversion)

DEFAULT_TRUNC = 16


def _key(a: PadicElement):
    return (a.shift, a.coeffs, a.prec)


def poly_compose(g: list, h: list, zero) -> list:
    """Exact composition of polynomials given as coefficient lists (constant first)."""
    out = [g[-1]]
    for c in reversed(g[:-1]):
        prod = [zero] * (len(out) + len(h) - 1)
        for i, x in enumerate(out):
            if x.is_zero():
                continue
            for j, y in enumerate(h):
                if not y.is_zero():
                    prod[i + j] = prod[i + j] + x * y
        prod[0] = prod[0] + c
        out = prod
    return out


@dataclass(frozen=True)
class DiskPreimage:
    regime: str  # "single-slope" or "split"
    valuations: list  # (root valuation, multiplicity)
    threshold: Fraction
    polygon: NewtonPolygon

    @property
    def preimage_valuation(self):
        return self.valuations[0][0] if self.regime == "single-slope" else [v for v, _ in self.valuations]


class LubinTateGroup:
    """Lubin-Tate formal group of a Frobenius polynomial f = [pi] over the integers of a field.

    The default Frobenius is pi*Z + Z^q.  Series are computed lazily and cached;
    cache population is serialized so concurrent readers only see finished series.
    """

    def __init__(self, field: PadicField, pi: PadicElement | int | None = None,
                 frobenius=None, N: int = DEFAULT_TRUNC):
        self.field = field
        self.N = N
        self.q = field.q
        self.pi = field.uniformizer if pi is None else field.coerce(pi)
        if self.pi.valuation() != Fraction(1, field.e):
            raise ValueError(f"pi must have valuation 1/{field.e}, got {self.pi.valuation()}")
        if frobenius is None:
            poly = [field.zero()] * (self.q + 1)
            poly[1] = self.pi
            poly[self.q] = field.one()
        else:
            coeffs = frobenius.coeffs if isinstance(frobenius, TruncSeries) else frobenius
            poly = [field.coerce(c) for c in coeffs]
            while len(poly) > 2 and poly[-1].is_zero():
                poly.pop()
        self._validate(poly)
        self.frobenius_poly = poly
        self.frobenius = TruncSeries(field, poly[: N + 1], N)
        self._lock = threading.RLock()
        self._cache: dict = {}
        self._endo: dict = {}

    def _validate(self, poly: list) -> None:
        F, q = self.field, self.q
        if not poly[0].is_zero():
            raise ValueError("Frobenius series must vanish at 0")
        if len(poly) < 2 or not (poly[1] - self.pi).is_zero():
            raise ValueError("Frobenius series must be congruent to pi*Z modulo degree 2")
        if len(poly) <= q:
            raise ValueError(f"Frobenius series must be congruent to Z^{q} modulo pi")
        bound = Fraction(1, F.e)
        for k in range(2, len(poly)):
            d = poly[k] - (1 if k == q else 0)
            if d.valuation() < bound:
                raise ValueError(f"Frobenius coefficient of Z^{k} violates the congruence modulo pi")

    # -- cached construction ---------------------------------------------------
    def _cached(self, key, build):
        val = self._cache.get(key)
        if val is None:
            with self._lock:
                val = self._cache.get(key)
                if val is None:
                    val = build()
                    self._cache[key] = val
        return val

    @property
    def is_multiplicative(self) -> bool:
        """True when f = (1+Z)^p - 1 with pi = p (the multiplicative group over Q_p)."""
        F = self.field
        if F.degree != 1:
            return False
        p = F.p
        poly = self.frobenius_poly
        if len(poly) != p + 1:
            return False
        return poly[0].is_zero() and all((poly[k] - comb(p, k)).is_zero() for k in range(1, p + 1))

    @property
    def period_value(self) -> PadicElement | None:
        """A concrete period when one is known, else None.

        Over Q_p with pi = p the group is isomorphic over Z_p to the multiplicative
        group by a series with linear term 1; that isomorphism generates the
        homomorphisms to G_m and gives Omega = 1.
        """
        F = self.field
        if F.degree == 1 and (self.pi - F.p).is_zero():
            return F.one()
        return None

    def _frob_powers(self, N: int) -> list[TruncSeries]:
        def build():
            f = TruncSeries(self.field, self.frobenius_poly[: N + 1], N)
            return f.powers(N)
        return self._cached(("fpow", N), build)

    def _apply_frobenius(self, h):
        """f(h) for a univariate or multivariate series h (sparse in f's coefficients)."""
        poly = self.frobenius_poly
        out = None
        power = h
        for deg in range(1, len(poly)):
            if deg > 1:
                power = power * h
            c = poly[deg]
            if c.is_zero():
                continue
            term = power * c
            out = term if out is None else out + term
        return out

    def group_law(self) -> MultiSeries:
        """F(X, Y) modulo total degree N+1, lifted degree by degree."""
        return self._cached("F", self._build_group_law)

    def _build_group_law(self) -> MultiSeries:
        F, N, pi = self.field, self.N, self.pi
        fX = self._frob_powers(N)  # powers of f, used for both variables
        terms = {(1, 0): F.one(), (0, 1): F.one()}
        for r in range(2, N + 1):
            law = MultiSeries._raw(F, 2, r, dict(terms))
            # degree-r part of F(f(X), f(Y))
            sub: dict = {}
            for (i, j), c in terms.items():
                Pi, Pj = fX[i].coeffs, fX[j].coeffs
                for a in range(i, r - j + 1):
                    x = Pi[a]
                    if x.is_zero():
                        continue
                    y = Pj[r - a]
                    if y.is_zero():
                        continue
                    k = (a, r - a)
                    t = c * x * y
                    sub[k] = sub[k] + t if k in sub else t
            flaw = self._apply_frobenius(law).homogeneous_part(r).terms
            denom = (pi - pi ** r).inverse()
            for k in set(sub) | set(flaw):
                d = sub.get(k, F.zero()) - flaw.get(k, F.zero())
                if not d.is_zero():
                    terms[k] = d * denom
        law = MultiSeries._raw(F, 2, N, terms)
        for c in terms.values():
            if c.valuation() < 0:
                raise PrecisionError("group law lifting produced a non-integral coefficient")
        return law

    def endomorphism(self, a) -> TruncSeries:
        """[a](Z) modulo degree N+1 for a in the integers of the field."""
        a = self.field.coerce(a)
        if not a.is_zero() and a.valuation() < 0:
            raise ValueError("endomorphisms exist only for integral a")
        key = _key(a)
        val = self._endo.get(key)
        if val is not None:
            return val
        with self._lock:
            if key not in self._endo:
                self._endo[key] = self._build_endo(a)
            return self._endo[key]

    def _build_endo(self, a: PadicElement) -> TruncSeries:
        F, N, pi = self.field, self.N, self.pi
        f = self.frobenius
        coeffs = [F.zero()] * (N + 1)
        coeffs[1] = a
        for r in range(2, N + 1):
            A = TruncSeries._raw(F, coeffs[: r + 1], r)
            fr = f.truncate(r)
            diff = A.compose(fr)[r] - self._apply_frobenius(A)[r]
            if not diff.is_zero():
                coeffs[r] = diff * (pi - pi ** r).inverse()
        return TruncSeries._raw(F, coeffs, N)

    def invariant_differential_series(self, order: int | None = None) -> TruncSeries:
        """D(Z) = dF/dY(Z, 0), solved from D * f' = pi * D(f) without the group law."""
        order = self.N if order is None else order
        return self._cached(("D", order), lambda: self._build_D(order))

    def _build_D(self, order: int) -> TruncSeries:
        F, pi = self.field, self.pi
        fpow = self._frob_powers(order)
        fprime = TruncSeries(F, self.frobenius_poly[: order + 2], order + 1).derivative()
        d = [F.one()]
        for k in range(1, order + 1):
            acc = F.zero()
            for j in range(k):
                acc = acc + d[j] * (pi * fpow[j].coeffs[k] - fprime.coeffs[k - j])
            d.append(acc * (pi - pi ** (k + 1)).inverse())
        return TruncSeries._raw(F, d, order)

    def precision_requirement(self, order: int | None = None) -> int:
        order = self.N if order is None else order
        return exp_log_precision_requirement(order + 1, self.field.p)

    def _check_precision(self, order: int) -> None:
        need = self.precision_requirement(order)
        if self.field.working_precision < need:
            raise PrecisionError(f"order {order} needs working precision {need}, "
                                 f"field has {self.field.working_precision}")

    def formal_log(self, order: int | None = None) -> TruncSeries:
        """log_G modulo degree order+1 (default N): the integral of 1/D."""
        order = self.N if order is None else order

        def build():
            self._check_precision(order)
            D = self.invariant_differential_series(order - 1)
            return D.inverse().integral()
        return self._cached(("log", order), build)

    def formal_exp(self, order: int | None = None) -> TruncSeries:
        order = self.N if order is None else order
        return self._cached(("exp", order), lambda: reversion(self.formal_log(order)))

    def invariant_derivation(self, h: TruncSeries) -> TruncSeries:
        """The invariant derivation h'/log_G'; drops one order of truncation."""
        D = self.invariant_differential_series(max(h.trunc - 1, 0)).truncate(max(h.trunc - 1, 0))
        if D.ring != h.ring:
            D = D.change_ring(h.ring)
        return h.derivative() * D

    def pm_coefficients(self, M: int) -> list[list[PadicElement]]:
        """a[m][j] with P_m(Y) = sum_j a[m][j] Y^j, from exp(Y log_G(Z))."""
        def build():
            F = self.field
            log = self.formal_log(max(M, 1))
            pows = log.powers(M)
            out = [[F.one()]]
            fact = 1
            inv_fact = [F.one()]
            for j in range(1, M + 1):
                fact *= j
                inv_fact.append(F(Fraction(1, fact)))
            for m in range(1, M + 1):
                out.append([F.zero()] + [pows[j].coeffs[m] * inv_fact[j] for j in range(1, m + 1)])
            return out
        return self._cached(("pm", M), build)

    def gm_hom_series(self, a, N: int | None = None) -> TruncSeries:
        """sum_{m>=1} P_m(a*Omega) Z^m as a series over period scalars."""
        N = self.N if N is None else N
        F = self.field
        a = F.coerce(a)
        R = PeriodRing(F)
        A = self.pm_coefficients(N)
        coeffs = [R.zero()]
        for m in range(1, N + 1):
            terms = {}
            apow = F.one()
            for j in range(1, m + 1):
                apow = apow * a
                terms[j] = A[m][j] * apow
            coeffs.append(R.coerce(0) + _ps(F, terms, R))
        return TruncSeries._raw(R, coeffs, N)

    # -- torsion and disks -----------------------------------------------------
    def iterate_frobenius(self, n: int) -> list[PadicElement]:
        """[pi^n](Z) as an exact polynomial (n >= 0)."""
        F = self.field
        out = [F.zero(), F.one()]
        for _ in range(n):
            out = poly_compose(self.frobenius_poly, out, F.zero())
        return out

    def torsion_polygon(self, n: int) -> NewtonPolygon:
        """Newton polygon of [pi^n]/[pi^(n-1)], whose roots are the new level-n torsion."""
        if n < 1:
            raise ValueError("torsion level must be at least 1")
        F = self.field
        deg = (len(self.frobenius_poly) - 1) ** n
        if deg > 4096:
            raise ValueError(f"torsion polynomial degree {deg} too large")
        g = self.frobenius_poly[1:]  # f / Z
        inner = self.iterate_frobenius(n - 1)
        quotient = poly_compose(g, inner, F.zero())
        return newton_polygon((i, c.valuation()) for i, c in enumerate(quotient))

    def torsion_valuations(self, n: int) -> list[tuple[Fraction, int]]:
        return self.torsion_polygon(n).root_valuations()

    def disk_preimage_law(self, v_r) -> DiskPreimage:
        """Valuations of the solutions of f(Z) = w for v(w) = v_r."""
        v_r = Fraction(v_r)
        if v_r <= 0:
            raise ValueError("radius exponent must be positive")
        F, q = self.field, self.q
        pts = [(0, v_r)] + [(k, c.valuation()) for k, c in enumerate(self.frobenius_poly) if k >= 1]
        poly = newton_polygon(pts)
        vals = poly.root_valuations()
        regime = "single-slope" if len(vals) == 1 else "split"
        return DiskPreimage(regime, vals, Fraction(q, F.e * (q - 1)), poly)

    def __repr__(self) -> str:
        return f"LubinTateGroup({self.field!r}, pi={self.pi!r}, N={self.N})"


def _ps(F, terms, R):
    from .period import PeriodScalar
    return PeriodScalar(F, terms, R.s)


def make_lt_group(field: PadicField, pi=None, frobenius=None, N: int = DEFAULT_TRUNC) -> LubinTateGroup:
    return LubinTateGroup(field, pi, frobenius, N)


def multiplicative_frobenius(field: PadicField) -> list[int]:
    """Coefficients of (1+Z)^p - 1."""
    p = field.p
    return [0] + [comb(p, k) for k in range(1, p + 1)]


# -- axiom checks ------------------------------------------------------------

def compose_bivariate(law: MultiSeries, A: TruncSeries, B: TruncSeries) -> TruncSeries:
    """law(A(Z), B(Z)) for univariate A, B without constant term."""
    F = law.ring
    N = min(law.trunc, A.trunc, B.trunc)
    A, B = A.truncate(N), B.truncate(N)
    Bp = B.powers(N)
    rows: dict = {}
    for (i, j), c in law.terms.items():
        if i + j <= N:
            rows.setdefault(i, []).append((j, c))
    out = TruncSeries.constant(F, 0, N)
    Ap = TruncSeries.constant(F, 1, N)
    for i in range(N + 1):
        if i:
            Ap = Ap * A
        if i not in rows:
            continue
        inner = [F.zero()] * (N + 1)
        for j, c in rows[i]:
            for k, x in enumerate(Bp[j].coeffs):
                if not x.is_zero():
                    inner[k] = inner[k] + c * x
        out = out + Ap * TruncSeries._raw(F, inner, N)
    return out


def law_powers(law: MultiSeries) -> list[MultiSeries]:
    out = [MultiSeries.constant(law.ring, 2, 1, law.trunc)]
    for _ in range(law.trunc):
        out.append(out[-1] * law)
    return out


def associativity_defect(law: MultiSeries, prec=ASSERTION_PRECISION):
    """First (a, b, c) where F(F(X,Y),W) and F(X,F(Y,W)) differ, or None."""
    N = law.trunc
    F = law.ring
    pows = law_powers(law)
    c = law.terms
    zero = F.zero()
    for d in range(N + 1):
        for a in range(d + 1):
            for b in range(d - a + 1):
                w = d - a - b
                lhs = zero
                for i in range(a + b + 1):
                    cij = c.get((i, w))
                    if cij is not None:
                        x = pows[i].terms.get((a, b))
                        if x is not None:
                            lhs = lhs + cij * x
                rhs = zero
                for j in range(b + w + 1):
                    cij = c.get((a, j))
                    if cij is not None:
                        x = pows[j].terms.get((b, w))
                        if x is not None:
                            rhs = rhs + cij * x
                if not (lhs - rhs).is_zero(prec):
                    return (a, b, w)
    return None


def symmetry_defect(law: MultiSeries, prec=ASSERTION_PRECISION):
    for (i, j), c in law.terms.items():
        if not (c - law.coefficient((j, i))).is_zero(prec):
            return (i, j)
    return None


def identity_defect(law: MultiSeries, prec=ASSERTION_PRECISION):
    for (i, j), c in law.terms.items():
        if (i == 0 or j == 0) and not (c - (1 if i + j == 1 else 0)).is_zero(prec):
            return (i, j)
    for k in ((1, 0), (0, 1)):
        if k not in law.terms:
            return k
    return None
