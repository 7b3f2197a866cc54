"""Amice transform over Q_p, support on units, and the Mellin interpolation check."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .lubin_tate import LubinTateGroup, multiplicative_frobenius
from .padic import PadicElement, PadicField, PrecisionError, make_field, teichmuller
from .series import TruncSeries


def _check_qp(field: PadicField) -> None:
    if field.degree != 1:
        raise ValueError("the Amice transform here is implemented for L = Q_p only")


def binomial(field: PadicField, a, m: int) -> PadicElement:
    """binom(a, m) for a in Z_p."""
    a = field.coerce(a)
    out = field.one()
    for k in range(m):
        out = out * (a - k)
    fact = 1
    for k in range(2, m + 1):
        fact *= k
    return out * field(Fraction(1, fact))


def dirac_transform(field: PadicField, a, M: int) -> TruncSeries:
    """Transform of the Dirac distribution at a: (1+Z)^a modulo Z^(M+1)."""
    _check_qp(field)
    return TruncSeries(field, [binomial(field, a, m) for m in range(M + 1)], M)


def amice_transform(p: int | PadicField, data, M: int):
    """Moments lambda(binom(x, m)) to the series sum a_m Z^m, or back.

    ``data`` is either a list of moments or a :class:`TruncSeries`; the other form is returned.
    """
    field = p if isinstance(p, PadicField) else make_field(p)
    _check_qp(field)
    if isinstance(data, TruncSeries):
        if data.trunc < M:
            raise ValueError("series truncated below the requested order")
        return [data.coeffs[m] for m in range(M + 1)]
    moments = list(data)[: M + 1]
    return TruncSeries(field, moments, M)


def cyclotomic_field(p: int, precision: int = 80) -> PadicField:
    """Q_p(zeta_p) presented by the Eisenstein polynomial Phi_p(X + 1)."""
    poly = [comb(p, k + 1) for k in range(p)]  # ((X+1)^p - 1)/X, constant first
    return make_field(p, 1, p - 1, eisenstein_modulus=poly, precision=precision)


@dataclass(frozen=True)
class SupportCheck:
    supported: bool
    certified_precision: Fraction
    exact: bool


def units_support_check(p: int, F, M: int, prec: int = 15) -> SupportCheck:
    """Whether sum over zeta^p = 1 of F(zeta(1+Z) - 1) vanishes modulo Z^(M+1).

    ``F`` is a polynomial over Q_p (coefficient list or series read as a polynomial);
    the sum is computed exactly in Q_p(zeta_p).
    """
    K = cyclotomic_field(p)
    coeffs = F.coeffs if isinstance(F, TruncSeries) else list(F)
    lifted = []
    for c in coeffs:
        if isinstance(c, PadicElement):
            if c.parent.degree != 1:
                raise ValueError("coefficients must lie in Q_p")
            c = c.lift_rational()[0]
        lifted.append(K(Fraction(c)))
    zeta = K.one() + K.uniformizer
    total = TruncSeries.constant(K, 0, M)
    zk = K.one()
    for _ in range(p):
        # F(c + zeta^k Z) with c = zeta^k - 1
        inner = TruncSeries(K, [zk - 1, zk], M)
        total = total + _eval_poly(lifted, inner)
        zk = zk * zeta
    try:
        ok = total.is_zero(prec)
    except PrecisionError:
        raise PrecisionError(f"sum over p-th roots of unity not certified to ord_p {prec}")
    return SupportCheck(ok, Fraction(prec), True)


def _eval_poly(coeffs: list, h: TruncSeries) -> TruncSeries:
    # Horner evaluation; h may have a nonzero constant term since coeffs is a polynomial
    K = h.ring
    out = TruncSeries.constant(K, coeffs[-1], h.trunc)
    for c in reversed(coeffs[:-1]):
        out = out * h + c
    return out


@dataclass(frozen=True)
class MellinTriple:
    lhs: PadicElement
    mid: PadicElement
    rhs: PadicElement

    def agree(self, prec: int = 15) -> bool:
        return (self.lhs - self.mid).is_zero(prec) and (self.mid - self.rhs).is_zero(prec)


def _exp(x: PadicElement, prec: int) -> PadicElement:
    """exp(x) for v(x) > 1/(p-1); terms x^k/k! have valuation >= k(v(x) - 1/(p-1))."""
    F = x.parent
    if x.is_zero():
        return F.one()
    slope = x.valuation() - Fraction(1, F.p - 1)
    out, term, k = F.one(), F.one(), 0
    while k * slope < prec:
        k += 1
        term = term * x * F(Fraction(1, k))
        out = out + term
    return out


def _log1p(t: PadicElement, prec: int) -> PadicElement:
    """log(1 + t) for v(t) >= 1; terms t^k/k have valuation >= k v(t) - log_p(k)."""
    F = t.parent
    if t.is_zero():
        return F.zero()
    vt = t.valuation()
    out, power, k = F.zero(), F.one(), 0
    while True:
        k += 1
        if k * vt - _ilog(k, F.p) >= prec:
            return out
        power = power * t
        out = out + power * F(Fraction((-1) ** (k + 1), k))


def _ilog(k: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= k:
        e += 1
    return e


def _binomial_series(b: PadicElement, z: PadicElement, prec: int) -> PadicElement:
    """(1 + z)^b = sum binom(b, k) z^k for integral b and v(z) > 0."""
    F = b.parent
    if z.is_zero():
        return F.one()
    vz = z.valuation()
    out, coef, zk, k = F.one(), F.one(), F.one(), 0
    while (k + 1) * vz < prec:
        coef = coef * (b - k) * F(Fraction(1, k + 1))
        k += 1
        zk = zk * z
        out = out + coef * zk
    return out


def mellin_demo(p: int, a: int, n: int, i: int, precision: int = 60) -> MellinTriple:
    """The three sides of the Mellin interpolation formula for the Dirac distribution at a unit a."""
    if p == 2:
        raise ValueError("the interpolation formula needs e < p - 1, so p >= 3")
    if a % p == 0:
        raise ValueError("a must be a unit")
    if (n - i) % (p - 1):
        raise ValueError(f"n = {n} is not congruent to i = {i} modulo {p - 1}")
    F = make_field(p, precision=precision)
    prec = precision - 10
    A = F(a)
    w = teichmuller(A)
    unit_part = A / w  # <a>, congruent to 1 mod p
    b = _log1p(unit_part - 1, prec) * F(Fraction(1, p))  # ell(<a>) = log<a> / p
    z = _exp(F(n * p), prec) - 1  # z(n) = exp_G(n p) in the multiplicative group
    lhs = w ** i * _binomial_series(b, z, prec)
    mid = A ** n
    G = LubinTateGroup(F, p, multiplicative_frobenius(F), N=max(n, 1))
    h = TruncSeries(F, [binomial(F, a, m) for m in range(n + 1)], n)
    for _ in range(n):
        h = G.invariant_derivation(h)
    return MellinTriple(lhs, mid, h[0])
