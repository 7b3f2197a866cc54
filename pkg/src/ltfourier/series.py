"""Truncated power series over exact or capped-precision coefficient rings.

A coefficient ring is any object exposing ``name``, ``zero()``, ``one()``,
``coerce(x)``, ``is_zero(x, prec)``, ``val_bound(x)`` and ``div_int(x, n)``.
:class:`~ltfourier.padic.PadicField`, :class:`RationalRing` and
:class:`~ltfourier.period.PeriodRing` all qualify.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from .padic import PadicField, PrecisionError, vp

ASSERTION_PRECISION = 20


class RationalRing:
    """Exact rationals, optionally carrying a prime for valuations."""

    name = "rational"

    def __init__(self, p: int | None = None):
        self.p = p
        self.e = 1

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        return Fraction(x)

    def is_zero(self, x, prec=None) -> bool:
        return x == 0

    def val_bound(self, x: Fraction):
        if x == 0:
            return math.inf, True
        if self.p is None:
            raise ValueError("rational ring has no prime attached")
        return Fraction(vp(x.numerator, self.p) - vp(x.denominator, self.p)), True

    def div_int(self, x, n: int) -> Fraction:
        return Fraction(x) / n

    def to_json(self, x: Fraction) -> dict:
        return {"num": x.numerator, "den": x.denominator}

    def from_json(self, d) -> Fraction:
        return Fraction(d["num"], d["den"])

    def __eq__(self, other):
        return isinstance(other, RationalRing) and other.p == self.p

    def __hash__(self):
        return hash(("rational", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"QQ(p={self.p})"


def _ring_e(ring) -> int:
    if isinstance(ring, PadicField):
        return ring.e
    field = getattr(ring, "field", None)
    return field.e if field is not None else getattr(ring, "e", 1)


def exp_log_precision_requirement(N: int, p: int, assertion: int = ASSERTION_PRECISION,
                                  margin: int = 4) -> int:
    """Working precision needed so exp/log to order N still certify ``assertion``."""
    fact = sum(N // p ** k for k in range(1, N.bit_length() + 1))
    return assertion + fact + margin


class TruncSeries:
    """Univariate series c_0 + c_1 Z + ... known modulo Z^(trunc+1)."""

    __slots__ = ("ring", "coeffs", "trunc")

    def __init__(self, ring, coeffs: Sequence, trunc: int | None = None):
        if trunc is None:
            trunc = max(len(coeffs) - 1, 0)
        cs = [ring.coerce(c) for c in list(coeffs)[: trunc + 1]]
        zero = ring.zero()
        cs.extend(zero for _ in range(trunc + 1 - len(cs)))
        self.ring = ring
        self.coeffs = cs
        self.trunc = trunc

    @classmethod
    def _raw(cls, ring, coeffs: list, trunc: int) -> "TruncSeries":
        self = object.__new__(cls)
        self.ring, self.coeffs, self.trunc = ring, coeffs, trunc
        return self

    @classmethod
    def monomial(cls, ring, k: int, trunc: int, coeff=1) -> "TruncSeries":
        cs = [ring.zero()] * (trunc + 1)
        if k <= trunc:
            cs[k] = ring.coerce(coeff)
        return cls._raw(ring, cs, trunc)

    @classmethod
    def variable(cls, ring, trunc: int) -> "TruncSeries":
        return cls.monomial(ring, 1, trunc)

    @classmethod
    def constant(cls, ring, c, trunc: int) -> "TruncSeries":
        return cls.monomial(ring, 0, trunc, c)

    @property
    def domain(self) -> str:
        return self.ring.name

    def __len__(self) -> int:
        return self.trunc + 1

    def __getitem__(self, k: int):
        if k > self.trunc:
            raise IndexError(f"coefficient {k} beyond truncation {self.trunc}")
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, N: int) -> "TruncSeries":
        if N > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {N}")
        return TruncSeries._raw(self.ring, self.coeffs[: N + 1], N)

    def change_ring(self, ring) -> "TruncSeries":
        if ring is self.ring:
            return self
        return TruncSeries._raw(ring, [ring.coerce(c) for c in self.coeffs], self.trunc)

    def map(self, fn: Callable, ring=None) -> "TruncSeries":
        return TruncSeries._raw(ring or self.ring, [fn(c) for c in self.coeffs], self.trunc)

    def _check(self, other: "TruncSeries") -> None:
        if other.ring != self.ring:
            raise TypeError(f"coefficient domain mismatch: {self.ring!r} vs {other.ring!r}")

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            cs = list(self.coeffs)
            cs[0] = cs[0] + self.ring.coerce(other)
            return TruncSeries._raw(self.ring, cs, self.trunc)
        self._check(other)
        N = min(self.trunc, other.trunc)
        return TruncSeries._raw(self.ring, [a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs)], N)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.ring, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        N = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        zero = self.ring.zero()
        out = [zero] * (N + 1)
        bz = [not self.ring.is_zero(y) for y in b[: N + 1]]
        for i in range(N + 1):
            x = a[i]
            if self.ring.is_zero(x):
                continue
            for j in range(N + 1 - i):
                if bz[j]:
                    out[i + j] = out[i + j] + x * b[j]
        return TruncSeries._raw(self.ring, out, N)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TruncSeries":
        return TruncSeries._raw(self.ring, [x * c for x in self.coeffs], self.trunc)

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncSeries.constant(self.ring, 1, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def powers(self, n: int) -> list["TruncSeries"]:
        """[1, h, h^2, ..., h^n]."""
        out = [TruncSeries.constant(self.ring, 1, self.trunc)]
        for _ in range(n):
            out.append(out[-1] * self)
        return out

    def derivative(self) -> "TruncSeries":
        N = self.trunc
        if N == 0:
            return TruncSeries._raw(self.ring, [self.ring.zero()], 0)
        return TruncSeries._raw(self.ring, [self.coeffs[k] * k for k in range(1, N + 1)], N - 1)

    def integral(self) -> "TruncSeries":
        """Antiderivative with zero constant term (truncation grows by one)."""
        cs = [self.ring.zero()] + [self.ring.div_int(c, k + 1) for k, c in enumerate(self.coeffs)]
        return TruncSeries._raw(self.ring, cs, self.trunc + 1)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        c0 = self.coeffs[0]
        if self.ring.is_zero(c0):
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = self.ring.one() / c0 if not isinstance(c0, Fraction) else 1 / c0
        N = self.trunc
        out = [inv0]
        for n in range(1, N + 1):
            acc = self.ring.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(acc * inv0))
        return TruncSeries._raw(self.ring, out, N)

    def shift_down(self) -> "TruncSeries":
        """h / Z for a series without constant term."""
        if not self.ring.is_zero(self.coeffs[0]):
            raise ValueError("series has a nonzero constant term")
        return TruncSeries._raw(self.ring, self.coeffs[1:], self.trunc - 1)

    # -- composition ---------------------------------------------------------
    def compose(self, h: "TruncSeries") -> "TruncSeries":
        """self(h) modulo Z^(N+1); requires h(0) = 0."""
        return compose(self, h)

    __call__ = compose

    def reversion(self) -> "TruncSeries":
        return reversion(self)

    # -- comparisons -----------------------------------------------------------
    def is_zero(self, prec=None) -> bool:
        return all(self.ring.is_zero(c, prec) for c in self.coeffs)

    def equals(self, other: "TruncSeries", prec=ASSERTION_PRECISION) -> bool:
        return (self - other).is_zero(prec)

    def first_difference(self, other: "TruncSeries", prec=ASSERTION_PRECISION) -> int | None:
        d = self - other
        for k, c in enumerate(d.coeffs):
            if not self.ring.is_zero(c, prec):
                return k
        return None

    def to_json(self) -> dict:
        return {"domain": self.ring.name, "trunc": self.trunc,
                "coeffs": [self.ring.to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, ring, d: dict) -> "TruncSeries":
        if d["domain"] != ring.name:
            raise ValueError(f"series domain {d['domain']} does not match ring {ring.name}")
        return cls._raw(ring, [ring.from_json(c) for c in d["coeffs"]], d["trunc"])

    def __repr__(self) -> str:
        terms = [f"({c})*Z^{k}" for k, c in enumerate(self.coeffs) if not self.ring.is_zero(c)]
        return (" + ".join(terms) or "0") + f" + O(Z^{self.trunc + 1})"


def compose(g: TruncSeries, h: TruncSeries) -> TruncSeries:
    """g(h) modulo Z^(N+1) with N the smaller truncation; requires h(0) = 0."""
    if not h.ring.is_zero(h.coeffs[0]):
        raise ValueError("composition requires h(0) = 0")
    if h.ring != g.ring:
        h = h.change_ring(g.ring)
    N = min(g.trunc, h.trunc)
    h = h.truncate(N)
    result = TruncSeries.constant(g.ring, g.coeffs[N], N)
    for k in range(N - 1, -1, -1):
        result = result * h
        result.coeffs[0] = result.coeffs[0] + g.coeffs[k]
    return result


def reversion(h: TruncSeries) -> TruncSeries:
    """Compositional inverse via Lagrange inversion: k_n = [Z^(n-1)] (Z/h)^n / n."""
    if not h.ring.is_zero(h.coeffs[0]):
        raise ValueError("reversion requires h(0) = 0")
    if h.trunc < 1 or h.ring.is_zero(h.coeffs[1]):
        raise ZeroDivisionError("reversion requires an invertible linear coefficient")
    N = h.trunc
    phi = h.shift_down().inverse()  # Z / h, truncated at N - 1
    out = [h.ring.zero()]
    power = TruncSeries.constant(h.ring, 1, N - 1)
    for n in range(1, N + 1):
        power = power * phi
        out.append(h.ring.div_int(power.coeffs[n - 1], n))
    return TruncSeries._raw(h.ring, out, N)


def _check_budget(h: TruncSeries, assertion: int) -> None:
    ring = h.ring
    if isinstance(ring, PadicField):
        need = exp_log_precision_requirement(h.trunc, ring.p, assertion)
        if ring.working_precision < need:
            raise PrecisionError(
                f"exp/log to order {h.trunc} needs working precision {need}, "
                f"field has {ring.working_precision}")


def series_exp(h: TruncSeries, assertion: int = ASSERTION_PRECISION) -> TruncSeries:
    """exp(h) - 1 for h(0) = 0."""
    if not h.ring.is_zero(h.coeffs[0]):
        raise ValueError("exp requires h(0) = 0")
    _check_budget(h, assertion)
    N = h.trunc
    ring = h.ring
    e = [ring.one()]
    kh = [h.coeffs[k] * k for k in range(N + 1)]
    for n in range(1, N + 1):
        acc = ring.zero()
        for k in range(1, n + 1):
            acc = acc + kh[k] * e[n - k]
        e.append(ring.div_int(acc, n))
    e[0] = ring.zero()
    return TruncSeries._raw(ring, e, N)


def series_log(h: TruncSeries, assertion: int = ASSERTION_PRECISION) -> TruncSeries:
    """log(1 + h) for h(0) = 0."""
    if not h.ring.is_zero(h.coeffs[0]):
        raise ValueError("log is applied to 1 + h with h(0) = 0")
    _check_budget(h, assertion)
    one_plus = h + h.ring.one()
    return (h.derivative() * one_plus.truncate(h.trunc - 1).inverse()).integral()


@dataclass(frozen=True)
class GaussNorm:
    """||f||_{a,n} = p^(-exponent); ``bound_only`` when some coefficient valuation is a bound."""

    exponent: Fraction | float
    bound_only: bool


def gauss_norm(f: TruncSeries, n: int, a=None) -> GaussNorm:
    """Exponent w with ||sum c_i (x-a)^i||_{a,n} = p^(-w), w = min_i v(c_i) + i*n/e.

    ``f`` holds the coefficients already expanded around ``a``; ``a`` is kept only
    for the caller's bookkeeping.
    """
    e = _ring_e(f.ring)
    best: Fraction | float = math.inf
    bound_only = False
    for i, c in enumerate(f.coeffs):
        v, exact = f.ring.val_bound(c)
        if v == math.inf:
            continue
        w = v + Fraction(i * n, e)
        if w < best:
            best = w
        if not exact:
            bound_only = True
    return GaussNorm(best, bound_only)


def recenter(f: TruncSeries, a) -> TruncSeries:
    """Coefficients of the polynomial f(x) re-expanded in powers of (x - a)."""
    ring = f.ring
    a = ring.coerce(a)
    N = f.trunc
    out = [ring.zero()] * (N + 1)
    apow = [ring.one()]
    for _ in range(N):
        apow.append(apow[-1] * a)
    for j, c in enumerate(f.coeffs):
        if ring.is_zero(c):
            continue
        binom = 1
        for l in range(j + 1):
            out[l] = out[l] + c * apow[j - l] * binom
            binom = binom * (j - l) // (l + 1)
    return TruncSeries._raw(ring, out, N)


class MultiSeries:
    """Multivariate series truncated in total degree, stored sparsely by exponent tuple."""

    __slots__ = ("ring", "nvars", "trunc", "terms")

    def __init__(self, ring, nvars: int, trunc: int, terms: dict | None = None):
        self.ring = ring
        self.nvars = nvars
        self.trunc = trunc
        self.terms = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent arity mismatch")
            if sum(exps) <= trunc:
                self.terms[exps] = ring.coerce(c)

    @classmethod
    def _raw(cls, ring, nvars, trunc, terms) -> "MultiSeries":
        self = object.__new__(cls)
        self.ring, self.nvars, self.trunc, self.terms = ring, nvars, trunc, terms
        return self

    @classmethod
    def variable(cls, ring, nvars: int, index: int, trunc: int) -> "MultiSeries":
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(ring, nvars, trunc, {tuple(exps): ring.one()})

    @classmethod
    def constant(cls, ring, nvars: int, c, trunc: int) -> "MultiSeries":
        return cls._raw(ring, nvars, trunc, {(0,) * nvars: ring.coerce(c)})

    @classmethod
    def from_univariate(cls, s: TruncSeries, nvars: int, index: int) -> "MultiSeries":
        terms = {}
        for k, c in enumerate(s.coeffs):
            if not s.ring.is_zero(c):
                exps = [0] * nvars
                exps[index] = k
                terms[tuple(exps)] = c
        return cls._raw(s.ring, nvars, s.trunc, terms)

    @property
    def domain(self) -> str:
        return self.ring.name

    def coefficient(self, exps) -> object:
        exps = tuple(exps)
        if sum(exps) > self.trunc:
            raise IndexError("exponent beyond truncation")
        return self.terms.get(exps, self.ring.zero())

    def __getitem__(self, exps):
        return self.coefficient(exps)

    def truncate(self, N: int) -> "MultiSeries":
        if N > self.trunc:
            raise ValueError("cannot extend truncation")
        return MultiSeries._raw(self.ring, self.nvars, N,
                                {k: v for k, v in self.terms.items() if sum(k) <= N})

    def _check(self, other: "MultiSeries") -> None:
        if other.ring != self.ring or other.nvars != self.nvars:
            raise TypeError("coefficient domain or arity mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            other = MultiSeries.constant(self.ring, self.nvars, other, self.trunc)
        self._check(other)
        N = min(self.trunc, other.trunc)
        terms = {k: v for k, v in self.terms.items() if sum(k) <= N}
        for k, v in other.terms.items():
            if sum(k) <= N:
                terms[k] = terms[k] + v if k in terms else v
        return MultiSeries._raw(self.ring, self.nvars, N, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries._raw(self.ring, self.nvars, self.trunc, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return MultiSeries._raw(self.ring, self.nvars, self.trunc,
                                    {k: v * other for k, v in self.terms.items()})
        self._check(other)
        N = min(self.trunc, other.trunc)
        is_zero = self.ring.is_zero
        A = [(k, sum(k), v) for k, v in self.terms.items() if not is_zero(v)]
        B = [(k, sum(k), v) for k, v in other.terms.items() if not is_zero(v)]
        B.sort(key=lambda t: t[1])
        out: dict = {}
        for ka, da, va in A:
            room = N - da
            if room < 0:
                continue
            for kb, db, vb in B:
                if db > room:
                    break
                k = tuple(x + y for x, y in zip(ka, kb))
                t = va * vb
                out[k] = out[k] + t if k in out else t
        return MultiSeries._raw(self.ring, self.nvars, N, out)

    def __rmul__(self, other):
        return self * other

    def homogeneous_part(self, d: int) -> "MultiSeries":
        return MultiSeries._raw(self.ring, self.nvars, self.trunc,
                                {k: v for k, v in self.terms.items() if sum(k) == d})

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.ring.zero())

    def substitute(self, subs: Sequence["MultiSeries"]) -> "MultiSeries":
        """self(H_1, ..., H_k) with every H_i free of constant term."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        tgt = subs[0]
        for H in subs:
            if not H.ring.is_zero(H.constant_term()):
                raise ValueError("substituted series must vanish at 0")
        N = min(self.trunc, *(H.trunc for H in subs))
        maxdeg = [0] * self.nvars
        for k in self.terms:
            for i, x in enumerate(k):
                maxdeg[i] = max(maxdeg[i], x)
        pows = []
        for H, md in zip(subs, maxdeg):
            H = H.truncate(N)
            ps = [MultiSeries.constant(tgt.ring, tgt.nvars, 1, N)]
            for _ in range(min(md, N)):
                ps.append(ps[-1] * H)
            pows.append(ps)
        out = MultiSeries._raw(tgt.ring, tgt.nvars, N, {})
        cache: dict = {}
        for k, c in self.terms.items():
            if sum(k) > N or self.ring.is_zero(c):
                continue
            prod_ = None
            for i, x in enumerate(k):
                if x == 0:
                    continue
                key = k[: i + 1]
                if key in cache:
                    prod_ = cache[key]
                else:
                    prod_ = pows[i][x] if prod_ is None else prod_ * pows[i][x]
                    cache[key] = prod_
            if prod_ is None:
                out = out + MultiSeries.constant(tgt.ring, tgt.nvars, c, N)
            else:
                out = out + prod_ * c
        return out

    def compose_into(self, g: TruncSeries) -> "MultiSeries":
        """g(self) for a univariate g; requires self to vanish at 0."""
        if not self.ring.is_zero(self.constant_term()):
            raise ValueError("composition requires H(0) = 0")
        N = min(self.trunc, g.trunc)
        H = self.truncate(N)
        result = MultiSeries.constant(self.ring, self.nvars, g.coeffs[N], N)
        for k in range(N - 1, -1, -1):
            result = result * H
            if not self.ring.is_zero(g.coeffs[k]):
                result = result + g.coeffs[k]
        return result

    def is_zero(self, prec=None) -> bool:
        return all(self.ring.is_zero(v, prec) for v in self.terms.values())

    def equals(self, other: "MultiSeries", prec=ASSERTION_PRECISION) -> bool:
        return (self - other).is_zero(prec)

    def first_difference(self, other: "MultiSeries", prec=ASSERTION_PRECISION):
        d = self - other
        for k in sorted(d.terms, key=lambda t: (sum(t), tuple(-d for d in t))):
            if not self.ring.is_zero(d.terms[k], prec):
                return k
        return None

    def to_json(self) -> dict:
        """Dense total-degree layout; for two variables coeffs[i][j] is the X^i Y^j coefficient."""
        zero = self.ring.zero()
        if self.nvars == 2:
            rows = [[self.ring.to_json(self.terms.get((i, j), zero)) for j in range(self.trunc + 1 - i)]
                    for i in range(self.trunc + 1)]
            return {"domain": self.ring.name, "trunc": self.trunc, "vars": 2, "coeffs": rows}
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))
        return {"domain": self.ring.name, "trunc": self.trunc, "vars": self.nvars,
                "terms": [{"exp": list(k), "coeff": self.ring.to_json(v)} for k, v in items]}

    def __repr__(self) -> str:
        return f"MultiSeries(nvars={self.nvars}, trunc={self.trunc}, nterms={len(self.terms)})"

    def __str__(self) -> str:
        names = "XY" if self.nvars == 2 else [f"T{i}" for i in range(self.nvars)]
        parts = []
        for k in sorted(self.terms, key=lambda t: (sum(t), tuple(-d for d in t))):
            c = self.terms[k]
            if self.ring.is_zero(c):
                continue
            mono = "*".join(f"{names[i]}^{d}" if d > 1 else names[i] for i, d in enumerate(k) if d)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return (" + ".join(parts) or "0") + f" + O(deg {self.trunc + 1})"


def monomials(nvars: int, max_degree: int) -> Iterable[tuple[int, ...]]:
    """All exponent tuples of total degree <= max_degree, ordered by degree."""
    for d in range(max_degree + 1):
        for exps in product(range(d + 1), repeat=nvars):
            if sum(exps) == d:
                yield exps


@dataclass(frozen=True)
class RestrictionResult:
    holds: bool
    violation: tuple[int, ...] | None  # multi-index n + e_ij of the first failing instance
    checked: int


def _var_index(i: int, j: int, e_basis: int) -> int:
    # variable t_{ij} (basis vector i, direction j), both 0-based; directions outermost
    return j * e_basis + i


def scalar_restriction_check(c: MultiSeries, basis: Sequence, order: int, d: int = 1,
                             prec=ASSERTION_PRECISION) -> RestrictionResult:
    """Check the coefficient recurrence characterizing functions analytic over L.

    ``c`` is the expansion in coordinates t_{ij} (variable ``j*len(basis) + i``) of a
    function on the restriction of scalars; ``basis`` is v_1 = 1, v_2, ... of L over
    the smaller field.  Every instance
    (n_ij + 1) c[n + e_ij] = v_i (n_1j + 1) c[n + e_1j]
    with |n| < order is tested.
    """
    eb = len(basis)
    if c.nvars != eb * d:
        raise ValueError(f"expected {eb * d} variables, got {c.nvars}")
    if c.trunc < order:
        raise ValueError(f"coefficient tensor known to degree {c.trunc}, need {order}")
    ring = c.ring
    v = [ring.coerce(b) for b in basis]
    if not ring.is_zero(v[0] - ring.one(), prec):
        raise ValueError("first basis vector must be 1")
    checked = 0
    for n in monomials(c.nvars, order - 1):
        for j in range(d):
            k1 = _var_index(0, j, eb)
            up1 = list(n)
            up1[k1] += 1
            rhs_base = c.coefficient(up1) * (n[k1] + 1)
            for i in range(1, eb):
                k = _var_index(i, j, eb)
                up = list(n)
                up[k] += 1
                lhs = c.coefficient(up) * (n[k] + 1)
                checked += 1
                if not ring.is_zero(lhs - v[i] * rhs_base, prec):
                    return RestrictionResult(False, tuple(up), checked)
    return RestrictionResult(True, None, checked)


def restrict_scalars(g: TruncSeries, basis: Sequence) -> MultiSeries:
    """Expansion of t -> g(t_1 v_1 + ... + t_e v_e) in the coordinates t_i."""
    ring = g.ring
    eb = len(basis)
    lin = MultiSeries._raw(ring, eb, g.trunc, {})
    for i, b in enumerate(basis):
        lin = lin + MultiSeries.variable(ring, eb, i, g.trunc) * ring.coerce(b)
    return lin.compose_into(g)
