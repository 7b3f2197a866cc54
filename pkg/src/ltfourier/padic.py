"""Capped-precision arithmetic in finite extensions of Q_p.

A field is presented as a tower: an unramified step Q_p(u), u a root of a
monic integer polynomial irreducible mod p, followed by an Eisenstein step
L = Q_p(u)(pi).  Elements are stored as ``p**shift * sum c[i*f+j] pi^i u^j``
with integer ``c`` and an absolute precision counted in units of ``1/e``
(so an element is known modulo ``pi**prec``).  Valuations are exact
rationals normalized by ``ord_p(p) = 1``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "PadicField",
    "PadicElement",
    "PrecisionError",
    "make_field",
    "teichmuller",
    "different_valuation",
    "is_prime",
    "is_irreducible_mod_p",
    "vp",
]

DEFAULT_PRECISION = 80


class PrecisionError(ArithmeticError):
    """Raised when a result cannot be certified at the available precision."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _vp_rational(x: Fraction, p: int) -> int:
    return vp(x.numerator, p) - vp(x.denominator, p)


# -- polynomials over F_p (lists, constant term first) ----------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def is_irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility test for a monic polynomial over F_p."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            if not _polymod_p(poly, list(tail) + [1], p):
                return False
    return True


@lru_cache(maxsize=None)
def default_unramified_modulus(p: int, f: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree f over F_p.

    Candidates are ordered by their coefficient list read from X^{f-1}
    down to the constant term, i.e. as base-p integers.
    """
    if f == 1:
        return (0, 1)
    for n in range(p ** f):
        digits = [(n // p ** k) % p for k in range(f)]  # constant term first
        poly = digits + [1]
        if is_irreducible_mod_p(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class PadicField:
    """A finite extension L/Q_p given by an unramified step and an Eisenstein step.

    ``unramified_modulus`` is a list of ints (constant term first, monic of
    degree ``f``); ``eisenstein_modulus`` is a list of ``e + 1`` coefficients,
    each a list of ``f`` ints giving a polynomial in ``u``.
    """

    name = "padic"

    def __init__(
        self,
        p: int,
        f: int = 1,
        e: int = 1,
        unramified_modulus: Sequence[int] | None = None,
        eisenstein_modulus: Sequence[Sequence[int] | int] | None = None,
        precision: int = DEFAULT_PRECISION,
    ):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if f < 1 or e < 1:
            raise ValueError("residue degree and ramification index must be >= 1")
        if precision < 1:
            raise ValueError("working precision must be positive")
        self.p = p
        self.f = f
        self.e = e
        self.q = p ** f
        self.degree = e * f
        self.working_precision = precision
        self.cap = e * precision

        g = tuple(default_unramified_modulus(p, f) if unramified_modulus is None
                  else unramified_modulus)
        if len(g) != f + 1 or g[-1] != 1:
            raise ValueError(f"unramified modulus must be monic of degree {f}")
        if not is_irreducible_mod_p(g, p):
            raise ValueError("unramified modulus is not irreducible modulo p")
        self.unramified_modulus = g

        if eisenstein_modulus is None:
            E = [[0] * f for _ in range(e + 1)]
            E[0][0] = -p
            E[e][0] = 1
        else:
            E = [self._as_unram_poly(c) for c in eisenstein_modulus]
        self.eisenstein_modulus = tuple(tuple(c) for c in E)
        self._check_eisenstein()

        self._pp = [1]
        self._table = self._build_table()

    # -- construction helpers ---------------------------------------------
    def _as_unram_poly(self, c) -> list[int]:
        if isinstance(c, int):
            return [c] + [0] * (self.f - 1)
        c = list(c)
        if len(c) > self.f:
            raise ValueError("Eisenstein coefficient has degree >= f in u")
        return c + [0] * (self.f - len(c))

    def _unram_val(self, c: Sequence[int]) -> float | int:
        nz = [vp(x, self.p) for x in c if x]
        return min(nz) if nz else math.inf

    def _check_eisenstein(self) -> None:
        E = self.eisenstein_modulus
        if len(E) != self.e + 1:
            raise ValueError(f"Eisenstein modulus must have degree {self.e}")
        if list(E[-1]) != [1] + [0] * (self.f - 1):
            raise ValueError("Eisenstein modulus is not monic")
        if self._unram_val(E[0]) != 1:
            raise ValueError("Eisenstein modulus: constant term must have ord_p = 1")
        for c in E[1:-1]:
            if self._unram_val(c) < 1:
                raise ValueError("Eisenstein modulus: middle coefficients must have ord_p >= 1")

    def ppow(self, m: int) -> int:
        pp = self._pp
        while len(pp) <= m:
            pp.append(pp[-1] * self.p)
        return pp[m]

    def _reduce_u(self, poly: list[int]) -> list[int]:
        g, f = self.unramified_modulus, self.f
        poly = list(poly)
        for t in range(len(poly) - 1, f - 1, -1):
            c = poly[t]
            if c:
                poly[t] = 0
                for s in range(f):
                    poly[t - f + s] -= c * g[s]
        return (poly + [0] * f)[:f]

    def _umul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._reduce_u(out)

    def _reduce(self, rows: list[list[int]]) -> list[int]:
        """Reduce an array rows[i] (poly in u) representing sum pi^i * rows[i]."""
        e, f = self.e, self.f
        rows = [self._reduce_u(r) for r in rows]
        E = self.eisenstein_modulus
        for t in range(len(rows) - 1, e - 1, -1):
            r = rows[t]
            if any(r):
                rows[t] = [0] * f
                for s in range(e):
                    if any(E[s]):
                        prod_ = self._umul(r, E[s])
                        tgt = rows[t - e + s]
                        for j in range(f):
                            tgt[j] -= prod_[j]
        out = []
        for i in range(e):
            out.extend(rows[i] if i < len(rows) else [0] * f)
        return out

    def _build_table(self):
        e, f, n = self.e, self.f, self.degree
        table = []
        for a in range(n):
            ia, ja = divmod(a, f)
            row = []
            for b in range(n):
                ib, jb = divmod(b, f)
                rows = [[0] * (2 * f - 1) for _ in range(ia + ib + 1)]
                rows[ia + ib][ja + jb] = 1
                vec = self._reduce(rows)
                row.append(tuple((r, c) for r, c in enumerate(vec) if c))
            table.append(row)
        return table

    # -- element factories ------------------------------------------------
    def __call__(self, x=0, prec: int | None = None) -> "PadicElement":
        if isinstance(x, PadicElement):
            if x.parent is not self and x.parent != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            return PadicElement._make(self, 0, [x] + [0] * (self.degree - 1),
                                      self.cap if prec is None else prec)
        if isinstance(x, Fraction):
            return self.from_rational_coords([x] + [Fraction(0)] * (self.degree - 1), prec)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    coerce = __call__

    def from_rational_coords(self, coords: Sequence[Fraction], prec: int | None = None) -> "PadicElement":
        """Element sum coords[i*f+j] pi^i u^j with rational coordinates."""
        p = self.p
        prec = self.cap if prec is None else prec
        coords = [Fraction(c) for c in coords]
        nz = [_vp_rational(c, p) for c in coords if c]
        if not nz:
            return PadicElement._make(self, 0, [0] * self.degree, prec)
        k = min(nz)
        m = max(1, -(-(prec - self.e * k) // self.e) + 1)
        mod = self.ppow(m)
        ints = []
        for c in coords:
            if not c:
                ints.append(0)
                continue
            c = c / Fraction(p) ** k
            ints.append(c.numerator * pow(c.denominator, -1, mod) % mod)
        return PadicElement._make(self, k, ints, prec)

    def from_coeffs(self, coeffs: Sequence[int], shift: int = 0, prec: int | None = None) -> "PadicElement":
        return PadicElement._make(self, shift, list(coeffs), self.cap if prec is None else prec)

    def zero(self) -> "PadicElement":
        return self(0)

    def one(self) -> "PadicElement":
        return self(1)

    @property
    def uniformizer(self) -> "PadicElement":
        if self.e == 1:
            return self(self.p)
        coeffs = [0] * self.degree
        coeffs[self.f] = 1
        return self.from_coeffs(coeffs)

    pi = uniformizer

    @property
    def unramified_generator(self) -> "PadicElement":
        if self.f == 1:
            raise ValueError("field has no unramified step")
        coeffs = [0] * self.degree
        coeffs[1] = 1
        return self.from_coeffs(coeffs)

    u = unramified_generator

    def basis(self) -> list["PadicElement"]:
        out = []
        for a in range(self.degree):
            coeffs = [0] * self.degree
            coeffs[a] = 1
            out.append(self.from_coeffs(coeffs))
        return out

    def with_precision(self, precision: int) -> "PadicField":
        return PadicField(self.p, self.f, self.e, self.unramified_modulus,
                          self.eisenstein_modulus, precision)

    # -- ring protocol used by series code ---------------------------------
    def is_zero(self, x: "PadicElement", prec: int | None = None) -> bool:
        return x.is_zero(prec)

    def val_bound(self, x: "PadicElement") -> tuple[Fraction | float, bool]:
        if x.is_zero():
            return x.precision, False
        return x.valuation(), True

    def div_int(self, x: "PadicElement", n: int) -> "PadicElement":
        return x * self(Fraction(1, n))

    def to_json(self, x: "PadicElement | None" = None) -> dict:
        """Serialize ``x``; with no argument, describe the field itself."""
        if x is not None:
            return x.to_json()
        return self.describe()

    def from_json(self, d: dict) -> "PadicElement":
        return PadicElement.from_json(self, d)

    # -- misc ----------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (isinstance(other, PadicField) and self.p == other.p and self.f == other.f
                and self.e == other.e and self.unramified_modulus == other.unramified_modulus
                and self.eisenstein_modulus == other.eisenstein_modulus
                and self.working_precision == other.working_precision)

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.e, self.unramified_modulus,
                     self.eisenstein_modulus, self.working_precision))

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"Q_{self.p}"
        return f"PadicField(p={self.p}, f={self.f}, e={self.e})"

    def describe(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "e": self.e,
            "q": self.q,
            "unramified_modulus": list(self.unramified_modulus),
            "eisenstein_modulus": [list(c) for c in self.eisenstein_modulus],
            "precision": self.working_precision,
        }

    @classmethod
    def from_description(cls, d: dict) -> "PadicField":
        return cls(d["p"], d["f"], d["e"], d.get("unramified_modulus"),
                   d.get("eisenstein_modulus"), d.get("precision", DEFAULT_PRECISION))


def make_field(p: int, f: int = 1, e: int = 1, unramified_modulus=None,
               eisenstein_modulus=None, precision: int = DEFAULT_PRECISION) -> PadicField:
    return PadicField(p, f, e, unramified_modulus, eisenstein_modulus, precision)


class PadicElement:
    """Element of a :class:`PadicField` with capped absolute precision."""

    __slots__ = ("parent", "shift", "coeffs", "prec", "_val")

    def __init__(self, *a, **kw):
        raise TypeError("use the field to create elements")

    @classmethod
    def _make(cls, F: PadicField, shift: int, coeffs: list[int], prec: int) -> "PadicElement":
        self = object.__new__(cls)
        self.parent = F
        prec = min(prec, F.cap)
        e, f, p = F.e, F.f, F.p
        if F.degree == 1:
            c = coeffs[0]
            m = prec - shift
            if m <= 0 or c == 0:
                c = 0
            else:
                c %= F.ppow(m)
            if c:
                while c % p == 0:
                    c //= p
                    shift += 1
                self._val = shift
            else:
                shift = 0
                self._val = None
            self.shift, self.coeffs, self.prec = shift, (c,), prec
            return self
        out = []
        for idx, c in enumerate(coeffs):
            if c:
                i = idx // f
                m = -(-(prec - e * shift - i) // e)
                c = c % F.ppow(m) if m > 0 else 0
            out.append(c)
        nz = [c for c in out if c]
        if nz:
            t = 0
            while all(c % p == 0 for c in nz):
                nz = [c // p for c in nz]
                t += 1
            if t:
                pt = F.ppow(t)
                out = [c // pt for c in out]
                shift += t
            val = None
            for idx, c in enumerate(out):
                if c:
                    w = e * (shift + vp(c, p)) + idx // f
                    if val is None or w < val:
                        val = w
            self._val = val
        else:
            shift = 0
            self._val = None
        self.shift, self.coeffs, self.prec = shift, tuple(out), prec
        return self

    # -- basic queries -------------------------------------------------------
    def is_zero(self, prec: int | Fraction | None = None) -> bool:
        """True when the element is indistinguishable from 0.

        With ``prec`` (in ord_p units) the element must be known to vanish to at
        least that precision; a shortfall raises :class:`PrecisionError`.
        """
        if prec is None:
            return self._val is None
        need = Fraction(prec) * self.parent.e
        if self._val is not None:
            return self._val >= need
        if self.prec < need:
            raise PrecisionError(
                f"element known only to ord_p {Fraction(self.prec, self.parent.e)}, "
                f"need {Fraction(prec)}")
        return True

    def valuation(self) -> Fraction | float:
        """Exact valuation (ord_p(p) = 1), or ``math.inf`` if zero to precision."""
        if self._val is None:
            return math.inf
        return Fraction(self._val, self.parent.e)

    def valuation_or_bound(self) -> Fraction:
        return Fraction(self.prec if self._val is None else self._val, self.parent.e)

    @property
    def precision(self) -> Fraction:
        return Fraction(self.prec, self.parent.e)

    def _vb(self) -> int:
        return self.prec if self._val is None else self._val

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "PadicElement":
        if isinstance(other, PadicElement):
            if other.parent is not self.parent and other.parent != self.parent:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.parent
        if self._val is None and other._val is not None and other.prec <= self.prec:
            return other
        k = min(self.shift, other.shift)
        a = F.ppow(self.shift - k)
        b = F.ppow(other.shift - k)
        coeffs = [x * a + y * b for x, y in zip(self.coeffs, other.coeffs)]
        return PadicElement._make(F, k, coeffs, min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return PadicElement._make(self.parent, self.shift, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.parent
        prec = min(self.prec + other._vb(), other.prec + self._vb())
        if F.degree == 1:
            return PadicElement._make(F, self.shift + other.shift,
                                      [self.coeffs[0] * other.coeffs[0]], prec)
        n = F.degree
        out = [0] * n
        table = F._table
        for a, x in enumerate(self.coeffs):
            if x:
                row = table[a]
                for b, y in enumerate(other.coeffs):
                    if y:
                        xy = x * y
                        for r, c in row[b]:
                            out[r] += c * xy
        return PadicElement._make(F, self.shift + other.shift, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PadicElement":
        F = self.parent
        if self._val is None:
            raise PrecisionError(
                f"cannot invert an element that is zero to ord_p precision {self.precision}")
        prec = min(self.prec - 2 * self._val, F.cap)
        n = F.degree
        # column b of the multiplication-by-X matrix is X * basis_b
        M = [[Fraction(0)] * n for _ in range(n)]
        for a, x in enumerate(self.coeffs):
            if x:
                for b in range(n):
                    for r, c in F._table[a][b]:
                        M[r][b] += c * x
        rhs = [Fraction(int(r == 0)) for r in range(n)]
        y = _solve(M, rhs)
        inv = F.from_rational_coords(y, prec + F.e * self.shift)
        return PadicElement._make(F, inv.shift - self.shift, list(inv.coeffs), prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def equals(self, other, prec: int | Fraction) -> bool:
        """Agreement to ``prec`` (ord_p units); raises on a precision shortfall."""
        return (self - other).is_zero(prec)

    def __eq__(self, other) -> bool:
        """Equality at the precision both operands carry."""
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return False
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def residue_coords(self) -> tuple[int, ...]:
        """Coordinates of the image in the residue field F_q (unit or zero input)."""
        F = self.parent
        if self._val is not None and self._val < 0:
            raise ValueError("element is not integral")
        if self.shift > 0 or self._val is None:
            return (0,) * F.f
        return tuple(c % F.p for c in self.coeffs[:F.f])

    def lift_rational(self) -> list[Fraction]:
        """Rational coordinates of the stored representative."""
        s = Fraction(self.parent.p) ** self.shift
        return [s * c for c in self.coeffs]

    def as_rational(self) -> Fraction | None:
        """A small-height rational congruent to self to full precision, when self lies in Q_p and one exists."""
        F = self.parent
        if F.e != 1 or any(self.coeffs[1:]):
            return None
        if self._val is None:
            return Fraction(0)
        rel = self.precision - self.shift
        if rel <= 0:
            return None
        m = F.p ** int(rel)
        r = _rational_reconstruct(self.coeffs[0] % m, m)
        if r is None:
            return None
        return r * Fraction(F.p) ** self.shift

    def __str__(self) -> str:
        r = self.as_rational()
        if r is None:
            return repr(self)
        return f"{r} + O(p^{self.precision})"

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        F = self.parent
        v = self.valuation()
        return {
            "p": F.p, "f": F.f, "e": F.e,
            "shift": self.shift,
            "coeffs": [list(self.coeffs[i * F.f:(i + 1) * F.f]) for i in range(F.e)],
            "abs_prec": _qjson(self.precision),
            "valuation": None if v == math.inf else _qjson(v),
        }

    @staticmethod
    def from_json(F: PadicField, d: dict) -> "PadicElement":
        if (d["p"], d["f"], d["e"]) != (F.p, F.f, F.e):
            raise ValueError("element JSON does not match field")
        coeffs = [c for row in d["coeffs"] for c in row]
        prec = Fraction(d["abs_prec"]["num"], d["abs_prec"]["den"]) * F.e
        return PadicElement._make(F, d.get("shift", 0), coeffs, int(prec))

    def __repr__(self) -> str:
        F = self.parent
        if self._val is None:
            return f"O(p^{self.precision})"
        terms = []
        for idx, c in enumerate(self.coeffs):
            if c:
                i, j = divmod(idx, F.f)
                mono = "".join(s for s in (f"*pi^{i}" if i else "", f"*u^{j}" if j else ""))
                terms.append(f"{c}{mono}")
        body = " + ".join(terms)
        scale = f"p^{self.shift}*" if self.shift else ""
        return f"{scale}({body}) + O(p^{self.precision})"


def _rational_reconstruct(u: int, m: int) -> Fraction | None:
    # Wang's half-extended Euclid: a/b = u mod m with |a|, b below sqrt(m/2)
    bound = math.isqrt(m // 2)
    r0, r1, t0, t1 = m, u, 0, 1
    while r1 > bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        t0, t1 = t1, t0 - qt * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _qjson(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _solve(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(M)
    A = [row[:] + [rhs[i]] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular multiplication matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


def teichmuller(a: PadicElement) -> PadicElement:
    """The (q-1)-st root of unity congruent to the unit ``a``.

    Iterates x -> x^q, which contracts by at least one step of 1/e per round.
    """
    F = a.parent
    if a.is_zero() or a.valuation() != 0:
        raise ValueError("Teichmüller lift requires a unit")
    x = a
    for _ in range(F.cap + 2):
        y = x ** F.q
        if (y - x).is_zero():
            return y
        x = y
    raise PrecisionError("Teichmüller iteration did not stabilize")


def different_valuation(F: PadicField) -> Fraction:
    """ord_p of the different of L/Q_p: v(g'(u)) + v(E'(pi)) for the tower moduli."""
    # the unramified step contributes v(g'(u)) = 0 because g is separable mod p
    g = F.unramified_modulus
    if F.f > 1:
        u = F.unramified_generator
        dg = sum((F(k * g[k]) * u ** (k - 1) for k in range(1, len(g))), F.zero())
        if dg.valuation() != 0:
            raise AssertionError("unramified modulus is inseparable mod p")
    pi = F.uniformizer
    E = F.eisenstein_modulus
    dE = F.zero()
    for k in range(1, len(E)):
        ck = F.from_coeffs([x for x in E[k]] + [0] * (F.degree - F.f))
        dE = dE + F(k) * ck * pi ** (k - 1)
    v = dE.valuation()
    if v == math.inf:
        raise PrecisionError("derivative of the Eisenstein modulus vanished at precision")
    return v


def field_elements_from(F: PadicField, xs: Iterable) -> list[PadicElement]:
    return [F(x) for x in xs]
