"""Graded scalars sum c_k Omega^k with Omega known only through v(Omega) = s."""
from __future__ import annotations

import math
from fractions import Fraction

from .padic import PadicElement, PadicField, PrecisionError, different_valuation


def period_exponents(field: PadicField) -> tuple[Fraction, Fraction]:
    """(s, r) with s = 1/(p-1) - 1/(e(q-1)) and r = s + ord_p of the different."""
    s = Fraction(1, field.p - 1) - Fraction(1, field.e * (field.q - 1))
    return s, s + different_valuation(field)


class PeriodScalar:
    """Finite sum of c_k Omega^k with c_k in the field and integer grades k."""

    __slots__ = ("field", "terms", "s", "lost")

    def __init__(self, field: PadicField, terms: dict | None = None, s: Fraction | None = None,
                 lost: Fraction | float = math.inf):
        self.field = field
        self.s = period_exponents(field)[0] if s is None else s
        self.terms = {}
        # lowest absolute precision among coefficients dropped as zero
        self.lost = lost
        for k, c in (terms or {}).items():
            c = field.coerce(c)
            if c.is_zero():
                self.lost = min(self.lost, c.precision)
            else:
                self.terms[int(k)] = c

    @classmethod
    def _raw(cls, field, terms, s, lost) -> "PeriodScalar":
        self = object.__new__(cls)
        self.field, self.terms, self.s, self.lost = field, terms, s, lost
        return self

    @classmethod
    def omega(cls, field: PadicField, k: int = 1, coeff=1) -> "PeriodScalar":
        return cls(field, {k: coeff})

    def _like(self, terms: dict, lost) -> "PeriodScalar":
        clean = {}
        for k, c in terms.items():
            if c.is_zero():
                lost = min(lost, c.precision)
            else:
                clean[k] = c
        return PeriodScalar._raw(self.field, clean, self.s, lost)

    def _coerce(self, other) -> "PeriodScalar":
        if isinstance(other, PeriodScalar):
            if other.field != self.field:
                raise ValueError("period scalars over different fields")
            return other
        if isinstance(other, (int, Fraction, PadicElement)):
            return PeriodScalar(self.field, {0: other}, self.s)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return self._like(terms, min(self.lost, other.lost))

    __radd__ = __add__

    def __neg__(self):
        return PeriodScalar._raw(self.field, {k: -c for k, c in self.terms.items()}, self.s, self.lost)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PadicElement)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                t = c1 * c2
                k = k1 + k2
                terms[k] = terms[k] + t if k in terms else t
        lost = min(_shift_lost(self.lost, other), _shift_lost(other.lost, self))
        return self._like(terms, lost)

    __rmul__ = __mul__

    def scale(self, g) -> "PeriodScalar":
        g = self.field.coerce(g)
        vg = g.valuation_or_bound()
        lost = self.lost + vg if self.lost != math.inf else math.inf
        return self._like({k: c * g for k, c in self.terms.items()}, lost)

    def shift_grade(self, k: int) -> "PeriodScalar":
        """Multiply by Omega^k."""
        return PeriodScalar._raw(self.field, {g + k: c for g, c in self.terms.items()}, self.s, self.lost)

    def inverse(self) -> "PeriodScalar":
        if len(self.terms) != 1:
            raise ZeroDivisionError("only single-grade period scalars are invertible here")
        (k, c), = self.terms.items()
        return PeriodScalar._raw(self.field, {-k: c.inverse()}, self.s, math.inf)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PadicElement)):
            return self.scale(self.field.coerce(other).inverse())
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int) -> "PeriodScalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = PeriodScalar(self.field, {0: 1}, self.s)
        for _ in range(n):
            out = out * self
        return out

    # -- queries -------------------------------------------------------------
    def grade(self, k: int) -> PadicElement:
        return self.terms.get(k, self.field.zero())

    @property
    def grades(self) -> list[int]:
        return sorted(self.terms)

    def valuation_bound(self) -> tuple[Fraction | float, bool]:
        """(min_k v(c_k) + k*s, exact) with exact iff the minimum is attained once."""
        if not self.terms:
            return math.inf, True
        vals = [c.valuation() + k * self.s for k, c in self.terms.items()]
        best = min(vals)
        return best, vals.count(best) == 1

    def is_zero(self, prec=None) -> bool:
        """All grades cancel; with ``prec`` dropped coefficients must be known that far."""
        if self.terms:
            if prec is None:
                return False
            return all(c.is_zero(prec) for c in self.terms.values())
        if prec is not None and self.lost < prec:
            raise PrecisionError(f"cancelled coefficients known only to ord_p {self.lost}, need {prec}")
        return True

    def evaluate(self, omega: PadicElement) -> PadicElement:
        """Substitute a concrete value for Omega."""
        out = self.field.zero()
        for k, c in self.terms.items():
            out = out + c * omega ** k
        return out

    def equals(self, other, prec) -> bool:
        return (self - other).is_zero(prec)

    def __eq__(self, other) -> bool:
        try:
            return (self - other).is_zero()
        except (TypeError, ValueError):
            return False

    __hash__ = None

    def to_json(self) -> dict:
        return {"s": {"num": self.s.numerator, "den": self.s.denominator},
                "terms": [{"grade": k, "coeff": self.terms[k].to_json()} for k in sorted(self.terms)]}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[k]})*Omega^{k}" for k in sorted(self.terms))


def _shift_lost(lost, other: PeriodScalar):
    if lost == math.inf:
        return math.inf
    if not other.terms:
        return lost + other.lost if other.lost != math.inf else math.inf
    return lost + min(c.valuation() for c in other.terms.values())


class PeriodRing:
    """Coefficient ring of :class:`PeriodScalar` values over a fixed field."""

    name = "period"

    def __init__(self, field: PadicField):
        self.field = field
        self.s = period_exponents(field)[0]

    @property
    def e(self) -> int:
        return self.field.e

    def zero(self) -> PeriodScalar:
        return PeriodScalar._raw(self.field, {}, self.s, math.inf)

    def one(self) -> PeriodScalar:
        return PeriodScalar._raw(self.field, {0: self.field.one()}, self.s, math.inf)

    def omega(self, k: int = 1, coeff=1) -> PeriodScalar:
        return PeriodScalar(self.field, {k: coeff}, self.s)

    def coerce(self, x) -> PeriodScalar:
        if isinstance(x, PeriodScalar):
            if x.field != self.field:
                raise ValueError("period scalar over a different field")
            return x
        return PeriodScalar(self.field, {0: x}, self.s)

    def is_zero(self, x: PeriodScalar, prec=None) -> bool:
        return x.is_zero(prec)

    def val_bound(self, x: PeriodScalar):
        b, exact = x.valuation_bound()
        return b, exact

    def div_int(self, x: PeriodScalar, n: int) -> PeriodScalar:
        return x.scale(self.field(Fraction(1, n)))

    def to_json(self, x: PeriodScalar) -> dict:
        return x.to_json()

    def from_json(self, d: dict) -> PeriodScalar:
        terms = {t["grade"]: PadicElement.from_json(self.field, t["coeff"]) for t in d["terms"]}
        return PeriodScalar(self.field, terms, self.s)

    def __eq__(self, other) -> bool:
        return isinstance(other, PeriodRing) and other.field == self.field

    def __hash__(self) -> int:
        return hash(("period", self.field))

    def __repr__(self) -> str:
        return f"PeriodRing({self.field!r})"
