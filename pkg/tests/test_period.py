from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltfourier import PeriodRing, PeriodScalar, PrecisionError, different_valuation, make_field, period_exponents


@pytest.mark.parametrize("p,f,e,s", [
    (2, 1, 1, 0), (3, 1, 1, 0), (5, 1, 1, 0),
    (3, 2, 1, Fraction(3, 8)),
    (3, 1, 2, Fraction(1, 4)),
])
def test_period_valuation(p, f, e, s):
    F = make_field(p, f, e)
    got_s, r = period_exponents(F)
    # oracle: 1/(p-1) - 1/(e(q-1)) evaluated by hand above
    assert got_s == s
    assert r == s + different_valuation(F)


def test_r_for_quadratic_ramified():
    assert period_exponents(make_field(3, 1, 2))[1] == Fraction(3, 4)


F = make_field(3, 2, precision=40)
grades = st.integers(-4, 4)
coeffs = st.fractions(-30, 30, max_denominator=7)
scalars = st.dictionaries(grades, coeffs, max_size=4).map(lambda d: PeriodScalar(F, d))
omega_values = st.fractions(-30, 30, max_denominator=7).filter(lambda x: x != 0)


@given(scalars, scalars, omega_values)
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_ring_homomorphism(x, y, w):
    # Omega is transcendental over L, so any concrete nonzero value must give a homomorphism
    W = F(w)
    assert (x * y).evaluate(W).equals(x.evaluate(W) * y.evaluate(W), 10)
    assert (x + y).evaluate(W).equals(x.evaluate(W) + y.evaluate(W), 10)


@given(scalars, scalars, scalars)
@settings(max_examples=40, deadline=None)
def test_graded_ring_axioms(x, y, z):
    assert ((x * y) * z).equals(x * (y * z), 15)
    assert (x * (y + z)).equals(x * y + x * z, 15)
    assert (x - x).is_zero()


def test_valuation_bound_uses_s():
    Om = PeriodScalar.omega(F, 2, 9)
    v, exact = Om.valuation_bound()
    assert v == 2 + 2 * Fraction(3, 8) and exact
    tie = PeriodScalar(make_field(3), {0: 1, 1: 1})
    assert tie.valuation_bound() == (0, False)


def test_inverse_of_single_grade():
    x = PeriodScalar.omega(F, -3, Fraction(5, 2))
    assert (x * x.inverse()).equals(1, 20)
    with pytest.raises(ZeroDivisionError):
        PeriodScalar(F, {0: 1, 1: 1}).inverse()


def test_cancellation_tracks_lost_precision():
    G = make_field(3, precision=10)
    x = PeriodScalar(G, {1: 1})
    y = PeriodScalar(G, {1: 1 + 3 ** 12})
    d = x - y
    assert d.is_zero()
    with pytest.raises(PrecisionError):
        d.is_zero(20)


def test_ring_protocol_and_json():
    R = PeriodRing(F)
    x = R.omega(-2, 7) + R.coerce(Fraction(1, 3))
    assert R.from_json(R.to_json(x)).equals(x, 20)
    assert R.div_int(x, 7).equals(R.omega(-2, 1) + Fraction(1, 21), 20)
    assert R.is_zero(R.zero()) and not R.is_zero(R.one())
