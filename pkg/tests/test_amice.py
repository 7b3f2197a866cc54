from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltfourier import amice_transform, make_field, mellin_demo, units_support_check
from ltfourier.amice import binomial, cyclotomic_field, dirac_transform


def test_dirac_transforms():
    F = make_field(3)
    assert dirac_transform(F, 0, 5).equals(amice_transform(F, [1, 0, 0, 0, 0, 0], 5))
    d1 = dirac_transform(F, 1, 5)
    assert [c.as_rational() for c in d1.coeffs] == [1, 1, 0, 0, 0, 0]
    diff = d1 - dirac_transform(F, 0, 5)
    assert [c.as_rational() for c in diff.coeffs] == [0, 1, 0, 0, 0, 0]


@given(st.integers(-20, 20), st.integers(0, 8))
@settings(max_examples=40, deadline=None)
def test_binomial_matches_integer_binomial(a, m):
    F = make_field(5)
    # generalized binomial for negative a: (-1)^m binom(m - a - 1, m)
    want = comb(a, m) if a >= 0 else (-1) ** m * comb(m - a - 1, m)
    assert binomial(F, a, m).equals(F(want), 30)


def test_amice_round_trip():
    F = make_field(3)
    moments = [F(Fraction(k, 2)) for k in range(6)]
    s = amice_transform(F, moments, 5)
    assert amice_transform(F, s, 5) == moments


def test_amice_rejects_extensions():
    with pytest.raises(ValueError):
        dirac_transform(make_field(3, 2), 1, 3)


def test_cyclotomic_field_has_root_of_unity():
    K = cyclotomic_field(5)
    zeta = K.one() + K.uniformizer
    assert (zeta ** 5 - 1).is_zero(20)
    assert not (zeta - 1).is_zero()


@pytest.mark.parametrize("p", [3, 5])
def test_units_support(p):
    for a in range(1, p):
        poly = [comb(a, k) for k in range(a + 1)]
        assert units_support_check(p, poly, 6).supported
    assert not units_support_check(p, [1], 6).supported
    powp = [comb(p, k) for k in range(p + 1)]
    assert not units_support_check(p, powp, 6).supported


@pytest.mark.parametrize("p,a,n,i,want", [(5, 2, 3, 3, 8), (3, 2, 2, 0, 4), (5, 1, 4, 0, 1), (5, 1, 2, 2, 1)])
def test_mellin_examples(p, a, n, i, want):
    t = mellin_demo(p, a, n, i)
    assert t.agree(15)
    assert t.mid.as_rational() == want


@pytest.mark.parametrize("p", [3, 5])
@given(data=st.data())
@settings(max_examples=10, deadline=None)
def test_mellin_agreement(p, data):
    a = data.draw(st.integers(1, 30).filter(lambda x: x % p))
    n = data.draw(st.integers(0, 6))
    t = mellin_demo(p, a, n, n % (p - 1))
    assert t.agree(15)


def test_mellin_preconditions():
    with pytest.raises(ValueError):
        mellin_demo(2, 1, 1, 1)
    with pytest.raises(ValueError):
        mellin_demo(5, 5, 1, 1)
    with pytest.raises(ValueError):
        mellin_demo(5, 2, 3, 1)
