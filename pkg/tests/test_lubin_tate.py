from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ltfourier import LubinTateGroup, make_field, make_lt_group, multiplicative_frobenius
from ltfourier.lubin_tate import associativity_defect, compose_bivariate, identity_defect, symmetry_defect
from ltfourier.series import TruncSeries

GROUPS = [(2, 1, 1), (3, 1, 1), (5, 1, 1), (3, 2, 1), (3, 1, 2)]


def group(p, f, e, N=10):
    return make_lt_group(make_field(p, f, e), N=N)


def mult_group(p, N=10):
    F = make_field(p)
    return LubinTateGroup(F, p, multiplicative_frobenius(F), N)


def test_q2_group_law_is_multiplicative():
    G = group(2, 1, 1, N=8)
    law = G.group_law()
    for (i, j), c in law.terms.items():
        want = 1 if (i, j) in {(1, 0), (0, 1), (1, 1)} else 0
        assert (c - want).is_zero(20), (i, j)


def test_multiplicative_log_matches_sympy():
    z = sympy.Symbol("z")
    G = mult_group(3, N=12)
    want = sympy.series(sympy.log(1 + z), z, 0, 13).removeO()
    log = G.formal_log()
    for k in range(13):
        assert log[k].equals(G.field(Fraction(str(want.coeff(z, k)))), 20)


@pytest.mark.parametrize("a", [-1, 2, 3, 4])
def test_multiplicative_endomorphisms_are_binomial(a):
    G = mult_group(3, N=8)
    F = G.field
    E = G.endomorphism(a)
    # oracle: [a](Z) = (1+Z)^a - 1, coefficients binom(a, k) with the generalized binomial
    for k in range(1, 9):
        want = Fraction(sympy.binomial(a, k))
        assert E[k].equals(F(want), 20)


@pytest.mark.parametrize("pfe", GROUPS)
def test_group_axioms(pfe):
    G = group(*pfe, N=10)
    law = G.group_law()
    assert identity_defect(law) is None
    assert symmetry_defect(law) is None
    assert associativity_defect(law) is None
    for c in law.terms.values():
        assert c.is_zero() or c.valuation() >= 0


@pytest.mark.parametrize("pfe", GROUPS)
def test_frobenius_is_an_endomorphism(pfe):
    G = group(*pfe, N=8)
    law = G.group_law()
    f = G.frobenius
    X = TruncSeries.variable(G.field, 8)
    # f(F(X, X)) = F(f(X), f(X)), i.e. [pi][2] = [2][pi]
    two = compose_bivariate(law, X, X)
    assert f.compose(two).equals(compose_bivariate(law, f, f), 20)


@pytest.mark.parametrize("pfe", [(3, 1, 1), (3, 2, 1), (3, 1, 2)])
def test_log_first_correction_term(pfe):
    # log o f = pi log with f = pi Z + Z^q forces log = Z + Z^q/(pi - pi^q) + O(Z^(q+1))
    G = group(*pfe, N=max(10, make_field(*pfe).q + 1))
    F, q, pi = G.field, G.q, G.pi
    log = G.formal_log()
    assert log[1].equals(F.one(), 20)
    for k in range(2, q):
        assert log[k].is_zero(20)
    assert log[q].equals((pi - pi ** q).inverse(), 15)


@pytest.mark.parametrize("pfe", GROUPS)
def test_log_exp_inverse(pfe):
    G = group(*pfe, N=8)
    Z = TruncSeries.variable(G.field, 8)
    assert G.formal_log().compose(G.formal_exp()).equals(Z, 15)


@pytest.mark.parametrize("pfe", GROUPS)
def test_invariant_derivation_of_log_is_one(pfe):
    G = group(*pfe, N=8)
    d = G.invariant_derivation(G.formal_log())
    assert d[0].equals(G.field.one(), 15)
    for k in range(1, d.trunc + 1):
        assert d[k].is_zero(15)


@given(st.integers(-6, 6), st.integers(-6, 6))
@settings(max_examples=25, deadline=None)
def test_endomorphisms_compose_and_add(a, b):
    G = group(3, 1, 1, N=6)
    law = G.group_law()
    A, B = G.endomorphism(a), G.endomorphism(b)
    assert A.compose(B).equals(G.endomorphism(a * b), 20)
    assert compose_bivariate(law, A, B).equals(G.endomorphism(a + b), 20)


@pytest.mark.parametrize("p,f,e", GROUPS)
def test_torsion_valuations(p, f, e):
    G = group(p, f, e, N=4)
    q = p ** f
    for n in range(1, 3 if q >= 9 else 4):
        want = [(Fraction(1, e * q ** (n - 1) * (q - 1)), q ** n - q ** (n - 1))]
        assert G.torsion_valuations(n) == want


def test_torsion_examples():
    G = group(3, 1, 2, N=4)
    assert G.torsion_valuations(1) == [(Fraction(1, 4), 2)]
    assert G.torsion_valuations(2) == [(Fraction(1, 12), 6)]


@pytest.mark.parametrize("p,f,e", GROUPS)
def test_disk_preimage_regimes(p, f, e):
    G = group(p, f, e, N=4)
    q = p ** f
    t = Fraction(q, e * (q - 1))
    at = G.disk_preimage_law(t)
    assert at.regime == "single-slope" and at.threshold == t
    assert at.valuations == [(Fraction(1, e * (q - 1)), q)]
    above = G.disk_preimage_law(t + Fraction(1, 7))
    assert above.regime == "split"
    # pi Z dominates for the root near 0, Z^q dominates for the rest
    assert sorted(above.valuations) == sorted([(t + Fraction(1, 7) - Fraction(1, e), 1),
                                               (Fraction(1, e * (q - 1)), q - 1)])
    below = G.disk_preimage_law(t - Fraction(1, 7))
    assert below.regime == "single-slope"
    assert below.valuations == [((t - Fraction(1, 7)) / q, q)]


def test_bad_frobenius_rejected():
    F = make_field(3)
    with pytest.raises(ValueError):
        LubinTateGroup(F, 3, [0, 3, 1, 1])  # Z^2 coefficient not divisible by pi
    with pytest.raises(ValueError):
        LubinTateGroup(F, 9)


def test_multiplicative_detection():
    assert mult_group(5).is_multiplicative
    assert not group(3, 1, 1).is_multiplicative
    assert group(2, 1, 1).is_multiplicative
    assert multiplicative_frobenius(make_field(3)) == [0] + [comb(3, k) for k in (1, 2, 3)]


def test_gm_hom_series_at_one_is_z_in_multiplicative_case():
    G = mult_group(3, N=8)
    s = G.gm_hom_series(1)
    one = G.field.one()
    # the period is 1 for the multiplicative group, so sum P_m(Omega) Z^m becomes (1+Z) - 1
    assert s[1].grades == [1]
    assert s[1].evaluate(one).equals(one, 20)
    for k in range(2, 9):
        assert s[k].evaluate(one).is_zero(20)


def test_concurrent_readers_share_one_cached_law():
    from concurrent.futures import ThreadPoolExecutor
    G = group(3, 2, 1, N=8)
    with ThreadPoolExecutor(max_workers=8) as pool:
        laws = list(pool.map(lambda _: G.group_law(), range(16)))
    assert all(law is laws[0] for law in laws)
