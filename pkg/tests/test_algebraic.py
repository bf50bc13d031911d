import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from conftest import F2T, Q2, Q3, polys
from valchain.algebraic import (
    AlgebraicElement, AmbiguityError, CertificateError, DistinguishedPairError, MinimalPairValuation,
    auto_certificate, check_distinguished_pair, closeness, delta_K_probe, difference_resultant,
    minimal_pair_eval, minimal_pair_eval_norm, mutual_valuations, optimal_value, per_root_multiset,
)
from valchain.fixtures import get_fixture, random_polynomial, random_tame_tower
from valchain.groundfield import Polynomial, is_squarefree, poly_gcd, resultant
from valchain.valuations import epsilon
from valchain.values import INF

H = Fraction(1, 2)


def P(s, K=Q2):
    return Polynomial.parse(s, K)


def el(s, K=Q2):
    return AlgebraicElement.of(P(s, K))


def rat(a):
    return AlgebraicElement.rational(Q2, a)


SQRT2 = el("X^2-2")
THETA_B = AlgebraicElement(P("X^4-4X^2-4"), "asserted")


def test_certificates():
    assert SQRT2.certificate == "eisenstein"
    assert el("X-5").certificate == "degree-one"
    assert auto_certificate(P("X^2-8")) == "single-slope-coprime"
    assert auto_certificate(P("X^3-4")) == "single-slope-coprime"
    assert auto_certificate(P("X^4-4X^2-4")) is None
    with pytest.raises(CertificateError):
        AlgebraicElement(P("X^2-4X+8"), "eisenstein")
    with pytest.raises(ValueError):
        AlgebraicElement(P("X^2-2X+1"))
    with pytest.raises(ValueError):
        AlgebraicElement(P("2X-1"))


def test_element_valuation_and_ambiguity():
    assert SQRT2.valuation() == H
    assert THETA_B.valuation() == H
    split = AlgebraicElement(P("X^2+X+2"))
    with pytest.raises(AmbiguityError):
        split.valuation()
    with pytest.raises(AmbiguityError):
        per_root_multiset(split, P("X"))


def test_mutual_examples():
    assert mutual_valuations(P("X^2-2"), P("X")) == (H, H)
    assert mutual_valuations(P("X-1"), P("X-3")) == (1,)
    assert mutual_valuations(P("X^2-2"), P("X^2-6")) == (1, 1, 1, 1)
    assert mutual_valuations(P("X^2-2"), P("X^2-2"))[-2:] == (INF, INF)
    with pytest.raises(ValueError):
        mutual_valuations(P("X^2"), P("X"))


def test_fixture_b_mutual_values():
    F = P("X^4-4X^2-4")
    assert mutual_valuations(F, P("X^2-2")) == (Fraction(3, 4),) * 8
    assert per_root_multiset(THETA_B, P("X^2-2")) == (Fraction(3, 4),) * 2
    assert per_root_multiset(THETA_B, P("X^2+2X+2")) == (Fraction(7, 8),) * 2
    F2 = difference_resultant(F, P("X^2-2"))
    assert F2.degree == 8 and F2.lc == 1


def test_mutual_matches_bivariate_oracle():
    rng = random.Random(5)
    pairs = [(P("X^4-4X^2-4"), P("X^2-2")), (P("X^2+2"), P("X^2-2X+3"))]
    for _ in range(12):
        f = random_polynomial(Q2, rng, 3, 1, monic=True)
        g = random_polynomial(Q2, rng, 3, 1, monic=True)
        if is_squarefree(f) and is_squarefree(g):
            pairs.append((f, g))
    for f, g in pairs:
        assert list(mutual_valuations(f, g)) == oracles.mutual_multiset(f, g)


def test_mutual_over_ratfunc_matches_oracle():
    f = Polynomial.parse("X^2+X+(t)", F2T)
    g = Polynomial.parse("X+(t)", F2T)
    assert list(mutual_valuations(f, g)) == oracles.mutual_multiset(f, g)


@given(polys(Q2, 4, 1), polys(Q2, 4, 1))
def test_mutual_checksum_and_symmetry(f, g):
    assume(is_squarefree(f) and is_squarefree(g))
    assume(poly_gcd(f, g).degree == 0)
    m = mutual_valuations(f, g)
    v = Q2.valuation
    # sum over root pairs of vbar(a - b) = v(Res) - deg g v(lc f) - deg f v(lc g)
    assert sum(m) == v(resultant(f, g)) - g.degree * v(f.lc) - f.degree * v(g.lc)
    assert mutual_valuations(g, f) == m


def test_ultrametric_triangle_on_fixture_b():
    zero = rat(0)
    d_theta_sqrt2 = closeness(THETA_B, SQRT2)
    d_sqrt2_0 = closeness(SQRT2, zero)
    d_theta_0 = closeness(THETA_B, zero)
    assert (d_theta_sqrt2, d_sqrt2_0, d_theta_0) == (Fraction(3, 4), H, H)
    assert d_theta_0 >= min(d_theta_sqrt2, d_sqrt2_0)
    assert d_theta_0 == min(d_theta_sqrt2, d_sqrt2_0)  # the two differ


def test_minimal_pair_eval_examples():
    assert minimal_pair_eval(SQRT2, 1, P("X^2+2")) == 2
    assert minimal_pair_eval(SQRT2, 1, P("X^2-2")) == 2
    assert minimal_pair_eval(THETA_B, 1, P("12")) == 2
    assert minimal_pair_eval(SQRT2, 1, P("0")) is INF
    with pytest.raises(ValueError):
        minimal_pair_eval(SQRT2, INF, P("X"))


@pytest.mark.parametrize("theta,delta", [(SQRT2, 1), (THETA_B, 1), (el("X^2+2"), Fraction(3, 4)),
                                         (el("X^3-4"), Fraction(5, 2))])
def test_wbar_two_routes_and_sympy(theta, delta):
    rng = random.Random(str(theta))
    for _ in range(25):
        f = random_polynomial(Q2, rng, 6)
        a = minimal_pair_eval(theta, delta, f)
        assert a == minimal_pair_eval_norm(theta, delta, f)
        assert a == oracles.wbar_norm(theta.minpoly, delta, f)


@given(polys(Q2, 4), polys(Q2, 4))
def test_wbar_is_a_valuation(f, g):
    w = MinimalPairValuation(THETA_B, 1)
    assert w(f * g) == w(f) + w(g)
    assert w(f + g) >= min(w(f), w(g))


def test_optimal_value_examples():
    assert optimal_value(SQRT2, 1, P("X")) == H
    assert optimal_value(SQRT2, 1, P("X^2-2")) == 1
    assert optimal_value(THETA_B, 1, P("X^2-2")) == Fraction(3, 4)
    with pytest.raises(ValueError):
        optimal_value(SQRT2, 1, P("3"))


@pytest.mark.parametrize("name", ["A", "B", "B-REPAIRED"])
def test_optimal_value_equals_epsilon_on_fixture_polys(name):
    fx = get_fixture(name)
    w = MinimalPairValuation(fx.theta, fx.delta)
    polys_ = list(fx.sdc.polys) + [c.minpoly for c in fx.candidates]
    for f in polys_:
        assert optimal_value(fx.theta, fx.delta, f) == epsilon(w, f)


def test_delta_k_probe_examples():
    best, wit = delta_K_probe(SQRT2, [rat(a) for a in (0, 1, 2, H)])
    assert best == H and wit.minpoly == P("X")
    best, wit = delta_K_probe(THETA_B, get_fixture("B").candidates)
    assert best == Fraction(3, 4) and wit.minpoly == P("X^2-2")
    with pytest.raises(ValueError):
        delta_K_probe(rat(1), [rat(0)])
    with pytest.raises(ValueError):
        delta_K_probe(SQRT2, [])


def test_distinguished_pair_examples():
    v = check_distinguished_pair(SQRT2, rat(0), [rat(a) for a in (1, -1, 2, -2, H, 3)])
    assert v.ok and v.value == H
    v = check_distinguished_pair(SQRT2, rat(1), [rat(0)])
    assert not v.ok and v.witness.label() == "0" and v.value == 0 and v.witness_value == H
    with pytest.raises(DistinguishedPairError):
        check_distinguished_pair(rat(0), SQRT2, [])


def test_condition_three():
    # 0 is as close to a root of X^4+2 as X^2+2X+2 is, with lower degree
    theta = el("X^4+2")
    alpha = el("X^2+2X+2")
    assert closeness(theta, alpha) == closeness(theta, rat(0)) == Fraction(1, 4)
    v = check_distinguished_pair(theta, alpha, [rat(0)])
    assert v.condition == "iii" and v.witness.label() == "0"


def test_random_towers_wbar_vs_inductive():
    # tame towers: the top augmentation equals wbar at the chain's top key root
    rng = random.Random(17)
    for _ in range(6):
        ch = random_tame_tower(rng)
        w = ch.valuation()
        phi, g = ch.steps[-1]
        theta = AlgebraicElement(phi, "asserted")
        delta = g / phi.degree
        for _ in range(6):
            f = random_polynomial(ch.field, rng, 6)
            assert w(f) == minimal_pair_eval(theta, delta, f)
