import random
from fractions import Fraction

import pytest

from conftest import F2T, Q2
from valchain.algebraic import AlgebraicElement, MinimalPairValuation
from valchain.chains import (
    Block, ChainInvariantError, CompleteSet, LimitStep, MinimalPairViolation, MLVChain,
    NotConvertibleError, NotFiniteError, OkutsuFrame, OptimalMacLaneChain, OrdinaryStep,
    DistinguishedChain, alpha_probe, complete_to_maclane, complete_to_mlv, completeness_check,
    convert_sdc_okutsu, maclane_to_complete, mlv_to_complete, monic_sweep, psi_membership,
    sdc_to_complete, validate_okutsu, validate_sdc,
)
from valchain.fixtures import get_fixture, random_polynomial, random_tame_tower
from valchain.groundfield import Polynomial
from valchain.valuations import PairValuation, truncate
from valchain.values import INF

H = Fraction(1, 2)


def P(s, K=Q2):
    return Polynomial.parse(s, K)


def eps(L):
    return tuple(e.eps for e in L.entries)


A, B, R = get_fixture("A"), get_fixture("B"), get_fixture("B-REPAIRED")
FAS = get_fixture("FAM-AS")


def test_maclane_to_complete_examples():
    L = maclane_to_complete(A.maclane)
    assert [e.poly for e in L.entries] == [P("X"), P("X^2+2")]
    assert eps(L) == (H, Fraction(3, 4))
    single = OptimalMacLaneChain(Q2, 0, 3)
    assert [e.poly for e in maclane_to_complete(single).entries] == [P("X")]
    LB = maclane_to_complete(B.maclane)
    assert eps(LB) == (H, Fraction(3, 4), 1)
    assert [e.value for e in LB.entries] == [H, Fraction(3, 2), 4]


def test_complete_to_maclane_round_trips():
    for fx in (A, B, R):
        assert complete_to_maclane(maclane_to_complete(fx.maclane)) == fx.maclane
    with pytest.raises(NotConvertibleError):
        complete_to_maclane(mlv_to_complete(FAS.mlv))


def test_random_tower_round_trips():
    rng = random.Random(2024)
    for _ in range(20):
        ch = random_tame_tower(rng)
        L = maclane_to_complete(ch)
        back = complete_to_maclane(L)
        assert back == ch
        assert list(zip(back.keys(), back.weights())) == list(zip(ch.keys(), ch.weights()))
        assert mlv_to_complete(complete_to_mlv(L)).same_as(L)


def test_complete_to_mlv_examples():
    m = complete_to_mlv(maclane_to_complete(A.maclane))
    assert (m.center, m.gamma0) == (0, H)
    assert m.steps == (OrdinaryStep(P("X^2+2"), Fraction(3, 2)),)
    mb = complete_to_mlv(maclane_to_complete(B.maclane))
    assert [s.tag for s in mb.steps] == ["ordinary", "ordinary"]
    L = mlv_to_complete(FAS.mlv)
    ml = complete_to_mlv(L)
    assert [s.tag for s in ml.steps] == ["limit"] and ml == FAS.mlv


def test_mlv_to_complete_examples():
    for fx in (A, B):
        L = maclane_to_complete(fx.maclane)
        assert mlv_to_complete(complete_to_mlv(L)).same_as(L)
    single = MLVChain(Q2, 5, 2)
    assert [e.poly for e in mlv_to_complete(single).entries] == [P("X-5")]
    L = mlv_to_complete(FAS.mlv)
    block0 = [e for e in L.entries if e.block == 0]
    assert len(block0) == 1 + FAS.family.horizon
    top = L.entries[-1]
    assert top.limit and top.anchor and top.psi is None and top.value is INF


def test_complete_to_mlv_needs_maximal_element():
    W = FAS.family
    L = CompleteSet(FAS.mlv.valuation(), [Block(P("X", F2T), W)])
    with pytest.raises(NotFiniteError):
        complete_to_mlv(L)


def test_complete_set_invariants():
    w = A.maclane.valuation()
    with pytest.raises(ChainInvariantError):
        CompleteSet(w, [Block(P("X^2+2"))])
    with pytest.raises(ChainInvariantError):
        CompleteSet(w, [Block(P("X")), Block(P("X-2"))])
    with pytest.raises(ChainInvariantError):
        CompleteSet(w, [])


def test_truncation_dichotomy_equals_stage():
    rng = random.Random(8)
    for fx in (A, B, R):
        w = fx.maclane.valuation()
        for i, Q in enumerate(fx.maclane.keys()):
            t = truncate(w, Q)
            stage = w.stage(i)
            for _ in range(50):
                f = random_polynomial(Q2, rng, 8)
                assert t(f) == stage(f)


@pytest.mark.parametrize("fx", [A, B, R], ids=lambda f: f.name)
def test_psi_membership_and_alpha(fx):
    w = fx.maclane.valuation()
    keys = fx.maclane.keys()
    basis = monic_sweep(Q2, keys[-1].degree, (0, 1, -1, 2))
    for Q, Qn in zip(keys, keys[1:]):
        assert truncate(w, Q)(Qn) < w(Qn)
        deg, wit = alpha_probe(w, Q, basis + [Qn])
        assert deg == Qn.degree
        ok, _ = psi_membership(w, Q, Qn, basis)
        assert ok
    L = maclane_to_complete(fx.maclane)
    assert all(e.psi for e in L.entries[1:])


def test_sdc_to_complete_examples():
    L = sdc_to_complete(DistinguishedChain.of([P("X^2-2"), P("X")]), None, 1)
    assert [e.poly for e in L.entries] == [P("X"), P("X^2-2")] and eps(L) == (H, 1)
    LB = sdc_to_complete(B.sdc, None, 1)
    assert eps(LB) == (H, Fraction(3, 4), 1)
    assert eps(LB)[:-1] == B.sdc.gaps
    with pytest.raises(MinimalPairViolation):
        sdc_to_complete(B.sdc, None, H)
    with pytest.raises(MinimalPairViolation):
        sdc_to_complete(B.sdc, None, Fraction(3, 4))


def test_sdc_okutsu_examples():
    fr = convert_sdc_okutsu(DistinguishedChain.of([P("X^2-2"), P("X")]))
    assert fr.m == (1,) and fr.mu == (H,)
    frb = convert_sdc_okutsu(B.sdc)
    assert [e.minpoly for e in frb.frame] == [P("X"), P("X^2-2")] and frb.mu == (H, Fraction(3, 4))
    back = convert_sdc_okutsu(OkutsuFrame(AlgebraicElement.of(P("X^2-2")), (AlgebraicElement.of(P("X")),)))
    assert back.polys == (P("X^2-2"), P("X"))
    assert convert_sdc_okutsu(frb) == B.sdc


def test_validate_sdc_examples():
    assert validate_sdc(B.sdc, B.candidates).ok
    bad = DistinguishedChain.of([P("X^2-2"), P("X-1")])
    rep = validate_sdc(bad, B.candidates)
    assert not rep.ok and rep.first_witness() == "0"
    single = validate_sdc(DistinguishedChain.of([P("X-3")]), [])
    assert single.ok


def test_validate_okutsu_examples():
    sqrt2 = AlgebraicElement.of(P("X^2-2"))
    frb = convert_sdc_okutsu(B.sdc)
    rep = validate_okutsu(frb, P("X^4-4X^2-4"), B.candidates)
    assert rep.ok
    bad = OkutsuFrame(sqrt2, (AlgebraicElement.of(P("X-1")),))
    rep = validate_okutsu(bad, P("X^2-2"), B.candidates)
    assert not rep.ok and rep.first_witness() == "0"
    good = OkutsuFrame(sqrt2, (AlgebraicElement.of(P("X")),))
    assert validate_okutsu(good, P("X^2-2"), B.candidates).ok


@pytest.mark.parametrize("fx", [A, B, R], ids=lambda f: f.name)
def test_sdc_and_okutsu_validators_agree(fx):
    cand_sets = [fx.candidates, R.candidates, ()]
    for cands in cand_sets:
        a = validate_sdc(fx.sdc, cands).ok
        b = validate_okutsu(convert_sdc_okutsu(fx.sdc), None, cands).ok
        assert a == b


def test_completeness_examples():
    L = maclane_to_complete(A.maclane)
    w = A.maclane.valuation()
    rep = completeness_check(L, w, monic_sweep(Q2, 3, (0, 1, 2, 4)))
    assert rep.ok
    assert completeness_check(L, w, list(L.anchors)).ok
    dropped = CompleteSet(w, [Block(P("X"))])
    f = P("X^2+2") ** 2
    rep = completeness_check(dropped, w, [f])
    assert not rep.ok and rep.first_witness() == str(f)
    assert truncate(w, P("X"))(f) == 2 < w(f) == 3
    with pytest.raises(ValueError):
        completeness_check(L, B.maclane.valuation(), [])


def test_sdc_complete_set_is_complete_for_wbar():
    L = sdc_to_complete(R.sdc, None, 1)
    assert completeness_check(L, L.target, monic_sweep(Q2, 4, (0, 1, -1, 2))).ok
    assert isinstance(L.target, MinimalPairValuation)


def test_mlv_chain_rejects_bad_steps():
    with pytest.raises(ChainInvariantError):
        MLVChain(Q2, 0, H, (OrdinaryStep(P("X^2+2"), 3), OrdinaryStep(P("X^2+6"), 5)))
    W = FAS.family
    with pytest.raises(ChainInvariantError):
        MLVChain(F2T, 1, 1, (LimitStep(W, W.limit_key, INF),))
