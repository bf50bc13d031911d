"""Bundled fixtures and random generators for tests and experiments.

Catalog names: ``A``, ``B``, ``B-REPAIRED``, ``FAM-NONESS``, ``FAM-AS``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

from .algebraic import AlgebraicElement
from .chains import (
    ContinuousFamily,
    DistinguishedChain,
    LimitStep,
    MLVChain,
    OptimalMacLaneChain,
)
from .groundfield import PAdicRationals, Polynomial, RationalFunctions
from .valuations import PairValuation
from .values import INF


@dataclass(frozen=True)
class Fixture:
    name: str
    field: object
    description: str
    maclane: OptimalMacLaneChain | None = None
    sdc: DistinguishedChain | None = None
    delta: Fraction | None = None
    candidates: tuple = ()
    family: ContinuousFamily | None = None
    mlv: MLVChain | None = None
    notes: tuple = dc_field(default_factory=tuple)

    @property
    def theta(self) -> AlgebraicElement | None:
        return None if self.sdc is None else self.sdc.top


def _p(field, s):
    return Polynomial.parse(s, field)


def _rationals(field, values):
    return tuple(AlgebraicElement.rational(field, a) for a in values)


@lru_cache(maxsize=None)
def fixture_A() -> Fixture:
    K = PAdicRationals(2)
    chain = OptimalMacLaneChain(K, 0, Fraction(1, 2), ((_p(K, "X^2+2"), Fraction(3, 2)),))
    sdc = DistinguishedChain.of([_p(K, "X^2+2"), _p(K, "X")])
    cands = _rationals(K, [0, 1, -1, 2, -2, Fraction(1, 2), 3])
    return Fixture(
        "A", K, "depth-zero (X, 1/2) augmented by X^2+2 with weight 3/2 over (Q, v_2)",
        maclane=chain, sdc=sdc, delta=Fraction(3, 4), candidates=cands,
        notes=(
            "theta = sqrt(-2), Eisenstein, vbar(theta) = 1/2",
            "w1 equals wbar_{theta, 3/4}: w1(X^2+2) = 3/2 = 2 * 3/4",
        ),
    )


def _b_candidates(K):
    return _rationals(K, [0, 1, -1, 2, -2]) + tuple(
        AlgebraicElement.of(_p(K, s)) for s in ("X^2-2", "X^2-4X+2", "X^2+4X+2")
    )


@lru_cache(maxsize=None)
def fixture_B() -> Fixture:
    K = PAdicRationals(2)
    F = _p(K, "X^4-4X^2-4")
    chain = OptimalMacLaneChain(
        K, 0, Fraction(1, 2), ((_p(K, "X^2-2"), Fraction(3, 2)), (F, Fraction(4))),
    )
    top = AlgebraicElement(F, "asserted")
    sdc = DistinguishedChain((top, AlgebraicElement.of(_p(K, "X^2-2")), AlgebraicElement.of(_p(K, "X"))))
    return Fixture(
        "B", K, "sqrt(2) and the root theta of X^4-4X^2-4 over (Q, v_2), depth-2 tower",
        maclane=chain, sdc=sdc, delta=Fraction(1), candidates=_b_candidates(K),
        notes=(
            "gamma_2 = wbar_{theta,1}(X^4-4X^2-4) = 4",
            "vbar(theta -+ sqrt(2)) = 3/4 and vbar(theta) = 1/2 from resultant Newton polygons",
            "X^4-4X^2-4 is w1-minimal but w1-reducible: the tower is not multiplicative "
            "(w2(X^2+2X+2) + w2(X^2-2X+2) = 3 < 7/2 = w2(X^4+4))",
            "a root of X^2+2X+2 lies at distance 7/8 > 3/4 from theta, so the chain is "
            "distinguished only relative to the bundled candidates; see B-REPAIRED",
        ),
    )


@lru_cache(maxsize=None)
def fixture_B_repaired() -> Fixture:
    K = PAdicRationals(2)
    F = _p(K, "X^4-4X^2-4")
    phi1 = _p(K, "X^2+2X+2")
    chain = OptimalMacLaneChain(K, 0, Fraction(1, 2), ((phi1, Fraction(7, 4)), (F, Fraction(4))))
    sdc = DistinguishedChain(
        (AlgebraicElement(F, "asserted"), AlgebraicElement.of(phi1), AlgebraicElement.of(_p(K, "X")))
    )
    cands = _b_candidates(K) + (AlgebraicElement.of(phi1), AlgebraicElement.of(_p(K, "X^2-2X+2")))
    return Fixture(
        "B-REPAIRED", K, "the root theta of X^4-4X^2-4 with its best quadratic approximant X^2+2X+2",
        maclane=chain, sdc=sdc, delta=Fraction(1), candidates=cands,
        notes=(
            "wbar_{theta,1} = [(X, 1/2); X^2+2X+2, 7/4; X^4-4X^2-4, 4]",
            "gaps (1/2, 7/8); eps on anchors (1/2, 7/8, 1)",
        ),
    )


def _fam_noness_member(K):
    def gen(i):
        a = 2 ** (i + 1) - 2  # sum_{k=1..i} 2^k
        return Polynomial(K, (-a, 1)), Fraction(i + 1)
    return gen


def family_noness(horizon: int | None = None) -> ContinuousFamily:
    K = PAdicRationals(2)
    kw = {} if horizon is None else {"horizon": horizon}
    return ContinuousFamily(
        PairValuation(K, 0, 1), _fam_noness_member(K), stable_degree=1, m_inf=1, first=1,
        stabilization_index=1, unstable_witness=_p(K, "X+2"), name="FAM-NONESS",
        notes="a_i = 2^(i+1) - 2, so a_i + 2 = 2^(i+1) and rho_i(X+2) = i+1", **kw,
    )


def _fam_as_member(K):
    t = K.t

    def gen(i):
        s = K.zero
        for k in range(i):
            s = s + t ** (2 ** k)
        return Polynomial(K, (-s, K.one)), Fraction(2 ** i)
    return gen


def family_as(horizon: int | None = None) -> ContinuousFamily:
    K = RationalFunctions(2)
    Q = Polynomial(K, (K.t, K.one, K.one))
    kw = {} if horizon is None else {"horizon": horizon}
    return ContinuousFamily(
        PairValuation(K, 0, 1), _fam_as_member(K), stable_degree=1, m_inf=2, first=1,
        stabilization_index=1, unstable_witness=Q, limit_key=Q, limit_gamma=INF,
        name="FAM-AS",
        notes="s_i = sum_{k<i} t^(2^k) converges to a root of X^2+X+t that is not in F_2(t); "
              "rho_i(X^2+X+t) = 2^i",
        **kw,
    )


@lru_cache(maxsize=None)
def fixture_fam_noness() -> Fixture:
    W = family_noness()
    return Fixture("FAM-NONESS", W.field, "non-essential continuous family over (Q, v_2)", family=W,
                   notes=(W.notes,))


@lru_cache(maxsize=None)
def fixture_fam_as() -> Fixture:
    W = family_as()
    chain = MLVChain(W.field, 0, 1, (LimitStep(W, W.limit_key, W.limit_gamma),))
    return Fixture("FAM-AS", W.field, "essential family over (F_2(t), v_t) with a limit step",
                   family=W, mlv=chain, notes=(W.notes,))


CATALOG = {
    "A": fixture_A,
    "B": fixture_B,
    "B-REPAIRED": fixture_B_repaired,
    "FAM-NONESS": fixture_fam_noness,
    "FAM-AS": fixture_fam_as,
}


def get_fixture(name: str) -> Fixture:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(CATALOG)}") from None


# ---------------------------------------------------------------------------
# random data


def random_element(field, rng: random.Random, size: int = 8):
    if isinstance(field, PAdicRationals):
        num = rng.randint(-size * size, size * size)
        den = rng.choice((1, 1, 1, 2, 3, field.p, field.p * field.p))
        return Fraction(num, den)
    p = field.p
    deg = rng.randint(0, 3)
    num = [rng.randrange(p) for _ in range(deg + 1)]
    den = [1] + [rng.randrange(p) for _ in range(rng.choice((0, 0, 1)))]
    from .ratfunc import RatFunc
    return RatFunc(p, num, den)


def random_polynomial(field, rng: random.Random, max_degree: int, min_degree: int = 0, monic=False):
    d = rng.randint(min_degree, max_degree)
    cs = [random_element(field, rng) for _ in range(d)]
    lead = field.one if monic else random_element(field, rng)
    while not lead:
        lead = random_element(field, rng)
    return Polynomial(field, cs + [lead])


def random_tame_tower(rng: random.Random) -> OptimalMacLaneChain:
    """A depth-1 or depth-2 optimal MacLane chain over (Q, v_p), p odd, degrees 1 | 2 | 4.

    ``phi_1 = (X-a)^2 - c p^u`` (u odd) is key for ``(a, u/2)``;
    ``phi_2 = phi_1^2 + e p^n (X - a)`` with ``n = 2 gamma_1 - gamma_0`` is key for
    ``[.; phi_1, gamma_1]`` when ``gamma_1`` has denominator 4.
    """
    p = rng.choice((3, 5, 7))
    K = PAdicRationals(p)
    a = rng.randint(-p, p)
    u = rng.choice((1, 3))
    c = rng.choice([x for x in range(1, p) if x % p])
    gamma0 = Fraction(u, 2)
    X_a = Polynomial(K, (-a, 1))
    phi1 = X_a * X_a - c * p ** u
    gamma1 = rng.randint(u, u + 2) + Fraction(rng.choice((1, 3)), 4)
    steps = [(phi1, gamma1)]
    if rng.random() < 0.75:
        n = 2 * gamma1 - gamma0
        assert n.denominator == 1
        e = rng.choice((1, -1))
        phi2 = phi1 * phi1 + e * p ** int(n) * X_a
        gamma2 = 2 * gamma1 + Fraction(rng.randint(1, 6), rng.choice((1, 2, 4, 8)))
        steps.append((phi2, gamma2))
    return OptimalMacLaneChain(K, a, gamma0, tuple(steps))
