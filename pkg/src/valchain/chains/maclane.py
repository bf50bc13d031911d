"""Optimal MacLane chains and MacLane-Vaquie chains, with their conversions
to and from complete sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..groundfield import Polynomial
from ..valuations import InductiveValuation, PairValuation, augment
from ..values import INF, format_value
from .complete import (
    Block,
    ChainInvariantError,
    CommensurabilityError,
    CompleteSet,
    NotConvertibleError,
    NotFiniteError,
    commensurable,
)
from .family import ContinuousFamily, limit_augment


@dataclass(frozen=True)
class OptimalMacLaneChain:
    """``[v; X - a, gamma_0; phi_1, gamma_1; ...]`` with ``1 = m_0 | m_1 | ...`` strictly."""

    field: object
    center: object
    gamma0: Fraction
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "center", self.field.element(self.center))
        object.__setattr__(self, "gamma0", Fraction(self.gamma0))
        steps = []
        for phi, g in self.steps:
            if g is INF:
                raise ChainInvariantError("MacLane weights must be finite")
            steps.append((phi, Fraction(g)))
        object.__setattr__(self, "steps", tuple(steps))
        prev = 1
        for phi, _ in self.steps:
            m = phi.degree
            if m <= prev or m % prev:
                raise ChainInvariantError(f"degrees {prev} -> {m} break 1 = m_0 | m_1 | ... strictly")
            prev = m
        self.valuation()  # checks admissibility and certifies every step

    @property
    def phi0(self) -> Polynomial:
        return Polynomial(self.field, (-self.center, 1))

    def keys(self):
        return (self.phi0,) + tuple(phi for phi, _ in self.steps)

    def weights(self):
        return (self.gamma0,) + tuple(g for _, g in self.steps)

    def valuation(self) -> InductiveValuation:
        cached = self.__dict__.get("_val")
        if cached is not None:
            return cached
        w = PairValuation(self.field, self.center, self.gamma0)
        for phi, g in self.steps:
            w = augment(w, phi, g)
        if not isinstance(w, InductiveValuation):
            w = InductiveValuation(w, (), optimal=True)
        object.__setattr__(self, "_val", w)
        return w


def maclane_to_complete(chain: OptimalMacLaneChain) -> CompleteSet:
    return CompleteSet(chain.valuation(), [Block(phi) for phi in chain.keys()])


def complete_to_maclane(L: CompleteSet) -> OptimalMacLaneChain:
    for j, blk in enumerate(L.blocks):
        if blk.members():
            raise NotConvertibleError(f"block {j} has a nonempty same-degree run; no MacLane chain")
    anchors = [e for e in L.entries if e.anchor]
    top = anchors[-1].value
    if not commensurable(top):
        raise CommensurabilityError(f"w(Q_N) = {format_value(top)} is not in the rational value group")
    q0 = anchors[0]
    center = -q0.poly.coeffs[0]
    steps = tuple((e.poly, e.value) for e in anchors[1:])
    return OptimalMacLaneChain(L.field, center, q0.value, steps)


@dataclass(frozen=True)
class OrdinaryStep:
    phi: Polynomial
    gamma: object
    tag = "ordinary"


@dataclass(frozen=True)
class LimitStep:
    family: ContinuousFamily
    phi: Polynomial
    gamma: object
    tag = "limit"


@dataclass(frozen=True)
class MLVChain:
    """Depth-zero start ``(a, gamma_0)`` followed by ordinary and limit steps."""

    field: object
    center: object
    gamma0: Fraction
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "center", self.field.element(self.center))
        object.__setattr__(self, "gamma0", Fraction(self.gamma0))
        object.__setattr__(self, "steps", tuple(self.steps))
        self.stages()

    @property
    def phi0(self):
        return Polynomial(self.field, (-self.center, 1))

    def keys(self):
        return (self.phi0,) + tuple(s.phi for s in self.steps)

    def stages(self) -> tuple:
        cached = self.__dict__.get("_stages")
        if cached is not None:
            return cached
        ws = [PairValuation(self.field, self.center, self.gamma0)]
        keys = self.keys()
        for n, step in enumerate(self.steps):
            w = ws[-1]
            prev_phi = keys[n]
            if isinstance(step, OrdinaryStep):
                if not prev_phi.degree < step.phi.degree:
                    raise ChainInvariantError(
                        f"ordinary step {n + 1}: deg {prev_phi} >= deg {step.phi}"
                    )
                nxt = augment(w, step.phi, step.gamma)
            elif isinstance(step, LimitStep):
                fam = step.family
                if fam.base != w:
                    raise ChainInvariantError(f"limit step {n + 1}: family base differs from w_{n}")
                if w.degree != fam.stable_degree:
                    raise ChainInvariantError(
                        f"limit step {n + 1}: deg(w_{n}) = {w.degree} != stable degree {fam.stable_degree}"
                    )
                nxt = limit_augment(fam, step.phi, step.gamma)
                if nxt(prev_phi) != w(prev_phi):
                    raise ChainInvariantError(
                        f"limit step {n + 1}: {prev_phi} changes value, so it lies in the family's class"
                    )
            else:
                raise TypeError(f"unknown step {step!r}")
            ws.append(nxt)
        ws = tuple(ws)
        object.__setattr__(self, "_stages", ws)
        return ws

    def valuation(self):
        return self.stages()[-1]


def complete_to_mlv(L: CompleteSet) -> MLVChain:
    if L.blocks[-1].family is not None:
        raise NotFiniteError("the last block is an unbounded run; no maximal element")
    anchors = {e.block: e for e in L.entries if e.anchor}
    q0 = anchors[0]
    steps = []
    for j in range(len(L.blocks) - 1):
        nxt = anchors[j + 1]
        fam = L.blocks[j].family
        if fam is None:
            steps.append(OrdinaryStep(nxt.poly, nxt.value))
        else:
            steps.append(LimitStep(fam, nxt.poly, nxt.value))
    return MLVChain(L.field, -q0.poly.coeffs[0], q0.value, tuple(steps))


def mlv_to_complete(chain: MLVChain) -> CompleteSet:
    keys = chain.keys()
    blocks = []
    for j, phi in enumerate(keys):
        fam = None
        if j < len(chain.steps) and isinstance(chain.steps[j], LimitStep):
            fam = chain.steps[j].family
        blocks.append(Block(phi, fam))
    return CompleteSet(chain.valuation(), blocks)
