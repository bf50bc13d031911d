"""Saturated distinguished chains, Okutsu frames, and the complete set a
distinguished chain induces.  All maximality claims are candidate-relative."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebraic import (
    AlgebraicElement,
    MinimalPairValuation,
    check_distinguished_pair,
    closeness,
)
from ..groundfield import Polynomial
from ..valuations import epsilon
from ..values import format_value
from .complete import Block, ChainInvariantError, CompleteSet, psi_membership
from .reports import Report


class MinimalPairViolation(ValueError):
    pass


def _increasing(xs) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class DistinguishedChain:
    """``(theta_r, ..., theta_0)`` listed top first; ``deg theta_0 = 1``.

    ``gaps[i]`` caches ``vbar(theta_{i+1} - theta_i)`` bottom first.
    """

    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise ChainInvariantError("empty distinguished chain")
        degs = [e.degree for e in elems]
        if degs[-1] != 1:
            raise ChainInvariantError(f"bottom element has degree {degs[-1]}, expected 1")
        bottom_up = list(reversed(elems))
        gaps = tuple(closeness(bottom_up[i + 1], bottom_up[i]) for i in range(len(elems) - 1))
        object.__setattr__(self, "gaps", gaps)

    @classmethod
    def of(cls, polys) -> "DistinguishedChain":
        return cls(tuple(AlgebraicElement.of(f) for f in polys))

    @property
    def field(self):
        return self.elements[0].field

    @property
    def top(self) -> AlgebraicElement:
        return self.elements[0]

    @property
    def polys(self) -> tuple:
        return tuple(e.minpoly for e in self.elements)

    def bottom_up(self) -> tuple:
        return tuple(reversed(self.elements))

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.polys) + ")"


@dataclass(frozen=True)
class OkutsuFrame:
    """``[F_0, ..., F_{r-1}]`` for ``target``, with ``m_i = deg F_i`` and
    ``mu_i = vbar(theta - F_i)`` (best conjugate)."""

    target: AlgebraicElement
    frame: tuple

    def __post_init__(self):
        frame = tuple(self.frame)
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "m", tuple(e.degree for e in frame))
        object.__setattr__(self, "mu", tuple(closeness(self.target, e) for e in frame))

    @property
    def field(self):
        return self.target.field

    def __str__(self):
        return "[" + ", ".join(str(e.minpoly) for e in self.frame) + "]"


def convert_sdc_okutsu(x, F: Polynomial | None = None):
    """Relabel a distinguished chain as an Okutsu frame or back."""
    if isinstance(x, DistinguishedChain):
        if F is not None and F != x.top.minpoly:
            raise ValueError(f"{F} is not the top of {x}")
        frame = OkutsuFrame(x.top, x.bottom_up()[:-1])
        if frame.mu != x.gaps:
            raise ChainInvariantError("frame values differ from the chain gaps")
        _structural(frame)
        return frame
    if isinstance(x, OkutsuFrame):
        if F is not None and F != x.target.minpoly:
            raise ValueError(f"{F} is not the frame target")
        _structural(x)
        sdc = DistinguishedChain((x.target,) + tuple(reversed(x.frame)))
        if sdc.gaps != x.mu:
            raise ChainInvariantError("chain gaps differ from the frame values")
        return sdc
    raise TypeError(f"cannot convert {type(x).__name__}")


def _structural(frame: OkutsuFrame):
    if frame.m and frame.m[0] != 1:
        raise ChainInvariantError("m_0 must be 1")
    if not _increasing(list(frame.m) + [frame.target.degree]):
        raise ChainInvariantError(f"m = {frame.m} not strictly increasing below deg F")
    if not _increasing(frame.mu):
        raise ChainInvariantError("mu not strictly increasing")


def sdc_to_complete(sdc: DistinguishedChain, theta_top: AlgebraicElement | None = None, delta_top=1):
    """The complete set ``{Q_0, ..., Q_r}`` for ``wbar_{theta_top, delta_top}``."""
    theta = sdc.top if theta_top is None else theta_top
    if theta.minpoly != sdc.top.minpoly:
        raise ValueError("theta_top must be a root of the top polynomial")
    delta = Fraction(delta_top)
    if sdc.gaps and not delta > sdc.gaps[-1]:
        raise MinimalPairViolation(
            f"delta = {format_value(delta)} must exceed the top gap {format_value(sdc.gaps[-1])}"
        )
    w = MinimalPairValuation(theta, delta)
    L = CompleteSet(w, [Block(e.minpoly) for e in sdc.bottom_up()])
    anchors = [e.poly for e in L.entries]
    for i, gap in enumerate(sdc.gaps):
        eps = epsilon(w, anchors[i])
        if eps != gap:
            raise ChainInvariantError(
                f"eps(Q_{i}) = {format_value(eps)} differs from the gap {format_value(gap)}"
            )
    return L


def _candidates_below(candidates, d):
    return [c for c in candidates if c.degree < d]


def validate_sdc(sdc: DistinguishedChain, candidates) -> Report:
    cands = list(candidates)
    rep = Report(f"distinguished chain {sdc} ({len(cands)} candidates; verdicts candidate-relative)")
    degs = [e.degree for e in sdc.elements]
    rep.add("degrees-decrease", all(a > b for a, b in zip(degs, degs[1:])),
            "deg = (" + ", ".join(map(str, degs)) + ")")
    if len(sdc.elements) == 1:
        rep.info("links", "single element; vacuously valid")
        return rep
    gaps_top_first = list(reversed(sdc.gaps))
    rep.add("gaps-decrease", all(a > b for a, b in zip(gaps_top_first, gaps_top_first[1:])),
            "gaps = (" + ", ".join(map(format_value, gaps_top_first)) + ")")
    up = sdc.bottom_up()
    for i in range(len(up) - 1, 0, -1):
        theta, alpha = up[i], up[i - 1]
        v = check_distinguished_pair(theta, alpha, _candidates_below(cands, theta.degree))
        name = f"pair({theta.minpoly}, {alpha.minpoly})"
        if v.ok:
            rep.add(name, True, f"vbar = {format_value(v.value)}, verified up to candidates")
        else:
            rep.add(name, False,
                    f"condition ({v.condition}): {format_value(v.witness_value)} vs {format_value(v.value)}",
                    v.witness.label())
    # psi structure on the truncations of wbar_{theta_r, delta}, delta beyond the top gap
    w = MinimalPairValuation(sdc.top, sdc.gaps[-1] + 1)
    basis = [c.minpoly for c in cands]
    for i in range(1, len(up)):
        Q, Qn = up[i - 1].minpoly, up[i].minpoly
        ok, wit = psi_membership(w, Q, Qn, basis)
        rep.add(f"psi({Q}) contains {Qn}", ok and Q.degree < Qn.degree,
                "w_Q(Q') < w(Q'); no candidate of lower degree drops", wit)
    return rep


def validate_okutsu(frame: OkutsuFrame, F: Polynomial | None, candidates) -> Report:
    if F is not None and F != frame.target.minpoly:
        raise ValueError(f"{F} is not the frame target")
    theta = frame.target
    cands = _candidates_below(candidates, theta.degree)
    rep = Report(f"Okutsu frame {frame} for {theta.minpoly} ({len(cands)} candidates; candidate-relative)")
    m, mu = list(frame.m), list(frame.mu)
    rep.add("m-increasing", (not m or m[0] == 1) and _increasing(m + [theta.degree]),
            "m = (" + ", ".join(map(str, m)) + ")")
    rep.add("mu-increasing", _increasing(mu), "mu = (" + ", ".join(map(format_value, mu)) + ")")
    close = [(c, closeness(theta, c)) for c in cands]
    for i, (mi, mui) in enumerate(zip(m, mu)):
        beat = next((c for c, v in close if c.degree == mi and v > mui), None)
        rep.add(f"mu_{i} maximal over degree {mi}", beat is None,
                f"mu_{i} = {format_value(mui)}", None if beat is None else beat.label())
    for i in range(1, len(m) + 1):
        bound = m[i] if i < len(m) else theta.degree
        early = next((c for c, v in close if c.degree < bound and v > mu[i - 1]), None)
        rep.add(f"m_{i} minimal", early is None,
                f"no candidate of degree < {bound} exceeds mu_{i - 1} = {format_value(mu[i - 1])}",
                None if early is None else early.label())
    return rep
