"""Complete sets of abstract key polynomials, materialized block by block."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..groundfield import Polynomial
from ..valuations import TruncationValuation, Valuation, epsilon
from ..values import INF, LexValue, format_value
from .family import ContinuousFamily
from .reports import Report


class ChainInvariantError(ValueError):
    pass


class NotConvertibleError(ValueError):
    pass


class CommensurabilityError(ValueError):
    pass


class NotFiniteError(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    """``Delta_j``: an anchor followed by the (possibly empty) same-degree run ``theta_j``."""

    anchor: Polynomial
    family: ContinuousFamily | None = None

    def members(self) -> tuple:
        if self.family is None:
            return ()
        return tuple(chi for chi, _ in self.family.members() if chi != self.anchor)


@dataclass(frozen=True)
class Entry:
    poly: Polynomial
    value: object
    eps: object
    block: int
    limit: bool
    anchor: bool
    psi: bool | None  # Q_j -> Q_{j+1} psi-membership, recorded on non-limit anchors j >= 1

    def signature(self):
        return (self.poly, self.value, self.eps, self.block, self.limit, self.anchor, self.psi)


def _trunc(w: Valuation, Q: Polynomial) -> TruncationValuation:
    # members of a complete set are abstract key polynomials by construction
    return TruncationValuation(w, Q)


def _increasing(xs) -> bool:
    return all(a < b for a, b in zip(xs, xs[1:]))


class CompleteSet:
    """A complete set for ``target`` with blocks ``Delta_0, ..., Delta_N``.

    Construction materializes every block to its family horizon, fills the
    ``(w(Q), eps(Q))`` caches and enforces the structural invariants.
    """

    def __init__(self, target: Valuation, blocks, check: bool = True):
        self.target = target
        self.blocks = tuple(blocks)
        if not self.blocks:
            raise ChainInvariantError("a complete set needs at least one block")
        self.entries = self._materialize()
        if check:
            self.check_invariants()

    @property
    def field(self):
        return self.target.field

    @property
    def anchors(self) -> tuple:
        return tuple(b.anchor for b in self.blocks)

    @property
    def horizon(self):
        hs = [b.family.horizon for b in self.blocks if b.family is not None]
        return max(hs) if hs else None

    def _materialize(self):
        w = self.target
        out = []
        for j, blk in enumerate(self.blocks):
            limit = j > 0 and self.blocks[j - 1].family is not None
            psi = None
            if j > 0 and not limit:
                prev = self.blocks[j - 1].anchor
                psi = _trunc(w, prev)(blk.anchor) < w(blk.anchor)
            out.append(Entry(blk.anchor, w(blk.anchor), epsilon(w, blk.anchor), j, limit, True, psi))
            for chi in blk.members():
                out.append(Entry(chi, w(chi), epsilon(w, chi), j, False, False, None))
        return tuple(out)

    def check_invariants(self):
        q0 = self.blocks[0].anchor
        if q0.degree != 1 or not q0.is_monic():
            raise ChainInvariantError(f"Q_0 = {q0} must be monic linear")
        degs = []
        for j, blk in enumerate(self.blocks):
            d = blk.anchor.degree
            bad = [chi for chi in blk.members() if chi.degree != d]
            if bad:
                raise ChainInvariantError(f"block {j}: {bad[0]} has degree != {d}")
            degs.append(d)
        if not _increasing(degs):
            raise ChainInvariantError(f"anchor degrees {degs} are not strictly increasing")
        vals = [e.value for e in self.entries]
        eps = [e.eps for e in self.entries]
        if not _increasing(vals):
            raise ChainInvariantError(
                "cached values not strictly increasing: " + ", ".join(map(format_value, vals))
            )
        if not _increasing(eps):
            raise ChainInvariantError(
                "cached eps not strictly increasing: " + ", ".join(map(format_value, eps))
            )

    def signature(self):
        return tuple(e.signature() for e in self.entries)

    def same_as(self, other: "CompleteSet") -> bool:
        return self.signature() == other.signature()

    def __str__(self):
        return "{" + ", ".join(str(e.poly) for e in self.entries) + "}"


def completeness_check(L: CompleteSet, w: Valuation, samples) -> Report:
    """For each sample ``f`` find a materialized ``Q`` with ``w_Q(f) = w(f)``."""
    if L.target != w:
        raise ValueError("complete set target differs from the supplied valuation")
    rep = Report(f"completeness of {L} against {len(samples)} samples")
    polys = [e.poly for e in L.entries]
    # the largest-degree entries are the cheapest to succeed, so try them first
    order = sorted(range(len(polys)), key=lambda k: -k)
    truncs = {k: _trunc(w, polys[k]) for k in order}
    failures = []
    for f in samples:
        target = w(f)
        if not any(truncs[k](f) == target for k in order):
            failures.append(f)
    n = len(samples)
    rep.add(
        "w_Q(f) = w(f) for some Q",
        not failures,
        f"{n - len(failures)}/{n} samples",
        failures[0] if failures else None,
    )
    return rep


def monic_sweep(field, max_degree: int, coeffs, min_degree: int = 1):
    """All monic polynomials of degree in ``[min_degree, max_degree]`` with coefficients in ``coeffs``."""
    coeffs = [field.element(c) for c in coeffs]
    out = []
    for d in range(min_degree, max_degree + 1):
        for cs in itertools.product(coeffs, repeat=d):
            out.append(Polynomial(field, list(cs) + [field.one]))
    return out


def alpha_probe(w: Valuation, Q: Polynomial, basis):
    """Smallest degree among ``basis`` polynomials with ``w_Q(f) < w(f)`` and a witness."""
    t = _trunc(w, Q)
    best = None
    for f in sorted(basis, key=lambda g: g.degree):
        if best is not None and f.degree > best[0]:
            break
        if t(f) < w(f):
            if best is None:
                best = (f.degree, f)
    return best


def psi_membership(w: Valuation, Q: Polynomial, Qn: Polynomial, basis) -> tuple:
    """``Qn in psi(Q)`` relative to ``basis``: ``w_Q(Qn) < w(Qn)`` and nothing of lower degree drops."""
    if not _trunc(w, Q)(Qn) < w(Qn):
        return False, None
    lower = [f for f in basis if f.degree < Qn.degree]
    hit = alpha_probe(w, Q, lower)
    if hit is not None:
        return False, hit[1]
    return True, None


def commensurable(value) -> bool:
    return value is not INF and not isinstance(value, LexValue)
