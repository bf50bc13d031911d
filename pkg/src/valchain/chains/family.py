"""Continuous families of augmentations, stable values and limit augmentation.

Everything here is horizon-relative: a family is materialized up to ``horizon``
indices and every "for all i" statement is only checked on that prefix.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from typing import Callable

from ..groundfield import Polynomial
from ..valuations import Valuation, augment, q_expansion, w_equivalent
from ..values import INF, format_value, vmin
from .reports import Report

DEFAULT_HORIZON = 8


def default_horizon() -> int:
    raw = os.environ.get("VALCHAIN_HORIZON")
    if raw is None:
        return DEFAULT_HORIZON
    try:
        h = int(raw)
    except ValueError:
        raise ValueError(f"VALCHAIN_HORIZON={raw!r} is not an integer") from None
    if h < 1:
        raise ValueError("VALCHAIN_HORIZON must be positive")
    return h


class ScopeError(ValueError):
    """Operation outside what a non-essential family supports."""


class HorizonError(ValueError):
    """Stabilization not detected within the materialized horizon."""


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ContinuousFamily:
    """Index ``i -> (chi_i, gamma_i)`` over ``first, first+1, ...``.

    ``generator`` is either a callable or an explicit tuple of pairs (the
    latter limits the horizon to its length).  ``m_inf`` may be ``INF``.
    ``stabilization_index`` is the declared index from which two consecutive
    equal values certify a stable value.
    """

    base: Valuation
    generator: Callable | tuple
    stable_degree: int
    m_inf: object
    horizon: int = dc_field(default_factory=default_horizon)
    first: int = 1
    stabilization_index: int | None = None
    unstable_witness: Polynomial | None = None
    limit_key: Polynomial | None = None
    limit_gamma: object = None
    name: str = ""
    notes: str = ""
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False)

    @property
    def field(self):
        return self.base.field

    @property
    def i0(self) -> int:
        return self.first if self.stabilization_index is None else self.stabilization_index

    @property
    def indices(self) -> range:
        return range(self.first, self.first + self.horizon)

    def member(self, i: int):
        if i in self._cache:
            return self._cache[i]
        if isinstance(self.generator, tuple):
            k = i - self.first
            if not 0 <= k < len(self.generator):
                raise GeneratorError(
                    f"family {self.name or '?'} lists {len(self.generator)} members; index {i} requested"
                )
            chi, gamma = self.generator[k]
        else:
            try:
                chi, gamma = self.generator(i)
            except Exception as exc:  # generator code is user supplied
                raise GeneratorError(f"generator failed at index {i}: {exc}") from exc
        self._cache[i] = (chi, gamma)
        return chi, gamma

    def members(self):
        return tuple(self.member(i) for i in self.indices)

    def rho(self, i: int) -> Valuation:
        key = ("rho", i)
        if key not in self._cache:
            chi, gamma = self.member(i)
            self._cache[key] = augment(self.base, chi, gamma)
        return self._cache[key]

    @property
    def declared_essential(self) -> bool:
        return self.m_inf is not INF and self.stable_degree < self.m_inf

    def with_horizon(self, horizon: int) -> "ContinuousFamily":
        return ContinuousFamily(
            self.base, self.generator, self.stable_degree, self.m_inf, horizon, self.first,
            self.stabilization_index, self.unstable_witness, self.limit_key, self.limit_gamma,
            self.name, self.notes,
        )

    def _key(self):
        return (
            self.base, self.members(), self.stable_degree, self.m_inf, self.horizon,
            self.first, self.i0, self.unstable_witness, self.limit_key,
        )

    def __eq__(self, other):
        if not isinstance(other, ContinuousFamily):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash((self.name, self.stable_degree, self.horizon, self.first))


def rho_values(W: ContinuousFamily, f: Polynomial) -> list:
    return [W.rho(i)(f) for i in W.indices]


def stable_value(W: ContinuousFamily, f: Polynomial):
    """The eventual value ``rho_W(f)``.

    Detected as two consecutive equal values at indices ``>= i0``.  Family
    members ``chi_k`` stabilize at ``gamma_k`` by the ``min(gamma_i, gamma_j)``
    law, which covers the last materialized member.
    """
    if f.is_zero():
        return INF
    for i in W.indices:
        chi, gamma = W.member(i)
        if f == chi:
            return gamma
    idx = list(W.indices)
    prev = None
    for i in idx:
        val = W.rho(i)(f)
        if prev is not None and i - 1 >= W.i0 and val == prev:
            return val
        prev = val
    raise HorizonError(f"rho_i({f}) does not stabilize within horizon {W.horizon}")


def _stabilizes(W: ContinuousFamily, f: Polynomial) -> bool:
    try:
        stable_value(W, f)
    except HorizonError:
        return False
    return True


def _strictly_increasing(values) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def family_check(W: ContinuousFamily, probes=None) -> Report:
    """Family invariants up to the horizon plus the essentiality verdict.

    ``probes`` are extra polynomials of degree below ``m_inf`` expected to
    stabilize; linear polynomials over the field's sample elements are always
    probed when ``m_inf > 1``.
    """
    if W.horizon < 2:
        raise ValueError(f"family horizon must be at least 2, got {W.horizon}")
    H = W.horizon
    label = W.name or "family"
    rep = Report(f"family check: {label} (horizon {H}, all verdicts horizon-relative)")
    idx = list(W.indices)
    members = W.members()

    bad_deg = [chi for chi, _ in members if chi.degree != W.stable_degree]
    rep.add(
        "same-degree",
        not bad_deg,
        f"deg chi_i = {W.stable_degree} for i = {idx[0]}..{idx[-1]}",
        bad_deg[0] if bad_deg else None,
    )
    gammas = [g for _, g in members]
    rep.add(
        "gamma-increasing",
        _strictly_increasing(gammas),
        "gamma = (" + ", ".join(format_value(g) for g in gammas) + ")",
    )

    law_fail = equiv_fail = None
    pairs = 0
    for a, i in enumerate(idx):
        rho_i = W.rho(i)
        chi_i, g_i = members[a]
        for b in range(a + 1, len(idx)):
            chi_j, g_j = members[b]
            pairs += 1
            if law_fail is None and rho_i(chi_j) != min(g_i, g_j):
                law_fail = f"rho_{i}(chi_{idx[b]}) = {format_value(rho_i(chi_j))}"
            if equiv_fail is None and w_equivalent(rho_i, chi_j, chi_i):
                equiv_fail = f"chi_{idx[b]} ~ chi_{i} under rho_{i}"
    rep.add("rho-min-law", law_fail is None,
            f"rho_i(chi_j) = min(gamma_i, gamma_j) on {pairs} pairs i < j", law_fail)
    rep.add("non-equivalence", equiv_fail is None,
            f"chi_j not rho_i-equivalent to chi_i on {pairs} pairs", equiv_fail)

    w = W.unstable_witness
    if w is not None:
        vals = rho_values(W, w)
        rep.add(
            "unstable-witness",
            _strictly_increasing(vals) and w.degree == (W.m_inf if W.m_inf is not INF else w.degree),
            f"rho_i({w}) = (" + ", ".join(format_value(v) for v in vals) + ") strictly increasing",
        )

    if W.m_inf is not INF and W.m_inf > 1:
        field = W.field
        tested = [Polynomial(field, (-c, 1)) for c in field.sample_elements()]
        tested += [f for f in (probes or ()) if f.degree < W.m_inf]
        unstable = [f for f in tested if not _stabilizes(W, f)]
        rep.add(
            "lower-degree-stabilize",
            not unstable,
            f"{len(tested)} polynomials of degree < {W.m_inf} stabilize",
            unstable[0] if unstable else None,
        )

    m, mi = W.stable_degree, W.m_inf
    if W.declared_essential:
        rep.info("essentiality", f"essential (declared): m = {m} < m_∞ = {mi}")
    else:
        rep.info("essentiality", f"not essential: m_∞ = m = {m}" if mi == m
                 else f"not essential: m = {m}, m_∞ = {format_value(mi)}")
    return rep


@dataclass(frozen=True, eq=False)
class LimitAugmentation(Valuation):
    """``f -> min rho_W(f_i) + i * gamma`` over the Q-expansion of ``f``."""

    family: ContinuousFamily
    Q: Polynomial
    gamma: object

    @property
    def field(self):
        return self.family.field

    def evaluate(self, f):
        self._check_field(f)
        if f.is_zero():
            return INF
        terms = []
        for i, c in enumerate(q_expansion(f, self.Q)):
            if c.is_zero():
                continue
            s = stable_value(self.family, c)
            terms.append(s + i * self.gamma if i else s)
        return vmin(terms)

    @property
    def degree(self):
        return self.Q.degree

    @property
    def last_key(self):
        return self.Q

    def key_polynomials(self):
        return tuple(self.family.base.key_polynomials()) + (self.Q,)

    def __eq__(self, other):
        if not isinstance(other, LimitAugmentation):
            return NotImplemented
        return (self.family, self.Q, self.gamma) == (other.family, other.Q, other.gamma)

    def __hash__(self):
        return hash((self.Q, self.gamma))

    def __str__(self):
        return f"[{self.family.name or 'W'}; {self.Q}, {format_value(self.gamma)}]"


def limit_augment(W: ContinuousFamily, Q: Polynomial, gamma) -> LimitAugmentation:
    if not W.declared_essential:
        raise ScopeError(
            f"family {W.name or '?'} is not essential (m = {W.stable_degree}, "
            f"m_inf = {format_value(W.m_inf)}); limit augmentation is undefined"
        )
    if not Q.is_monic() or Q.degree != W.m_inf:
        raise ValueError(f"limit key polynomial must be monic of degree m_inf = {W.m_inf}")
    for i in W.indices:
        r = W.rho(i)(Q)
        if not gamma > r:
            raise ValueError(
                f"gamma = {format_value(gamma)} does not exceed rho_{i}(Q) = {format_value(r)}"
            )
    return LimitAugmentation(W, Q, gamma)
