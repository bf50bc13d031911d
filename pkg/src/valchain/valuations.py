"""Valuations on K[X]: depth-zero pairs, the minimal valuation, inductive
valuations built by ordinary augmentation, and Q-truncations.

Every valuation object is immutable and exposes ``evaluate(f)`` (also
available as ``w(f)``), ``degree`` (the degree of a key polynomial of minimal
degree) and ``key_polynomials()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .groundfield import (
    FieldMismatchError,
    Polynomial,
    hasse_derivative,
    poly_divmod,
    taylor_shift,
)
from .values import INF, LexValue, format_value, vmax, vmin


class InadmissibleAugmentationError(ValueError):
    pass


class CertificationError(ValueError):
    pass


class Valuation:
    def evaluate(self, f: Polynomial):
        raise NotImplementedError

    def __call__(self, f: Polynomial):
        return self.evaluate(f)

    def _check_field(self, f: Polynomial):
        if f.field != self.field:
            raise FieldMismatchError(f"polynomial over {f.field}, valuation over {self.field}")

    @property
    def degree(self) -> int:
        raise NotImplementedError

    @property
    def last_key(self) -> Polynomial:
        raise NotImplementedError

    def key_polynomials(self) -> tuple:
        return (self.last_key,)


@dataclass(frozen=True, eq=True)
class PairValuation(Valuation):
    """Depth-zero valuation ``sum c_i (X-a)^i -> min v(c_i) + i*gamma``."""

    field: object
    center: object
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", self.field.element(self.center))
        if self.gamma is INF:
            raise ValueError("depth-zero weight must be finite")
        object.__setattr__(self, "gamma", Fraction(self.gamma))

    def evaluate(self, f):
        self._check_field(f)
        if f.is_zero():
            return INF
        g = taylor_shift(f, self.center)
        v = self.field.valuation
        return vmin(v(c) + i * self.gamma for i, c in enumerate(g.coeffs) if c)

    @property
    def degree(self):
        return 1

    @property
    def last_key(self):
        return Polynomial(self.field, (-self.center, 1))

    def __str__(self):
        return f"[v; {self.last_key}, {format_value(self.gamma)}]"


@dataclass(frozen=True)
class MinimalValuation(Valuation):
    """``w_-inf(f) = (-deg f, v(lc f))`` with values in ``Z x Q`` (lex)."""

    field: object

    def evaluate(self, f):
        self._check_field(f)
        if f.is_zero():
            return INF
        return LexValue(-f.degree, self.field.valuation(f.lc))

    @property
    def degree(self):
        return 1

    @property
    def last_key(self):
        return Polynomial.x(self.field)

    def __str__(self):
        return "w_-inf"


def q_expansion(f: Polynomial, Q: Polynomial) -> list:
    """Coefficients ``[f_0, ..., f_n]`` with ``f = sum f_i Q^i``, ``deg f_i < deg Q``."""
    if not Q.is_monic():
        raise ValueError(f"expansion polynomial {Q} is not monic")
    if Q.degree < 1:
        raise ValueError("expansion polynomial must have positive degree")
    if Q.degree == 1:
        # one Taylor shift instead of repeated division
        a = -Q.coeffs[0]
        return [Polynomial._raw(f.field, (c,)) for c in taylor_shift(f, a).coeffs] or [f]
    out = []
    while f.degree >= Q.degree:
        f, r = poly_divmod(f, Q)
        out.append(r)
    out.append(f)
    return out


@dataclass(frozen=True)
class InductiveValuation(Valuation):
    """A base valuation followed by ordinary augmentations ``(phi_i, gamma_i)``.

    ``optimal`` asserts the optimal MacLane chain degree conditions
    (strictly increasing, each degree dividing the next) starting from the
    base key polynomial.
    """

    base: Valuation
    steps: tuple
    optimal: bool = False
    _stage_cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        steps = tuple((phi, g if g is INF else Fraction(g)) for phi, g in self.steps)
        object.__setattr__(self, "steps", steps)
        prev_deg = self.base.degree
        for i, (phi, gamma) in enumerate(steps):
            if phi.field != self.field:
                raise FieldMismatchError("key polynomial over a different field")
            if not phi.is_monic():
                raise ValueError(f"key polynomial {phi} is not monic")
            if self.optimal:
                if phi.degree <= prev_deg or phi.degree % prev_deg:
                    raise ValueError(
                        f"degrees {prev_deg} -> {phi.degree} violate the optimal chain condition"
                    )
            prev_deg = phi.degree
            before = self._eval(phi, i, {})
            if not gamma > before:
                raise InadmissibleAugmentationError(
                    f"step {i + 1}: gamma = {format_value(gamma)} does not exceed "
                    f"the previous value {format_value(before)} of {phi}"
                )

    @property
    def field(self):
        return self.base.field

    @property
    def depth(self) -> int:
        return len(self.steps)

    @property
    def degree(self):
        return self.steps[-1][0].degree if self.steps else self.base.degree

    @property
    def last_key(self):
        return self.steps[-1][0] if self.steps else self.base.last_key

    def key_polynomials(self):
        return tuple(self.base.key_polynomials()) + tuple(phi for phi, _ in self.steps)

    def stage(self, k: int) -> Valuation:
        """The intermediate valuation after ``k`` augmentation steps."""
        if not 0 <= k <= len(self.steps):
            raise IndexError(k)
        if k == len(self.steps):
            return self
        if k == 0:
            return self.base
        if k not in self._stage_cache:
            self._stage_cache[k] = InductiveValuation(self.base, self.steps[:k], self.optimal)
        return self._stage_cache[k]

    def _eval(self, f, k, memo):
        if f.is_zero():
            return INF
        if k == 0:
            return self.base.evaluate(f)
        key = (k, f)
        hit = memo.get(key)
        if hit is not None:
            return hit
        phi, gamma = self.steps[k - 1]
        if f.degree < phi.degree:
            val = self._eval(f, k - 1, memo)
        else:
            terms = []
            for i, c in enumerate(q_expansion(f, phi)):
                if c.is_zero():
                    continue
                term = self._eval(c, k - 1, memo)
                terms.append(term + i * gamma if i else term)
            val = vmin(terms)
        memo[key] = val
        return val

    def evaluate(self, f):
        self._check_field(f)
        return self._eval(f, len(self.steps), {})

    def __str__(self):
        s = str(self.base)
        for phi, gamma in self.steps:
            s = s[:-1] + f"; {phi}, {format_value(gamma)}]"
        return s


def certify_key_polynomial(w: Valuation, phi: Polynomial) -> str:
    """Accept ``phi`` as a key polynomial for ``w`` along one of two routes.

    ``"degree"``: ``deg phi = deg(w)``; ``"psi"``: ``deg phi`` is a proper
    multiple of ``deg(w)``.  Both require the expansion of ``phi`` in the last
    key polynomial ``L`` of ``w`` to attain its minimum on the leading power
    ``L^l`` (``w``-minimality).  Irreducibility of the residual polynomial is
    not examined.
    """
    m = w.degree
    L = w.last_key
    d = phi.degree
    if d % m:
        raise CertificationError(f"deg {phi} = {d} is not a multiple of deg(w) = {m}")
    ell = d // m
    lead = ell * w(L)
    actual = w(phi)
    if actual != lead:
        raise CertificationError(
            f"{phi} is not w-minimal: w(phi) = {format_value(actual)} but the leading "
            f"term {L}^{ell} has value {format_value(lead)}"
        )
    return "degree" if ell == 1 else "psi"


def augment(w: Valuation, phi: Polynomial, gamma) -> Valuation:
    """Ordinary augmentation ``[w; phi, gamma]``.

    Augmenting the minimal valuation by a monic linear ``X - a`` yields the
    depth-zero valuation defined by ``(a, gamma)``.
    """
    if phi.field != w.field:
        raise FieldMismatchError("key polynomial over a different field")
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError(f"key polynomial {phi} must be monic of positive degree")
    if gamma is not INF:
        gamma = Fraction(gamma)
    if isinstance(w, MinimalValuation):
        if phi.degree != 1:
            raise CertificationError("key polynomials of w_-inf are the monic linear ones")
        if gamma is INF:
            raise InadmissibleAugmentationError("depth-zero weight must be finite")
        return PairValuation(w.field, -phi.coeffs[0], gamma)
    before = w(phi)
    if not gamma > before:
        raise InadmissibleAugmentationError(
            f"gamma = {format_value(gamma)} must exceed w({phi}) = {format_value(before)}"
        )
    certify_key_polynomial(w, phi)
    if isinstance(w, InductiveValuation):
        optimal = w.optimal and phi.degree > w.degree
        return InductiveValuation(w.base, w.steps + ((phi, gamma),), optimal)
    return InductiveValuation(w, ((phi, gamma),), optimal=phi.degree > w.degree)


@dataclass(frozen=True)
class TruncationValuation(Valuation):
    """``w_Q(f) = min w(f_i Q^i)`` over the Q-expansion of ``f``."""

    base: Valuation
    truncator: Polynomial

    @property
    def field(self):
        return self.base.field

    def evaluate(self, f):
        self._check_field(f)
        if f.is_zero():
            return INF
        Q = self.truncator
        if f.degree < Q.degree:
            return self.base(f)
        wq = self.base(Q)
        terms = []
        for i, c in enumerate(q_expansion(f, Q)):
            if c.is_zero():
                continue
            terms.append(self.base(c) + i * wq if i else self.base(c))
        return vmin(terms)

    @property
    def degree(self):
        return self.truncator.degree

    @property
    def last_key(self):
        return self.truncator

    def __str__(self):
        return f"({self.base})_{{{self.truncator}}}"


def truncate(w: Valuation, Q: Polynomial, certified: bool = False) -> TruncationValuation:
    """Q-truncation of ``w``.

    ``Q`` must be an abstract key polynomial for ``w``.  Accepted without
    ``certified``: monic linear polynomials and the key polynomials recorded in
    ``w`` itself.  Constructions that establish ABKP-ness structurally pass
    ``certified=True``.
    """
    if Q.field != w.field:
        raise FieldMismatchError("truncator over a different field")
    if not Q.is_monic() or Q.degree < 1:
        raise CertificationError(f"truncator {Q} must be monic of positive degree")
    if not (certified or Q.degree == 1 or Q in w.key_polynomials()):
        raise CertificationError(
            f"{Q} is not certified as an abstract key polynomial for {w}"
        )
    return TruncationValuation(w, Q)


def epsilon(w: Valuation, f: Polynomial):
    """``max_b (w(f) - w(D_b f)) / b`` over nonzero Hasse derivatives ``D_b f``."""
    if f.is_constant():
        raise ValueError("epsilon is undefined for constant polynomials")
    wf = w(f)
    if isinstance(wf, LexValue):
        raise TypeError("epsilon needs a rank-one valuation")
    terms = []
    for b in range(1, f.degree + 1):
        d = hasse_derivative(f, b)
        if d.is_zero():
            continue
        wd = w(d)
        if wd is INF:
            continue
        terms.append((wf - wd) / b)
    return vmax(terms)


def w_equivalent(w: Valuation, f: Polynomial, g: Polynomial) -> bool:
    """``f ~_w g``: ``w(f - g) > w(f) = w(g)``."""
    if f.is_zero() or g.is_zero():
        raise ValueError("w-equivalence is defined for nonzero polynomials")
    wf = w(f)
    return wf == w(g) and w(f - g) > wf
