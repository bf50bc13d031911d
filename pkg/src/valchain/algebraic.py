"""Algebraic elements given by minimal polynomials, the multiset of mutual
root valuations, minimal-pair valuations and optimal values.

All root data come from Newton polygons of resultants; no roots are ever
approximated.  For ``theta`` with minimal polynomial ``F`` and any ``G``, the
polynomial ``R(Y) = Res_Z(F(Z), G(Z + Y))`` has the differences
``eta - theta`` as roots, so its Newton polygon lists every
``vbar(theta - eta)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .groundfield import (
    FieldMismatchError,
    Polynomial,
    hasse_derivative,
    interpolate,
    is_squarefree,
    newton_polygon,
    resultant,
    taylor_shift,
)
from .valuations import Valuation
from .values import INF, format_value, vmax, vmin

CERTIFICATES = ("degree-one", "eisenstein", "single-slope-coprime", "asserted")


class AmbiguityError(ValueError):
    """Per-root data differ between conjugates of theta."""


class CertificateError(ValueError):
    pass


class DistinguishedPairError(ValueError):
    pass


# ---------------------------------------------------------------------------
# certificates


def _single_slope(F: Polynomial):
    np = newton_polygon(F.field, F)
    if np.zero_roots or len(np.segments) != 1:
        return None
    return np.segments[0][0]


def check_certificate(F: Polynomial, certificate: str) -> None:
    if certificate not in CERTIFICATES:
        raise CertificateError(f"unknown certificate {certificate!r}")
    n = F.degree
    if certificate == "degree-one":
        if n != 1:
            raise CertificateError(f"degree-one certificate on a degree-{n} polynomial")
    elif certificate == "eisenstein":
        v = F.field.valuation
        if n < 1 or v(F.coeffs[0]) != 1 or any(v(c) < 1 for c in F.coeffs[:-1]):
            raise CertificateError(f"{F} is not Eisenstein")
    elif certificate == "single-slope-coprime":
        slope = _single_slope(F)
        if slope is None or Fraction(slope).denominator != n:
            raise CertificateError(
                f"Newton polygon of {F} is not one segment with slope denominator {n}"
            )


def auto_certificate(F: Polynomial) -> str | None:
    """Strongest verifiable certificate for ``F``, or ``None``."""
    for cert in ("degree-one", "eisenstein", "single-slope-coprime"):
        try:
            check_certificate(F, cert)
        except CertificateError:
            continue
        return cert
    return None


@dataclass(frozen=True)
class AlgebraicElement:
    """A root ``theta`` of a monic polynomial irreducible over the henselization."""

    minpoly: Polynomial
    certificate: str = "asserted"

    def __post_init__(self):
        F = self.minpoly
        if F.degree < 1 or not F.is_monic():
            raise ValueError(f"minimal polynomial {F} must be monic of positive degree")
        if not is_squarefree(F):
            raise ValueError(f"minimal polynomial {F} is not squarefree")
        check_certificate(F, self.certificate)

    @classmethod
    def of(cls, F: Polynomial, certificate: str | None = None) -> "AlgebraicElement":
        if certificate is None:
            certificate = auto_certificate(F) or "asserted"
        return cls(F, certificate)

    @classmethod
    def rational(cls, field, a) -> "AlgebraicElement":
        return cls(Polynomial(field, (-field.element(a), 1)), "degree-one")

    @property
    def field(self):
        return self.minpoly.field

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def valuation(self):
        """``vbar(theta)``; every conjugate must share it."""
        vals = set(newton_polygon(self.field, self.minpoly).root_valuations())
        if len(vals) != 1:
            raise AmbiguityError(f"roots of {self.minpoly} have valuations {sorted(vals, key=str)}")
        return vals.pop()

    def label(self) -> str:
        """The root itself for degree one, otherwise the minimal polynomial."""
        if self.degree == 1:
            return self.field.format_element(-self.minpoly.coeffs[0])
        return str(self.minpoly)

    def __str__(self):
        return f"root of {self.minpoly}"


@dataclass(frozen=True)
class CandidateSet:
    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if len({e.field for e in elems}) > 1:
            raise FieldMismatchError("candidates over different fields")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# mutual valuations


def difference_resultant(F: Polynomial, G: Polynomial) -> Polynomial:
    """``R(Y) = Res_Z(F(Z), G(Z + Y))``, rebuilt from ``deg F * deg G + 1`` values."""
    if F.field != G.field:
        raise FieldMismatchError("F and G over different fields")
    field = F.field
    n = F.degree * G.degree
    nodes = field.interpolation_nodes(n + 1)
    values = [resultant(F, taylor_shift(G, y)) for y in nodes]
    R = interpolate(field, nodes, values)
    expected_lc = F.lc ** G.degree * G.lc ** F.degree
    if R.degree != n or R.lc != expected_lc:
        raise ArithmeticError("difference resultant has unexpected shape")
    return R


def _pair_multiset(F: Polynomial, G: Polynomial) -> tuple:
    # roots counted with multiplicity; no squarefree requirement
    if F.is_constant() or G.is_constant():
        return ()
    R = difference_resultant(F, G)
    return newton_polygon(F.field, R).root_valuations()


def mutual_valuations(F: Polynomial, G: Polynomial) -> tuple:
    """Multiset ``{vbar(theta_i - eta_j)}`` over root pairs, ascending, ``INF`` last."""
    if F.is_zero() or G.is_zero():
        raise ValueError("mutual valuations need nonzero polynomials")
    if F.field != G.field:
        raise FieldMismatchError("F and G over different fields")
    for P in (F, G):
        if not is_squarefree(P):
            raise ValueError(f"{P} is not squarefree")
    return _pair_multiset(F, G)


def per_root_multiset(theta: AlgebraicElement, G: Polynomial) -> tuple:
    """``{vbar(theta - beta) : G(beta) = 0}`` for one root ``theta``.

    The full pair multiset is ``deg F`` copies of it when conjugates agree;
    a multiplicity not divisible by ``deg F`` proves they do not.
    """
    if G.field != theta.field:
        raise FieldMismatchError("polynomial over a different field")
    n = theta.degree
    counts = Counter(_pair_multiset(theta.minpoly, G))
    out = []
    for val, mult in counts.items():
        if mult % n:
            raise AmbiguityError(
                f"value {format_value(val)} occurs {mult} times, not a multiple of deg F = {n}"
            )
        out.extend([val] * (mult // n))
    return tuple(sorted((x for x in out if x is not INF))) + tuple(x for x in out if x is INF)


def minimal_pair_eval(theta: AlgebraicElement, delta, f: Polynomial):
    """``wbar_{theta,delta}(f) = v(lc f) + sum_beta min(delta, vbar(theta - beta))``."""
    if delta is INF:
        raise ValueError("delta must be finite")
    if f.is_zero():
        return INF
    delta = Fraction(delta)
    total = f.field.valuation(f.lc)
    for val in per_root_multiset(theta, f):
        total += delta if val is INF or val > delta else val
    return total


def minimal_pair_eval_norm(theta: AlgebraicElement, delta, f: Polynomial):
    """Independent route: ``min_i v(Res(F, D_i f)) / deg F + i * delta``.

    ``D_i f(theta)`` is the i-th coefficient of ``f`` in powers of
    ``X - theta`` and its value is ``v(norm) / deg F``.
    """
    if f.is_zero():
        return INF
    F = theta.minpoly
    n = theta.degree
    v = f.field.valuation
    delta = Fraction(delta)
    terms = []
    for i in range(f.degree + 1):
        c = f if i == 0 else hasse_derivative(f, i)
        if c.is_zero():
            continue
        r = resultant(F, c) if not c.is_constant() else c.lc ** n
        val = v(r)
        terms.append(INF if val is INF else val / n + i * delta)
    return vmin(terms)


def optimal_value(theta: AlgebraicElement, delta, f: Polynomial):
    """``min(delta, max_beta vbar(theta - beta))`` over the roots of ``f``."""
    if f.is_constant():
        raise ValueError("optimal value needs a nonconstant polynomial")
    delta = Fraction(delta)
    best = vmax(per_root_multiset(theta, f))
    return delta if best is INF or best > delta else best


@dataclass(frozen=True)
class MinimalPairValuation(Valuation):
    """The valuation ``wbar_{theta,delta}`` restricted to ``K[X]``."""

    theta: AlgebraicElement
    delta: Fraction

    def __post_init__(self):
        if self.delta is INF:
            raise ValueError("delta must be finite")
        object.__setattr__(self, "delta", Fraction(self.delta))
        object.__setattr__(self, "_cache", {})

    @property
    def field(self):
        return self.theta.field

    def evaluate(self, f):
        self._check_field(f)
        cache = self._cache
        if f not in cache:
            cache[f] = minimal_pair_eval(self.theta, self.delta, f)
        return cache[f]

    @property
    def degree(self):
        return self.theta.degree

    @property
    def last_key(self):
        return self.theta.minpoly

    def __str__(self):
        return f"wbar({self.theta.minpoly}, {format_value(self.delta)})"


# ---------------------------------------------------------------------------
# candidate-relative maxima


def closeness(theta: AlgebraicElement, beta: AlgebraicElement):
    """``max vbar(theta - beta')`` over conjugates ``beta'`` of ``beta``."""
    return vmax(_pair_multiset(theta.minpoly, beta.minpoly))


def delta_K_probe(theta: AlgebraicElement, candidates) -> tuple:
    """Best candidate approximation of ``theta``: a lower bound for ``delta_K``."""
    cands = list(candidates)
    if theta.degree < 2:
        raise ValueError("no algebraic element has degree below 1")
    if not cands:
        raise ValueError("empty candidate set")
    best, witness = None, None
    for beta in cands:
        if beta.degree >= theta.degree:
            raise ValueError(f"candidate {beta.minpoly} has degree >= deg theta")
        val = closeness(theta, beta)
        if best is None or val > best:
            best, witness = val, beta
    return best, witness


@dataclass(frozen=True)
class PairVerdict:
    status: str  # "verified-up-to-candidates" or "refuted"
    value: object
    witness: AlgebraicElement | None = None
    condition: str | None = None
    witness_value: object = None

    @property
    def ok(self) -> bool:
        return self.status == "verified-up-to-candidates"


def check_distinguished_pair(theta: AlgebraicElement, alpha: AlgebraicElement, candidates):
    if theta.degree <= alpha.degree:
        raise DistinguishedPairError(
            f"deg theta = {theta.degree} must exceed deg alpha = {alpha.degree}"
        )
    d = closeness(theta, alpha)
    for eta in candidates:
        if eta.degree >= theta.degree:
            raise ValueError(f"candidate {eta.minpoly} has degree >= deg theta")
        m = closeness(theta, eta)
        if m > d:
            return PairVerdict("refuted", d, eta, "ii", m)
        if eta.degree < alpha.degree and m >= d:
            return PairVerdict("refuted", d, eta, "iii", m)
    return PairVerdict("verified-up-to-candidates", d)
