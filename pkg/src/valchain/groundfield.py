"""Ground valued fields and the univariate polynomial toolkit over them.

Two fields are supported: the rationals with a p-adic valuation and the
rational function field F_p(t) with the t-adic valuation.  Polynomials are
immutable dense coefficient tuples, constant term first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from numbers import Integral, Rational

from sympy import isprime

from .ratfunc import RatFunc, format_ratfunc, format_ratfunc_sparse, parse_ratfunc
from .values import INF, Value, format_rational


class FieldMismatchError(ValueError):
    pass


class _NegInfDegree:
    """Degree of the zero polynomial; below every integer."""

    def __repr__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("valchain.NEG_INF_DEGREE")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


NEG_INF_DEGREE = _NegInfDegree()


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class PAdicRationals:
    """``(Q, v_p)``."""

    p: int
    kind = "padic"

    def __post_init__(self):
        if not isinstance(self.p, Integral) or not isprime(int(self.p)):
            raise ValueError(f"p = {self.p!r} is not prime")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def element(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (Integral, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse_element(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def valuation(self, c) -> Value:
        if not c:
            return INF
        c = Fraction(c)
        return Fraction(_vp_int(c.numerator, self.p) - _vp_int(c.denominator, self.p))

    def format_element(self, c) -> str:
        return format_rational(c)

    def parse_element(self, s: str) -> Fraction:
        s = s.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
            raise ValueError(f"bad rational literal {s!r}")
        return Fraction(s)

    def interpolation_nodes(self, n: int):
        # 0, 1, -1, 2, -2, ... keeps evaluations small
        out = [Fraction(0)]
        k = 1
        while len(out) < n:
            out.append(Fraction(k))
            if len(out) < n:
                out.append(Fraction(-k))
            k += 1
        return out[:n]

    def sample_elements(self):
        p = self.p
        return tuple(Fraction(x) for x in (0, 1, -1, p, -p, p * p, 1 + p)) + (Fraction(1, p),)

    def to_json(self):
        return {"kind": "padic", "p": self.p}

    def __str__(self):
        return f"(Q, v_{self.p})"


@dataclass(frozen=True)
class RationalFunctions:
    """``(F_p(t), v_t)``."""

    p: int
    kind = "ratfunc"

    def __post_init__(self):
        if not isinstance(self.p, Integral) or not isprime(int(self.p)):
            raise ValueError(f"p = {self.p!r} is not prime")

    @cached_property
    def zero(self):
        return RatFunc.from_int(self.p, 0)

    @cached_property
    def one(self):
        return RatFunc.from_int(self.p, 1)

    @cached_property
    def t(self):
        return RatFunc.t_power(self.p, 1)

    def element(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            if x.p != self.p:
                raise FieldMismatchError("characteristic mismatch")
            return x
        if isinstance(x, Integral):
            return RatFunc.from_int(self.p, int(x))
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has no image in F_{self.p}")
            return RatFunc.from_int(self.p, x.numerator) / RatFunc.from_int(self.p, x.denominator)
        if isinstance(x, str):
            return self.parse_element(x)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}(t)")

    def valuation(self, c) -> Value:
        if not c:
            return INF
        return Fraction(c.ord_t())

    def format_element(self, c) -> str:
        return format_ratfunc(c)

    def parse_element(self, s: str) -> RatFunc:
        return parse_ratfunc(s.strip(), self.p)

    def interpolation_nodes(self, n: int):
        # all polynomials in t ordered by (degree, digits)
        out = []
        k = 0
        while len(out) < n:
            digits, m = [], k
            while m:
                digits.append(m % self.p)
                m //= self.p
            out.append(RatFunc(self.p, tuple(reversed(digits)), (1,)))
            k += 1
        return out

    def sample_elements(self):
        p, t = self.p, self.t
        one = self.one
        return (self.zero, one, -one, t, t + one, t * t, t.inverse())

    def to_json(self):
        return {"kind": "ratfunc", "p": self.p}

    def __str__(self):
        return f"(F_{self.p}(t), v_t)"


GroundField = PAdicRationals | RationalFunctions


def _vp_int(n: int, p: int) -> int:
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def field_from_json(obj) -> GroundField:
    try:
        kind, p = obj["kind"], int(obj["p"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad field encoding {obj!r}") from exc
    if kind == "padic":
        return PAdicRationals(p)
    if kind == "ratfunc":
        return RationalFunctions(p)
    raise ValueError(f"unknown field kind {kind!r}")


def make_field(kind: str, p: int) -> GroundField:
    return field_from_json({"kind": kind, "p": p})


def ground_valuation(field: GroundField, c) -> Value:
    return field.valuation(field.element(c))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Dense univariate polynomial over a ground field, constant term first."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GroundField, coeffs=()):
        self.field = field
        cs = [field.element(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs already canonical field elements
        obj = cls.__new__(cls)
        obj.field = field
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj.coeffs = tuple(cs)
        obj._hash = None
        return obj

    @classmethod
    def x(cls, field) -> "Polynomial":
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, n: int, c=1) -> "Polynomial":
        return cls(field, [0] * n + [c])

    @classmethod
    def parse(cls, s: str, field) -> "Polynomial":
        return parse_polynomial(s, field)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF_DEGREE

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def monic(self) -> "Polynomial":
        inv = self.field.one / self.lc
        return Polynomial._raw(self.field, [c * inv for c in self.coeffs])

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatchError(f"{other.field} vs {self.field}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        try:
            return Polynomial(self.field, (other,))
        except TypeError:
            return None

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            o = self._lift(other)
            if o is None:
                return NotImplemented
            c = o.coeff(0)
            return Polynomial._raw(self.field, [c * a for a in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(self.field, ())
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial._raw(self.field, (self.field.one,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __call__(self, x):
        x = self.field.element(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return hasse_derivative(self, 1)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.field})"

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# toolkit


def poly_divmod(f: Polynomial, g: Polynomial):
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    field = f.field
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return Polynomial._raw(field, ()), f
    gc = g.coeffs
    inv = field.one / gc[-1]
    monic = gc[-1] == field.one
    q = [field.zero] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        if not c:
            continue
        if not monic:
            c = c * inv
        q[k] = c
        for j in range(dg):
            if gc[j]:
                r[k + j] = r[k + j] - c * gc[j]
        r[k + dg] = field.zero
    return Polynomial._raw(field, q), Polynomial._raw(field, r[:dg])


def taylor_shift(f: Polynomial, a) -> Polynomial:
    """Return ``f(X + a)``."""
    field = f.field
    a = field.element(a)
    c = list(f.coeffs)
    n = len(c) - 1
    if n <= 0 or not a:
        return f
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            c[j] = c[j] + a * c[j + 1]
    return Polynomial._raw(field, c)


def hasse_derivative(f: Polynomial, b: int) -> Polynomial:
    """``b``-th Hasse derivative: ``X^n -> C(n, b) X^(n-b)``."""
    if b < 1:
        raise ValueError("Hasse derivative order must be positive")
    field = f.field
    out = [field.element(comb(n, b)) * c for n, c in enumerate(f.coeffs) if n >= b]
    return Polynomial._raw(field, out)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs vanish)."""
    f._check(g)
    while g:
        f, g = g, f % g
    return f.monic() if f else f


def is_squarefree(f: Polynomial) -> bool:
    if f.is_zero():
        return False
    if f.degree == 0:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


def resultant(f: Polynomial, g: Polynomial):
    """``Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a)``.

    Computed by the Euclidean remainder sequence over the ground field using
    ``Res(g, f) = lc(g)^(deg f - deg r) Res(g, r)`` for ``r = f mod g``.
    """
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    field = f.field
    acc = field.one
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return acc * g.lc ** m
        if m == 0:
            return acc * f.lc ** n
        # swap to Res(g, f)
        if (m * n) % 2:
            acc = -acc
        r = f % g
        if r.is_zero():
            return field.zero
        acc = acc * g.lc ** (m - r.degree)
        f, g = g, r


def interpolate(field, xs, ys) -> Polynomial:
    """Newton divided-difference interpolation through ``(xs[i], ys[i])``."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = Polynomial._raw(field, (coef[-1],))
    for i in range(n - 2, -1, -1):
        poly = poly * Polynomial._raw(field, (-xs[i], field.one)) + Polynomial._raw(
            field, (coef[i],)
        )
    return poly


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of ``(i, v(a_i))``.

    ``segments`` lists ``(slope, length)`` left to right; ``zero_roots`` counts
    the power of ``X`` dividing the polynomial.
    """

    segments: tuple
    zero_roots: int
    vertices: tuple

    def root_valuations(self) -> tuple:
        """Multiset of root valuations, ascending, ``INF`` entries last."""
        out = []
        for slope, length in self.segments:
            out.extend([-slope] * length)
        out.sort()
        out.extend([INF] * self.zero_roots)
        return tuple(out)


def newton_polygon(field, f: Polynomial) -> NewtonPolygon:
    if f.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    if f.field != field:
        raise FieldMismatchError(f"{f.field} vs {field}")
    pts = [(i, field.valuation(c)) for i, c in enumerate(f.coeffs) if c]
    zero_roots = pts[0][0]
    hull: list = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the chord hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segs = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segs.append((Fraction(y2 - y1, 1) / (x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segs), zero_roots, tuple(hull))


# ---------------------------------------------------------------------------
# literal syntax:  "X^4-4X^2-4", "3/2X^2", "(1+1t|1)X"


_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?|\((?P<inner>[^()]*)\))?\*?(?:(?P<x>X)(?:\^(?P<exp>\d+))?)?$"
)


def _split_terms(s: str):
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(s[start:i])
            start = i
    if depth:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    terms.append(s[start:])
    return terms


def parse_polynomial(s: str, field) -> Polynomial:
    """Parse the dense ASCII polynomial syntax used on the command line."""
    text = re.sub(r"\s*([+\-])\s*", r"\1", s.strip())
    if not text:
        raise ValueError("empty polynomial literal")
    if re.search(r"\s", text):
        raise ValueError(f"ambiguous juxtaposition in {s!r}")
    coeffs: dict[int, object] = {}
    for term in _split_terms(text):
        sign = 1
        if term[:1] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        m = _TERM.match(term)
        if not term or not m or (m.group("coef") is None and m.group("x") is None):
            raise ValueError(f"bad term {term!r} in polynomial {s!r}")
        if m.group("inner") is not None:
            c = field.parse_element(m.group("inner"))
        elif m.group("coef") is not None:
            c = field.element(Fraction(m.group("coef")))
        else:
            c = field.one
        if m.group("x") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") is not None else 1
        c = c if sign > 0 else -c
        coeffs[k] = coeffs.get(k, field.zero) + c
    deg = max(coeffs)
    return Polynomial(field, [coeffs.get(k, field.zero) for k in range(deg + 1)])


def _format_coeff(field, c):
    """Return (sign, body) where body is '' for a unit coefficient."""
    if isinstance(field, PAdicRationals):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        return sign, ("" if a == 1 else format_rational(a))
    if c.den == (1,) and len(c.num) == 1:
        return "+", ("" if c.num[0] == 1 else str(c.num[0]))
    return "+", f"({format_ratfunc_sparse(c)})"


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        sign, body = _format_coeff(f.field, c)
        if k == 0:
            mono = body or "1"
        else:
            xpart = "X" if k == 1 else f"X^{k}"
            mono = body + xpart
        parts.append((sign, mono))
    out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    for sign, mono in parts[1:]:
        out += sign + mono
    return out


def polynomial_to_json(f: Polynomial):
    return {
        "field": f.field.to_json(),
        "coeffs": [f.field.format_element(c) for c in f.coeffs],
    }


def polynomial_from_json(obj, field=None) -> Polynomial:
    try:
        # the enclosing document's field stands in for a missing one
        fld = field_from_json(obj["field"]) if "field" in obj or field is None else field
        coeffs = obj["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad polynomial encoding {obj!r}") from exc
    if field is not None and fld != field:
        raise FieldMismatchError(f"polynomial over {fld}, expected {field}")
    if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
        raise ValueError("polynomial coefficients must be a list of strings")
    return Polynomial(fld, [fld.parse_element(c) for c in coeffs])
