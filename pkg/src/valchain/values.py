"""Totally ordered value groups with a top element.

Finite values of a rank-one valuation are plain :class:`fractions.Fraction`
objects; the top element is the singleton :data:`INF`.  Values of the minimal
valuation live in ``Z x Q`` ordered lexicographically and are represented by
:class:`LexValue`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union


class UndefinedOperationError(ArithmeticError):
    """Raised for operations such as ``0 * inf``."""


class _Infinity:
    """The absorbing top element shared by both value kinds."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("valchain.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        _check_comparable(other)
        return False

    def __le__(self, other):
        _check_comparable(other)
        return other is self

    def __gt__(self, other):
        _check_comparable(other)
        return other is not self

    def __ge__(self, other):
        _check_comparable(other)
        return True

    def __add__(self, other):
        _check_comparable(other)
        return self

    __radd__ = __add__

    def __sub__(self, other):
        _check_comparable(other)
        if other is self:
            raise UndefinedOperationError("inf - inf is undefined")
        return self

    def __neg__(self):
        raise UndefinedOperationError("-inf is not a value")

    def __mul__(self, n):
        if isinstance(n, Rational) and n > 0:
            return self
        raise UndefinedOperationError(f"inf * {n!r} is undefined")

    __rmul__ = __mul__

    def __truediv__(self, n):
        if isinstance(n, Rational) and n > 0:
            return self
        raise UndefinedOperationError(f"inf / {n!r} is undefined")


INF = _Infinity()


def _check_comparable(other):
    if not (other is INF or isinstance(other, (Rational, LexValue))):
        raise TypeError(f"cannot compare a value with {type(other).__name__}")


@dataclass(frozen=True, order=True)
class LexValue:
    """Finite element ``(d, q)`` of ``Z x Q`` with lexicographic order."""

    d: int
    q: Fraction

    def __post_init__(self):
        if not isinstance(self.d, int) or isinstance(self.d, bool):
            raise TypeError("first coordinate must be an integer")
        object.__setattr__(self, "q", Fraction(self.q))

    def __add__(self, other):
        if other is INF:
            return INF
        if isinstance(other, LexValue):
            return LexValue(self.d + other.d, self.q + other.q)
        return NotImplemented

    def __mul__(self, n):
        if isinstance(n, int):
            if n < 0:
                raise ValueError("scaling factor must be nonnegative")
            return LexValue(self.d * n, self.q * n)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.d}, {format_rational(self.q)})"


Value = Union[Fraction, _Infinity]
AnyValue = Union[Fraction, LexValue, _Infinity]


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


def is_finite(a) -> bool:
    return a is not INF


def value_add(a, b):
    """Group law; ``INF`` absorbs."""
    if a is INF or b is INF:
        _check_comparable(a)
        _check_comparable(b)
        return INF
    if isinstance(a, LexValue) or isinstance(b, LexValue):
        if not (isinstance(a, LexValue) and isinstance(b, LexValue)):
            raise TypeError("cannot add a lex value and a rational value")
        return a + b
    return Fraction(a) + Fraction(b)


def value_scale(n: int, a):
    """``n * a`` for a nonnegative integer ``n``; ``0 * INF`` is undefined."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("scaling factor must be a nonnegative integer")
    if a is INF:
        if n == 0:
            raise UndefinedOperationError("0 * inf is undefined")
        return INF
    if isinstance(a, LexValue):
        return a * n
    return Fraction(a) * n


def _kind(a) -> str | None:
    if a is INF:
        return None
    if isinstance(a, LexValue):
        return "lex"
    if isinstance(a, Rational):
        return "rational"
    raise TypeError(f"not a value: {a!r}")


def value_compare(a, b) -> Ordering:
    ka, kb = _kind(a), _kind(b)
    if ka is not None and kb is not None and ka != kb:
        raise TypeError(f"cannot compare {ka} value with {kb} value")
    if a == b:
        return Ordering.EQ
    return Ordering.LT if a < b else Ordering.GT


def embed(gamma) -> LexValue | _Infinity:
    """The order-preserving embedding ``gamma -> (0, gamma)``."""
    if gamma is INF:
        return INF
    return LexValue(0, Fraction(gamma))


def vmin(values):
    """Minimum of a nonempty iterable of values."""
    it = iter(values)
    try:
        best = next(it)
    except StopIteration:
        raise ValueError("minimum of an empty sequence") from None
    for x in it:
        if x < best:
            best = x
    return best


def vmax(values):
    it = iter(values)
    try:
        best = next(it)
    except StopIteration:
        raise ValueError("maximum of an empty sequence") from None
    for x in it:
        if x > best:
            best = x
    return best


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_value(a) -> str:
    if a is INF:
        return "inf"
    if isinstance(a, LexValue):
        return str(a)
    return format_rational(a)


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational literal")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {s!r}") from exc


def parse_value(s: str):
    if s.strip().lower() in ("inf", "infinity", "∞"):
        return INF
    return parse_rational(s)


def value_to_json(a):
    if a is INF:
        return "inf"
    if isinstance(a, LexValue):
        return [str(a.d), format_rational(a.q)]
    return format_rational(a)


def value_from_json(obj):
    if isinstance(obj, list):
        if len(obj) != 2:
            raise ValueError("lex value must be a two-element array")
        d = parse_rational(str(obj[0]))
        if d.denominator != 1:
            raise ValueError("lex first coordinate must be an integer")
        return LexValue(int(d), parse_rational(str(obj[1])))
    if isinstance(obj, str):
        return parse_value(obj)
    raise ValueError(f"bad value encoding: {obj!r}")
