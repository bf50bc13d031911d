"""Elements of the rational function field F_p(t).

Numerator and denominator are dense coefficient tuples over F_p in
highest-degree-first order (the layout of :mod:`sympy.polys.galoistools`).
The denominator is monic and coprime to the numerator, so equality is
structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral

from sympy.polys.domains import ZZ
from sympy.polys import galoistools as gf


def _norm(coeffs, p):
    return tuple(int(c) % p for c in gf.gf_strip([int(c) % p for c in coeffs]))


class RatFunc:
    __slots__ = ("p", "num", "den", "_hash")

    def __init__(self, p: int, num=(), den=(1,), _canonical=False):
        self.p = p
        if _canonical:
            self.num, self.den = num, den
        else:
            num, den = _norm(num, p), _norm(den, p)
            if not den:
                raise ZeroDivisionError("zero denominator")
            if not num:
                self.num, self.den = (), (1,)
            else:
                g = gf.gf_gcd(list(num), list(den), p, ZZ)
                if len(g) > 1:
                    num = gf.gf_quo(list(num), g, p, ZZ)
                    den = gf.gf_quo(list(den), g, p, ZZ)
                lc = int(den[0])
                if lc != 1:
                    inv = pow(lc, -1, p)
                    num = gf.gf_mul_ground(list(num), inv, p, ZZ)
                    den = gf.gf_mul_ground(list(den), inv, p, ZZ)
                self.num, self.den = _norm(num, p), _norm(den, p)
        self._hash = None

    @classmethod
    def from_int(cls, p: int, n: int) -> "RatFunc":
        n %= p
        return cls(p, (n,) if n else (), (1,), _canonical=True)

    @classmethod
    def t_power(cls, p: int, k: int) -> "RatFunc":
        if k >= 0:
            return cls(p, (1,) + (0,) * k, (1,), _canonical=True)
        return cls(p, (1,), (1,) + (0,) * (-k), _canonical=True)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.p != self.p:
                raise ValueError("characteristic mismatch")
            return other
        if isinstance(other, Integral):
            return RatFunc.from_int(self.p, int(other))
        if isinstance(other, Fraction) and other.denominator % self.p:
            return RatFunc.from_int(self.p, other.numerator) / RatFunc.from_int(
                self.p, other.denominator
            )
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RatFunc) else other
        if o is None:
            return NotImplemented
        return self.p == o.p and self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.num, self.den))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(p, gf.gf_add(list(self.num), list(o.num), p, ZZ), self.den)
        num = gf.gf_add(
            gf.gf_mul(list(self.num), list(o.den), p, ZZ),
            gf.gf_mul(list(o.num), list(self.den), p, ZZ),
            p,
            ZZ,
        )
        return RatFunc(p, num, gf.gf_mul(list(self.den), list(o.den), p, ZZ))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.p, tuple((-c) % self.p for c in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc(self.p, (), (1,), _canonical=True)
        p = self.p
        if self.den == (1,) and o.den == (1,):
            return RatFunc(p, _norm(gf.gf_mul(list(self.num), list(o.num), p, ZZ), p), (1,),
                           _canonical=True)
        return RatFunc(
            p,
            gf.gf_mul(list(self.num), list(o.num), p, ZZ),
            gf.gf_mul(list(self.den), list(o.den), p, ZZ),
        )

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.p, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.from_int(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def ord_t(self) -> int:
        """t-adic order; caller handles zero."""
        return _trailing_zeros(self.num) - _trailing_zeros(self.den)

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        return format_ratfunc(self)


def _trailing_zeros(coeffs) -> int:
    k = 0
    for c in reversed(coeffs):
        if c:
            break
        k += 1
    return k


def format_fp_poly(coeffs_high_first) -> str:
    """Dense rendering, constant first: ``1+0t+1t^2``."""
    if not coeffs_high_first:
        return "0"
    low = list(reversed(coeffs_high_first))
    parts = []
    for i, c in enumerate(low):
        if i == 0:
            parts.append(f"{c}")
        elif i == 1:
            parts.append(f"{c}t")
        else:
            parts.append(f"{c}t^{i}")
    return "+".join(parts)


def format_fp_poly_sparse(coeffs_high_first) -> str:
    """Human-readable rendering, constant first, zero terms dropped: ``1+t^2``."""
    if not coeffs_high_first:
        return "0"
    parts = []
    for i, c in enumerate(reversed(coeffs_high_first)):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        parts.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return "+".join(parts)


def format_ratfunc_sparse(x: RatFunc) -> str:
    num = format_fp_poly_sparse(x.num)
    return num if x.den == (1,) else f"{num}|{format_fp_poly_sparse(x.den)}"


def format_ratfunc(x: RatFunc) -> str:
    return f"{format_fp_poly(x.num)}|{format_fp_poly(x.den)}"


_FP_TERM = re.compile(r"^(\d*)(?:(t)(?:\^(\d+))?)?$")


def parse_fp_poly(s: str, p: int):
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty F_p[t] polynomial")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        m = _FP_TERM.match(term)
        if not term or not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad F_p[t] term {term!r} in {s!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[k] = (coeffs.get(k, 0) + c) % p
    deg = max(coeffs)
    return tuple(coeffs.get(k, 0) for k in range(deg, -1, -1))


def parse_ratfunc(s: str, p: int) -> RatFunc:
    """Parse ``num|den`` (or a bare numerator) into an element of F_p(t)."""
    if s.count("|") > 1:
        raise ValueError(f"bad rational function literal {s!r}")
    num, _, den = s.partition("|")
    num_c = parse_fp_poly(num, p)
    den_c = parse_fp_poly(den, p) if den else (1,)
    if not _norm(den_c, p):
        raise ValueError(f"zero denominator in {s!r}")
    return RatFunc(p, num_c, den_c)
