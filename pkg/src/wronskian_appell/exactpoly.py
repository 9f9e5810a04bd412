"""Dense univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values stored lowest degree first,
with leading zeros trimmed. The zero polynomial has no coefficients and its
degree is ``-inf`` so that it never takes part in integer arithmetic by accident.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"``; decimals and floats are rejected."""
    m = _RAT_RE.match(str(text))
    if not m:
        raise ValueError(f"not an exact rational (use p/q or an integer): {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        return cls([0] * n + [c])

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading_coefficient() == 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c: Scalar) -> Poly:
        return exact_div_scalar(self, c)

    def __call__(self, value):
        """Evaluate by Horner; ``value`` may be a scalar or another Poly."""
        acc = Poly() if isinstance(value, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Poly(quot), Poly(rem[:db])

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        """Human-readable form, highest degree first, e.g. ``x^3 - 3/2*x + 1``."""
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = rat_str(mag)
            else:
                xpart = var if k == 1 else f"{var}^{k}"
                body = xpart if mag == 1 else f"{rat_str(mag)}*{xpart}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_latex(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if mag.denominator == 1:
                num = str(mag.numerator)
            else:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            xpart = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
            body = num + xpart if (mag != 1 or k == 0) else xpart
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls(parse_rat(s) for s in data)


def _as_poly(obj):
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Poly.constant(obj)
    return NotImplemented


def derivative(p: Poly, k: int = 1) -> Poly:
    cs = list(p.coeffs)
    for _ in range(k):
        cs = [i * c for i, c in enumerate(cs)][1:]
    return Poly(cs)


def exact_div_scalar(p: Poly, c: Scalar) -> Poly:
    c = Fraction(c)
    if c == 0:
        raise ZeroDivisionError("division by zero")
    return Poly(a / c for a in p.coeffs)


def shift(p: Poly, a: Scalar) -> Poly:
    """``p(x + a)``."""
    return p(Poly([a, 1]))


def eval_at_square_shift(p: Poly, a: Scalar) -> Poly:
    """``p((x + a)^2)``."""
    return p(Poly([a, 1]) ** 2)


def is_integer_poly(p: Poly) -> bool:
    return all(c.denominator == 1 for c in p.coeffs)


def determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials by fraction-free elimination.

    Bareiss' scheme: every division is exact in Q[x], so no rational functions
    ever appear. Rows are swapped when a pivot vanishes.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return Poly.constant(1)
    sign = 1
    prev = Poly.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for s in range(k + 1, n):
                if not m[s][k].is_zero():
                    m[k], m[s] = m[s], m[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
        prev = pivot
    return m[n - 1][n - 1] * sign


def wronskian(ps: Sequence[Poly]) -> Poly:
    """``det[p_j^(i-1)]`` for a nonempty list of polynomials."""
    if not ps:
        raise ValueError("wronskian of an empty list")
    rows = [list(ps)]
    for _ in range(len(ps) - 1):
        rows.append([derivative(p) for p in rows[-1]])
    return determinant(rows)
