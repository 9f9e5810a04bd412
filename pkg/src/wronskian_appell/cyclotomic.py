"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are rational polynomials in ``zeta`` reduced modulo the m-th
cyclotomic polynomial, so equality is plain coefficient comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .exactpoly import Poly


@cache
def cyclotomic_poly(m: int) -> Poly:
    if m < 1:
        raise ValueError("m must be positive")
    poly = Poly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


class CyclotomicField:
    def __init__(self, m: int):
        self.m = m
        self.modulus = cyclotomic_poly(m)

    def __repr__(self) -> str:
        return f"CyclotomicField({self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("Q(zeta)", self.m))

    def element(self, poly: Poly) -> Cyc:
        return Cyc(self, poly.divmod(self.modulus)[1])

    def rational(self, q) -> Cyc:
        return Cyc(self, Poly.constant(Fraction(q)))

    def zeta(self, power: int = 1) -> Cyc:
        return self.element(Poly.monomial(power % self.m))


class Cyc:
    __slots__ = ("field", "poly")

    def __init__(self, field: CyclotomicField, poly: Poly):
        self.field = field
        self.poly = poly

    def _lift(self, other) -> Cyc:
        if isinstance(other, Cyc):
            if other.field != self.field:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return self.field.rational(other)

    def __add__(self, other) -> Cyc:
        return Cyc(self.field, self.poly + self._lift(other).poly)

    __radd__ = __add__

    def __neg__(self) -> Cyc:
        return Cyc(self.field, -self.poly)

    def __sub__(self, other) -> Cyc:
        return self + (-self._lift(other))

    def __mul__(self, other) -> Cyc:
        return self.field.element(self.poly * self._lift(other).poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Cyc:
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.field.rational(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> Cyc:
        # Extended Euclid in Q[t] against the cyclotomic modulus.
        r0, r1 = self.field.modulus, self.poly
        s0, s1 = Poly(), Poly.constant(1)
        if r1.is_zero():
            raise ZeroDivisionError("inverse of zero")
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        # r0 is a nonzero constant
        return self.field.element(s0 * (Fraction(1) / r0.coeffs[0]))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.field == other.field and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.field, self.poly))

    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.poly.coeff(0)

    def __repr__(self) -> str:
        return f"Cyc({self.poly.to_str('zeta')} in Q(zeta_{self.field.m}))"
