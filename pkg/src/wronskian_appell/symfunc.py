"""Symmetric functions over Q, stored in the power-sum basis.

Everything here lives in ``Q[p_1, p_2, ...]``: an element is a finite map from
partitions ``mu`` to rationals, read as ``sum coeff * p_mu``. The complete,
elementary and Schur functions are constructors that expand into that basis.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Sequence

from .appell import AppellSpec
from .exactpoly import Poly, rat_str
from .partition import (
    EMPTY,
    Partition,
    conjugate,
    covers_down,
    hook_product,
    partitions_of,
    rim_hooks_down,
    rim_hooks_up,
)


class PSym:
    """Element of the ring of symmetric functions, keyed by p-monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Fraction] | None = None):
        self.terms: dict[Partition, Fraction] = {}
        for mu, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[Partition(mu)] = c

    @classmethod
    def _raw(cls, terms: dict[Partition, Fraction]) -> PSym:
        obj = cls.__new__(cls)
        obj.terms = {mu: c for mu, c in terms.items() if c}
        return obj

    @classmethod
    def one(cls) -> PSym:
        return cls._raw({EMPTY: Fraction(1)})

    @classmethod
    def zero(cls) -> PSym:
        return cls._raw({})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {mu.size() for mu in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coeff(self, mu: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(mu), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PSym):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: PSym) -> PSym:
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return PSym._raw(out)

    def __neg__(self) -> PSym:
        return PSym._raw({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: PSym) -> PSym:
        return self + (-other)

    def scale(self, c) -> PSym:
        c = Fraction(c)
        return PSym._raw({mu: c * v for mu, v in self.terms.items()})

    def __mul__(self, other) -> PSym:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PSym):
            return NotImplemented
        out: dict[Partition, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = Partition._trusted(sorted(a + b, reverse=True))
                out[key] = out.get(key, 0) + ca * cb
        return PSym._raw(out)

    def __rmul__(self, other) -> PSym:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> PSym:
        out = PSym.one()
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "PSym(0)"
        body = " + ".join(
            f"{rat_str(c)}*p{list(mu)}" for mu, c in sorted(self.terms.items(), reverse=True)
        )
        return f"PSym({body})"

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(mu), "coefficient": rat_str(c)}
            for mu, c in sorted(self.terms.items(), reverse=True)
        ]


def p_gen(m: int) -> PSym:
    if m < 1:
        raise ValueError("p_0 undefined" if m == 0 else "negative power-sum index")
    return PSym._raw({Partition._trusted((m,)): Fraction(1)})


def centralizer_size(mu: Partition) -> int:
    """``z_mu = prod_i i^(m_i) m_i!`` for part multiplicities ``m_i``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def _sign(mu: Partition) -> int:
    return -1 if (mu.size() - len(mu)) % 2 else 1


@cache
def h_gen(m: int) -> PSym:
    """``h_m = sum_{mu |- m} p_mu / z_mu``, the degree-m part of ``exp(sum p_k t^k / k)``."""
    if m < 0:
        return PSym.zero()
    return PSym._raw({mu: Fraction(1, centralizer_size(mu)) for mu in partitions_of(m)})


@cache
def e_gen(m: int) -> PSym:
    """``e_m = sum_{mu |- m} (-1)^(m - l(mu)) p_mu / z_mu``."""
    if m < 0:
        return PSym.zero()
    return PSym._raw(
        {mu: Fraction(_sign(mu), centralizer_size(mu)) for mu in partitions_of(m)}
    )


def determinant(matrix: Sequence[Sequence[PSym]]) -> PSym:
    """Laplace expansion along rows, memoised on the set of unused columns."""
    n = len(matrix)
    memo: dict[tuple[int, ...], PSym] = {}

    def minor(row: int, cols: tuple[int, ...]) -> PSym:
        if row == n:
            return PSym.one()
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = PSym.zero()
        for pos, j in enumerate(cols):
            entry = matrix[row][j]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def jacobi_trudi(lam: Partition, gen: Callable[[int], PSym] = h_gen) -> PSym:
    """``det[gen(lam_i - i + j)]``; with ``e_gen`` this is the dual form."""
    r = len(lam)
    return determinant([[gen(lam[i] - i + j) for j in range(r)] for i in range(r)])


@cache
def schur(lam: Partition) -> PSym:
    return jacobi_trudi(Partition(lam), h_gen)


def omega(f: PSym) -> PSym:
    return PSym._raw({mu: _sign(mu) * c for mu, c in f.terms.items()})


def partial_p1(f: PSym) -> PSym:
    """Formal derivative with respect to ``p_1``."""
    out: dict[Partition, Fraction] = {}
    for mu, c in f.terms.items():
        ones = mu.count(1)
        if ones:
            key = Partition._trusted(mu[:-1])
            out[key] = out.get(key, 0) + ones * c
    return PSym._raw(out)


def mn_multiply_p(k: int, lam: Partition) -> list[tuple[Partition, int]]:
    """``p_k s_lam`` as signed Schur indices, via rim hooks added to ``lam``."""
    if k < 1:
        raise ValueError("k must be positive")
    return [(h.outer, h.sign) for h in rim_hooks_up(Partition(lam), k)]


def schur_combination(pairs: Iterable[tuple[Partition, int]]) -> PSym:
    total = PSym.zero()
    for gamma, coeff in pairs:
        total = total + schur(gamma).scale(coeff)
    return total


def augmented_schur_p_integral(lam: Partition) -> dict[Partition, int]:
    """Coefficients of ``H(lam) s_lam`` in the p-basis; all must be integers."""
    lam = Partition(lam)
    scaled = schur(lam).scale(hook_product(lam))
    out = {}
    for mu, c in scaled.terms.items():
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {c} at p{list(mu)} for {lam!r}")
        out[mu] = c.numerator
    return dict(sorted(out.items(), reverse=True))


def schur_newton_lhs_rhs(lam: Partition) -> tuple[PSym, PSym]:
    """Both sides of ``n s_lam = sum_k sum_{lam/mu rim hook of size k} (-1)^ht p_k s_mu``."""
    lam = Partition(lam)
    n = lam.size()
    if n < 1:
        raise ValueError("needs a nonempty partition")
    lhs = schur(lam).scale(n)
    rhs = PSym.zero()
    for k in range(1, n + 1):
        for hook in rim_hooks_down(lam, k):
            rhs = rhs + (p_gen(k) * schur(hook.inner)).scale(hook.sign)
    return lhs, rhs


def cauchy_diagonal(n: int) -> PSym:
    """Degree-n coefficient in t of ``exp(sum_k p_k^2 t^k / k)``."""
    # E_m = (1/m) sum_{k=1}^m p_k^2 E_{m-k}, from differentiating the exponential
    coeffs = [PSym.one()]
    for m in range(1, n + 1):
        acc = PSym.zero()
        for k in range(1, m + 1):
            acc = acc + p_gen(k) * p_gen(k) * coeffs[m - k]
        coeffs.append(acc.scale(Fraction(1, m)))
    return coeffs[n]


def phi_images(spec: AppellSpec, n: int) -> list:
    """``[None, x + c_1, c_2/1!, c_3/2!, ...]`` up to index n."""
    out: list = [None, Poly([spec.cumulant(1), 1])] if n >= 1 else [None]
    for k in range(2, n + 1):
        out.append(spec.cumulant(k) / factorial(k - 1))
    return out


def phi_apply(spec: AppellSpec, f: PSym) -> Poly:
    """Image under the homomorphism sending ``h_m`` to ``A_m / m!``.

    On power sums it is ``p_1 -> x + c_1`` and ``p_k -> c_k / (k-1)!``.
    """
    top = max((max(mu) for mu in f.terms if mu), default=0)
    images = phi_images(spec, top)
    powers = [Poly.constant(1)]
    total = Poly()
    for mu, c in f.terms.items():
        ones = mu.count(1)
        while len(powers) <= ones:
            powers.append(powers[-1] * images[1])
        scalar = c
        for part in mu:
            if part > 1:
                scalar *= images[part]
                if not scalar:
                    break
        if scalar:
            total = total + powers[ones] * scalar
    return total
