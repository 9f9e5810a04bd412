"""Mean, second moment and variance of ``A_lam`` under Plancherel measure.

Every statistic is computed twice: by summing ``F_lam^2 A_lam / n!`` over all
partitions of n, and by its closed form. A mismatch raises
:class:`TheoremViolation`, which can only mean an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .appell import AppellSpec, appell_poly, hermite, laguerre, second_moment_spec
from .cyclotomic import CyclotomicField
from .exactpoly import Poly, eval_at_square_shift
from .partition import partitions_of, syt_count
from .wapoly import wap


class TheoremViolation(ArithmeticError):
    pass


def _brute_force(spec: AppellSpec, n: int, power: int, route: str) -> Poly:
    total = Poly()
    for lam in partitions_of(n):
        total = total + wap(spec, lam, route) ** power * syt_count(lam) ** 2
    return total / factorial(n)


def mean(spec: AppellSpec, n: int, route: str = "direct") -> Poly:
    if n < 0:
        raise ValueError("n must be non-negative")
    brute = _brute_force(spec, n, 1, route)
    closed = appell_poly(spec, 1) ** n
    if brute != closed:
        raise TheoremViolation(f"mean for {spec.name}, n={n}: {brute} != {closed}")
    return brute


def second_moment_closed_form(spec: AppellSpec, n: int) -> Poly:
    """``B_n((x + c_1)^2)`` with B the central sequence of squared cumulants."""
    return eval_at_square_shift(appell_poly(second_moment_spec(spec), n), spec.cumulant(1))


def second_moment(spec: AppellSpec, n: int, route: str = "direct") -> Poly:
    if n < 0:
        raise ValueError("n must be non-negative")
    brute = _brute_force(spec, n, 2, route)
    closed = second_moment_closed_form(spec, n)
    if brute != closed:
        raise TheoremViolation(f"second moment for {spec.name}, n={n}: {brute} != {closed}")
    return brute


def variance(spec: AppellSpec, n: int, route: str = "direct") -> tuple[Poly, bool | None]:
    """Variance and whether ``deg <= 2n - 4`` (``None`` for n < 2, where no bound is claimed)."""
    var = second_moment(spec, n, route) - mean(spec, n, route) ** 2
    return var, (var.degree <= 2 * n - 4) if n >= 2 else None


@dataclass(frozen=True)
class PlancherelReport:
    n: int
    mean: Poly
    second_moment: Poly
    variance: Poly
    variance_degree_bound_ok: bool | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mean": self.mean.to_json(),
            "second_moment": self.second_moment.to_json(),
            "variance": self.variance.to_json(),
            "variance_degree_bound_ok": self.variance_degree_bound_ok,
        }


def report(spec: AppellSpec, n: int, route: str = "direct") -> PlancherelReport:
    m = mean(spec, n, route)
    s = second_moment(spec, n, route)
    var = s - m**2
    ok = (var.degree <= 2 * n - 4) if n >= 2 else None
    return PlancherelReport(n, m, s, var, ok)


def hermite_dual_at_square(n: int) -> Poly:
    """``i^(-n) He_n(i x^2)``, computed in Q(i) and checked to be real."""
    K = CyclotomicField(4)
    i = K.zeta()
    he = appell_poly(hermite(), n)
    coeffs = []
    # i^-n He_n(i y) = sum_j a_j i^(j-n) y^j, then y = x^2
    for j in range(n + 1):
        value = i ** (j - n) * he.coeff(j)
        if not value.is_rational():
            raise TheoremViolation(f"non-real coefficient {value} at y^{j}")
        coeffs += [value.to_rational(), Fraction(0)]
    return Poly(coeffs)


def laguerre_second_moment_check(alpha, n: int, route: str = "direct") -> bool:
    """Second moment of modified Laguerre ``A_lam`` against ``(-1)^n l_n^(-a^2)(-x^2 - 2 a x)``."""
    alpha = Fraction(alpha)
    brute = _brute_force(laguerre(alpha), n, 2, route)
    arg = Poly([0, -2 * alpha, -1])
    closed = appell_poly(laguerre(-(alpha**2)), n)(arg) * (-1) ** n
    return brute == closed
