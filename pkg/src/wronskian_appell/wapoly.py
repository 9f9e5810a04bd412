"""Wronskian Appell polynomials and the identities they satisfy.

``A_lam`` is the Wronskian of ``A_{n_1}, ..., A_{n_r}`` (``n`` the degree vector
of ``lam``) divided by the Vandermonde of ``n``. Three independent algorithms
compute it:

``direct``
    the Wronskian determinant itself;
``phi``
    ``H(lam)`` times the image of the Schur function under the homomorphism
    ``h_m -> A_m / m!``;
``recurrence``
    the generating recurrence over Young's lattice, which only needs the
    cumulants.

By default :func:`wap` runs all three and refuses to answer if they differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Mapping

from . import appell
from .appell import AppellSpec, appell_poly
from .cyclotomic import CyclotomicField
from .exactpoly import Poly, derivative, is_integer_poly, wronskian
from .partition import (
    Partition,
    conjugate,
    covers_down,
    covers_up,
    degree_vector,
    hook_product,
    partitions_up_to,
    rim_hooks_down,
    rim_hooks_up,
    skew_syt_count,
    subpartitions,
    syt_count,
    vandermonde,
)
from .symfunc import phi_apply, schur

ROUTES = ("direct", "phi", "recurrence")
X = Poly.x()


class RouteDisagreement(ArithmeticError):
    """Two algorithms for the same ``A_lam`` gave different polynomials."""

    def __init__(self, spec: AppellSpec, lam: Partition, results: Mapping[str, Poly]):
        self.spec, self.lam, self.results = spec, lam, dict(results)
        lines = [f"routes disagree for {spec.name} at partition [{lam}]:"]
        names = list(results)
        base = results[names[0]]
        for name in names:
            lines.append(f"  {name}: {results[name]}")
        for name in names[1:]:
            p = results[name]
            top = max(len(base.coeffs), len(p.coeffs))
            diffs = [
                f"x^{i}: {base.coeff(i)} vs {p.coeff(i)}"
                for i in range(top)
                if base.coeff(i) != p.coeff(i)
            ]
            if diffs:
                lines.append(f"  {names[0]} vs {name}: " + "; ".join(diffs))
        super().__init__("\n".join(lines))


def _memo(spec: AppellSpec, key, compute: Callable[[], Poly]) -> Poly:
    hit = spec.cache.get(key)
    if hit is None:
        hit = compute()
        # idempotent: concurrent writers store equal values
        spec.cache.setdefault(key, hit)
    return hit


def wap_direct(spec: AppellSpec, lam) -> Poly:
    lam = Partition(lam)

    def compute() -> Poly:
        if not lam:
            return Poly.constant(1)
        ns = degree_vector(lam)
        assert all(a < b for a, b in zip(ns, ns[1:])), "degree vector must be strictly increasing"
        return wronskian([appell_poly(spec, n) for n in ns]) / vandermonde(ns)

    return _memo(spec, ("direct", lam), compute)


def wap_via_phi(spec: AppellSpec, lam) -> Poly:
    lam = Partition(lam)
    return _memo(spec, ("phi", lam), lambda: phi_apply(spec, schur(lam)) * hook_product(lam))


def wap_recurrence(spec: AppellSpec, lam) -> Poly:
    lam = Partition(lam)
    key = ("recurrence", lam)
    hit = spec.cache.get(key)
    if hit is not None:
        return hit
    if not lam:
        return spec.cache.setdefault(key, Poly.constant(1))
    n = lam.size()
    total = X * sum((wap_recurrence(spec, mu) * syt_count(mu) for mu in covers_down(lam)), Poly())
    for k in range(1, n + 1):
        c = spec.cumulant(k)
        if not c:
            continue
        inner = Poly()
        for hook in rim_hooks_down(lam, k):
            inner = inner + wap_recurrence(spec, hook.inner) * (hook.sign * syt_count(hook.inner))
        total = total + inner * (c * comb(n - 1, k - 1))
    result = total / syt_count(lam)
    if result.degree != n or not result.is_monic():
        raise ArithmeticError(f"recurrence produced a non-monic or wrong-degree result at {lam!r}")
    return spec.cache.setdefault(key, result)


_ROUTE_FUNCS = {"direct": wap_direct, "phi": wap_via_phi, "recurrence": wap_recurrence}


def wap(spec: AppellSpec, lam, route: str = "cross_checked") -> Poly:
    """``A_lam`` by one route, or by all three with an agreement check."""
    lam = Partition(lam)
    if route in _ROUTE_FUNCS:
        return _ROUTE_FUNCS[route](spec, lam)
    if route != "cross_checked":
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES + ('cross_checked',)}")
    results = {name: fn(spec, lam) for name, fn in _ROUTE_FUNCS.items()}
    first = results["direct"]
    if any(p != first for p in results.values()):
        raise RouteDisagreement(spec, lam, results)
    return first


# identity checks ------------------------------------------------------------


def weighted_sum(spec: AppellSpec, partitions, route: str, weight=syt_count) -> Poly:
    return sum((wap(spec, mu, route) * weight(mu) for mu in partitions), Poly())


def derivative_identity_check(spec: AppellSpec, lam, route: str = "direct") -> bool:
    """``F_lam A_lam' = |lam| sum_{mu covered by lam} F_mu A_mu``."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("needs a nonempty partition")
    lhs = derivative(wap(spec, lam, route)) * syt_count(lam)
    rhs = weighted_sum(spec, covers_down(lam), route) * lam.size()
    return lhs == rhs


def topdown_sides(spec: AppellSpec, lam, k: int, route: str = "direct") -> tuple[Poly, Poly]:
    lam = Partition(lam)
    if k < 1:
        raise ValueError("k must be positive")
    n = lam.size()
    base = wap(spec, lam, route) * syt_count(lam)
    if k == 1:
        lhs = base * Poly([spec.cumulant(1), 1]) * (n + 1)
        rhs = weighted_sum(spec, covers_up(lam), route)
    else:
        lhs = base * (k * spec.cumulant(k) * comb(n + k, k))
        rhs = sum(
            (wap(spec, h.outer, route) * (h.sign * syt_count(h.outer)) for h in rim_hooks_up(lam, k)),
            Poly(),
        )
    return lhs, rhs


def topdown_check(spec: AppellSpec, lam, k: int, route: str = "direct") -> bool:
    lhs, rhs = topdown_sides(spec, lam, k, route)
    return lhs == rhs


def generating_recurrence_check(spec: AppellSpec, lam, route: str = "direct") -> bool:
    """The generating recurrence, evaluated on polynomials from ``route``."""
    lam = Partition(lam)
    n = lam.size()
    if n < 1:
        raise ValueError("needs a nonempty partition")
    rhs = X * weighted_sum(spec, covers_down(lam), route)
    for k in range(1, n + 1):
        hooks = rim_hooks_down(lam, k)
        inner = sum(
            (wap(spec, h.inner, route) * (h.sign * syt_count(h.inner)) for h in hooks), Poly()
        )
        rhs = rhs + inner * (spec.cumulant(k) * comb(n - 1, k - 1))
    return wap(spec, lam, route) * syt_count(lam) == rhs


def _dual(spec: AppellSpec) -> AppellSpec:
    # one dual instance per spec so its polynomial cache is reused
    return spec.cache.setdefault("dual-spec", appell.dual(spec))


def column(n: int) -> Partition:
    return Partition([1] * n)


def dual_appell_check(spec: AppellSpec, n: int, route: str = "direct") -> bool:
    """``m -> A_(1^m)`` is Appell and matches the dual cumulant stream, for m <= n."""
    dual = _dual(spec)
    for m in range(n + 1):
        a_m = wap(spec, column(m), route)
        if a_m != appell_poly(dual, m):
            return False
        if m and derivative(a_m) != wap(spec, column(m - 1), route) * m:
            return False
    return True


def dual_check(spec: AppellSpec, lam, route: str = "direct") -> bool:
    """``A*_lam = A_lam'`` plus the Appell property of the column polynomials."""
    lam = Partition(lam)
    dual = _dual(spec)
    if wap(dual, lam, route) != wap(spec, conjugate(lam), route):
        return False
    return dual_appell_check(spec, lam.size(), route)


def double_dual_check(spec: AppellSpec, lam, route: str = "direct") -> bool:
    lam = Partition(lam)
    twice = _dual(_dual(spec))
    return wap(twice, lam, route) == wap(spec, lam, route)


def self_duality_statements(spec: AppellSpec, order: int, route: str = "direct") -> tuple[bool, bool, bool]:
    """The three equivalent self-duality statements, tested up to ``order``.

    (a) ``A_n = A*_n`` for n <= order, (b) ``A_lam = A_lam'`` for |lam| <= order,
    (c) every even cumulant up to ``order`` vanishes.
    """
    a = all(appell_poly(spec, n) == wap(spec, column(n), route) for n in range(order + 1))
    b = all(wap(spec, lam, route) == wap(spec, conjugate(lam), route) for lam in partitions_up_to(order))
    c = all(not spec.cumulant(k) for k in range(2, order + 1, 2))
    return a, b, c


def exp_rt_dual_transform_check(alpha, r: int, lam, route: str = "direct") -> bool:
    """``A_lam'(x) = rho^|lam| A_lam(x / rho)`` with ``rho = -exp(pi i / r)``.

    Checked coefficient by coefficient in Q(zeta_2r): the x^j coefficient on the
    right is ``rho^(n-j) a_j``.
    """
    lam = Partition(lam)
    spec = appell.exp_rt(alpha, r)
    K = CyclotomicField(2 * r)
    rho = -K.zeta()
    left = wap(spec, conjugate(lam), route)
    right = wap(spec, lam, route)
    n = lam.size()
    return all(
        K.rational(left.coeff(j)) == rho ** (n - j) * right.coeff(j) for j in range(n + 1)
    )


def integrality_hypothesis(spec: AppellSpec, order: int) -> bool:
    """``c_k / (k-1)!`` is an integer for every k <= order."""
    return all((spec.cumulant(k) / factorial(k - 1)).denominator == 1 for k in range(1, order + 1))


def integrality_check(spec: AppellSpec, lam, route: str = "cross_checked") -> bool | None:
    """Integer coefficients of ``A_lam``; ``None`` when the hypothesis does not hold."""
    lam = Partition(lam)
    if not integrality_hypothesis(spec, lam.size()):
        return None
    return is_integer_poly(wap(spec, lam, route))


# Appell nets ---------------------------------------------------------------


@dataclass
class AppellNet:
    """Net polynomials built from arbitrary constants ``z_lam`` (``z_empty = 1``)."""

    constants: Mapping[Partition, Fraction] | Callable[[Partition], Fraction] = field(default_factory=dict)

    def z(self, lam: Partition) -> Fraction:
        if not lam:
            return Fraction(1)
        if callable(self.constants):
            return Fraction(self.constants(lam))
        return Fraction(self.constants.get(Partition(lam), 0))

    def poly(self, lam) -> Poly:
        return appell_net_poly(self, lam)


def appell_net_poly(net: AppellNet, lam) -> Poly:
    """``F_lam A_lam = sum_mu C(|lam|, |mu|) F_{lam/mu} F_mu z_mu x^(|lam| - |mu|)``."""
    lam = Partition(lam)
    n = lam.size()
    coeffs = [Fraction(0)] * (n + 1)
    for mu in subpartitions(lam):
        z = net.z(mu)
        if z:
            m = mu.size()
            coeffs[n - m] += comb(n, m) * skew_syt_count(lam, mu) * syt_count(mu) * z
    return Poly(coeffs) / syt_count(lam)


def net_from_spec(spec: AppellSpec, route: str = "direct") -> AppellNet:
    return AppellNet(lambda lam: wap(spec, lam, route).coeff(0))

