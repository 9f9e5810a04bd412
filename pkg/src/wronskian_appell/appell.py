"""Appell sequences described by their cumulant (or moment) streams.

An Appell sequence has exponential generating function ``exp(x t) f(t)``.
The moments ``z_k`` are the coefficients of ``f`` (``z_k = A_k(0)``) and the
cumulants ``c_k`` those of ``log f``; both are kept as exact rationals and
produced lazily, to whatever order a computation asks for.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .exactpoly import Poly, parse_rat

CumulantFn = Callable[[int], Fraction]


def moments_from_cumulants(cumulants: Sequence[Fraction], n: int) -> list[Fraction]:
    """``z_0..z_n`` from ``c_1..c_n`` (``cumulants[k-1] = c_k``), with ``z_0 = 1``."""
    c = [Fraction(0)] + [Fraction(v) for v in cumulants[:n]]
    c += [Fraction(0)] * (n + 1 - len(c))
    z = [Fraction(1)]
    for m in range(1, n + 1):
        z.append(c[m] + sum(comb(m - 1, i) * c[m - i] * z[i] for i in range(1, m)))
    return z


def cumulants_from_moments(z: Sequence[Fraction]) -> list[Fraction]:
    """``c_1..c_n`` from ``z_0..z_n``; ``z_0`` must be 1."""
    if not z or Fraction(z[0]) != 1:
        raise ValueError("not an Appell moment sequence (z_0 must be 1)")
    z = [Fraction(v) for v in z]
    c = [Fraction(0)]
    for m in range(1, len(z)):
        c.append(z[m] - sum(comb(m - 1, i) * c[m - i] * z[i] for i in range(1, m)))
    return c[1:]


class AppellSpec:
    """An Appell sequence, canonically given by a cumulant function ``k -> c_k``.

    Moments and cumulants are cached in lists that only ever grow by appending
    values that are fully determined, under a lock, so a spec may be shared
    between threads. ``moment_fn`` lets a family be defined by its moments
    instead (the cumulants are then derived exactly).
    """

    def __init__(
        self,
        name: str,
        cumulant_fn: CumulantFn | None = None,
        *,
        moment_fn: CumulantFn | None = None,
        exp_rt: tuple[Fraction, int] | None = None,
    ):
        if (cumulant_fn is None) == (moment_fn is None):
            raise ValueError("give exactly one of cumulant_fn and moment_fn")
        self.name = name
        self._cumulant_fn = cumulant_fn
        self._moment_fn = moment_fn
        # (alpha, r) when the sequence is known to have f(t) = exp(alpha t^r)
        self.exp_rt = exp_rt
        self._c: list[Fraction] = []
        self._z: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()
        self.cache: dict = {}

    def __repr__(self) -> str:
        return f"AppellSpec({self.name!r})"

    def _extend(self, n: int) -> None:
        with self._lock:
            if self._cumulant_fn is not None:
                while len(self._c) < n:
                    self._c.append(Fraction(self._cumulant_fn(len(self._c) + 1)))
                if len(self._z) <= n:
                    self._z = moments_from_cumulants(self._c, n)
            else:
                while len(self._z) <= n:
                    self._z.append(Fraction(self._moment_fn(len(self._z))))
                if len(self._c) < n:
                    self._c = cumulants_from_moments(self._z[: n + 1])

    def cumulant(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("cumulants are indexed from 1")
        if len(self._c) < k:
            self._extend(k)
        return self._c[k - 1]

    def moment(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("moments are indexed from 0")
        if len(self._z) <= k:
            self._extend(k)
        return self._z[k]

    def cumulants(self, n: int) -> list[Fraction]:
        """``[c_1, ..., c_n]``."""
        if len(self._c) < n:
            self._extend(n)
        return list(self._c[:n])

    def moments(self, n: int) -> list[Fraction]:
        """``[z_0, ..., z_n]``."""
        if len(self._z) <= n:
            self._extend(n)
        return list(self._z[: n + 1])

    def poly(self, n: int) -> Poly:
        return appell_poly(self, n)


def appell_poly(spec: AppellSpec, n: int) -> Poly:
    """``A_n(x) = sum_k C(n, k) z_k x^(n-k)``."""
    z = spec.moments(n)
    return Poly(comb(n, n - i) * z[n - i] for i in range(n + 1))


# presets ------------------------------------------------------------------


def monomial() -> AppellSpec:
    return AppellSpec("monomial", lambda k: Fraction(0), exp_rt=(Fraction(0), 1))


def exp_rt(alpha, r: int, name: str | None = None) -> AppellSpec:
    """The family with ``f(t) = exp(alpha t^r)``: only ``c_r = r! alpha`` is nonzero."""
    alpha = Fraction(alpha)
    r = int(r)
    if r < 1:
        raise ValueError("r must be a positive integer")
    c_r = factorial(r) * alpha
    return AppellSpec(
        name or f"exp-rt:{alpha},{r}",
        lambda k: c_r if k == r else Fraction(0),
        exp_rt=(alpha, r),
    )


def shifted_monomial(alpha) -> AppellSpec:
    alpha = Fraction(alpha)
    return exp_rt(alpha, 1, name=f"shifted-monomial:{alpha}")


def hermite() -> AppellSpec:
    return exp_rt(Fraction(-1, 2), 2, name="hermite")


def yablonskii_vorobiev() -> AppellSpec:
    return exp_rt(Fraction(-4, 3), 3, name="yablonskii")


def laguerre(alpha) -> AppellSpec:
    """Modified Laguerre polynomials, ``f(t) = (1 + t)^alpha``."""
    alpha = Fraction(alpha)
    return AppellSpec(
        f"laguerre:{alpha}",
        lambda k: (-1) ** (k - 1) * factorial(k - 1) * alpha,
    )


def _falling_rising(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def jacobi(alpha, beta) -> AppellSpec:
    """Modified Jacobi polynomials, ``z_k = 2^k (-alpha)_k / (-alpha-beta)_k``.

    No closed form for the cumulants is used; they come from the moments.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)

    def moment(k: int) -> Fraction:
        den = _falling_rising(-alpha - beta, k)
        if den == 0:
            raise ValueError(
                f"degenerate Jacobi parameters: alpha+beta={alpha + beta} at order {k}"
            )
        return 2**k * _falling_rising(-alpha, k) / den

    return AppellSpec(f"jacobi:{alpha},{beta}", moment_fn=moment)


def from_cumulants(values: Sequence, name: str | None = None) -> AppellSpec:
    """Finite cumulant list ``c_1, c_2, ...``; zeros beyond it."""
    cs = [Fraction(v) for v in values]
    return AppellSpec(
        name or "cumulants:" + ",".join(map(str, cs)),
        lambda k: cs[k - 1] if k <= len(cs) else Fraction(0),
    )


def from_moments(values: Sequence, name: str | None = None) -> AppellSpec:
    """Finite moment list ``1, z_1, z_2, ...``; zeros beyond it."""
    zs = [Fraction(v) for v in values]
    if not zs or zs[0] != 1:
        raise ValueError("not an Appell moment sequence (z_0 must be 1)")
    return AppellSpec(
        name or "moments:" + ",".join(map(str, zs)),
        moment_fn=lambda k: zs[k] if k < len(zs) else Fraction(0),
    )


PRESETS = {
    "monomial": monomial,
    "shifted_monomial": shifted_monomial,
    "exp_rt": exp_rt,
    "hermite": hermite,
    "yablonskii_vorobiev": yablonskii_vorobiev,
    "laguerre": laguerre,
    "jacobi": jacobi,
}


def preset(name: str, *params) -> AppellSpec:
    try:
        factory = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    return factory(*params)


def parse_spec(text: str) -> AppellSpec:
    """Parse the command-line grammar.

    ``monomial``, ``hermite``, ``yablonskii``, ``exp-rt:a,r``, ``laguerre:a``,
    ``jacobi:a,b``, ``cumulants:c1,c2,...``, ``moments:1,z1,z2,...``.
    """
    text = text.strip()
    head, _, tail = text.partition(":")
    head = head.lower()
    args = [a.strip() for a in tail.split(",")] if tail.strip() else []

    def need(count: int) -> list[Fraction]:
        if len(args) != count:
            raise ValueError(f"{head} takes {count} parameter(s), got {len(args)}")
        return [parse_rat(a) for a in args]

    if head == "monomial":
        need(0)
        return monomial()
    if head == "hermite":
        need(0)
        return hermite()
    if head in ("yablonskii", "yablonskii-vorobiev"):
        need(0)
        return yablonskii_vorobiev()
    if head == "exp-rt":
        alpha, r = need(2)
        if r.denominator != 1 or r < 1:
            raise ValueError("exp-rt needs a positive integer r")
        return exp_rt(alpha, int(r))
    if head == "laguerre":
        (alpha,) = need(1)
        return laguerre(alpha)
    if head == "jacobi":
        alpha, beta = need(2)
        return jacobi(alpha, beta)
    if head == "cumulants":
        if not args:
            raise ValueError("cumulants: needs at least one value")
        return from_cumulants([parse_rat(a) for a in args])
    if head == "moments":
        if not args:
            raise ValueError("moments: needs at least z_0 = 1")
        return from_moments([parse_rat(a) for a in args])
    raise ValueError(f"unknown Appell sequence {text!r}")


# transforms ---------------------------------------------------------------


def dual(spec: AppellSpec) -> AppellSpec:
    """Dual sequence: ``c*_k = (-1)^(k-1) c_k``."""
    er = None
    if spec.exp_rt is not None:
        alpha, r = spec.exp_rt
        er = ((-1) ** (r - 1) * alpha, r)
    return AppellSpec(
        f"dual({spec.name})",
        lambda k: (-1) ** (k - 1) * spec.cumulant(k),
        exp_rt=er,
    )


def second_moment_spec(spec: AppellSpec) -> AppellSpec:
    """Central sequence B with ``c^B_k = c_k^2 / (k-1)!`` for k >= 2."""
    er = None
    if spec.exp_rt is not None:
        alpha, r = spec.exp_rt
        er = (r * alpha**2, r) if r > 1 else (Fraction(0), 1)
    return AppellSpec(
        f"second-moment({spec.name})",
        lambda k: Fraction(0) if k == 1 else spec.cumulant(k) ** 2 / factorial(k - 1),
        exp_rt=er,
    )


def centralize(spec: AppellSpec) -> AppellSpec:
    """The central sequence ``A_n(x - c_1)``, i.e. ``c_1`` set to zero."""
    return AppellSpec(
        f"central({spec.name})",
        lambda k: Fraction(0) if k == 1 else spec.cumulant(k),
    )


class _FaultyCumulants(AppellSpec):
    def __init__(self, base: AppellSpec, k: int, delta: Fraction):
        super().__init__(f"{base.name}[c{k}+={delta}]", base.cumulant)
        self._base, self._k, self._delta = base, k, delta

    def cumulant(self, k: int) -> Fraction:
        return self._base.cumulant(k) + (self._delta if k == self._k else 0)

    def cumulants(self, n: int) -> list[Fraction]:
        return [self.cumulant(j) for j in range(1, n + 1)]

    def moment(self, k: int) -> Fraction:
        return self._base.moment(k)

    def moments(self, n: int) -> list[Fraction]:
        return self._base.moments(n)


def with_cumulant_fault(spec: AppellSpec, k: int, delta) -> AppellSpec:
    """Copy of ``spec`` whose cumulant ``c_k`` is shifted by ``delta`` while the
    moment stream is left untouched.

    The result is deliberately inconsistent; it exists to check that the
    verification suites notice a corrupted constant.
    """
    return _FaultyCumulants(spec, int(k), Fraction(delta))


def is_self_dual(spec: AppellSpec, order: int) -> bool:
    return dual(spec).cumulants(order) == spec.cumulants(order)


def exp_rt_params(spec: AppellSpec, order: int) -> tuple[Fraction, int] | None:
    """``(alpha, r)`` if, up to ``order``, the spec looks like ``exp(alpha t^r)``."""
    nonzero = [(k, c) for k, c in enumerate(spec.cumulants(order), start=1) if c]
    if not nonzero:
        return (Fraction(0), 1)
    if len(nonzero) > 1:
        return None
    r, c = nonzero[0]
    return (c / factorial(r), r)
