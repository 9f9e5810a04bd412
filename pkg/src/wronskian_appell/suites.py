"""Named verification suites, each sweeping all partitions up to a size.

A suite returns a :class:`SuiteResult` listing how many instances it checked
and a witness for every failure. Suites never raise on a failed identity; an
exception inside a single instance is recorded as a failure for that instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from . import partition as pt
from . import symfunc as sf
from .appell import AppellSpec, appell_poly, exp_rt, exp_rt_params
from .exactpoly import Poly, derivative
from .partition import partitions_of, partitions_up_to
from .plancherel import hermite_dual_at_square, mean, second_moment, variance
from .wapoly import (
    dual_check,
    derivative_identity_check,
    double_dual_check,
    exp_rt_dual_transform_check,
    generating_recurrence_check,
    integrality_check,
    integrality_hypothesis,
    self_duality_statements,
    topdown_check,
    wap,
)

TOPDOWN_MAX_K = 4


@dataclass
class SuiteResult:
    identity: str
    checked: int = 0
    witnesses: list[dict] = field(default_factory=list)
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return not self.witnesses

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "status": self.status,
            "checked": self.checked,
            "failed": len(self.witnesses),
            "witnesses": self.witnesses,
        }
        if self.skipped:
            out["reason"] = self.skipped
        return out


class _Runner:
    def __init__(self, identity: str):
        self.result = SuiteResult(identity)

    def check(self, ok_fn: Callable[[], bool], partition=None, **detail) -> None:
        self.result.checked += 1
        try:
            ok = ok_fn()
            error = None
        except ArithmeticError as exc:
            ok, error = False, str(exc)
        if not ok:
            witness = {"partition": list(partition) if partition is not None else None}
            witness.update(detail)
            if error:
                witness["error"] = error
            self.result.witnesses.append(witness)


def _nonempty(max_size: int):
    return (lam for lam in partitions_up_to(max_size) if lam)


def suite_appell(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("appell")
    for n in range(max_size + 1):
        def ok(n=n):
            a = appell_poly(spec, n)
            if a.degree != n or not a.is_monic():
                return False
            return n == 0 or derivative(a) == appell_poly(spec, n - 1) * n
        run.check(ok, n=n)
    return run.result


def suite_routes(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("routes")
    for lam in partitions_up_to(max_size):
        def ok(lam=lam):
            p = wap(spec, lam)
            return p.degree == lam.size() and p.is_monic()
        run.check(ok, lam)
    return run.result


def suite_derivative(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("derivative")
    for lam in _nonempty(max_size):
        run.check(lambda lam=lam: derivative_identity_check(spec, lam), lam)
    return run.result


def suite_topdown(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("topdown")
    for lam in partitions_up_to(max_size):
        for k in range(1, TOPDOWN_MAX_K + 1):
            run.check(lambda lam=lam, k=k: topdown_check(spec, lam, k), lam, k=k)
    return run.result


def suite_genrec(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("genrec")
    for lam in _nonempty(max_size):
        run.check(lambda lam=lam: generating_recurrence_check(spec, lam), lam)
    return run.result


def suite_dual(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("dual")
    for lam in partitions_up_to(max_size):
        run.check(lambda lam=lam: dual_check(spec, lam), lam)
    return run.result


def suite_double_dual(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("double-dual")
    for lam in partitions_up_to(max_size):
        run.check(lambda lam=lam: double_dual_check(spec, lam), lam)
    return run.result


def suite_self_dual(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("self-dual")
    statements = self_duality_statements(spec, max_size)
    run.check(
        lambda: len(set(statements)) == 1,
        statements=dict(zip(("sequence", "partitions", "even_cumulants"), statements)),
    )
    return run.result


def suite_integrality(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("integrality")
    if not integrality_hypothesis(spec, max_size):
        run.result.skipped = "c_k/(k-1)! is not an integer for some k"
        return run.result
    for lam in partitions_up_to(max_size):
        run.check(lambda lam=lam: integrality_check(spec, lam) is True, lam)
    return run.result


def suite_mean(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("mean")
    for n in range(max_size + 1):
        run.check(lambda n=n: mean(spec, n) is not None, n=n)
    return run.result


def suite_second_moment(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("second-moment")
    params = exp_rt_params(spec, max_size)
    x_squared = Poly([0, 0, 1])
    for n in range(max_size + 1):
        run.check(lambda n=n: second_moment(spec, n) is not None, n=n)
        if params and params[1] > 1:
            alpha, r = params
            b = appell_poly(exp_rt(r * alpha**2, r), n)
            run.check(
                lambda n=n, b=b: second_moment(spec, n) == b(x_squared),
                n=n,
                form="B_n(x^2) with parameters r*alpha^2, r",
            )
        if params == (Fraction(-1, 2), 2):
            run.check(
                lambda n=n: second_moment(spec, n) == hermite_dual_at_square(n),
                n=n,
                form="i^-n He_n(i x^2)",
            )
    return run.result


def suite_variance_bound(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("variance-bound")
    for n in range(2, max_size + 1):
        run.check(lambda n=n: variance(spec, n)[1] is True, n=n)
    return run.result


def suite_newton_schur(spec: AppellSpec | None, max_size: int) -> SuiteResult:
    run = _Runner("newton-schur")
    for lam in _nonempty(max_size):
        def ok(lam=lam):
            lhs, rhs = sf.schur_newton_lhs_rhs(lam)
            return lhs == rhs
        run.check(ok, lam)
    return run.result


def suite_hook_formula(spec: AppellSpec | None, max_size: int) -> SuiteResult:
    run = _Runner("hook-formula")
    for n in range(max_size + 1):
        for lam in partitions_of(n):
            def ok(lam=lam):
                hook_count = pt.syt_count(lam)
                ns = pt.degree_vector(lam)
                degree_form = pt.hook_product(lam) * pt.vandermonde(ns)
                product = 1
                for v in ns:
                    product *= factorial(v)
                return hook_count == pt.skew_syt_count(lam) and degree_form == product
            run.check(ok, lam)
        run.check(lambda n=n: sum(pt.syt_count(l) ** 2 for l in partitions_of(n)) == factorial(n), n=n)
    return run.result


def suite_mn_rule(spec: AppellSpec | None, max_size: int) -> SuiteResult:
    run = _Runner("mn-rule")
    for lam in partitions_up_to(max_size):
        for k in range(1, TOPDOWN_MAX_K + 1):
            def ok(lam=lam, k=k):
                via_hooks = sf.schur_combination(sf.mn_multiply_p(k, lam))
                return via_hooks == sf.p_gen(k) * sf.schur(lam)
            run.check(ok, lam, k=k)
    return run.result


def suite_dual_jacobi_trudi(spec: AppellSpec | None, max_size: int) -> SuiteResult:
    run = _Runner("dual-jacobi-trudi")
    for lam in partitions_up_to(max_size):
        def ok(lam=lam):
            conj = pt.conjugate(lam)
            s = sf.schur(lam)
            return (
                sf.jacobi_trudi(lam, sf.e_gen) == sf.schur(conj)
                and sf.omega(s) == sf.schur(conj)
                and sf.omega(sf.omega(s)) == s
            )
        run.check(ok, lam)
    return run.result


def suite_rho_transform(spec: AppellSpec, max_size: int) -> SuiteResult:
    run = _Runner("rho-transform")
    params = exp_rt_params(spec, max_size)
    if params is None:
        run.result.skipped = "not of the form exp(x t + alpha t^r)"
        return run.result
    alpha, r = params
    for lam in partitions_up_to(max_size):
        run.check(lambda lam=lam: exp_rt_dual_transform_check(alpha, r, lam), lam, r=r)
    return run.result


SUITES: dict[str, Callable[[AppellSpec, int], SuiteResult]] = {
    "appell": suite_appell,
    "routes": suite_routes,
    "derivative": suite_derivative,
    "topdown": suite_topdown,
    "genrec": suite_genrec,
    "dual": suite_dual,
    "double-dual": suite_double_dual,
    "self-dual": suite_self_dual,
    "integrality": suite_integrality,
    "mean": suite_mean,
    "second-moment": suite_second_moment,
    "variance-bound": suite_variance_bound,
    "newton-schur": suite_newton_schur,
    "hook-formula": suite_hook_formula,
    "mn-rule": suite_mn_rule,
    "dual-jacobi-trudi": suite_dual_jacobi_trudi,
    "rho-transform": suite_rho_transform,
}


def run_suites(names: list[str], spec: AppellSpec, max_size: int) -> list[SuiteResult]:
    if names == ["all"]:
        names = list(SUITES)
    return [SUITES[name](spec, max_size) for name in names]
