from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import all_presets, partitions
from wronskian_appell import appell
from wronskian_appell.appell import appell_poly, from_cumulants, hermite, laguerre, monomial, yablonskii_vorobiev
from wronskian_appell.exactpoly import Poly, derivative, is_integer_poly
from wronskian_appell.partition import (
    EMPTY,
    Partition,
    conjugate,
    covers_down,
    degree_vector,
    partitions_of,
    partitions_up_to,
    syt_count,
    vandermonde,
)
from wronskian_appell.wapoly import (
    ROUTES,
    AppellNet,
    RouteDisagreement,
    appell_net_poly,
    derivative_identity_check,
    double_dual_check,
    dual_check,
    exp_rt_dual_transform_check,
    generating_recurrence_check,
    integrality_check,
    net_from_spec,
    self_duality_statements,
    topdown_check,
    topdown_sides,
    wap,
)

P = Partition
X = Poly.x()


def leibniz_wap(spec, lam):
    """Wronskian by permutation expansion, normalised by the Vandermonde."""
    if not lam:
        return Poly([1])
    ns = degree_vector(lam)
    r = len(ns)
    rows = [[derivative(appell_poly(spec, n), i) for n in ns] for i in range(r)]
    total = Poly()
    for perm in permutations(range(r)):
        inv = sum(1 for i in range(r) for j in range(i + 1, r) if perm[i] > perm[j])
        term = Poly([(-1) ** inv])
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total / vandermonde(ns)


class TestExamples:
    def test_hermite(self):
        he = hermite()
        assert wap(he, P([2, 1])) == X**3
        assert wap(he, P([1, 1])) == X**2 + 1
        assert wap(he, P([2]), "recurrence") == X**2 - 1
        assert wap(he, EMPTY) == 1

    def test_laguerre_single_box(self):
        assert wap(laguerre(Fraction(5, 3)), P([1]), "phi") == X + Fraction(5, 3)

    def test_monomial(self):
        spec = monomial()
        for lam in partitions_up_to(6):
            for route in ROUTES:
                assert wap(spec, lam, route) == X ** lam.size()

    def test_rows_are_the_sequence(self):
        for spec in all_presets():
            for n in range(8):
                for route in ROUTES:
                    assert wap(spec, P([n]), route) == appell_poly(spec, n)

    @pytest.mark.parametrize(
        "text, lam", [("hermite", (3, 2, 1)), ("yablonskii", (2, 2)), ("jacobi:1/3,1/5", (2, 1))]
    )
    def test_cross_checked(self, text, lam):
        wap(appell.parse_spec(text), P(lam))

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            wap(hermite(), P([1]), "bogus")


class TestRoutes:
    def test_direct_against_leibniz(self):
        for spec in all_presets():
            for lam in partitions_up_to(6):
                if len(lam) <= 4:
                    assert wap(spec, lam, "direct") == leibniz_wap(spec, lam)

    def test_all_routes_agree(self, preset_spec):
        for lam in partitions_up_to(7):
            results = {route: wap(preset_spec, lam, route) for route in ROUTES}
            assert len(set(results.values())) == 1, (lam, results)
            p = results["direct"]
            assert p.degree == lam.size() and p.is_monic()

    @settings(max_examples=20, deadline=None)
    @given(partitions(max_n=6))
    def test_random_cumulants(self, lam):
        spec = from_cumulants([Fraction(2, 3), -3, Fraction(1, 5), 0, 7, Fraction(-1, 2)])
        assert len({wap(spec, lam, route) for route in ROUTES}) == 1

    def test_disagreement_reported(self):
        spec = appell.with_cumulant_fault(hermite(), 2, 1)
        with pytest.raises(RouteDisagreement) as info:
            wap(spec, P([2]))
        message = str(info.value)
        assert "routes disagree" in message and "x^0: -1 vs 0" in message


class TestDerivative:
    def test_example(self):
        he = hermite()
        lhs = derivative(wap(he, P([2, 1]))) * 2
        assert lhs == 6 * X**2
        assert derivative_identity_check(he, P([2, 1]))

    def test_all(self, preset_spec):
        for lam in partitions_up_to(7):
            if lam:
                assert derivative_identity_check(preset_spec, lam)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            derivative_identity_check(hermite(), EMPTY)


class TestTopDown:
    def test_hermite_empty_k2(self):
        lhs, rhs = topdown_sides(hermite(), EMPTY, 2)
        assert lhs == rhs == -2

    def test_zero_side_for_exp_rt(self):
        he = hermite()
        lhs, rhs = topdown_sides(he, P([1]), 3)
        assert lhs.is_zero() and rhs.is_zero()
        yv = yablonskii_vorobiev()
        for lam in partitions_up_to(5):
            for k in (2, 4):
                lhs, rhs = topdown_sides(yv, lam, k)
                assert rhs.is_zero()

    def test_monomial_k1(self):
        spec = monomial()
        for lam in partitions_up_to(6):
            lhs, rhs = topdown_sides(spec, lam, 1)
            assert lhs == rhs == X ** (lam.size() + 1) * ((lam.size() + 1) * syt_count(lam))

    def test_all(self, preset_spec):
        for lam in partitions_up_to(5):
            for k in range(1, 5):
                assert topdown_check(preset_spec, lam, k), (lam, k)


def test_generating_recurrence(preset_spec):
    for lam in partitions_up_to(7):
        if lam:
            assert generating_recurrence_check(preset_spec, lam)


class TestDuality:
    def test_dual_all(self, preset_spec):
        for lam in partitions_up_to(6):
            assert dual_check(preset_spec, lam)
            assert double_dual_check(preset_spec, lam)

    @pytest.mark.parametrize("alpha", [3, Fraction(1, 2)])
    def test_laguerre_conjugate(self, alpha):
        plus, minus = laguerre(alpha), laguerre(-Fraction(alpha))
        for lam in partitions_up_to(6):
            n = lam.size()
            assert wap(plus, conjugate(lam)) == wap(minus, lam)(-X) * (-1) ** n

    @pytest.mark.parametrize(
        "text, expected",
        [("hermite", False), ("yablonskii", True), ("monomial", True), ("laguerre:3", False)],
    )
    def test_self_duality(self, text, expected):
        statements = self_duality_statements(appell.parse_spec(text), 6)
        assert statements == (expected,) * 3

    @pytest.mark.parametrize("r, alpha", [(2, Fraction(-1, 2)), (3, Fraction(-4, 3)), (2, 3), (3, Fraction(2, 5)), (1, 4)])
    def test_rho_transform(self, r, alpha):
        for lam in partitions_up_to(6):
            assert exp_rt_dual_transform_check(alpha, r, lam)

    def test_rho_example(self):
        assert wap(hermite(), P([1, 1])) == X**2 + 1
        assert exp_rt_dual_transform_check(Fraction(-1, 2), 2, P([2]))


class TestIntegrality:
    def test_hermite(self):
        he = hermite()
        for lam in partitions_up_to(10):
            assert integrality_check(he, lam, "direct") is True

    def test_gate(self):
        assert integrality_check(laguerre(Fraction(1, 2)), P([1])) is None
        # the hypothesis matters: without it coefficients need not be integers
        assert not is_integer_poly(wap(laguerre(Fraction(1, 2)), P([1])))


class TestNets:
    def test_reproduces_wap(self, preset_spec):
        net = net_from_spec(preset_spec)
        for lam in partitions_up_to(6):
            assert appell_net_poly(net, lam) == wap(preset_spec, lam, "direct")

    def test_trivial_nets(self):
        empty = AppellNet()
        for lam in partitions_up_to(5):
            assert appell_net_poly(empty, lam) == X ** lam.size()
        assert AppellNet({P([1]): 7}).poly(P([1])) == X + 7

    def test_net_derivative_property(self):
        # arbitrary constants still give F_lam A_lam' = |lam| sum F_mu A_mu
        net = AppellNet(lambda lam: Fraction(sum(lam) * 3 - len(lam), 1 + lam[0]))
        for n in range(1, 6):
            for lam in partitions_of(n):
                lhs = derivative(net.poly(lam)) * syt_count(lam)
                rhs = sum((net.poly(mu) * syt_count(mu) for mu in covers_down(lam)), Poly()) * n
                assert lhs == rhs
