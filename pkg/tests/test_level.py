"""
Tests for the level layer over F_3: handles, Atkin-Lehner and Hecke
actions, traces, and oldform/newform membership.
"""

import pytest

from drinfeld.algebra.poly import Poly
from drinfeld.algebra.scalar import Scalar
from drinfeld.core.exceptions import GradingError, LevelError, UnknownActionError
from drinfeld.core.models import MembershipVerdict
from drinfeld.level import (
    FormExpr,
    Handle,
    cross_commutation_check,
    factor_level,
    high_alpha_consistency,
    involution_check,
    is_in_new,
    is_in_old,
    is_p_new,
    is_p_old,
    is_squarefree_level,
    stability_check,
    t_action,
    trace,
    trace_high_alpha,
    trace_prime,
    u_action,
    u_symbolic_check,
    valuation,
    w_action,
    zero_soundness_check,
)


@pytest.fixture(scope="module")
def one(F3):
    return Poly.one(F3)


@pytest.fixture(scope="module")
def Q(T3, one):
    return T3 + one


@pytest.fixture(scope="module")
def counterexample(registry3, T3, Q):
    """E_Q - δ_T E_Q at level T·Q."""
    name = registry3.register_eisenstein(Q)
    return registry3.expr(name) - registry3.expr(name, T3)


class TestDivisors:

    def test_valuation_and_factoring(self, T3, Q):
        n = T3 * T3 * Q
        assert valuation(n, T3) == 2
        assert valuation(n, Q) == 1
        assert factor_level(n) == [(T3, 2), (Q, 1)]
        assert not is_squarefree_level(n)
        assert is_squarefree_level(T3 * Q)

    def test_zero_level(self, F3, T3):
        with pytest.raises(LevelError):
            valuation(Poly.zero(F3), T3)


class TestExpressions:

    def test_handle_needs_monic_index(self, T3):
        with pytest.raises(LevelError):
            Handle("h", T3.scale(2))

    def test_handle_text(self, T3, one):
        assert str(Handle("h", one)) == "h"
        assert str(Handle("h", T3)) == "delta_(T) h"

    def test_grading_mismatch(self, registry3):
        with pytest.raises(GradingError):
            registry3.expr("h") + registry3.expr("Delta")

    def test_cancellation_gives_exact_zero(self, registry3):
        e = registry3.expr("h") - registry3.expr("h")
        assert e.is_zero()
        assert e == registry3.zero(4, 1)

    def test_unknown_form(self, registry3):
        with pytest.raises(UnknownActionError):
            registry3.entry("theta")

    def test_level_of(self, registry3, T3, Q):
        e = registry3.expr("Delta_T", Q)
        assert registry3.level_of(e) == T3 * Q


class TestAtkinLehner:

    def test_eisenstein_sign(self, registry3, T3):
        e = registry3.expr("E_T")
        assert w_action(registry3, e, T3) == e.scale(-1)

    def test_level_T_pair(self, registry3, F3, T3):
        t = Scalar.T(F3)
        assert w_action(registry3, registry3.expr("Delta_W"), T3) == registry3.expr("Delta_T", coeff=-t)
        assert w_action(registry3, registry3.expr("Delta_T"), T3) == \
            registry3.expr("Delta_W", coeff=-(t ** -3))

    def test_products_at_level_T(self, registry3, F3, T3):
        t = Scalar.T(F3)
        a = registry3.register_product(["Delta_T", "E_T"])
        b = registry3.register_product(["Delta_W", "E_T"])
        assert w_action(registry3, registry3.expr(b), T3) == registry3.expr(a, coeff=t)
        assert w_action(registry3, registry3.expr(a), T3) == registry3.expr(b, coeff=t ** -3)

    def test_degeneracy_swap(self, registry3, F3, T3):
        h = registry3.expr("h")
        assert w_action(registry3, h, T3, T3) == registry3.expr("h", T3)
        # 2l - k = -2 for h
        assert w_action(registry3, registry3.expr("h", T3), T3, T3) == \
            registry3.expr("h", coeff=Scalar.integral(T3) ** -2)

    @pytest.mark.parametrize("name", ["h", "E_T", "Delta_T", "Delta_W"])
    def test_involution(self, registry3, T3, name):
        assert involution_check(registry3, registry3.expr(name), T3, T3).holds

    def test_prime_not_dividing_level(self, registry3, T3):
        with pytest.raises(LevelError):
            w_action(registry3, registry3.expr("h"), T3)

    def test_no_data_at_higher_power(self, registry3, T3):
        with pytest.raises(UnknownActionError):
            w_action(registry3, registry3.expr("E_T"), T3, T3 * T3)

    def test_cross_commutation(self, registry3, counterexample, T3, Q):
        assert cross_commutation_check(registry3, counterexample, T3, Q).holds


class TestHecke:

    def test_T_undefined_at_level(self, registry3, T3):
        with pytest.raises(LevelError):
            t_action(registry3, registry3.expr("E_T"), T3)

    def test_T_on_h(self, registry3, T3):
        assert t_action(registry3, registry3.expr("h"), T3) == registry3.expr("h", coeff=T3)

    def test_U_kills_degeneracy(self, registry3, T3):
        assert u_action(registry3, registry3.expr("h", T3), T3).is_zero()

    def test_U_eisenstein_symbolic_matches_series(self, registry3, T3):
        assert u_symbolic_check(registry3, registry3.expr("E_T"), T3, 10).equal


class TestTraces:

    def test_trace_of_level_one_form(self, registry3, T3):
        h = registry3.expr("h")
        result = trace(registry3, h, T3, T3)
        assert result.exact
        assert result.expr == h
        assert result.level.is_one()

    def test_trace_prime_of_level_one_form(self, registry3, T3):
        # P^(l-k) T_P h = T^-3 · T h
        result = trace_prime(registry3, registry3.expr("h"), T3, T3)
        assert result.expr == registry3.expr("h", coeff=Scalar.integral(T3) ** -2)

    def test_eisenstein_is_new(self, registry3, T3):
        assert trace(registry3, registry3.expr("E_T"), T3).is_exact_zero()
        assert is_p_new(registry3, registry3.expr("E_T"), T3).verdict == MembershipVerdict.YES_EXACT

    def test_trace_needs_squarefree_part(self, registry3, T3):
        with pytest.raises(LevelError):
            trace(registry3, registry3.expr("h"), T3, T3 * T3)

    def test_high_alpha_needs_square(self, registry3, T3):
        with pytest.raises(LevelError):
            trace_high_alpha(registry3, registry3.expr("h"), T3, T3)

    def test_high_alpha_symbolic_matches_series(self, registry3, T3):
        assert high_alpha_consistency(registry3, registry3.expr("h"), T3, 5, T3 * T3).equal


class TestMembership:

    def test_counterexample_is_old_and_new(self, registry3, counterexample, T3, Q):
        level = T3 * Q
        assert is_p_old(registry3, counterexample, T3).verdict == MembershipVerdict.YES_EXACT
        assert is_in_old(registry3, counterexample, level).verdict == MembershipVerdict.YES_EXACT
        assert is_in_new(registry3, counterexample, level).verdict == MembershipVerdict.YES_EXACT

    def test_counterexample_traces_vanish_on_series(self, registry3, counterexample, T3):
        exact_zero, cmp = zero_soundness_check(registry3, counterexample, T3, 10)
        assert exact_zero
        assert cmp.equal

    def test_counterexample_is_stable_under_U(self, registry3, counterexample, T3, Q):
        image, membership = stability_check(registry3, counterexample, T3, T3 * Q)
        assert image == counterexample.scale(T3)
        assert membership.verdict == MembershipVerdict.YES_EXACT

    def test_not_visibly_old(self, registry3, T3):
        assert is_p_old(registry3, registry3.expr("Delta_T"), T3).verdict == MembershipVerdict.UNDETERMINED

    def test_not_old_when_level_one_space_is_zero(self, registry3, T3):
        # M_(2,1)(GL_2(A)) = 0, so the old space at level T is zero
        m = is_in_old(registry3, registry3.expr("E_T"), T3, prec=10)
        assert m.verdict == MembershipVerdict.NO
        assert m.witness == 1
        assert not m.yes

    def test_level_T_forms_come_from_level_one(self, registry3, T3):
        assert registry3.entry("Delta_T").old is not None
        assert is_in_old(registry3, registry3.expr("Delta_T"), T3).yes

    def test_p_old_needs_dividing_prime(self, registry3, T3):
        with pytest.raises(LevelError):
            is_p_old(registry3, registry3.expr("h"), T3)

    def test_new_needs_squarefree_level(self, registry3, T3):
        with pytest.raises(LevelError):
            is_in_new(registry3, registry3.expr("h"), T3 * T3)
