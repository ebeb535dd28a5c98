"""
Tests for the Carlitz module, lattice coefficients and Goss polynomials.
"""

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld.algebra.field import get_field
from drinfeld.algebra.poly import Poly, bracket
from drinfeld.algebra.scalar import Scalar
from drinfeld.carlitz import (
    carlitz_poly,
    d_sequence,
    goss_eval,
    isobaric_violations,
    period_alpha,
    specialize,
    symbolic_goss,
    toy_lattice_check,
    torsion_alpha,
    u_scale,
)
from drinfeld.core.exceptions import ArithmeticDomainError, NotIrreducibleError
from drinfeld.series import USeries

F3 = get_field(3)
polys3 = st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=4).map(
    lambda c: Poly(F3, c)).filter(lambda f: not f.is_zero())


class TestCarlitzModule:

    def test_rho_T(self, F3, T3):
        rho = carlitz_poly(T3)
        assert rho.q_degree == 1
        assert rho.coefficient(0) == T3
        assert rho.coefficient(1).is_one()

    def test_rho_T_squared(self, F3, T3):
        rho = carlitz_poly(T3 * T3)
        assert rho.q_degree == 2
        assert rho.coefficient(0) == T3 * T3
        assert rho.coefficient(1) == T3 ** 3 + T3
        assert rho.coefficient(2).is_one()

    def test_constants_act_by_scaling(self, F3):
        rho = carlitz_poly(Poly.constant(F3, 2))
        assert rho.q_degree == 0
        assert rho.coefficient(0) == Poly.constant(F3, 2)

    def test_zero_is_rejected(self, F3):
        with pytest.raises(ArithmeticDomainError):
            carlitz_poly(Poly.zero(F3))

    def test_evaluate(self, F3, T3):
        assert carlitz_poly(T3).evaluate(Poly.one(F3)) == T3 + Poly.one(F3)

    @settings(max_examples=40)
    @given(polys3, polys3)
    def test_ring_homomorphism(self, a, b):
        assert carlitz_poly(a * b) == carlitz_poly(a).compose(carlitz_poly(b))
        if not (a + b).is_zero():
            assert carlitz_poly(a + b) == carlitz_poly(a) + carlitz_poly(b)

    @settings(max_examples=40)
    @given(polys3)
    def test_q_degree_is_degree(self, a):
        rho = carlitz_poly(a)
        assert rho.q_degree == a.degree
        assert rho.coefficient(rho.q_degree).leading == a.leading


class TestLatticeCoefficients:

    def test_carlitz_factorials(self, F3, T3):
        assert d_sequence(F3, 0).is_one()
        assert d_sequence(F3, 1) == bracket(F3, 1)
        assert d_sequence(F3, 2) == bracket(F3, 2) * bracket(F3, 1) ** 3

    def test_period_alpha(self, F3):
        alpha = period_alpha(F3, 2)
        assert alpha[0].is_one()
        assert alpha[1] == Scalar(Poly.one(F3), d_sequence(F3, 1))
        assert alpha[2] == Scalar(Poly.one(F3), d_sequence(F3, 2))

    def test_torsion_alpha(self, F3, T3):
        alpha = torsion_alpha(T3)
        assert alpha == (Scalar.one(F3), Scalar(Poly.one(F3), T3))

    def test_torsion_requires_irreducible(self, F3, T3):
        with pytest.raises(NotIrreducibleError):
            torsion_alpha(T3 * T3)


class TestGossPolynomials:

    def test_low_rows_are_monomials(self, ctx3):
        table = ctx3.period_table(12)
        for i in range(1, 4):
            assert table[i] == {i: Scalar.one(ctx3.field)}
        assert table[0] == {}

    def test_torsion_row(self, ctx3, T3):
        table = ctx3.torsion_table(T3, 8, scaled=False)
        assert table.row(4) == "X^4 + (1/T)X^2"

    def test_scaled_torsion_row(self, ctx3, T3):
        # H_4(X) = G_4(TX)
        table = ctx3.torsion_table(T3, 8)
        assert table[4] == {4: Scalar.integral(T3 ** 4), 2: Scalar.integral(T3)}

    def test_p_th_power_rows(self, ctx3):
        table = ctx3.period_table(30)
        for k in range(1, 11):
            g = table.as_poly(k)
            assert table.as_poly(3 * k) == g * g * g

    def test_beyond_kmax(self, ctx3):
        with pytest.raises(IndexError):
            ctx3.period_table(12)[10 ** 6]

    def test_isobaric(self, F3, F5):
        for field in (F3, F5):
            assert isobaric_violations(field, symbolic_goss(field, 2, 40)) == []

    def test_symbolic_specializes_to_period_table(self, ctx3):
        table = ctx3.period_table(20)
        symbolic = symbolic_goss(ctx3.field, 2, 20)
        alpha = period_alpha(ctx3.field, 2)
        for i in range(1, 21):
            assert specialize(ctx3.field, symbolic[i - 1], alpha) == table[i]

    @pytest.mark.parametrize("k", range(1, 13))
    def test_toy_lattice(self, F3, k):
        equal, lhs, rhs = toy_lattice_check(F3, k)
        assert equal, f"k={k}: {lhs} != {rhs}"

    def test_goss_eval_at_u(self, ctx3):
        table = ctx3.period_table(8)
        value = goss_eval(table[4], USeries.u(ctx3.field, 10))
        alpha = period_alpha(ctx3.field, 1)[1]
        assert value.prec == 11
        assert value.coeffs == {2: alpha, 4: Scalar.one(ctx3.field)}


class TestRescaling:

    def test_u_of_Tz(self, ctx3, T3):
        s = ctx3.u_scale(T3, 8)
        assert s.type == 1
        assert s.coeffs == {3: Scalar.one(ctx3.field), 5: Scalar.integral(T3.scale(2)),
                            7: Scalar.integral(T3 * T3)}

    def test_power_matches_square(self, ctx3, T3):
        one = Poly.one(ctx3.field)
        s = ctx3.u_scale(T3 + one, 20)
        assert ctx3.u_power(T3 + one, 2, 20).compare(s * s).equal

    def test_non_monic(self, F3, T3):
        with pytest.raises(ArithmeticDomainError):
            u_scale(carlitz_poly(T3.scale(2)), 10)

    def test_constant_is_u(self, ctx3):
        assert ctx3.u_scale(Poly.one(ctx3.field), 10).compare(USeries.u(ctx3.field, 10)).equal
