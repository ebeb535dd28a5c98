"""
Tests for the algebra layer: F_q, A = F_q[T], K = F_q(T) and K[X].

sympy's modular polynomials serve as an independent oracle for F_p[T].
"""

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly as SymPoly, symbols

from drinfeld.algebra.field import get_field, field_for_q
from drinfeld.algebra.kpoly import ScalarPoly
from drinfeld.algebra.poly import Poly, bracket, monic_polys
from drinfeld.algebra.scalar import Scalar
from drinfeld.algebra.text import parse_poly, parse_scalar
from drinfeld.core.exceptions import ArithmeticDomainError, FieldError, ResourceLimitError

x = symbols("x")
F3 = get_field(3)
F5 = get_field(5)

coeff_lists = st.lists(st.integers(min_value=0, max_value=4), max_size=8)
nonzero_lists = coeff_lists.filter(lambda c: any(v % 5 for v in c))


def to_sympy(f: Poly) -> SymPoly:
    coeffs = list(reversed(f.coeffs.tolist())) or [0]
    return SymPoly(coeffs, x, modulus=f.field.p)


def from_sympy(field, g: SymPoly) -> Poly:
    return Poly(field, [int(c) % field.p for c in reversed(g.all_coeffs())])


class TestFiniteField:

    def test_rejects_even_and_composite_characteristic(self):
        with pytest.raises(FieldError):
            get_field(2)
        with pytest.raises(FieldError):
            get_field(9)

    def test_field_for_q_rejects_non_prime_power(self):
        with pytest.raises(FieldError):
            field_for_q(6)

    def test_shared_instances(self):
        assert get_field(3) is get_field(3)
        assert field_for_q(9) is get_field(3, 2)

    def test_extension_inverses(self, F9):
        for a in F9.nonzero_elements():
            assert F9.mul(a, F9.inv(a)) == 1

    def test_extension_frobenius_fixes_elements(self, F9):
        for a in F9.elements():
            assert F9.pow(a, 9) == a

    def test_inverse_of_zero(self, F9):
        with pytest.raises(ArithmeticDomainError):
            F9.inv(0)


class TestPoly:

    @given(coeff_lists, coeff_lists)
    def test_multiplication_matches_sympy(self, a, b):
        f, g = Poly(F5, a), Poly(F5, b)
        assert (f * g) == from_sympy(F5, to_sympy(f) * to_sympy(g))

    @given(coeff_lists, nonzero_lists)
    def test_division_identity(self, a, b):
        f, g = Poly(F5, a), Poly(F5, b)
        quot, rem = divmod(f, g)
        assert quot * g + rem == f
        assert rem.degree < g.degree

    @given(nonzero_lists, nonzero_lists)
    def test_gcd_matches_sympy(self, a, b):
        f, g = Poly(F5, a), Poly(F5, b)
        expected = from_sympy(F5, to_sympy(f).gcd(to_sympy(g)).monic())
        assert f.gcd(g) == expected

    @settings(max_examples=60)
    @given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=5))
    def test_irreducibility_matches_sympy(self, tail):
        f = Poly(F3, tail + [1])
        assert f.is_irreducible() == to_sympy(f).is_irreducible

    def test_frobenius_is_q_power(self, F3, T3):
        f = T3 * T3 + T3 + Poly.one(F3)
        assert f.frobenius(1) == f ** 3
        assert f.frobenius(2) == f ** 9

    def test_bracket(self, F3, T3):
        assert bracket(F3, 1) == T3 ** 3 - T3
        assert bracket(F3, 2) == T3 ** 9 - T3

    def test_first_irreducible_quadratic(self, F3, T3):
        first = next(P for P in monic_polys(F3, 2) if P.is_irreducible())
        assert first == T3 * T3 + Poly.one(F3)

    def test_count_monic_irreducibles(self, F3):
        # (q^2 - q)/2 monic irreducible quadratics
        assert sum(P.is_irreducible() for P in monic_polys(F3, 2)) == 3

    def test_negative_power(self, T3):
        with pytest.raises(ArithmeticDomainError):
            T3 ** -1

    def test_degree_ceiling(self):
        small = get_field(3, degree_ceiling=10)
        with pytest.raises(ResourceLimitError):
            Poly.T(small) ** 11


class TestText:

    def test_canonical_form(self, F3, T3):
        assert str(T3 + Poly.one(F3)) == "T+1"
        assert str((T3 + Poly.one(F3)) ** 2) == "T^2+2*T+1"
        assert str(Poly.zero(F3)) == "0"

    def test_parse(self, F3, T3):
        assert parse_poly(F3, "T^2+2*T+1") == (T3 + Poly.one(F3)) ** 2
        assert parse_poly(F3, "(T+1)*(T+2)") == T3 * T3 + Poly.constant(F3, 2)

    @given(coeff_lists)
    def test_parse_inverts_str(self, a):
        f = Poly(F5, a)
        assert parse_poly(F5, str(f)) == f

    def test_extension_elements(self, F9):
        f = parse_poly(F9, "w*T+1")
        assert parse_poly(F9, str(f)) == f
        assert f.degree == 1

    def test_w_over_prime_field(self, F3):
        with pytest.raises(FieldError):
            parse_poly(F3, "w*T")

    def test_parse_scalar(self, F3, T3):
        s = parse_scalar(F3, "(T+1)/T")
        assert s == Scalar(T3 + Poly.one(F3), T3)
        assert str(Scalar(Poly.one(F3), T3)) == "1/T"


class TestScalar:

    def test_reduced_form(self, F3, T3):
        s = Scalar(T3, T3 * T3)
        assert s.num.is_one() and s.den == T3

    def test_monic_denominator(self, F3, T3):
        s = Scalar(Poly.one(F3), T3.scale(2))
        assert s.den.is_monic()
        assert s * T3.scale(2) == Scalar.one(F3)

    def test_zero_denominator(self, F3):
        with pytest.raises(ArithmeticDomainError):
            Scalar(Poly.one(F3), Poly.zero(F3))

    def test_inverse_of_zero(self, F3):
        with pytest.raises(ArithmeticDomainError):
            Scalar.zero(F3).inverse()

    @given(nonzero_lists, nonzero_lists, nonzero_lists)
    def test_field_laws(self, a, b, c):
        x_, y_, z_ = (Scalar(Poly(F5, a), Poly(F5, b)), Scalar(Poly(F5, b), Poly(F5, c)),
                      Scalar(Poly(F5, c), Poly(F5, a)))
        assert x_ * (y_ + z_) == x_ * y_ + x_ * z_
        assert x_ * x_.inverse() == Scalar.one(F5)
        assert (x_ / y_) * y_ == x_

    def test_degree_and_frobenius(self, F3, T3):
        s = Scalar(T3 + Poly.one(F3), T3 ** 3)
        assert s.degree == -2
        assert s.frobenius(1) == s ** 3

    def test_integer_coercion(self, F3, T3):
        assert Scalar.integral(T3) * 2 == Scalar.integral(T3.scale(2))
        assert Scalar.from_int(F3, -1) == Scalar.from_int(F3, 2)


class TestScalarPoly:

    def test_gcd_of_shared_factor(self, F3, T3):
        t = Scalar.integral(T3)
        X = ScalarPoly.x(F3)
        a = (X - ScalarPoly.constant(F3, t)) * (X + ScalarPoly.constant(F3, 1))
        b = (X - ScalarPoly.constant(F3, t)) * X
        assert a.gcd(b) == X - ScalarPoly.constant(F3, t)

    def test_evaluate_and_division(self, F3, T3):
        t = Scalar.integral(T3)
        X = ScalarPoly.x(F3)
        f = X * X - ScalarPoly.constant(F3, t * t)
        assert f.evaluate(t).is_zero()
        quot, rem = divmod(f, X - ScalarPoly.constant(F3, t))
        assert rem.is_zero()
        assert quot == X + ScalarPoly.constant(F3, t)

    def test_text(self, F3, T3):
        X = ScalarPoly.x(F3)
        f = X * X * X * X + ScalarPoly.constant(F3, Scalar(Poly.one(F3), T3)) * X * X
        assert str(f) == "X^4 + (1/T)X^2"
