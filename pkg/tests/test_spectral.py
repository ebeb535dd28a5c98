"""
Tests for monomial bases, exact linear algebra over K and Hecke reports.
"""

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld.algebra.field import get_field
from drinfeld.algebra.kpoly import ScalarPoly
from drinfeld.algebra.poly import Poly
from drinfeld.algebra.scalar import Scalar
from drinfeld.core.exceptions import GradingError
from drinfeld.hecke import PrimeP
from drinfeld.spectral import (
    ScalarMatrix,
    charpoly,
    determinant,
    dimension_formula,
    enumerate_basis,
    hecke_matrix,
    is_squarefree,
    lambda_P_check,
    level_T_weight_q_plus_one,
    minpoly,
    sweep,
)

F3 = get_field(3)
small_polys = st.lists(st.integers(min_value=0, max_value=2), max_size=3).map(lambda c: Poly(F3, c))


def evaluate_at_matrix(chi: ScalarPoly, M: ScalarMatrix) -> ScalarMatrix:
    n = M.n_rows
    acc = ScalarMatrix(M.field, [[0] * n for _ in range(n)])
    power = ScalarMatrix.identity(M.field, n)
    for i in range(chi.degree + 1):
        acc = acc + power * chi.coefficient(i)
        power = power * M
    return acc


class TestBasis:

    def test_dimension_formula(self):
        assert dimension_formula(3, 4, 1) == 1
        assert dimension_formula(3, 8, 0) == 2
        assert dimension_formula(3, 3, 0) == 0
        assert dimension_formula(3, 2, 1) == 0

    @pytest.mark.parametrize("q", [3, 5])
    def test_enumeration_matches_formula(self, q):
        for k in range(1, 60):
            for l in range(q - 1):
                assert enumerate_basis(q, k, l).dimension == dimension_formula(q, k, l)

    def test_cusp_drops_pure_g1_power(self):
        assert enumerate_basis(3, 8, 0).labels() == ["g1^4", "Delta"]
        cusp = enumerate_basis(3, 8, 0, cusp=True)
        assert cusp.labels() == ["Delta"]
        assert cusp.orders == (2,)

    def test_type_range(self):
        with pytest.raises(GradingError):
            enumerate_basis(3, 8, 2)


class TestLinearAlgebra:

    def test_jordan_block(self, F3, T3):
        t = Scalar.integral(T3)
        M = ScalarMatrix(F3, [[t, 1], [0, t]])
        x_minus_t = ScalarPoly.x(F3) - ScalarPoly.constant(F3, t)
        assert charpoly(M) == x_minus_t * x_minus_t
        assert minpoly(M) == x_minus_t * x_minus_t
        assert not is_squarefree(minpoly(M))

    def test_scalar_matrix(self, F3, T3):
        t = Scalar.integral(T3)
        M = ScalarMatrix.identity(F3, 3) * t
        assert minpoly(M) == ScalarPoly.x(F3) - ScalarPoly.constant(F3, t)
        assert is_squarefree(minpoly(M))
        assert M.is_scalar_multiple_of_identity(t)

    def test_determinant(self, F3, T3):
        t = Scalar.integral(T3)
        M = ScalarMatrix(F3, [[t, 1], [1, t]])
        assert determinant(M) == t * t - 1

    @settings(max_examples=25, deadline=None)
    @given(st.lists(small_polys, min_size=9, max_size=9))
    def test_cayley_hamilton(self, entries):
        M = ScalarMatrix(F3, [entries[0:3], entries[3:6], entries[6:9]])
        zero = ScalarMatrix(F3, [[0] * 3 for _ in range(3)])
        assert evaluate_at_matrix(charpoly(M), M) == zero
        assert evaluate_at_matrix(minpoly(M), M) == zero
        assert minpoly(M).degree <= 3


class TestHeckeReports:

    def test_weight_four_type_one(self, T3):
        report = hecke_matrix(PrimeP(T3), 4, 1, cusp=True)
        assert report.matrix.to_text() == [["T"]]
        assert lambda_P_check(report) == (True, Scalar.integral(T3))
        assert report.all_verdicts()

    def test_Delta(self, T3):
        report = hecke_matrix(PrimeP(T3), 8, 0, cusp=True)
        assert report.matrix.to_text() == [["T^2"]]
        assert report.all_verdicts()
        model = report.to_model()
        assert model.basis == ["Delta"]
        assert model.charpoly == str(report.charpoly)

    def test_empty_space(self, T3):
        report = hecke_matrix(PrimeP(T3), 3, 0)
        assert report.dimension == 0
        assert report.all_verdicts()

    def test_sweep_dimension_one(self, F3, T3):
        reports = list(sweep(PrimeP(T3 + Poly.one(F3)), 12, dims=[1]))
        assert reports
        for report in reports:
            assert report.dimension == 1
            assert report.all_verdicts()

    def test_level_T_weight_four(self, F3, T3):
        P = T3 + Poly.one(F3)
        M, labels, prec = level_T_weight_q_plus_one(PrimeP(P))
        assert labels == ["Delta_T*E_T", "Delta_W*E_T"]
        assert M.is_scalar_multiple_of_identity(Scalar.integral(P))
