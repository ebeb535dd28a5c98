"""
Tests for T_p, U_p and δ_P on u-expansions over F_3.
"""

import pytest

from drinfeld.algebra.poly import Poly
from drinfeld.algebra.scalar import Scalar
from drinfeld.core.exceptions import (
    InsufficientPrecisionError,
    LevelError,
    NotIrreducibleError,
    OracleDomainError,
)
from drinfeld.forms import GeneratorId
from drinfeld.hecke import (
    PrimeP,
    decomposition_check,
    degree_bound_check,
    frobenius_commutation_check,
    op_delta_P,
    op_T,
    op_T_low_coeff_oracle,
    op_U,
    oracle_agreement,
)


@pytest.fixture(scope="module")
def primes(F3, T3):
    one = Poly.one(F3)
    return [PrimeP(T3), PrimeP(T3 + one), PrimeP(T3 * T3 + one)]


class TestPrimeP:

    def test_rejects_reducible(self, T3):
        with pytest.raises(NotIrreducibleError):
            PrimeP(T3 * T3)

    def test_rejects_constant(self, F3):
        with pytest.raises(NotIrreducibleError):
            PrimeP(Poly.one(F3))

    def test_output_precision(self, h3, primes):
        assert primes[0].output_prec(h3) == 20
        assert primes[2].output_prec(h3) == 6


class TestEigenforms:

    def test_h_eigenvalue_is_P(self, h3, primes):
        for P in primes:
            assert op_T(h3, P).compare(h3.scale(P.P)).equal, str(P)

    def test_Delta_eigenvalue_is_P_to_q_minus_one(self, delta3, primes):
        for P in primes:
            assert op_T(delta3, P).compare(delta3.scale(P.P ** 2)).equal, str(P)

    def test_decomposition(self, h3, delta3, primes):
        for f in (h3, delta3):
            for P in primes:
                assert decomposition_check(f, P).equal

    def test_frobenius_commutation(self, h3, primes):
        assert frobenius_commutation_check(h3, primes[0], 1).equal


class TestOperators:

    def test_delta_P(self, F3, T3, h3, primes):
        image = op_delta_P(h3, primes[0])
        assert image.level == T3
        assert image.prec == 180
        assert image.coefficient(1).is_zero()
        assert image.coefficient(3) == Scalar.integral(T3.scale(2))

    def test_U_kills_delta_P(self, h3, primes):
        P = primes[0]
        assert op_U(op_delta_P(h3, P), P).is_zero()

    def test_T_undefined_at_level(self, F3, T3, factory3, primes):
        e_t = factory3.build(GeneratorId("E_P", P=T3), 60)
        with pytest.raises(LevelError):
            op_T(e_t, primes[0])
        assert op_T(e_t, primes[1]).level == T3

    def test_output_needs_input_precision(self, h3, primes):
        with pytest.raises(InsufficientPrecisionError):
            op_U(h3, primes[0], out_prec=30)


class TestLowCoefficientOracle:

    def test_agreement(self, h3, delta3, primes):
        for f in (h3, delta3):
            for P in primes[:2]:
                rows = oracle_agreement(f, P)
                assert rows
                for m, oracle, actual in rows:
                    assert oracle == actual, f"m={m}: {oracle} != {actual}"

    def test_values(self, F3, T3, h3, delta3, primes):
        assert op_T_low_coeff_oracle(h3, primes[0], 1) == Scalar.integral(T3.scale(2))
        assert op_T_low_coeff_oracle(delta3, primes[0], 2) == Scalar.integral((T3 * T3).scale(2))

    def test_degree_two_prime(self, h3, primes):
        with pytest.raises(OracleDomainError):
            op_T_low_coeff_oracle(h3, primes[2], 1)

    def test_degree_bound(self, h3, delta3, primes):
        assert degree_bound_check(h3, primes[0]) == (True, 1)
        assert degree_bound_check(delta3, primes[0]) == (True, 2)
