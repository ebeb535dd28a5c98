"""
Tests for the generator expansions g_1, g_d, h, Δ, E_P, Δ_T and Δ_W.

Hand-written coefficients are for q = 3, where [1] = T^3 - T; the printed
leading terms are also checked for q = 5.
"""

from concurrent.futures import ThreadPoolExecutor

import pytest

from drinfeld.algebra.poly import Poly, bracket
from drinfeld.algebra.scalar import Scalar
from drinfeld.core.exceptions import GradingError, NotIrreducibleError
from drinfeld.forms import GeneratorId, parse_generator
from drinfeld.forms.generators import FormFactory, get_factory


def assert_terms(series, terms, upto):
    """Coefficients below upto are exactly the given terms."""
    assert series.prec >= upto
    for i in range(upto):
        expected = terms.get(i, Scalar.zero(series.field))
        assert series.coefficient(i) == expected, f"u^{i}: {series.coefficient(i)} != {expected}"


PRINTED = {
    "g1": lambda q, one, b1: ({0: one, q - 1: -b1, (q - 1) * (q * q - q + 1): -b1}, (q - 1) * (q * q - q + 1) + 1),
    "h": lambda q, one, b1: ({1: -one, 1 + (q - 1) ** 2: -one, 1 + q * (q - 1): b1, 1 + (2 * q - 2) * (q - 1): -one},
                            2 + (2 * q - 2) * (q - 1)),
    "Delta": lambda q, one, b1: ({q - 1: -one, q * (q - 1): one, (q + 1) * (q - 1): -b1}, (q * q - q + 1) * (q - 1)),
}


@pytest.fixture(scope="module")
def b1(F3):
    return Scalar.integral(bracket(F3, 1))


@pytest.fixture(scope="module", params=[3, 5])
def factory(request, factory3, factory5):
    return factory3 if request.param == 3 else factory5


class TestPrintedExpansions:

    def test_g1(self, F3, g1_3, b1):
        assert_terms(g1_3, {0: Scalar.one(F3), 2: -b1, 14: -b1}, 15)

    def test_h(self, F3, h3, b1):
        one = Scalar.one(F3)
        assert_terms(h3, {1: -one, 5: -one, 7: b1, 9: -one}, 10)

    def test_Delta(self, F3, delta3, b1):
        one = Scalar.one(F3)
        assert_terms(delta3, {2: -one, 6: one, 8: -b1}, 14)

    @pytest.mark.parametrize("name", ["g1", "h", "Delta"])
    def test_printed_terms_for_q(self, factory, name):
        field, q = factory.field, factory.q
        terms, upto = PRINTED[name](q, Scalar.one(field), Scalar.integral(bracket(field, 1)))
        series = factory.build(GeneratorId(name), upto + 2)
        assert_terms(series, terms, upto)
        assert series.is_integral()

    def test_grading_for_q(self, factory):
        q = factory.q
        h = factory.build(GeneratorId("h"), 10)
        delta = factory.build(GeneratorId("Delta"), 10)
        assert (h.weight, h.type) == (q + 1, 1)
        assert (delta.weight, delta.type) == (q * q - 1, 0)

    def test_integral(self, g1_3, h3, delta3):
        for series in (g1_3, h3, delta3):
            assert series.is_integral()

    def test_grading(self, g1_3, h3, delta3):
        assert (g1_3.weight, g1_3.type) == (2, 0)
        assert (h3.weight, h3.type) == (4, 1)
        assert (delta3.weight, delta3.type) == (8, 0)

    def test_h_power_is_minus_Delta(self, factory):
        assert factory.h_power_identity(60).equal


class TestLevelForms:

    def test_E_T_low_terms(self, F3, T3, factory3):
        e = factory3.build(GeneratorId("E_P", P=T3), 20)
        assert e.level == T3
        assert (e.weight, e.type) == (2, 1)
        assert e.coefficient(1).is_one()
        assert e.coefficient(3) == Scalar.integral(T3.scale(2))

    def test_Delta_W_and_Delta_T_recover_g1(self, F3, T3, factory3, g1_3):
        delta_t = factory3.build(GeneratorId("Delta_T"), 60)
        delta_w = factory3.build(GeneratorId("Delta_W"), 60)
        assert (delta_w - delta_t.scale(T3 ** 3)).compare(g1_3).equal

    def test_Delta_T_is_cuspidal(self, factory3):
        delta_t = factory3.build(GeneratorId("Delta_T"), 30)
        assert delta_t.coefficient(0).is_zero()
        assert not delta_t.is_zero()

    def test_E_P_requires_prime(self, T3, factory3):
        with pytest.raises(NotIrreducibleError):
            factory3.build(GeneratorId("E_P", P=T3 * T3), 10)


class TestGenerators:

    def test_gd_one_is_g1(self, factory3, g1_3):
        assert factory3.build(GeneratorId("gd", d=1), 60).compare(g1_3).equal

    def test_gd_two_grading(self, factory3):
        g2 = factory3.build(GeneratorId("gd", d=2), 40)
        assert g2.weight == 8
        assert g2.coefficient(0).is_one()

    def test_cached_truncation(self, factory3, h3):
        shorter = factory3.build(GeneratorId("h"), 30)
        assert shorter.prec == 30
        assert shorter.compare(h3).equal

    def test_concurrent_builds_share_one_cache(self, F3, h3):
        factory = FormFactory(F3)
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda _: factory.build(GeneratorId("h"), 30), range(8)))
        assert all(r is results[0] for r in results)
        assert results[0].compare(h3).equal

    def test_get_factory_is_shared_across_threads(self, F3):
        with ThreadPoolExecutor(max_workers=4) as pool:
            factories = list(pool.map(lambda _: get_factory(F3), range(8)))
        assert all(f is factories[0] for f in factories)

    def test_eisenstein_weight_check(self, factory3):
        with pytest.raises(GradingError):
            factory3.build_eisenstein_normalized(3, 10)

    def test_parse(self, F3, T3):
        assert parse_generator(F3, "Delta") == GeneratorId("Delta")
        assert parse_generator(F3, "gd:2") == GeneratorId("gd", d=2)
        assert parse_generator(F3, "E_P(T+1)") == GeneratorId("E_P", P=T3 + Poly.one(F3))

    def test_parse_unknown(self, F3):
        with pytest.raises(GradingError):
            parse_generator(F3, "theta")

    def test_gd_needs_degree(self):
        with pytest.raises(GradingError):
            GeneratorId("gd")

    def test_weights(self):
        assert GeneratorId("Delta_W").weight(5) == 4
        assert GeneratorId("gd", d=2).weight(5) == 24
        assert GeneratorId("E").type == 1
