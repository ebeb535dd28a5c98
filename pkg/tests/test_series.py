"""
Tests for truncated u-series: grading, precision bookkeeping and the text cache.
"""

import json

import pytest

from drinfeld.algebra.poly import Poly
from drinfeld.algebra.scalar import Scalar
from drinfeld.core.exceptions import (
    ArithmeticDomainError,
    FieldError,
    GradingError,
    InsufficientPrecisionError,
)
from drinfeld.series import USeries, dump_series, load_series, series_payload


class TestGrading:

    def test_type_inferred_from_lowest_index(self, F3):
        f = USeries(F3, {1: 1, 3: 1}, 10)
        assert f.type == 1
        assert f.order == 1

    def test_index_outside_type_class(self, F3):
        with pytest.raises(GradingError):
            USeries(F3, {1: 1, 2: 1}, 10)

    def test_negative_index(self, F3):
        with pytest.raises(GradingError):
            USeries(F3, {-1: 1}, 10)

    def test_type_stored_mod_q_minus_one(self, F5):
        f = USeries(F5, {}, 10, type=6)
        assert f.type == 2

    def test_retag_type_of_nonzero_series(self, F3):
        f = USeries(F3, {1: 1}, 10)
        with pytest.raises(GradingError):
            f.with_grading(type=0)

    def test_add_requires_same_weight_and_type(self, F3):
        f = USeries(F3, {1: 1}, 10, weight=2)
        g = USeries(F3, {1: 1}, 10, weight=4)
        with pytest.raises(GradingError):
            f + g

    def test_add_takes_lcm_of_levels(self, F3, T3):
        one = Poly.one(F3)
        f = USeries(F3, {1: 1}, 10, level=T3)
        g = USeries(F3, {3: 1}, 10, level=T3 + one)
        assert (f + g).level == T3 * (T3 + one)


class TestPrecision:

    def test_coefficient_beyond_precision(self, F3):
        f = USeries(F3, {1: 1}, 10)
        assert f.coefficient(9).is_zero()
        with pytest.raises(InsufficientPrecisionError):
            f.coefficient(10)

    def test_terms_beyond_precision_dropped(self, F3):
        f = USeries(F3, {1: 1, 11: 1}, 10)
        assert f.items() == [(1, Scalar.one(F3))]

    def test_sum_precision_is_minimum(self, F3):
        f = USeries(F3, {1: 1}, 10)
        g = USeries(F3, {1: 1}, 6)
        assert (f + g).prec == 6

    def test_product_precision_uses_orders(self, F3):
        f = USeries.u(F3, 10)
        g = USeries(F3, {0: 1, 2: 1}, 6)
        # min(10 + 0, 6 + 1)
        assert (f * g).prec == 7

    def test_nonpositive_precision(self, F3):
        with pytest.raises(InsufficientPrecisionError):
            USeries(F3, {}, 0)


class TestRing:

    def test_frobenius_matches_cube(self, F3, T3):
        f = USeries(F3, {1: 1, 3: T3}, 10)
        frob = f.frobenius_pow(1)
        assert frob.prec == 30
        assert frob.coeffs == {3: Scalar.one(F3), 9: Scalar.integral(T3 ** 3)}
        assert frob.compare(f * f * f).equal

    def test_unit_inverse(self, F3, T3):
        g = USeries(F3, {0: 1, 2: T3}, 10)
        assert (g * g.invert_unit()).compare(USeries.one(F3, 10)).equal

    def test_non_unit_inverse(self, F3):
        with pytest.raises(ArithmeticDomainError):
            USeries.u(F3, 10).invert_unit()

    def test_compose_with_u_is_identity(self, F3, T3):
        f = USeries(F3, {1: 1, 3: T3, 5: 2}, 10)
        assert f.compose(USeries.u(F3, 10)).compare(f).equal

    def test_scale_by_zero(self, F3):
        f = USeries(F3, {1: 1}, 10, weight=2)
        z = f.scale(0)
        assert z.is_zero() and z.weight == 2 and z.prec == 10


class TestCompare:

    def test_witness_is_first_difference(self, F3):
        f = USeries(F3, {1: 1, 3: 1, 5: 1}, 10)
        g = USeries(F3, {1: 1, 3: 2, 5: 2}, 8)
        cmp = f.compare(g)
        assert not cmp.equal
        assert cmp.witness == 3
        assert cmp.checked_prec == 8

    def test_grading_mismatch_is_not_equal(self, F3):
        f = USeries(F3, {1: 1}, 10, weight=2)
        g = USeries(F3, {1: 1}, 10, weight=4)
        cmp = f.compare(g)
        assert not cmp
        assert cmp.reason == "weight/type mismatch"


class TestCodec:

    def _sample(self, F3, T3):
        return USeries(F3, {1: 1, 3: Scalar(Poly.one(F3), T3), 7: T3 + Poly.one(F3)}, 12,
                       weight=2, type=1, level=T3)

    def test_dump_load(self, F3, T3):
        f = self._sample(F3, T3)
        text = dump_series(f)
        g = load_series(text)
        assert g.field is F3
        assert (g.weight, g.type, g.prec, g.level) == (2, 1, 12, T3)
        assert g.compare(f).equal

    def test_body_lines(self, F3, T3):
        body = dump_series(self._sample(F3, T3)).split("---\n", 1)[1]
        assert body.splitlines() == ["1\t1", "3\t1/T", "7\tT+1"]

    def test_unknown_version(self, F3, T3):
        text = dump_series(self._sample(F3, T3)).replace("format-version: 1", "format-version: 2")
        with pytest.raises(FieldError):
            load_series(text)

    def test_missing_separator(self):
        with pytest.raises(FieldError):
            load_series("q: 3\n")

    def test_wrong_field(self, F3, F5, T3):
        with pytest.raises(FieldError):
            load_series(dump_series(self._sample(F3, T3)), F5)

    def test_payload_limit(self, F3, T3):
        payload = series_payload("f", self._sample(F3, T3), limit=4)
        assert payload.certified_prec == 4
        assert payload.coefficients == [[1, "1"], [3, "1/T"]]
        assert json.loads(payload.model_dump_json())["form"] == "f"
