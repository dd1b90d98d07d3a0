from fractions import Fraction

import pytest
from hypothesis import given, settings

from mobius_renorm import (
    InsufficientPrecision,
    LaurentSeries,
    ParseError,
    PolePresent,
    agree_on_common_window,
    parse_laurent,
)
from strategies import laurent_polys, laurent_series


def L(text):
    return parse_laurent(text)


def eps(order, coeff=1):
    return LaurentSeries.monomial(order, coeff)


class TestAdd:
    def test_additive_inverse(self):
        assert eps(-1) + eps(-1, -1) == LaurentSeries.zero()

    def test_disjoint_supports(self):
        assert L("3*e^-2 + 5") + L("7*e") == L("3*e^-2 + 5 + 7*e")

    def test_truncation_bookkeeping(self):
        a = LaurentSeries({0: 1}, 16)
        b = LaurentSeries({1: 2}, 8)
        out = a + b
        assert out.trunc_order == 8
        assert out.coeffs == {0: Fraction(1), 1: Fraction(2)}

    def test_coefficients_above_result_window_are_dropped(self):
        a = LaurentSeries({0: 1, 12: 5}, 16)
        b = LaurentSeries({0: 1}, 8)
        assert (a + b).coeffs == {0: Fraction(2)}


class TestMul:
    def test_order_cancellation(self):
        assert eps(-1) * eps(1) == LaurentSeries.one()

    def test_difference_of_squares(self):
        assert L("1 + e") * L("1 - e") == L("1 - e^2")

    def test_square_of_pole_plus_one(self):
        # Hand expansion: (e^-1 + 1)^2 = e^-2 + 2 e^-1 + 1.
        a = L("e^-1 + 1")
        assert a * a == L("e^-2 + 2*e^-1 + 1")

    def test_window_rule(self):
        # trunc = min(a.min + b.trunc, b.min + a.trunc)
        a = LaurentSeries({-2: 1}, 10)
        b = LaurentSeries({-1: 1}, 7)
        assert (a * b).trunc_order == min(-2 + 7, -1 + 10)

    def test_exact_zero_annihilates(self):
        z = LaurentSeries.zero()
        b = LaurentSeries({-1: 3}, 5)
        assert z * b == LaurentSeries.zero()

    def test_window_too_deep_raises(self):
        a = LaurentSeries({-6: 1}, 10)
        b = LaurentSeries({2: 1}, 3)
        with pytest.raises(InsufficientPrecision):
            a * b  # trunc would be -6 + 3 = -3 < -1


class TestPolePart:
    def test_keeps_only_negative_orders(self):
        assert L("3*e^-2 + 5 + 7*e").pole_part() == L("3*e^-2")

    def test_no_negative_orders(self):
        assert L("5 + 7*e").pole_part() == LaurentSeries.zero()

    def test_idempotent(self):
        x = L("e^-1 + 1")
        assert x.pole_part().pole_part() == x.pole_part()

    def test_result_is_exact(self):
        x = LaurentSeries({-2: 1, 3: 4}, 5)
        assert x.pole_part().trunc_order is None

    @given(laurent_series(), laurent_series())
    def test_linear(self, a, b):
        assert (a + b).pole_part() == a.pole_part() + b.pole_part()


class TestEvalAtZero:
    def test_constant_term(self):
        assert L("5 + 7*e").eval_at_zero() == 5

    def test_zero_series(self):
        assert LaurentSeries.zero().eval_at_zero() == 0

    def test_pole_raises(self):
        with pytest.raises(PolePresent):
            L("e^-1 + 1").eval_at_zero()


class TestParse:
    def test_direct_reading(self):
        x = L("3/2*e^-2 + 1 + e")
        assert x.coeffs == {-2: Fraction(3, 2), 0: Fraction(1), 1: Fraction(1)}

    def test_zero(self):
        assert L("0") == LaurentSeries.zero()
        assert str(LaurentSeries.zero()) == "0"

    def test_repeated_orders_fold(self):
        assert L("e^-1 + e^-1") == eps(-1, 2)

    def test_whitespace_insensitive(self):
        assert L(" 3/2*e^-2+1+ e ") == L("3/2*e^-2 + 1 + e")

    def test_leading_sign(self):
        assert L("-e^-1 + 1") == eps(-1, -1) + LaurentSeries.one()

    @pytest.mark.parametrize(
        "bad", ["", "e^", "3*", "1/0", "x", "1 + + 2", "2**e", "3/ * e"]
    )
    def test_malformed_raises_with_position(self, bad):
        with pytest.raises(ParseError) as err:
            L(bad)
        assert err.value.position is not None

    @given(laurent_polys())
    def test_roundtrip_exact(self, x):
        assert parse_laurent(str(x)) == x

    @given(laurent_series())
    def test_roundtrip_coefficients(self, x):
        # The grammar carries no window, so only the content round-trips.
        assert parse_laurent(str(x)).coeffs == x.coeffs


class TestRingAxioms:
    @given(laurent_series(), laurent_series(), laurent_series())
    @settings(max_examples=60)
    def test_add_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(laurent_series(), laurent_series(), laurent_series())
    @settings(max_examples=60)
    def test_mul_associative(self, a, b, c):
        assert agree_on_common_window((a * b) * c, a * (b * c))

    @given(laurent_series(), laurent_series(), laurent_series())
    @settings(max_examples=60)
    def test_distributive(self, a, b, c):
        assert agree_on_common_window(a * (b + c), a * b + a * c)

    @given(laurent_series())
    def test_unit_laws(self, a):
        one = LaurentSeries.one()
        assert a * one == a
        assert one * a == a


class TestRotaBaxterProperty:
    @staticmethod
    def _rb_sides(x, y):
        r = LaurentSeries.pole_part
        lhs = r(x * y) + r(x) * r(y)
        rhs = r(r(x) * y + x * r(y))
        return lhs, rhs

    @given(laurent_series(), laurent_series())
    @settings(max_examples=80)
    def test_weight_one_equation(self, x, y):
        lhs, rhs = self._rb_sides(x, y)
        assert lhs == rhs

    @given(laurent_series(), laurent_series())
    @settings(max_examples=60)
    def test_kernel_and_image_closed_under_mul(self, x, y):
        ker_x, ker_y = x - x.pole_part(), y - y.pole_part()
        assert not (ker_x * ker_y).has_pole()
        im = x.pole_part() * y.pole_part()
        assert im.pole_part() == im


class TestPrecision:
    def test_coefficient_above_window_raises(self):
        a = LaurentSeries({0: 1}, 4)
        assert a.coefficient(4) == 0
        with pytest.raises(InsufficientPrecision):
            a.coefficient(5)

    def test_exact_series_has_all_coefficients(self):
        a = L("1 + e")
        assert a.coefficient(100) == 0

    def test_trunc_below_minus_one_rejected(self):
        with pytest.raises(InsufficientPrecision):
            LaurentSeries({}, -2)

    def test_zero_with_context_window(self):
        z = LaurentSeries({}, 7)
        assert z.min_order == 7 and z.trunc_order == 7 and str(z) == "0"
