"""Scalar layer: canonical rationals, jet arithmetic, derivative extraction."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.combinatorics import binomial_gen
from hypersum.exactnum import (
    Dual,
    DualDivisionError,
    d0_eval,
    dual_div,
    embed,
    format_rational,
    parse_rational,
    rat,
)

rationals = st.fractions(max_numerator=10**6, max_denominator=10**4)
nonzero_rationals = rationals.filter(lambda r: r != 0)


class TestRat:
    def test_reduction(self):
        assert rat(2, 4) == F(1, 2)

    def test_sign_normalization(self):
        r = rat(3, -6)
        assert r == F(-1, 2)
        assert r.denominator == 2 and r.numerator == -1

    def test_zero_canonical(self):
        r = rat(0, 5)
        assert (r.numerator, r.denominator) == (0, 1)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            rat(1, 0)

    @given(rationals)
    def test_canonical_form(self, r):
        from math import gcd

        assert r.denominator > 0
        assert gcd(abs(r.numerator), r.denominator) == 1

    @given(rationals)
    def test_serialization_round_trip(self, r):
        s = format_rational(r)
        assert parse_rational(s) == r
        if r.denominator == 1:
            assert "/" not in s
        else:
            assert s.endswith(f"/{r.denominator}")


class TestFieldAxioms:
    @settings(max_examples=200)
    @given(rationals, rationals, rationals)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a

    @given(nonzero_rationals)
    def test_multiplicative_inverse(self, a):
        assert a * (1 / a) == 1


class TestDualArithmetic:
    def test_jet_product_rule(self):
        assert Dual(2, 3) * Dual(5, 7) == Dual(10, 2 * 7 + 3 * 5)

    def test_divide_by_unit(self):
        assert dual_div(Dual(1, 1), Dual(1, 0)) == Dual(1, 1)

    def test_divide_expand_inverse(self):
        # 1/(2+x) to first order at x=0
        assert dual_div(Dual(1, 0), Dual(2, 1)) == Dual(F(1, 2), F(-1, 4))

    def test_divide_x_over_one_plus_x(self):
        assert dual_div(Dual(0, 1), Dual(1, 1)) == Dual(0, 1)

    def test_zero_value_divisor_rejected(self):
        with pytest.raises(DualDivisionError) as err:
            dual_div(Dual(1, 0), Dual(0, 1))
        assert "zero value part" in str(err.value)

    def test_mixed_int_fraction_operands(self):
        x = Dual(0, 1)
        assert 1 + x == Dual(1, 1)
        assert 2 * x - F(1, 2) == Dual(F(-1, 2), 2)
        assert (1 - x) / 2 == Dual(F(1, 2), F(-1, 2))
        assert F(3, 4) / Dual(1, 1) == Dual(F(3, 4), F(-3, 4))

    def test_power(self):
        assert Dual(2, 1) ** 3 == Dual(8, 12)
        assert Dual(2, 1) ** 0 == Dual(1, 0)

    @settings(max_examples=100)
    @given(rationals, rationals, nonzero_rationals, rationals)
    def test_division_cancels_multiplication(self, av, ad, bv, bd):
        a, b = Dual(av, ad), Dual(bv, bd)
        assert (a * b) / b == a
        assert (a / b) * b == a

    @settings(max_examples=100)
    @given(rationals, rationals, rationals, rationals)
    def test_embedding_is_a_ring_homomorphism(self, r, s, t, u):
        assert embed(r + s) == embed(r) + embed(s)
        assert embed(r - s) == embed(r) - embed(s)
        assert embed(r * s) == embed(r) * embed(s)
        if s != 0:
            assert embed(r / s) == embed(r) / embed(s)
        del t, u


# Hand-expanded first-order series for a fixed corpus of rational functions:
# each entry is (function, value at 0, derivative at 0).
_D0_CORPUS = [
    (lambda x: x * (3 + x), F(0), F(3)),
    (lambda x: (2 + x) / (3 - x), F(2, 3), F(5, 9)),
    (lambda x: 1 / (1 + x), F(1), F(-1)),
    (lambda x: (1 - x) / (1 + x), F(1), F(-2)),
    (lambda x: x / (1 + x), F(0), F(1)),
    (lambda x: (1 + x) ** 2, F(1), F(2)),
    (lambda x: (1 + 2 * x) * (2 - 3 * x) / (1 + x), F(2), F(-1)),
    (lambda x: 1 / (2 + x) ** 2, F(1, 4), F(-1, 4)),
    (lambda x: (x * x + 3 * x + 2) / (x + 2), F(1), F(1)),
    (lambda x: F(5), F(5), F(0)),
    (lambda x: x, F(0), F(1)),
    (lambda x: x * x, F(0), F(0)),
    (lambda x: (F(1, 2) + x) * (F(1, 3) - x), F(1, 6), F(-1, 6)),
    (lambda x: 2 / (1 - x) + 3 / (1 + x), F(5), F(-1)),
    (lambda x: ((1 + x) / (1 - x)) / (2 + x), F(1, 2), F(3, 4)),
    (lambda x: x ** 3 - 2 * x + 7, F(7), F(-2)),
    (lambda x: (2 - x) * (2 + x), F(4), F(0)),
    (lambda x: 1 / ((1 + x) * (2 - x)), F(1, 2), F(-1, 4)),
    (lambda x: ((x + F(1, 2)) / (x - F(1, 2))) ** 2, F(1), F(8)),
    (lambda x: (3 * x + 1) / (x + 1) ** 2, F(1), F(1)),
]


class TestD0Eval:
    def test_product_rule_at_zero(self):
        assert d0_eval(lambda x: x * (3 + x)) == (0, 3)

    def test_binomial_top_shift(self):
        # derivative picks up a harmonic-number difference: 2 * (H_2 - H_1)
        assert d0_eval(lambda x: binomial_gen(x + 2, 1)) == (2, 1)

    def test_inverse_binomial_top_shift(self):
        assert d0_eval(lambda x: 1 / binomial_gen(x + 2, 1)) == (F(1, 2), F(-1, 4))

    @pytest.mark.parametrize("f,value,deriv", _D0_CORPUS, ids=range(len(_D0_CORPUS)))
    def test_hand_expanded_corpus(self, f, value, deriv):
        assert d0_eval(f) == (value, deriv)

    def test_corpus_size(self):
        assert len(_D0_CORPUS) == 20

    def test_pole_at_zero_propagates(self):
        with pytest.raises(DualDivisionError):
            d0_eval(lambda x: 1 / x)

    def test_constant_output_lifted(self):
        assert d0_eval(lambda x: 7) == (7, 0)
