from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whitdim.laurent import (
    LaurentPoly,
    StructuralProductError,
    one_minus_q_power_range,
    poly_exact_div,
    poly_gcd,
    q_power_minus_one_range,
)

Q = LaurentPoly.monomial
ONE = LaurentPoly.one()


def laurents(min_exp=-4, max_exp=4, coeff=9, size=6):
    return st.builds(
        LaurentPoly,
        st.integers(min_exp, max_exp),
        st.lists(st.integers(-coeff, coeff), max_size=size),
    )


class TestBasics:
    def test_difference_of_squares(self):
        assert (ONE - Q(1)) * (ONE + Q(1)) == ONE - Q(2)

    def test_negative_exponent_cancellation(self):
        assert Q(-1) * Q(1) == ONE

    def test_poch_style_product(self):
        p = (ONE - Q(1)) * (ONE - Q(2))
        assert p == LaurentPoly(0, (1, -1, -1, 1))
        # (1-2)(1-4) = 3; cross-check of the hand expansion
        assert p.eval_at(2) == 3

    def test_normalization_strips_zeros(self):
        p = LaurentPoly(-2, (0, 0, 5, 0, 0))
        assert p.min_exp == 0 and p.coeffs == (5,)
        assert LaurentPoly(3, ()) == LaurentPoly.zero()
        assert LaurentPoly(7, (0, 0)).min_exp == 0

    def test_zero_is_unique_empty(self):
        z = Q(5) - Q(5)
        assert z.is_zero and z.min_exp == 0 and z.coeffs == ()

    def test_immutability(self):
        with pytest.raises(AttributeError):
            ONE.min_exp = 3

    def test_eval_with_negative_exponents(self):
        p = Q(-2, 3) + Q(1)  # 3q^-2 + q
        assert p.eval_at(2) == Fraction(3, 4) + 2

    def test_pow(self):
        assert (ONE - Q(1)) ** 3 == (ONE - Q(1)) * (ONE - Q(1)) * (ONE - Q(1))
        assert (ONE - Q(1)) ** 0 == ONE

    def test_str_and_json_roundtrip(self):
        p = Q(3) - Q(2) + LaurentPoly.from_int(-7)
        assert LaurentPoly.from_json_dict(p.to_json_dict()) == p
        assert str(LaurentPoly.zero()) == "0"


class TestSparseKernels:
    def test_times_div_one_minus_q(self):
        p = (ONE + Q(2, 3)).times_one_minus_q(4)
        assert p == (ONE + Q(2, 3)) * (ONE - Q(4))
        assert p.div_one_minus_q(4) == ONE + Q(2, 3)

    def test_div_inexact_raises(self):
        with pytest.raises(ValueError):
            (ONE - Q(1)).div_one_minus_q(2)
        with pytest.raises(ValueError):
            (ONE - Q(3, 2)).div_one_minus_q(3)

    def test_range_products(self):
        assert one_minus_q_power_range(1, 0) == ONE
        assert one_minus_q_power_range(1, 2) == (ONE - Q(1)) * (ONE - Q(2))
        assert q_power_minus_one_range(1, 2) == (Q(1) - ONE) * (Q(2) - ONE)

    def test_structural_error(self):
        with pytest.raises(StructuralProductError):
            one_minus_q_power_range(3, 1)


class TestDivGcd:
    def test_exact_div(self):
        num = (ONE - Q(2)) * (ONE + Q(1) * 3)
        assert poly_exact_div(num, ONE - Q(2)) == ONE + Q(1) * 3
        assert poly_exact_div(ONE - Q(2), ONE - Q(1)) == ONE + Q(1)
        assert poly_exact_div(Q(3), ONE - Q(1)) is None

    def test_gcd_positive_leading_primitive(self):
        g = poly_gcd((ONE - Q(2)) * 4, (ONE - Q(1)) * 6)
        assert g == Q(1) - ONE  # positive leading coefficient
        assert poly_gcd(Q(3), Q(1)) == Q(1)
        assert poly_gcd(LaurentPoly.zero(), Q(2) * -3) == Q(2)


@settings(max_examples=150)
@given(laurents(), laurents(), laurents())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=100)
@given(laurents(), st.integers(1, 6))
def test_binomial_kernels_agree_with_mul(a, j):
    assert a.times_one_minus_q(j) == a * (ONE - Q(j))
    if not a.is_zero:
        assert a.times_one_minus_q(j).div_one_minus_q(j) == a


@settings(max_examples=100)
@given(laurents(), st.fractions(min_value=-5, max_value=5))
def test_eval_is_a_homomorphism(a, x):
    b = a + Q(2, 3)
    if x == 0 and min(a.min_exp, b.min_exp) < 0:
        return  # pole of the Laurent part
    assert (a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x)
    assert (a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x)
