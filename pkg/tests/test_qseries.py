import pytest

from whitdim.laurent import LaurentPoly
from whitdim.qseries import (
    INF,
    PochSpec,
    euler_product_truncation,
    euler_series,
    poch_finite,
    poch_power,
    poch_rewrite_check,
    qbinom_series,
    qq,
    series_mul,
)
from whitdim.rational import RationalFunctionQ as RF

Q = LaurentPoly.monomial
ONE = LaurentPoly.one()


class TestPochhammer:
    def test_empty_product(self):
        assert poch_finite(PochSpec(1, 1, 0)) == ONE

    def test_two_factor_product(self):
        p = poch_finite(PochSpec(1, 1, 2))
        assert p == LaurentPoly(0, (1, -1, -1, 1))
        assert p.eval_at(2) == 3

    def test_vanishing_at_negative_base(self):
        # (q^-1;q)_2 hits the factor 1 - q^0 = 0
        assert poch_finite(PochSpec(1, -1, 2)).is_zero

    def test_vanishing_family(self):
        for k in range(6):
            for ell in range(k + 1, 7):
                assert poch_finite(PochSpec(1, -k, ell)).is_zero, (k, ell)
            # and no earlier: (q^-k;q)_k is nonzero
            if k:
                assert not poch_finite(PochSpec(1, -k, k)).is_zero

    def test_negative_sign_base(self):
        assert poch_finite(PochSpec(-1, 0, 1)) == LaurentPoly.from_int(2)  # 1 - (-1)
        assert poch_finite(PochSpec(-1, 1, 2)) == (ONE + Q(1)) * (ONE + Q(2))

    def test_inf_rejected(self):
        with pytest.raises(ValueError):
            poch_finite(PochSpec(1, 0, INF))
        with pytest.raises(ValueError):
            PochSpec(1, 0, -1)
        with pytest.raises(ValueError):
            PochSpec(2, 0, 1)

    def test_qq_cache(self):
        assert qq(0) == ONE
        assert qq(3) == (ONE - Q(1)) * (ONE - Q(2)) * (ONE - Q(3))


class TestEulerSeries:
    def test_first_coefficients(self):
        s = euler_series(0, 8)
        assert s.coeff(0) == RF.one()
        assert s.coeff(1) == RF(-ONE, ONE - Q(1))
        assert s.coeff(2) == RF(Q(1), (ONE - Q(1)) * (ONE - Q(2)))

    def test_shifted_base_coefficient(self):
        # coefficient of x^n in (q^(k+n) x;q)_inf
        n, k = 3, 2
        c = euler_series(n + k, n).coeff(n)
        want = RF(Q((k + n) * n + n * (n - 1) // 2, (-1) ** n), qq(n))
        assert c == want

    def test_coeff_out_of_range(self):
        with pytest.raises(IndexError):
            euler_series(0, 8).coeff(9)


class TestQBinomSeries:
    def test_constant_term(self):
        for a in (-2, 0, 1, 5):
            assert qbinom_series(a, 4).coeff(0) == RF.one()

    def test_linear_term(self):
        n, k = 2, 3
        s = qbinom_series(n + k, 4)
        assert s.coeff(1) == RF(ONE - Q(n + k), ONE - Q(1))

    def test_base_one_collapses(self):
        s = qbinom_series(0, 6)
        assert all(s.coeff(j).is_zero for j in range(1, 7))


class TestSeriesOps:
    def test_mul_with_unit_series(self):
        e = euler_series(0, 8)
        assert series_mul(e, qbinom_series(0, 8)) == e

    def test_cauchy_coefficient(self):
        e = euler_series(0, 6)
        sq = series_mul(e, e)
        assert sq.coeff(1) == RF(LaurentPoly.from_int(-2), ONE - Q(1))

    def test_ratio_collapses_shifted_euler(self):
        for k in (1, 2, 3):
            ratio = qbinom_series(-k, 6).scale_x(k)
            assert series_mul(euler_series(k, 6), ratio) == euler_series(0, 6)

    def test_telescoping_three_factors(self):
        for n in (1, 2, 3):
            for k in (0, 1, 2):
                order = 5
                ratio1 = qbinom_series(-k, order).scale_x(k)
                ratio2 = qbinom_series(k + n, order)
                prod = series_mul(series_mul(euler_series(k, order), ratio1), ratio2)
                assert prod == euler_series(k + n, order), (n, k)

    def test_truncation_to_smaller_order(self):
        a = euler_series(0, 6)
        b = euler_series(1, 3)
        assert series_mul(a, b).order == 3

    def test_alternate_and_scale(self):
        s = euler_series(0, 4)
        assert s.alternate_x().alternate_x() == s
        assert s.scale_x(2).scale_x(-2) == s


class TestEulerProductCrossCheck:
    def test_bivariate_truncation_matches_series(self):
        max_deg, order = 30, 8
        product = euler_product_truncation(max_deg, order)
        series = euler_series(0, order)
        for j in range(order + 1):
            expansion = series.coeff(j).series_coeffs(max_deg)
            assert all(c.denominator == 1 for c in expansion)
            assert [int(c) for c in expansion] == [
                product[j].coeff(t) for t in range(max_deg + 1)
            ], j


class TestQBinomCrossCheck:
    def test_product_with_euler_base(self):
        for a_exp in range(6):
            lhs = series_mul(euler_series(0, 8), qbinom_series(a_exp, 8))
            assert lhs == euler_series(a_exp, 8), a_exp


class TestPochRewrites:
    def test_examples(self):
        assert poch_rewrite_check(1, 1, 0, 1) == (True, True, True)
        assert poch_rewrite_check(2, 1, 1, 0) == (True, True, True)

    def test_l_zero_degenerate(self):
        ok1, ok2, ok3 = poch_rewrite_check(3, 2, 1, 0)
        assert ok1 and ok2 and ok3
        # first identity degenerates: (q;q)_{2n+k-m-1}/(q;q)_k = (q^{k+1};q)_{2n-m-1}
        n, k, m = 3, 2, 1
        assert RF(qq(2 * n + k - m - 1), qq(k)) == RF(poch_power(k + 1, 2 * n - m - 1))

    def test_exhaustive_small(self):
        for n in range(1, 5):
            for k in range(n + 1):
                for m in range(n + 1):
                    for ell in range(min(k, n - m) + 1):
                        assert poch_rewrite_check(n, k, m, ell) == (True, True, True)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            poch_rewrite_check(2, 3, 0, 0)
        with pytest.raises(ValueError):
            poch_rewrite_check(2, 1, 1, 2)
