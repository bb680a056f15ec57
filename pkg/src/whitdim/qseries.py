"""Finite q-Pochhammer products and truncated formal power series in x.

The q-Pochhammer symbol is (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k); here the
base a is always +-q^e for an integer e, captured by PochSpec.  Infinite
symbols are never truncated products: they are *defined* through their series
expansions, with exact rational-function coefficients,

    (x;q)_inf           -> coefficient of x^j is (-1)^j q^C(j,2) / (q;q)_j,
    (a x;q)_inf/(x;q)_inf -> coefficient of x^j is (a;q)_j / (q;q)_j,

the two classical identities of Euler and the q-binomial theorem.  Equality
of truncated series is exact coefficientwise equality, which replaces any
notion of analytic convergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly
from .rational import RationalFunctionQ

INF = float("inf")


@dataclass(frozen=True)
class PochSpec:
    """The symbol (sign * q^exp ; q)_length, with length a non-negative int or INF."""

    sign: int
    exp: int
    length: object

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.length is not INF and (
            not isinstance(self.length, int) or self.length < 0
        ):
            raise ValueError("length must be a non-negative integer or INF")


def poch_finite(spec: PochSpec) -> LaurentPoly:
    """Exact product prod_{k=0}^{length-1} (1 - sign*q^(exp+k)); empty product is 1."""
    if spec.length is INF:
        raise ValueError("finite evaluation requires a finite length")
    out = LaurentPoly.one()
    for k in range(spec.length):
        out = out.times_binomial(spec.exp + k, -spec.sign)
        if out.is_zero:
            break
    return out


@lru_cache(maxsize=None)
def qq(j: int) -> LaurentPoly:
    """(q;q)_j = prod_{i=1}^{j} (1 - q^i), cached."""
    if j < 0:
        raise ValueError("(q;q)_j needs j >= 0")
    if j == 0:
        return LaurentPoly.one()
    return qq(j - 1).times_one_minus_q(j)


@lru_cache(maxsize=None)
def poch_power(base_exp: int, length: int) -> LaurentPoly:
    """(q^base_exp ; q)_length, cached."""
    return poch_finite(PochSpec(1, base_exp, length))


class TruncatedSeriesX:
    """Formal power series in x up to x**order, rational-function coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the x^0 coefficient")
        object.__setattr__(self, "order", len(coeffs) - 1)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeriesX is immutable")

    def coeff(self, j: int) -> RationalFunctionQ:
        if not 0 <= j <= self.order:
            raise IndexError(
                "coefficient index %d beyond truncation order %d" % (j, self.order)
            )
        return self.coeffs[j]

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeriesX):
            return NotImplemented
        order = min(self.order, other.order)
        out = []
        for t in range(order + 1):
            acc = RationalFunctionQ.zero()
            for i in range(t + 1):
                a = self.coeffs[i]
                b = other.coeffs[t - i]
                if not (a.is_zero or b.is_zero):
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeriesX(out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeriesX):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def scale_x(self, e: int) -> "TruncatedSeriesX":
        """Substitute x -> q^e * x."""
        return TruncatedSeriesX(
            c * RationalFunctionQ.monomial(e * j) for j, c in enumerate(self.coeffs)
        )

    def alternate_x(self) -> "TruncatedSeriesX":
        """Substitute x -> -x."""
        return TruncatedSeriesX(
            (-c if j % 2 else c) for j, c in enumerate(self.coeffs)
        )

    def to_json_list(self):
        return [c.to_json_dict() for c in self.coeffs]

    def __repr__(self):
        return "TruncatedSeriesX(order=%d)" % self.order


def series_mul(a: TruncatedSeriesX, b: TruncatedSeriesX) -> TruncatedSeriesX:
    return a * b


def series_coeff(s: TruncatedSeriesX, j: int) -> RationalFunctionQ:
    return s.coeff(j)


def euler_series(e: int, order: int) -> TruncatedSeriesX:
    """(q^e x ; q)_inf as a truncated series: coeff_j = (-1)^j q^(C(j,2)+e*j)/(q;q)_j."""
    if order < 0:
        raise ValueError("order must be >= 0")
    out = []
    for j in range(order + 1):
        num = LaurentPoly.monomial(j * (j - 1) // 2 + e * j, -1 if j % 2 else 1)
        out.append(RationalFunctionQ(num, qq(j)))
    return TruncatedSeriesX(out)


def qbinom_series(a_exp: int, order: int) -> TruncatedSeriesX:
    """(q^a_exp x;q)_inf / (x;q)_inf: coeff_j = (q^a_exp;q)_j / (q;q)_j.

    Negative a_exp is allowed; the Laurent numerators are cleared inside the
    rational coefficients.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    out = []
    for j in range(order + 1):
        out.append(RationalFunctionQ(poch_power(a_exp, j), qq(j)))
    return TruncatedSeriesX(out)


def euler_product_truncation(max_q_degree: int, order: int):
    """Bivariate truncation of prod_{k=0}^{max_q_degree} (1 - x q^k).

    Returns the x^0..x^order coefficients as integer polynomials in q, each
    trimmed to q-degree <= max_q_degree.  Factors with k > max_q_degree cannot
    contribute below that degree, so these coefficients agree with the full
    infinite product up to the trim.
    """
    coeffs = [LaurentPoly.one()] + [LaurentPoly.zero()] * order
    for k in range(max_q_degree + 1):
        for j in range(min(order, k + 1), 0, -1):
            coeffs[j] = (coeffs[j] - coeffs[j - 1].shifted(k)).truncated(max_q_degree)
    return coeffs


def poch_rewrite_check(n: int, k: int, m: int, ell: int):
    """Check the three Pochhammer rewrites used to evaluate the inner double sum.

    1. (q;q)_{2n+k-l-m-1} / (q;q)_{k-l}
         = (-1)^l (q^k)^l q^(-C(l,2)) (q^{-k};q)_l (q^{k+1};q)_{2n-l-m-1}
    2. (q^{k+1};q)_{2n-l-m-1} = (q^{k+1};q)_{n-1} * (q^{k+n};q)_{n-m-l}
    3. (q^{k+1};q)_{n-1} = (q;q)_{n-1} (q^n;q)_k / (q;q)_k

    Each is verified as exact equality of rational-function values; the result
    is the triple of truth values.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n or not 0 <= m <= n:
        raise ValueError("k and m must lie in 0..n")
    if not 0 <= ell <= min(k, n - m):
        raise ValueError("l must lie in 0..min(k, n-m)")

    lhs1 = RationalFunctionQ(qq(2 * n + k - ell - m - 1), qq(k - ell))
    rhs1_num = (
        poch_power(-k, ell)
        * poch_power(k + 1, 2 * n - ell - m - 1)
    ).shifted(k * ell - ell * (ell - 1) // 2)
    if ell % 2:
        rhs1_num = -rhs1_num
    ok1 = lhs1 == RationalFunctionQ(rhs1_num)

    ok2 = poch_power(k + 1, 2 * n - ell - m - 1) == poch_power(k + 1, n - 1) * poch_power(k + n, n - m - ell)

    ok3 = RationalFunctionQ(poch_power(k + 1, n - 1)) == RationalFunctionQ(
        qq(n - 1) * poch_power(n, k), qq(k)
    )
    return ok1, ok2, ok3
