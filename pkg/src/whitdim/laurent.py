"""Exact Laurent polynomials in the single variable q over arbitrary-precision integers.

A LaurentPoly stores a dense coefficient window: ``coeffs[i]`` is the integer
coefficient of ``q**(min_exp + i)``.  Leading and trailing zeros are stripped,
so the zero polynomial is the unique empty representation with ``min_exp = 0``.
Values are immutable; every operation returns a new object, which makes them
safe to share freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class StructuralProductError(ValueError):
    """A displayed product's upper index fell two or more below its lower index."""


class LaurentPoly:
    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int = 0, coeffs=()):
        coeffs = list(coeffs)
        lo, hi = 0, len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly(exp, (coeff,))

    @staticmethod
    def from_int(c: int) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_polynomial(self) -> bool:
        """True when there are no negative exponents."""
        return self.is_zero or self.min_exp >= 0

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    @property
    def leading_coeff(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                return 1
        return g

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        out = [0] * (hi - lo)
        base = self.min_exp - lo
        for i, c in enumerate(self.coeffs):
            out[base + i] = c
        base = other.min_exp - lo
        for i, c in enumerate(other.coeffs):
            out[base + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return LaurentPoly(self.min_exp, [c * other for c in self.coeffs])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return _ZERO
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return LaurentPoly(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, exp: int) -> "LaurentPoly":
        """Multiply by q**exp."""
        if not self.coeffs or exp == 0:
            return self
        return LaurentPoly(self.min_exp + exp, self.coeffs)

    # -- sparse binomial kernels --------------------------------------------
    # These two are the inner loop of every q-Pochhammer product; they run in
    # O(len) instead of the O(len^2) of generic multiplication.

    def times_one_minus_q(self, j: int) -> "LaurentPoly":
        """self * (1 - q**j), j >= 1."""
        if j < 1:
            raise ValueError("exponent must be >= 1")
        if not self.coeffs:
            return _ZERO
        f = self.coeffs
        out = list(f) + [0] * j
        for i, c in enumerate(f):
            out[i + j] -= c
        return LaurentPoly(self.min_exp, out)

    def div_one_minus_q(self, j: int) -> "LaurentPoly":
        """Exact division by (1 - q**j); raises if the division is not exact."""
        if j < 1:
            raise ValueError("exponent must be >= 1")
        if not self.coeffs:
            return _ZERO
        f = self.coeffs
        n = len(f)
        if n <= j:
            raise ValueError("inexact division by 1 - q^%d" % j)
        out = [0] * (n - j)
        for t in range(n - j):
            prev = out[t - j] if t >= j else 0
            out[t] = f[t] + prev
        for t in range(n - j, n):
            prev = out[t - j] if t >= j else 0
            if f[t] + prev != 0:
                raise ValueError("inexact division by 1 - q^%d" % j)
        return LaurentPoly(self.min_exp, out)

    def times_binomial(self, exp: int, c: int) -> "LaurentPoly":
        """self * (1 + c*q**exp) for any integer exp (including <= 0)."""
        return self + self.shifted(exp) * c

    def truncated(self, max_degree: int) -> "LaurentPoly":
        """Drop all terms of degree > max_degree."""
        if not self.coeffs or self.degree <= max_degree:
            return self
        keep = max_degree - self.min_exp + 1
        if keep <= 0:
            return _ZERO
        return LaurentPoly(self.min_exp, self.coeffs[:keep])

    # -- evaluation & comparison --------------------------------------------

    def eval_at(self, x) -> Fraction:
        """Exact value at a rational point (Horner over the window)."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp:
            acc *= x ** self.min_exp
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json_dict(d: dict) -> "LaurentPoly":
        return LaurentPoly(int(d["min_exp"]), [int(c) for c in d["coeffs"]])

    def __repr__(self):
        return "LaurentPoly(%r, %r)" % (self.min_exp, list(self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.min_exp + i
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else "%d*" % abs(c)
                term = "%sq^%d" % (mag, e) if e != 1 else "%sq" % mag
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


_ZERO = object.__new__(LaurentPoly)
object.__setattr__(_ZERO, "min_exp", 0)
object.__setattr__(_ZERO, "coeffs", ())
_ONE = object.__new__(LaurentPoly)
object.__setattr__(_ONE, "min_exp", 0)
object.__setattr__(_ONE, "coeffs", (1,))


def one_minus_q_power_range(lo: int, hi: int) -> LaurentPoly:
    """prod_{i=lo}^{hi} (1 - q^i) with the empty-product conventions.

    hi == lo - 1 gives 1; hi <= lo - 2 is a structural error (it should never
    arise for admissible summation parameters, so it aborts loudly).
    """
    if hi < lo - 1:
        raise StructuralProductError(
            "product range upper index %d is below lower index %d - 1" % (hi, lo)
        )
    out = _ONE
    for i in range(lo, hi + 1):
        out = out.times_one_minus_q(i)
    return out


def q_power_minus_one_range(lo: int, hi: int) -> LaurentPoly:
    """prod_{i=lo}^{hi} (q^i - 1), same conventions as one_minus_q_power_range."""
    p = one_minus_q_power_range(lo, hi)
    if (hi - lo + 1) % 2:
        return -p
    return p


# -- plain-polynomial division and gcd ---------------------------------------


def _poly_divmod(num: LaurentPoly, den: LaurentPoly):
    """Quotient and remainder over the rationals, as coefficient lists.

    Both inputs must be plain polynomials (min_exp >= 0).  Returns lists of
    Fractions unless the divisor's leading coefficient is +-1, in which case
    everything stays integral.
    """
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    a = [0] * num.min_exp + list(num.coeffs)
    b = [0] * den.min_exp + list(den.coeffs)
    if len(a) < len(b):
        return [], a
    lead = b[-1]
    integral = lead in (1, -1)
    if not integral:
        a = [Fraction(c) for c in a]
    quo = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        top = a[i + len(b) - 1]
        if not top:
            continue
        c = top // lead if integral else top / lead
        quo[i] = c
        for j, bc in enumerate(b):
            a[i + j] -= c * bc
    return quo, a[: len(b) - 1]


def poly_exact_div(num: LaurentPoly, den: LaurentPoly):
    """num / den when the division is exact over the integers, else None."""
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero:
        return _ZERO
    shift = num.min_exp - den.min_exp
    if shift < 0:
        return None
    a = LaurentPoly(0, num.coeffs)
    b = LaurentPoly(0, den.coeffs)
    quo, rem = _poly_divmod(a, b)
    if any(rem):
        return None
    if any(isinstance(c, Fraction) and c.denominator != 1 for c in quo):
        return None
    return LaurentPoly(shift, [int(c) for c in quo])


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd with positive leading coefficient.

    Computed by a primitive pseudo-remainder sequence: each remainder is taken
    over the rationals (realized with integer pseudo-division) and immediately
    rescaled to a primitive integer polynomial, so coefficients stay bounded.
    The shared q-power factor is min(min_exp) since normalized coefficient
    windows always have a nonzero constant term.
    """
    if a.is_zero:
        return _positive_primitive(b)
    if b.is_zero:
        return _positive_primitive(a)
    shift = min(a.min_exp, b.min_exp)
    f = list(a.coeffs)
    g = list(b.coeffs)
    if len(f) < len(g):
        f, g = g, f
    while g:
        f = _primitive(f)
        g = _primitive(g)
        r = _pseudo_rem(f, g)
        f, g = g, _strip(r)
    f = _primitive(f)
    if f[-1] < 0:
        f = [-c for c in f]
    return LaurentPoly(shift, f)


def _strip(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _primitive(cs):
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            return cs
    if g > 1:
        return [c // g for c in cs]
    return cs


def _pseudo_rem(f, g):
    """Pseudo-remainder of f by g (coefficient lists, g nonzero)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        if f[-1] == 0:
            f.pop()
            continue
        lf = f[-1]
        shift = len(f) - 1 - dg
        f = [c * lg for c in f]
        for j in range(dg + 1):
            f[shift + j] -= lf * g[j]
        f = _strip(f)
        if not f:
            break
    return f


def _positive_primitive(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero:
        return _ZERO
    c = p.content()
    cs = [x // c for x in p.coeffs]
    if cs[-1] < 0:
        cs = [-x for x in cs]
    return LaurentPoly(p.min_exp, cs)
