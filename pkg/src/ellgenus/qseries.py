"""Exact truncated q-series whose coefficients are Laurent polynomials in y.

q-exponents are stored doubled, so the half-integral powers appearing in
theta expansions stay integral: the key k carries the coefficient of
q^(k/2).  A series remembers its precision (the largest retained doubled
exponent) and a flag saying whether odd doubled exponents may occur.
Arithmetic truncates to the smaller operand precision.

Fractional global prefactors of the classical products (q^{1/8}, q^{1/24}
and y^{1/2}) are never folded into a series; :func:`theta` reports them as
explicit tags next to the root-free product expansion.

>>> one = LaurentY.const(1)
>>> s = QYSeries(6, {0: one, 2: -one})        # 1 - q at precision q^3
>>> print((QYSeries.one(6) / s))
1 + q + q^2 + q^3 + O(q^4)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByNonUnit, PrecisionZero
from .render import format_laurent, format_series

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LaurentY:
    """Laurent polynomial in y over exact rationals, as a sparse map."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = v if isinstance(v, Fraction) else Fraction(v)
                if v:
                    c[int(e)] = v
        self.c = c

    @classmethod
    def const(cls, value):
        return cls({0: Fraction(value)})

    @classmethod
    def y_pow(cls, exponent, coeff=1):
        return cls({exponent: Fraction(coeff)})

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def monomial(self):
        """Return (exponent, coefficient) if this is a single term, else None."""
        if len(self.c) != 1:
            return None
        ((e, v),) = self.c.items()
        return e, v

    def __eq__(self, other):
        if isinstance(other, LaurentY):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self == LaurentY.const(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentY.const(other)
        if not isinstance(other, LaurentY):
            return NotImplemented
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, _ZERO) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = LaurentY.__new__(LaurentY)
        out.c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentY.__new__(LaurentY)
        out.c = {e: -v for e, v in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentY) else LaurentY.const(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return LaurentY()
            out = LaurentY.__new__(LaurentY)
            out.c = {e: v * f for e, v in self.c.items()}
            return out
        if not isinstance(other, LaurentY):
            return NotImplemented
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, _ZERO) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        out = LaurentY.__new__(LaurentY)
        out.c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = _laurent_one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale_exponents(self, s):
        """Substitute y -> y^s for a nonzero integer s."""
        if s == 0:
            raise ValueError("y-scale must be nonzero")
        return LaurentY({e * s: v for e, v in self.c.items()})

    def shift(self, k):
        """Multiply by y^k."""
        return LaurentY({e + k: v for e, v in self.c.items()})

    def reciprocal_y(self):
        """Substitute y -> 1/y."""
        return LaurentY({-e: v for e, v in self.c.items()})

    def derivative(self):
        """d/dy."""
        return LaurentY({e - 1: v * e for e, v in self.c.items() if e})

    def at_one(self):
        """Evaluate at y = 1."""
        return sum(self.c.values(), _ZERO)

    def evaluate(self, value):
        if not self.c:
            return _ZERO if isinstance(value, Fraction) else 0.0
        if not value and min(self.c) < 0:
            raise ZeroDivisionError("negative y-exponent at y = 0")
        return sum(v * value**e for e, v in self.c.items())

    def support(self):
        return sorted(self.c)

    def __str__(self):
        return format_laurent(sorted(self.c.items()))

    def __repr__(self):
        return f"LaurentY({self})"


def _laurent_one():
    return LaurentY.const(1)


class QYSeries:
    """Series in q truncated at doubled exponent ``prec2``.

    ``c`` maps doubled q-exponents to LaurentY coefficients; ``half_q``
    says whether odd doubled exponents may be populated.
    """

    __slots__ = ("prec2", "c", "half_q")

    def __init__(self, prec2, coeffs=None, half_q=False):
        if prec2 < 0:
            raise ValueError("precision must be nonnegative")
        self.prec2 = int(prec2)
        self.half_q = bool(half_q)
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                k = int(k)
                if k < 0:
                    raise ValueError("negative q-exponent")
                if k > prec2:
                    continue
                if not half_q and k % 2:
                    raise ValueError("odd doubled exponent in an integral-q series")
                if not isinstance(v, LaurentY):
                    v = LaurentY.const(v)
                if v:
                    c[k] = v
        self.c = c

    @classmethod
    def zero(cls, prec2, half_q=False):
        return cls(prec2, None, half_q)

    @classmethod
    def one(cls, prec2, half_q=False):
        return cls(prec2, {0: _laurent_one()}, half_q)

    @classmethod
    def const(cls, value, prec2, half_q=False):
        v = value if isinstance(value, LaurentY) else LaurentY.const(value)
        return cls(prec2, {0: v}, half_q)

    @classmethod
    def from_q_dict(cls, prec, coeffs, half_q=False):
        """Build from integer q-exponents (undoubled)."""
        return cls(2 * prec, {2 * k: v for k, v in coeffs.items()}, half_q)

    @property
    def q_order(self):
        return self.prec2 // 2

    def coefficient(self, q):
        """Coefficient of q^q for integer q."""
        if 2 * q > self.prec2:
            raise PrecisionZero(f"q^{q} beyond retained precision")
        return self.c.get(2 * q, LaurentY())

    def coefficient2(self, k2):
        """Coefficient at doubled exponent k2."""
        if k2 > self.prec2:
            raise PrecisionZero(f"doubled exponent {k2} beyond retained precision")
        return self.c.get(k2, LaurentY())

    def valuation2(self):
        """Smallest doubled exponent with nonzero coefficient, None if zero."""
        return min(self.c) if self.c else None

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        if not isinstance(other, QYSeries):
            return NotImplemented
        return self.prec2 == other.prec2 and self.c == other.c

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, LaurentY)):
            return QYSeries.const(other, self.prec2, self.half_q)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if not isinstance(other, QYSeries):
            return NotImplemented
        prec2 = min(self.prec2, other.prec2)
        half = self.half_q or other.half_q
        c = {k: v for k, v in self.c.items() if k <= prec2}
        for k, v in other.c.items():
            if k > prec2:
                continue
            w = c.get(k)
            w = v if w is None else w + v
            if w:
                c[k] = w
            else:
                c.pop(k, None)
        out = QYSeries.__new__(QYSeries)
        out.prec2, out.c, out.half_q = prec2, c, half
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QYSeries.__new__(QYSeries)
        out.prec2, out.half_q = self.prec2, self.half_q
        out.c = {k: -v for k, v in self.c.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentY)):
            if isinstance(other, LaurentY) and not other:
                return QYSeries.zero(self.prec2, self.half_q)
            if not isinstance(other, LaurentY) and not other:
                return QYSeries.zero(self.prec2, self.half_q)
            c = {}
            for k, v in self.c.items():
                w = v * other
                if w:
                    c[k] = w
            out = QYSeries.__new__(QYSeries)
            out.prec2, out.c, out.half_q = self.prec2, c, self.half_q
            return out
        if not isinstance(other, QYSeries):
            return NotImplemented
        prec2 = min(self.prec2, other.prec2)
        half = self.half_q or other.half_q
        c = {}
        for k1, v1 in self.c.items():
            if k1 > prec2:
                continue
            for k2, v2 in other.c.items():
                k = k1 + k2
                if k > prec2:
                    continue
                w = c.get(k)
                p = v1 * v2
                w = p if w is None else w + p
                if w:
                    c[k] = w
                else:
                    c.pop(k, None)
        out = QYSeries.__new__(QYSeries)
        out.prec2, out.c, out.half_q = prec2, c, half
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative series power; divide explicitly")
        result = QYSeries.one(self.prec2, self.half_q)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if not isinstance(other, QYSeries):
            return NotImplemented
        v = other.valuation2()
        if v is None:
            if self.prec2 == 0 and other.prec2 == 0:
                raise PrecisionZero("division needs coefficients beyond precision 0")
            raise DivisionByNonUnit("division by a series with no visible terms")
        lead = other.c[v].monomial()
        if lead is None:
            raise DivisionByNonUnit("lowest q-coefficient of divisor is not a y-monomial")
        if not self.is_zero() and self.valuation2() < v:
            raise DivisionByNonUnit("divisor q-valuation exceeds dividend q-valuation")
        prec2 = min(self.prec2, other.prec2) - v
        half = self.half_q or other.half_q
        if self.is_zero():
            return QYSeries.zero(max(prec2, 0), half)
        e0, c0 = lead
        inv_lead = LaurentY.y_pow(-e0, 1 / c0)
        # shift valuations out, then invert the unit-lead series
        a = {k - v: val for k, val in self.c.items() if k - v <= prec2}
        b = {k - v: val for k, val in other.c.items() if k - v <= prec2}
        inv = {0: inv_lead}
        for k in range(1, prec2 + 1):
            acc = None
            for j, bj in b.items():
                if 0 < j <= k:
                    t = bj * inv.get(k - j, LaurentY())
                    acc = t if acc is None else acc + t
            if acc is not None and acc:
                inv[k] = -(inv_lead * acc)
        c = {}
        for k1, v1 in a.items():
            for k2, v2 in inv.items():
                k = k1 + k2
                if k > prec2:
                    continue
                w = c.get(k)
                p = v1 * v2
                w = p if w is None else w + p
                if w:
                    c[k] = w
                else:
                    c.pop(k, None)
        out = QYSeries.__new__(QYSeries)
        out.prec2, out.c, out.half_q = prec2, c, half
        return out

    def truncate(self, prec2):
        if prec2 >= self.prec2:
            return self
        out = QYSeries.__new__(QYSeries)
        out.prec2, out.half_q = prec2, self.half_q
        out.c = {k: v for k, v in self.c.items() if k <= prec2}
        return out

    def assert_integral_q(self):
        """Check odd doubled exponents vanished and drop the half_q flag."""
        bad = [k for k in self.c if k % 2]
        if bad:
            raise AssertionError(f"half-integral q-terms survived at doubled keys {bad}")
        out = QYSeries.__new__(QYSeries)
        out.prec2, out.half_q = self.prec2, False
        out.c = dict(self.c)
        return out

    def map_y(self, s):
        """Substitute y -> y^s in every coefficient."""
        return QYSeries(self.prec2, {k: v.scale_exponents(s) for k, v in self.c.items()},
                        self.half_q)

    def specialize_y1(self):
        """Set y = 1 in every coefficient."""
        return QYSeries(self.prec2, {k: LaurentY.const(v.at_one()) for k, v in self.c.items()},
                        self.half_q)

    def evaluate_y(self, value):
        return QYSeries(self.prec2, {k: LaurentY.const(v.evaluate(value)) for k, v in self.c.items()},
                        self.half_q)

    def terms2(self):
        """Sorted (doubled exponent, coefficient) pairs."""
        return sorted(self.c.items())

    def __str__(self):
        terms = [(k, sorted(v.c.items())) for k, v in self.terms2()]
        return format_series(terms, self.q_order)

    def __repr__(self):
        return f"QYSeries({self})"


def eta_product(prec):
    """prod_{n>=1} (1 - q^n) to order q^prec, the 24th-root-free eta.

    >>> print(eta_product(5))
    1 - q - q^2 + q^5 + O(q^6)
    """
    prec2 = 2 * prec
    out = QYSeries.one(prec2)
    for n in range(1, prec + 1):
        out = out * QYSeries(prec2, {0: _laurent_one(), 2 * n: LaurentY.const(-1)})
    return out


@dataclass(frozen=True)
class ThetaExpansion:
    """Root-free triple product of a theta function plus prefactor tags.

    The function value equals
    ``i**i_power * q^(q_eighths/8) * y^(-y_half/2) * y_num * series``.
    """

    series: QYSeries
    q_eighths: int
    y_num: LaurentY
    y_half: int
    i_power: int


def theta(i, prec, y_scale=1):
    """Jacobi theta_i(q, y^y_scale) as a triple product, i in 1..4.

    The q^{1/8} prefactor of theta_1, theta_2 and the y^{1/2} prefactors
    are returned as tags on the result, never mixed into the series.
    theta_3 and theta_4 populate half-integral q-exponents.
    """
    if i not in (1, 2, 3, 4):
        raise ValueError("theta index must be 1..4")
    if prec < 0:
        raise ValueError("precision must be nonnegative")
    if y_scale < 1:
        raise ValueError("y-scale must be a positive integer")
    s = y_scale
    prec2 = 2 * prec
    half = i in (3, 4)
    sign = Fraction(-1 if i in (1, 4) else 1)
    out = QYSeries.one(prec2, half_q=half)
    for n in range(1, prec + 1):
        k2 = 2 * n if i in (1, 2) else 2 * n - 1
        if i in (1, 2):
            out = out * QYSeries(prec2, {0: _laurent_one(), 2 * n: LaurentY.const(-1)},
                                 half_q=half)
        if k2 <= prec2:
            out = out * QYSeries(prec2, {0: _laurent_one(), k2: LaurentY.y_pow(s, sign)},
                                 half_q=half)
            out = out * QYSeries(prec2, {0: _laurent_one(), k2: LaurentY.y_pow(-s, sign)},
                                 half_q=half)
    if i in (3, 4):
        # the (1 - q^n) factors are shared by all four products
        eta = eta_product(prec)
        out = out * QYSeries(prec2, {k: v for k, v in eta.c.items()}, half_q=half)
    if i == 1:
        return ThetaExpansion(out, 1, LaurentY({s: _ONE, 0: -_ONE}), s, 3)
    if i == 2:
        return ThetaExpansion(out, 1, LaurentY({s: _ONE, 0: _ONE}), s, 0)
    return ThetaExpansion(out, 0, _laurent_one(), 0, 0)


def _sigma(k, n):
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += d**k
    return total


def eisenstein(k, prec):
    """Normalized Eisenstein series E_4 or E_6 to order q^prec.

    >>> print(eisenstein(6, 2))
    1 - 504*q - 16632*q^2 + O(q^3)
    """
    if k == 4:
        scale, power = 240, 3
    elif k == 6:
        scale, power = -504, 5
    else:
        raise ValueError("only weights 4 and 6 are provided")
    coeffs = {0: _laurent_one()}
    for n in range(1, prec + 1):
        coeffs[2 * n] = LaurentY.const(scale * _sigma(power, n))
    return QYSeries(2 * prec, coeffs)
