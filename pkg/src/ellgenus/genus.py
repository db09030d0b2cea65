"""Two-variable elliptic genus, chi_y genus, and their Chern-number form.

The genus of a d-fold is int_M prod_i G(x_i) over the Chern roots, with the
per-root factor (already multiplied by the y^{d/2} normalization so that
all outputs have integer powers of y)

    G(x) = prod_{n>=1} (1 - y q^{n-1} e^{-x})(1 - y^{-1} q^n e^x)
           / ((1 - q^n e^{-x})(1 - q^n e^x)) * x/(1 - e^{-x}).

Writing G(x) = G(0) * exp(sum_{m>=1} a_m x^m), the coefficients a_m close
up exactly: log(1 - c e^{sx}) - log(1 - c) expands as
-(s^m/m!) sum_j j^{m-1} c^j per power x^m, so

    a_m = t_m + (-1)^{m+1} L_m(y)/m!
          + (1/m!) sum_{n,j >= 1, nj <= k} j^{m-1} q^{nj}
            (-(-1)^m y^j - y^{-j} + (-1)^m + 1),

with t_m the log-Todd coefficients and L_m(y) = sum_j j^{m-1} y^j, a
rational function with denominator (1-y)^m.  The product over roots
becomes exp(sum a_m p_m) in power sums, is rewritten in elementary
symmetric polynomials (the Chern classes) by Newton's identities, and only
the weighted-degree-d part survives integration.  G(0)^d clears every
(1-y) denominator, which is asserted.

Factors with n > k contribute only beyond q^k, so the products are
truncated at n = k.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ci import chern_number
from .qseries import LaurentY, QYSeries
from .render import _join, _q_part, _term_body, _y_part
from .taylor import log_todd_coefficients

_F = Fraction
_ONE_MINUS_Y = LaurentY({0: _F(1), 1: _F(-1)})


# --------------------------------------------------------------------------
# rational functions in y with denominator (1-y)^k


def _divide_one_minus_y(poly):
    """Exact quotient poly / (1-y); requires poly(1) = 0."""
    items = sorted(poly.c.items())
    low, top = items[0][0], items[-1][0]
    out = {}
    running = _F(0)
    for e in range(low, top):
        running += poly.c.get(e, _F(0))
        if running:
            out[e] = running
    assert running + poly.c[top] == 0, "not divisible by 1-y"
    return LaurentY(out)


class YFrac:
    """Laurent polynomial in y divided by a power of (1-y)."""

    __slots__ = ("num", "den_pow")

    def __init__(self, num, den_pow=0):
        while den_pow > 0 and not num.is_zero() and num.at_one() == 0:
            num = _divide_one_minus_y(num)
            den_pow -= 1
        if num.is_zero():
            den_pow = 0
        self.num = num
        self.den_pow = den_pow

    @classmethod
    def const(cls, value):
        return cls(LaurentY.const(value))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        k = max(self.den_pow, other.den_pow)
        a = self.num * _ONE_MINUS_Y ** (k - self.den_pow) \
            if k > self.den_pow else self.num
        b = other.num * _ONE_MINUS_Y ** (k - other.den_pow) \
            if k > other.den_pow else other.num
        return YFrac(a + b, k)

    def __neg__(self):
        return YFrac(-self.num, self.den_pow)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, YFrac):
            return YFrac(self.num * other.num, self.den_pow + other.den_pow)
        return YFrac(self.num * other, self.den_pow)

    __rmul__ = __mul__

    def to_laurent(self):
        assert self.den_pow == 0, "uncancelled (1-y) denominator"
        return self.num

    def __eq__(self, other):
        return (isinstance(other, YFrac) and self.den_pow == other.den_pow
                and self.num == other.num)

    def __repr__(self):
        return f"YFrac(({self.num})/(1-y)^{self.den_pow})"


class _QSeries:
    """Truncated q-series (integer exponents 0..k) with YFrac coefficients."""

    __slots__ = ("k", "c")

    def __init__(self, k, coeffs=None):
        self.k = k
        self.c = {n: v for n, v in (coeffs or {}).items() if not v.is_zero()}

    @classmethod
    def const(cls, k, value):
        return cls(k, {0: value if isinstance(value, YFrac) else YFrac.const(value)})

    def is_zero(self):
        return not self.c

    def __add__(self, other):
        out = dict(self.c)
        for n, v in other.c.items():
            out[n] = out[n] + v if n in out else v
        return _QSeries(self.k, out)

    def __mul__(self, other):
        if isinstance(other, _QSeries):
            out = {}
            for na, va in self.c.items():
                for nb, vb in other.c.items():
                    if na + nb > self.k:
                        continue
                    n = na + nb
                    prod = va * vb
                    out[n] = out[n] + prod if n in out else prod
            return _QSeries(self.k, out)
        return _QSeries(self.k, {n: v * other for n, v in self.c.items()})

    __rmul__ = __mul__

    def __pow__(self, e):
        result = _QSeries.const(self.k, _F(1))
        for _ in range(e):
            result = result * self
        return result


# --------------------------------------------------------------------------
# the per-root log coefficients a_m


def _l_numerators(max_m):
    """Numerators N_m with sum_j j^{m-1} y^j = N_m/(1-y)^m, m = 1..max_m."""
    nums = [None, LaurentY.y_pow(1)]
    for m in range(1, max_m):
        n = nums[m]
        nxt = (n.derivative() * _ONE_MINUS_Y + n * m).shift(1)
        nums.append(nxt)
    return nums


def _log_coefficients(dim, k):
    """a_1..a_dim as q-series of YFracs."""
    t = log_todd_coefficients(dim)
    lnum = _l_numerators(dim)
    out = {}
    for m in range(1, dim + 1):
        fm = _F(1, factorial(m))
        q0 = YFrac.const(t[m]) + YFrac(lnum[m] * (fm if m % 2 else -fm), m)
        terms = {0: q0}
        sign = _F(-1) if m % 2 else _F(1)  # (-1)^m
        for n in range(1, k + 1):
            for j in range(1, k // n + 1):
                body = LaurentY({j: -sign, -j: _F(-1), 0: sign + 1})
                piece = YFrac(body * (fm * j ** (m - 1)))
                nj = n * j
                terms[nj] = terms[nj] + piece if nj in terms else piece
        out[m] = _QSeries(k, terms)
    return out


def _g0_power(dim, k):
    """G(0)^dim as a q-series of YFracs: ((1-y) prod_{n<=k}
    (1-yq^n)(1-y^{-1}q^n)/(1-q^n)^2)^dim."""
    base = _QSeries.const(k, YFrac(_ONE_MINUS_Y))
    for n in range(1, k + 1):
        for unit in (LaurentY.y_pow(1), LaurentY.y_pow(-1)):
            base = base * _QSeries(k, {0: YFrac.const(1), n: YFrac(-unit)})
        inv = {nj: YFrac.const(j + 1)
               for j in range(k // n + 1) if (nj := n * j) <= k}
        base = base * _QSeries(k, inv)
    return base ** dim


# --------------------------------------------------------------------------
# symmetric-function bookkeeping: polynomials in p_1..p_d or e_1..e_d are
# dicts mapping exponent tuples (length d, weighted degree <= d) to values


def _weighted(exponents):
    return sum((m + 1) * e for m, e in enumerate(exponents))


def _poly_mul(a, b, dim):
    out = {}
    for ea, va in a.items():
        wa = _weighted(ea)
        for eb, vb in b.items():
            if wa + _weighted(eb) > dim:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            prod = va * vb
            out[e] = out[e] + prod if e in out else prod
    return out


@lru_cache(maxsize=None)
def power_sum_in_elementary(m, dim):
    """p_m as a polynomial in e_1..e_dim (exponent-tuple dict), by Newton's
    identity p_m = sum_{i<m} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m."""
    if not 1 <= m <= dim:
        raise ValueError("power sum index out of range")
    unit = lambda i: tuple(1 if j == i - 1 else 0 for j in range(dim))
    total = {unit(m): _F((-1) ** (m - 1) * m)}
    for i in range(1, m):
        rec = power_sum_in_elementary(m - i, dim)
        sign = _F((-1) ** (i - 1))
        for e, c in _poly_mul({unit(i): sign}, rec, dim).items():
            total[e] = total.get(e, _F(0)) + c
    return {e: c for e, c in total.items() if c}


def elementary_in_power_sums(m, dim):
    """e_m in terms of p_1..p_dim, the inverse Newton recurrence
    e_m = (1/m) sum_{i=1}^m (-1)^{i-1} e_{m-i} p_i (for property tests)."""
    if m == 0:
        return {tuple(0 for _ in range(dim)): _F(1)}
    if not 1 <= m <= dim:
        raise ValueError("elementary index out of range")
    unit = lambda i: tuple(1 if j == i - 1 else 0 for j in range(dim))
    total = {}
    for i in range(1, m + 1):
        rec = elementary_in_power_sums(m - i, dim)
        sign = _F((-1) ** (i - 1), m)
        for e, c in _poly_mul({unit(i): sign}, rec, dim).items():
            total[e] = total.get(e, _F(0)) + c
    return {e: c for e, c in total.items() if c}


# --------------------------------------------------------------------------
# the universal genus


class ChernSymbolSeries:
    """q-series whose coefficients are y-Laurent combinations of Chern
    monomials c_1^{a_1} ... c_d^{a_d} of weighted degree exactly d."""

    def __init__(self, dim, order, terms):
        self.dim = dim
        self.order = order
        # terms: {q: {exponent tuple: LaurentY}}, zeros dropped
        self.terms = {q: {e: ly for e, ly in mono.items() if not ly.is_zero()}
                      for q, mono in terms.items()}
        self.terms = {q: mono for q, mono in self.terms.items() if mono}

    def monomials(self):
        out = set()
        for mono in self.terms.values():
            out.update(mono)
        return sorted(out, reverse=True)

    def coefficient(self, q, exponents):
        """LaurentY coefficient of one Chern monomial at q^q; exponents is
        the tuple (a_1, ..., a_d)."""
        e = tuple(exponents)
        if len(e) != self.dim:
            raise ValueError(f"expected {self.dim} exponents")
        return self.terms.get(q, {}).get(e, LaurentY())

    def substitute(self, values):
        """QYSeries obtained by replacing each Chern monomial by a number;
        values maps exponent tuples to Fractions."""
        qcoeffs = {}
        for q, mono in self.terms.items():
            total = LaurentY()
            for e, ly in mono.items():
                v = values[e]
                if v:
                    total = total + ly * v
            qcoeffs[q] = total
        return QYSeries.from_q_dict(self.order, qcoeffs)

    def __str__(self):
        chunks = []
        for q in sorted(self.terms):
            ymap = {}
            for e, ly in self.terms[q].items():
                for ye, c in sorted(ly.c.items()):
                    ymap.setdefault(ye, {})[e] = c
            entries = []
            for ye in sorted(ymap):
                items = sorted(ymap[ye].items(), key=lambda t: t[0], reverse=True)
                if len(items) == 1:
                    (e, c), = items
                    entries.append((-1 if c < 0 else 1,
                                    _term_body(c, _chern_body(e), _y_part(ye))))
                else:
                    inner = _join([(-1 if c < 0 else 1,
                                    _term_body(c, _chern_body(e)))
                                   for e, c in items])
                    suffix = f"*{_y_part(ye)}" if ye else ""
                    entries.append((1, f"({inner}){suffix}"))
            if q == 0:
                chunks.extend(entries)
            elif len(entries) == 1 and not entries[0][1].startswith("("):
                sign, body = entries[0]
                chunks.append((sign, f"{body}*{_q_part(2 * q)}"))
            else:
                chunks.append((1, f"({_join(entries)})*{_q_part(2 * q)}"))
        tail = f"O(q^{self.order + 1})"
        if not chunks:
            return f"0 + {tail}"
        return f"{_join(chunks)} + {tail}"

    def __repr__(self):
        return str(self)


def _chern_body(exponents):
    parts = [f"c{m + 1}" if e == 1 else f"c{m + 1}^{e}"
             for m, e in enumerate(exponents) if e]
    return "*".join(parts)


@lru_cache(maxsize=None)
def elliptic_genus_chernnum(dim, k):
    """Universal elliptic genus of a dim-fold to q-order k, as Chern
    monomials; multiplied by y^{dim/2} so y-exponents are integers."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if k < 0:
        raise ValueError("q-order must be nonnegative")
    a = _log_coefficients(dim, k)
    zero = tuple(0 for _ in range(dim))
    # exp(sum_m a_m p_m), capped at weighted degree dim
    log_poly = {}
    for m, series in a.items():
        e = tuple(1 if j == m - 1 else 0 for j in range(dim))
        log_poly[e] = series
    expo = {zero: _QSeries.const(k, _F(1))}
    term = {zero: _QSeries.const(k, _F(1))}
    for j in range(1, dim + 1):
        term = _poly_mul(term, log_poly, dim)
        term = {e: s * _F(1, j) for e, s in term.items()}
        if not term:
            break
        for e, s in term.items():
            expo[e] = expo[e] + s if e in expo else s
    # rewrite power-sum monomials in elementary symmetric polynomials
    in_e = {}
    for pexp, series in expo.items():
        if _weighted(pexp) != dim:
            continue  # below-degree terms integrate to zero
        conv = {zero: _F(1)}
        for m, e in enumerate(pexp, start=1):
            for _ in range(e):
                conv = _poly_mul(conv, power_sum_in_elementary(m, dim), dim)
        for emon, coeff in conv.items():
            if emon in in_e:
                in_e[emon] = in_e[emon] + series * coeff
            else:
                in_e[emon] = series * coeff
    g0d = _g0_power(dim, k)
    terms = {}
    for emon, series in in_e.items():
        assert _weighted(emon) == dim
        full = series * g0d
        for q, yfrac in full.c.items():
            terms.setdefault(q, {})[emon] = yfrac.to_laurent()
    return ChernSymbolSeries(dim, k, terms)


def elliptic_genus(manifold, k, mode="exact", rng=None):
    """Elliptic genus of a homogeneous space or complete intersection to
    q-order k (multiplied by y^{d/2}), substituting its Chern numbers into
    the universal expression."""
    dim = manifold.dimension()
    rng = rng if rng is not None else random.Random()
    if dim == 0:
        points = chern_number(manifold, [], mode=mode, rng=rng)
        return QYSeries.const(points, 2 * k)
    universal = elliptic_genus_chernnum(dim, k)
    memo = {}
    values = {}
    for emon in universal.monomials():
        degrees = []
        for m, e in enumerate(emon, start=1):
            degrees.extend([m] * e)
        key = tuple(degrees)
        if key not in memo:
            memo[key] = chern_number(manifold, degrees, mode=mode, rng=rng)
        values[emon] = memo[key]
    return universal.substitute(values)


def chi_y(manifold, mode="exact", rng=None):
    """chi_y genus (times y^{d/2}): the q^0 coefficient of the elliptic
    genus."""
    return elliptic_genus(manifold, 0, mode=mode, rng=rng).coefficient(0)
