"""Weak Jacobi forms of even weight and integral or half-integral index.

Generators over the ring of modular forms:

* ``phi_0_1``   weight  0, index 1
* ``phi_m2_1``  weight -2, index 1
* ``phi_0_3half`` weight 0, index 3/2, returned times its y^{1/2} prefactor

Bases are monomials E4^a E6^b phi_0_1^c phi_m2_1^d with
4a + 6b - 2d = weight and c + d = index, with the extra phi_0_3half factor
in the odd double-index case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import OddWeight
from .qseries import LaurentY, QYSeries, eisenstein, eta_product, theta


@lru_cache(maxsize=None)
def phi_0_1(prec):
    """The weight 0, index 1 generator, 4 sum of squared theta ratios.

    Its q^0 coefficient is y^-1 + 10 + y.  Half-integral q-terms of the
    theta_3 and theta_4 ratios must cancel in the sum; that cancellation
    is asserted.
    """
    t2, t3, t4 = theta(2, prec), theta(3, prec), theta(4, prec)
    assert t2.q_eighths == 1 and t3.q_eighths == 0
    # theta2 ratio squared carries ((y+1)^2/y)/4 = (y + 2 + 1/y)/4 from the
    # y-prefactors; theta2(q,1) contributes the scalar 2 = y_num at y=1.
    r2 = t2.series / t2.series.specialize_y1()
    pref = LaurentY({1: Fraction(1, 4), 0: Fraction(1, 2), -1: Fraction(1, 4)})
    s = r2 * r2 * pref
    for t in (t3, t4):
        r = t.series / t.series.specialize_y1()
        s = s + r * r
    return (s * 4).assert_integral_q()


@lru_cache(maxsize=None)
def phi_m2_1(prec):
    """The weight -2, index 1 generator, -theta_1(q,y)^2 / eta(q)^6.

    q^0 coefficient y^-1 - 2 + y.  The q^{1/4} prefactors of numerator and
    denominator cancel exactly; the i^6 = -1 of theta_1^2 cancels the
    leading minus sign.
    """
    t1 = theta(1, prec)
    assert Fraction(2 * t1.q_eighths, 8) == Fraction(6, 24)
    assert t1.i_power == 3
    pref = (t1.y_num * t1.y_num).shift(-t1.y_half)
    return (t1.series * t1.series * pref) / (eta_product(prec) ** 6)


@lru_cache(maxsize=None)
def phi_0_3half(prec):
    """y^{1/2} times the weight 0, index 3/2 generator theta_1(q,y^2)/theta_1(q,y).

    The y^{1/2} multiple makes the result an honest Laurent series; its
    q^0 coefficient is 1 + y.
    """
    ta, tb = theta(1, prec, y_scale=2), theta(1, prec, 1)
    assert ta.q_eighths == tb.q_eighths and ta.i_power == tb.i_power
    # prefactor ratio: y^{-1}(y^2-1) / (y^{-1/2}(y-1)) * y^{1/2} = 1 + y
    return (ta.series / tb.series) * LaurentY({0: 1, 1: 1})


@dataclass(frozen=True)
class JacobiBasisElement:
    """One monomial E4^e4 E6^e6 phi_0_1^c phi_m2_1^d, possibly times
    y^{1/2} phi_0_3half, expanded as a QYSeries."""

    e4: int
    e6: int
    phi01: int
    phim21: int
    half_factor: bool
    weight: int
    double_index: int
    series: QYSeries

    def __post_init__(self):
        assert 4 * self.e4 + 6 * self.e6 - 2 * self.phim21 == self.weight
        ix2 = 2 * (self.phi01 + self.phim21) + (3 if self.half_factor else 0)
        assert ix2 == self.double_index

    def label(self):
        parts = []
        if self.half_factor:
            parts.append("y^(1/2)*phi_{0,3/2}")
        for name, e in (("phi_{0,1}", self.phi01), ("phi_{-2,1}", self.phim21),
                        ("E4", self.e4), ("E6", self.e6)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _monomial_exponents(weight, index):
    """(e4, e6, c, d) solutions, ordered by descending phi_0_1 exponent,
    then descending E4 exponent."""
    out = []
    for c in range(index, -1, -1):
        d = index - c
        w = weight + 2 * d
        if w < 0:
            continue
        sols = []
        for b in range(w // 6 + 1):
            rem = w - 6 * b
            if rem % 4 == 0:
                sols.append((rem // 4, b))
        for a, b in sorted(sols, reverse=True):
            out.append((a, b, c, d))
    return out


def basis_integral(weight, index, prec=7):
    """Basis of weak Jacobi forms of even weight and integral index >= 0."""
    if weight % 2:
        raise OddWeight(f"no odd-weight basis: weight {weight}")
    if index < 0:
        raise ValueError("index must be nonnegative")
    gens = {
        "e4": lambda: eisenstein(4, prec),
        "e6": lambda: eisenstein(6, prec),
        "phi01": lambda: phi_0_1(prec),
        "phim21": lambda: phi_m2_1(prec),
    }
    powers = {}

    def power(name, e):
        key = (name, e)
        if key not in powers:
            powers[key] = gens[name]() if e == 1 else power(name, e - 1) * power(name, 1)
        return powers[key]

    elements = []
    for a, b, c, d in _monomial_exponents(weight, index):
        series = QYSeries.one(2 * prec)
        for name, e in (("phi01", c), ("phim21", d), ("e4", a), ("e6", b)):
            if e:
                series = series * power(name, e)
        elements.append(JacobiBasisElement(a, b, c, d, False, weight, 2 * index, series))
    return elements


def basis_half_integral(weight, double_index, prec=7):
    """Basis for double_index halves of index; delegates when it is even.

    Odd double indices below 3 have no weak forms and give the empty list.
    """
    if weight % 2:
        raise OddWeight(f"no odd-weight basis: weight {weight}")
    if double_index < 0:
        raise ValueError("double index must be nonnegative")
    if double_index % 2 == 0:
        return basis_integral(weight, double_index // 2, prec)
    if double_index < 3:
        return []
    half = phi_0_3half(prec)
    out = []
    for el in basis_integral(weight, (double_index - 3) // 2, prec):
        out.append(JacobiBasisElement(el.e4, el.e6, el.phi01, el.phim21, True,
                                      weight, double_index, half * el.series))
    return out


def linear_fit(target, elements):
    """Exact rationals c with target = sum c_i * elements_i, else None.

    Compares every retained coefficient of the operands, so a successful
    fit is a proof of membership up to the common precision.
    """
    prec2 = min([target.prec2] + [e.prec2 for e in elements]) if elements else target.prec2
    coords = set()
    for s in [target] + list(elements):
        for k2, lau in s.c.items():
            if k2 <= prec2:
                coords.update((k2, e) for e in lau.c)
    coords = sorted(coords)
    rows = []
    for k2, e in coords:
        row = [el.c.get(k2, LaurentY()).c.get(e, Fraction(0)) for el in elements]
        row.append(target.c.get(k2, LaurentY()).c.get(e, Fraction(0)))
        rows.append(row)
    n = len(elements)
    # Gaussian elimination on the (possibly overdetermined) system
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [v / rows[r][col] for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    for row in rows[r:]:
        if row[-1]:
            return None
    # verify, which also catches free columns that were genuinely needed
    acc = QYSeries.zero(prec2, target.half_q)
    for c, el in zip(sol, elements):
        acc = acc + el.truncate(prec2) * c
    return sol if acc == target.truncate(prec2) else None
