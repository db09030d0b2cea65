"""Homogeneous spaces G/P with localization-based integration.

A HomogeneousSpace carries the tangent weights (the positive roots outside
the Levi), Chern/Todd classes as polynomial representatives in the ambient
coordinates, and an integral computed by the Atiyah-Bott fixed-point
formula: a sum over Weyl coset representatives of the integrand divided by
the product of the tangent weights, evaluated at a generic point.

The sum is a constant function of the point, so exact mode evaluates it at
a random integer point (with a second independent point asserting
constancy) instead of simplifying rational functions symbolically.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import bundles
from .cohomology import CohomologyClass
from .errors import DegeneratePoint, FloatUnstable
from .roots import ParabolicSubgroup
from .taylor import todd_coefficients

_F = Fraction
_POINT_BOUND = 10 ** 6
_MAX_DRAWS = 32
_FLOAT_TOL = 1e-6


class HomogeneousSpace:
    """The projective manifold G/P attached to a parabolic subgroup."""

    def __init__(self, parabolic: ParabolicSubgroup):
        self.parabolic = parabolic
        self.root_system = parabolic.root_system
        self.ambient_dim = self.root_system.ambient_dim
        self.tangent_weights = list(parabolic.nilradical_roots)
        self._chern = None
        self._todd = None

    def __repr__(self):
        return (f"HomogeneousSpace({self.root_system.type_name}, "
                f"crossed={list(self.parabolic.crossed)})")

    def dimension(self):
        return len(self.tangent_weights)

    def tangent_bundle(self):
        return bundles.EquivariantVectorBundle(self, self.tangent_weights)

    def cotangent_bundle(self):
        return self.tangent_bundle().dual()

    def chern_classes(self):
        """[c_0, ..., c_d] of the tangent bundle."""
        if self._chern is None:
            self._chern = self.tangent_bundle().chern_classes()
        return self._chern

    def todd_classes(self):
        """Graded components [td_0, ..., td_d] of the Todd class."""
        if self._todd is None:
            self._todd = self.tangent_bundle().todd_classes()
        return self._todd

    # ----- localization ---------------------------------------------------

    def fixed_point_count(self):
        return len(self.parabolic.coset_representatives())

    def localization_sum(self, f, point):
        """The raw fixed-point sum of f at one point, with no degree
        selection: sum over representatives w of f(A_w p) / prod alpha(A_w p).

        Exact for Fraction coordinates, floating point otherwise; raises
        DegeneratePoint when the point lies on a reflected root hyperplane.
        """
        exact = all(isinstance(p, Fraction) for p in point)
        total = _F(0) if exact else 0.0
        for rep in self.parabolic.coset_representatives():
            moved = tuple(sum(r * p for r, p in zip(row, point))
                          for row in rep.matrix)
            den = _F(1) if exact else 1.0
            for alpha in self.tangent_weights:
                den *= (sum(a * p for a, p in zip(alpha.coords, moved)) if exact
                        else sum(float(a) * p for a, p in zip(alpha.coords, moved)))
            if den == 0:
                raise DegeneratePoint("point lies on a root hyperplane")
            total += f.evaluate(moved) / den
        return total

    def _draw_exact(self, top, rng):
        for _ in range(_MAX_DRAWS):
            point = tuple(_F(rng.randint(-_POINT_BOUND, _POINT_BOUND))
                          for _ in range(self.ambient_dim))
            try:
                return self.localization_sum(top, point)
            except DegeneratePoint:
                continue
        raise DegeneratePoint(f"no usable point in {_MAX_DRAWS} draws")

    def integrate_float_raw(self, f, rng=None):
        """Float-mode fixed-point sum of the top-degree part of f,
        before any rounding."""
        top = f.graded_component(self.dimension())
        if top.is_zero():
            return 0.0
        rng = rng if rng is not None else random.Random()
        for _ in range(_MAX_DRAWS):
            point = tuple(rng.uniform(-_POINT_BOUND, _POINT_BOUND)
                          for _ in range(self.ambient_dim))
            try:
                return self.localization_sum(top, point)
            except DegeneratePoint:
                continue
        raise DegeneratePoint(f"no usable point in {_MAX_DRAWS} draws")

    def integrate(self, f, mode="exact", rng=None):
        """Integral over G/P of the degree-d component of f.

        exact mode returns a Fraction computed at two independent generic
        integer points (asserted equal); float mode evaluates at a random
        real point and rounds to a nearby small-denominator rational,
        raising FloatUnstable when no such rational is close enough.
        """
        if mode not in ("exact", "float"):
            raise ValueError(f"unknown integration mode {mode!r}")
        if mode == "float":
            value = self.integrate_float_raw(f, rng)
            return _round_float(value)
        top = f.graded_component(self.dimension())
        if top.is_zero():
            return _F(0)
        rng = rng if rng is not None else random.Random()
        first = self._draw_exact(top, rng)
        second = self._draw_exact(top, rng)
        assert first == second, "localization sum not constant between points"
        return first


def _round_float(value):
    """Nearest integer when within tolerance, else a small-denominator
    rational; FloatUnstable when neither is close enough."""
    tol = _FLOAT_TOL * max(1.0, abs(value))
    nearest = round(value)
    if abs(nearest - value) < tol:
        return _F(nearest)
    candidate = _F(value).limit_denominator(10 ** 6)
    if abs(float(candidate) - value) < tol:
        return candidate
    raise FloatUnstable(f"no stable rational near {value!r}")


def homogeneous_space(spec, crossed):
    """HomogeneousSpace from a type spec like 'A4' and crossed nodes."""
    from .roots import parabolic
    return HomogeneousSpace(parabolic(spec, crossed))


def todd_polynomial_factor(linear, dim):
    """The Todd factor x/(1-e^{-x}) of one Chern root, truncated to dim."""
    coeffs = todd_coefficients(dim)
    n = linear.n
    total = CohomologyClass.constant(n, coeffs[0])
    power = CohomologyClass.one(n)
    for k in range(1, dim + 1):
        power = power.times(linear, dim)
        if power.is_zero():
            break
        if coeffs[k]:
            total = total + power * coeffs[k]
    return total
