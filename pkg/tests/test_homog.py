"""Homogeneous spaces: Chern data and exact fixed-point integration."""

import random
from fractions import Fraction

import pytest

from ellgenus.cohomology import CohomologyClass
from ellgenus.errors import DegeneratePoint
from ellgenus.homog import (HomogeneousSpace, homogeneous_space,
                            todd_polynomial_factor)
from ellgenus.roots import Weight, parabolic

GR35_C2 = ("x0^2 + 4*x0*x1 + x1^2 + 4*x0*x2 + 4*x1*x2 + x2^2 - 5*x0*x3 "
           "- 5*x1*x3 - 5*x2*x3 + 3*x3^2 - 5*x0*x4 - 5*x1*x4 - 5*x2*x4 "
           "+ 9*x3*x4 + 3*x4^2")
P4_C2 = ("6*x0^2 - 3*x0*x1 - 3*x0*x2 + x1*x2 - 3*x0*x3 + x1*x3 + x2*x3 "
         "- 3*x0*x4 + x1*x4 + x2*x4 + x3*x4")


def proj(n):
    return homogeneous_space(f"A{n}", [1])


def test_projective_space_tangent_listing():
    p4 = proj(4)
    cs = p4.tangent_bundle().chern_classes()
    assert str(cs[0]) == "1"
    assert str(cs[1]) == "4*x0 - x1 - x2 - x3 - x4"
    assert str(cs[2]) == P4_C2
    cot = p4.cotangent_bundle().chern_classes()
    assert str(cot[1]) == "-4*x0 + x1 + x2 + x3 + x4"
    assert str(cot[2]) == P4_C2
    assert p4.chern_classes() == cs


def test_grassmannian_listing_and_numbers():
    gr = homogeneous_space("A4", [3])
    assert gr.dimension() == 6
    cs = gr.chern_classes()
    assert str(cs[1]) == "2*x0 + 2*x1 + 2*x2 - 3*x3 - 3*x4"
    assert str(cs[2]) == GR35_C2
    assert gr.integrate(cs[6]) == 10
    assert gr.integrate(cs[1].power(6)) == 78125
    assert gr.integrate(cs[1] * cs[2] * cs[3]) == 4275
    assert gr.integrate(cs[3] * cs[4]) == 0


def test_grassmannian_float_mode(rng):
    gr = homogeneous_space("A4", [3])
    c1 = gr.chern_classes()[1]
    raw = gr.integrate_float_raw(c1.power(6), rng)
    assert isinstance(raw, float)
    assert abs(raw - 78125) < 1e-3
    value = gr.integrate(c1.power(6), mode="float", rng=rng)
    assert value == Fraction(78125)


def test_fixed_point_counts():
    assert proj(4).fixed_point_count() == 5
    assert homogeneous_space("A4", [3]).fixed_point_count() == 10
    assert homogeneous_space("G2", [1, 2]).fixed_point_count() == 12


@pytest.mark.parametrize("spec,crossed", [
    ("A2", [1]), ("A3", [2]), ("B2", [1]), ("B2", [2]),
    ("G2", [1]), ("A4", [3]),
])
def test_localization_identities(spec, crossed):
    space = homogeneous_space(spec, crossed)
    d = space.dimension()
    # top Todd class integrates to chi(O) = 1, top Chern class to the
    # Euler number = the number of fixed points
    assert space.integrate(space.todd_classes()[d]) == 1
    assert space.integrate(space.chern_classes()[d]) == space.fixed_point_count()


def test_localization_sum_of_constant_vanishes(rng):
    space = homogeneous_space("A3", [1])
    point = Weight([rng.randint(-10**6, 10**6) for _ in range(4)])
    assert space.localization_sum(CohomologyClass.one(4), point) == 0


def test_integration_selects_top_degree_component():
    p2 = proj(2)
    c = p2.chern_classes()
    mixed = CohomologyClass.constant(3, 7) + c[1] + c[2] * Fraction(5)
    assert p2.integrate(mixed) == 5 * p2.integrate(c[2])


def test_integration_is_rng_independent():
    gr = homogeneous_space("A4", [3])
    c1 = gr.chern_classes()[1]
    v1 = gr.integrate(c1.power(6), rng=random.Random(1))
    v2 = gr.integrate(c1.power(6), rng=random.Random(999))
    assert v1 == v2 == 78125


def test_degenerate_points_raise(zero_rng):
    space = homogeneous_space("A2", [1])
    c = space.chern_classes()
    with pytest.raises(DegeneratePoint):
        space.integrate(c[2], rng=zero_rng)


def test_hyperplane_class_powers_on_projective_space():
    p4 = proj(4)
    x0 = CohomologyClass.linear_form(Weight([1, 0, 0, 0, 0]))
    assert p4.integrate(x0.power(4)) == 1
    p2 = proj(2)
    x0 = CohomologyClass.linear_form(Weight([1, 0, 0]))
    assert p2.integrate(x0.power(2)) == 1


def test_degree_of_grassmannian_insides_plucker():
    # deg Gr(2,4) in P^5 is the Catalan number 2
    gr24 = homogeneous_space("A3", [2])
    c1 = gr24.chern_classes()[1]
    # c1 = 4*sigma_1, and the Plucker degree is int sigma_1^4 = 2
    assert gr24.integrate(c1.power(4)) == 2 * 4 ** 4


def test_tangent_weights_are_nilradical_roots():
    p = parabolic("A4", [1])
    space = HomogeneousSpace(p)
    assert space.tangent_weights == tuple(p.nilradical_roots) or \
        list(space.tangent_weights) == list(p.nilradical_roots)
    assert len(space.tangent_weights) == space.dimension()


def test_todd_polynomial_factor_expansion():
    x = CohomologyClass.linear_form(Weight([1, 0, 0, 0, 0]))
    factor = todd_polynomial_factor(x, 4)
    # x/(1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
    expected = (CohomologyClass.one(5) + x * Fraction(1, 2)
                + x.power(2) * Fraction(1, 12)
                + x.power(4) * Fraction(-1, 720))
    assert factor.truncate(4) == expected.truncate(4)
