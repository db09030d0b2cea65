"""Complete intersections: adjunction, pushforward and classic numbers."""

from fractions import Fraction

import pytest

from ellgenus.bundles import completely_reducible_bundle
from ellgenus.ci import (CompleteIntersection, chern_number,
                         complete_intersection)
from ellgenus.cohomology import CohomologyClass
from ellgenus.homog import homogeneous_space


def _ci(space_spec, crossed, highest_weights):
    space = homogeneous_space(space_spec, crossed)
    return CompleteIntersection(
        completely_reducible_bundle(space, highest_weights))


@pytest.fixture(scope="module")
def k3():
    return _ci("A3", [1], [(4, 0, 0)])


@pytest.fixture(scope="module")
def quintic():
    return _ci("A4", [1], [(5, 0, 0, 0)])


def test_k3_quartic(k3):
    assert k3.dimension() == 2
    assert k3.integrate(k3.chern_classes()[2]) == 24
    assert chern_number(k3, [2]) == 24
    assert chern_number(k3, [1, 1]) == 0


def test_quintic_threefold(quintic):
    assert quintic.dimension() == 3
    assert chern_number(quintic, [3]) == -200
    # c1 vanishes in the cohomology of a Calabi-Yau even though its ambient
    # polynomial representative is a nonzero central form
    assert quintic.chern_classes()[1].is_zero() is False
    assert chern_number(quintic, [1, 1, 1]) == 0
    assert chern_number(quintic, [1, 2]) == 0


def test_chern_number_validation(quintic):
    with pytest.raises(ValueError):
        chern_number(quintic, [4])
    with pytest.raises(ValueError):
        chern_number(quintic, [0, 3])
    # mismatch in total degree gives exact zero without integrating
    assert chern_number(quintic, [1]) == Fraction(0)
    assert chern_number(quintic, [2]) == Fraction(0)


def test_adjunction_division_consistency(k3, quintic):
    for ci in (k3, quintic):
        ambient_classes = ci.ambient.chern_classes()
        bundle_classes = ci.bundle.chern_classes()
        quotient = ci.chern_classes()
        n = ci.ambient_dim
        for k in range(ci.dimension() + 1):
            conv = CohomologyClass.zero(n)
            for j in range(k + 1):
                if j < len(bundle_classes) and k - j <= ci.dimension():
                    conv = conv + bundle_classes[j].times(
                        quotient[k - j], ci.ambient.dimension())
            assert conv.graded_component(k) == \
                ambient_classes[k].graded_component(k)


def test_negative_dimension_rejected():
    from ellgenus.errors import NegativeDimension
    with pytest.raises(NegativeDimension):
        _ci("A2", [1], [(1, 0), (1, 0), (1, 0)])


def test_dimension_zero_point_count():
    conic = _ci("A1", [1], [(2,)])
    assert conic.dimension() == 0
    assert chern_number(conic, []) == 2
    line_pair = _ci("A2", [1], [(1, 0), (2, 0)])
    assert line_pair.dimension() == 0
    assert chern_number(line_pair, []) == 2


def test_rank_zero_section_bundle_is_identity():
    p2 = homogeneous_space("A2", [1])
    ci = complete_intersection(completely_reducible_bundle(p2, []))
    assert ci.dimension() == 2
    assert chern_number(ci, [1, 1]) == 9
    assert chern_number(p2, [1, 1]) == 9
    assert ci.euler_class() == CohomologyClass.one(3)


def test_classical_hypersurface_numbers():
    # degree-d surfaces in P^3: c2 = d^3 - 4d^2 + 6d
    for d in range(1, 6):
        surf = _ci("A3", [1], [(d, 0, 0)])
        assert chern_number(surf, [2]) == d ** 3 - 4 * d ** 2 + 6 * d
    # cubic threefold: Euler number -6; even complete intersection (2,2):
    # Euler number 0 would need P^5; use cubic surface instead (chi = 9)
    cubic3 = _ci("A4", [1], [(3, 0, 0, 0)])
    assert chern_number(cubic3, [3]) == -6
    cubic_surface = _ci("A3", [1], [(3, 0, 0)])
    assert chern_number(cubic_surface, [2]) == 9
    assert chern_number(cubic_surface, [1, 1]) == 3  # K^2 of a del Pezzo of degree 3


def test_complete_intersection_in_grassmannian():
    # the CY threefold of two hyperplanes and the quadric... simplest
    # Gr(2,4) cut by a section of O(1)^2 x O(2): dim 4 - 3 = 1
    gr24 = homogeneous_space("A3", [2])
    w = (0, 1, 0)
    curve = CompleteIntersection(
        completely_reducible_bundle(gr24, [w, w, (0, 2, 0)]))
    assert curve.dimension() == 1
    # genus from degree: c1 number is an even integer
    val = chern_number(curve, [1])
    assert val.denominator == 1 and val % 2 == 0


def test_float_mode_matches_exact(quintic, rng):
    assert chern_number(quintic, [3], mode="float", rng=rng) == -200
    raw = quintic.integrate_float_raw(quintic.chern_classes()[3], rng)
    assert abs(raw + 200) < 1e-6
