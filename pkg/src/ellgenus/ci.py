"""Complete intersections in homogeneous spaces, and Chern numbers.

The zero locus X of a general section of an equivariant bundle E on M has
c(TX) = c(TM)/c(E) by adjunction (a truncated graded series division; c_0
of E is 1, so the quotient is exact), and integrals push forward to the
ambient space against the Euler class: int_X f = int_M f * c_top(E).
"""

from __future__ import annotations

from fractions import Fraction

from .cohomology import CohomologyClass
from .errors import NegativeDimension

_F = Fraction


def _graded_division(numer, denom, dim, max_degree):
    """Quotient lists t with sum t_k s.t. (sum denom_j) * (sum t_k) matches
    numer up to max_degree; denom_0 must be 1."""
    assert denom[0] == CohomologyClass.one(denom[0].n)
    out = [numer[0]]
    for k in range(1, max_degree + 1):
        t = numer[k] if k < len(numer) else CohomologyClass.zero(denom[0].n)
        for j in range(1, min(k, len(denom) - 1) + 1):
            if denom[j].is_zero() or out[k - j].is_zero():
                continue
            t = t - denom[j].times(out[k - j], dim)
        out.append(t)
    return out


class CompleteIntersection:
    """Zero locus of a general section of an equivariant vector bundle."""

    def __init__(self, bundle):
        self.bundle = bundle
        self.ambient = bundle.base
        dim = self.ambient.dimension() - bundle.rank
        if dim < 0:
            raise NegativeDimension(
                f"rank {bundle.rank} section bundle on a "
                f"{self.ambient.dimension()}-dimensional space")
        self._dim = dim
        self._chern = None
        self._todd = None
        self._euler_class = None

    def __repr__(self):
        return (f"CompleteIntersection(dim={self._dim}, "
                f"ambient={self.ambient!r}, rank={self.bundle.rank})")

    def dimension(self):
        return self._dim

    @property
    def ambient_dim(self):
        return self.ambient.ambient_dim

    def chern_classes(self):
        """[c_0, ..., c_d] of the tangent bundle, by adjunction."""
        if self._chern is None:
            self._chern = _graded_division(self.ambient.chern_classes(),
                                           self.bundle.chern_classes(),
                                           self.ambient.dimension(), self._dim)
        return self._chern

    def todd_classes(self):
        if self._todd is None:
            self._todd = _graded_division(self.ambient.todd_classes(),
                                          self.bundle.todd_classes(),
                                          self.ambient.dimension(), self._dim)
        return self._todd

    def euler_class(self):
        """Top Chern class of the section bundle, c_rank(E)."""
        if self._euler_class is None:
            n = self.ambient.ambient_dim
            total = CohomologyClass.one(n)
            for w in self.bundle.weights:
                total = total.times(CohomologyClass.linear_form(w),
                                    self.ambient.dimension())
            self._euler_class = total
        return self._euler_class

    def integrate(self, f, mode="exact", rng=None):
        """int_X f = int_M (f * c_top(E)), degree-selected on X."""
        top = f.graded_component(self._dim)
        return self.ambient.integrate(top.times(self.euler_class()),
                                      mode=mode, rng=rng)

    def integrate_float_raw(self, f, rng=None):
        top = f.graded_component(self._dim)
        return self.ambient.integrate_float_raw(top.times(self.euler_class()),
                                                rng=rng)


def complete_intersection(bundle):
    return CompleteIntersection(bundle)


def chern_number(manifold, degrees, mode="exact", rng=None):
    """int of the product of c_{degrees[i]} over the manifold; 0 without
    integrating when the degrees do not sum to the dimension."""
    dim = manifold.dimension()
    degrees = [int(k) for k in degrees]
    for k in degrees:
        if not 1 <= k <= dim:
            raise ValueError(f"chern class degree {k} outside 1..{dim}")
    if sum(degrees) != dim:
        return _F(0)
    classes = manifold.chern_classes()
    f = CohomologyClass.one(manifold.ambient_dim)
    for k in degrees:
        f = f * classes[k]
    return manifold.integrate(f, mode=mode, rng=rng)
