"""Exception types raised across the package."""


class EllgenusError(Exception):
    """Base class for every error this library raises on purpose."""


class SeriesError(EllgenusError):
    pass


class DivisionByNonUnit(SeriesError):
    """Series division needs a divisor whose lowest q-coefficient is a
    single y-monomial with nonzero rational coefficient, and whose
    q-valuation does not exceed the dividend's."""


class PrecisionZero(SeriesError):
    """An operation needed coefficients outside the retained window of a
    precision-zero series."""


class OddWeight(EllgenusError):
    """Weak Jacobi form bases are only provided for even weights."""


class UnknownType(EllgenusError):
    """Cartan type outside A/B/C/D/E/F/G with the supported ranks."""


class NotPDominant(EllgenusError):
    """Highest weight pairs negatively with an uncrossed simple coroot."""


class DegeneratePoint(EllgenusError):
    """No generic evaluation point found for localization after retrying."""


class FloatUnstable(EllgenusError):
    """Numerical localization value did not round to a nearby small
    rational within tolerance."""


class BaseMismatch(EllgenusError):
    """Binary bundle operation applied to bundles over different bases."""


class WedgeTooLarge(EllgenusError):
    """Exterior power degree exceeds the bundle rank."""


class NegativeDimension(EllgenusError):
    """A zero locus of the given bundle would have negative dimension."""
