"""Exception and warning types shared across the package."""


class InvalidParams(ValueError):
    """Domain parameters violate the constraints of their Cartan type."""


class WrongArity(InvalidParams):
    """A spectral-parameter tuple has the wrong length for the domain rank."""


class NumericalDegeneracy(ArithmeticError):
    """A numeric iteration failed to converge (near-degenerate input)."""


class DomainError(ValueError):
    """An analytic argument lies outside the region where a formula holds."""


class BasisError(ValueError):
    """A polynomial does not lie in the span of the requested basis."""


class OutsideDomain(ValueError):
    """A kernel evaluation point does not belong to the domain."""


class VolumeUnknown(RuntimeError):
    """No volume normalisation is available (supply one or estimate it)."""


class LowAcceptanceWarning(UserWarning):
    """Rejection sampling acceptance ratio collapsed; estimate unreliable."""
