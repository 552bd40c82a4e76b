class GeometryError(ValueError):
    """Input vectors violate the preconditions of a projective-model operation."""


class DomainError(ValueError):
    """A parameter lies outside the range where the object exists."""


class VariantAbsent(DomainError):
    """The packing variant has an empty blow-up interval at this parameter."""
