"""Hyperball packing densities for truncated octahedron and cube tilings of H^3."""

from hypack.cell import Family, TruncatedRegularCell, build
from hypack.errors import DomainError, GeometryError, VariantAbsent
from hypack.lobachevsky import lobachevsky
from hypack.optimize import OptResult, XPolicy, maximize_over_p, maximize_over_x
from hypack.packing import PackingConfig, PackingVariant, density, x_interval

__all__ = [
    "DomainError",
    "Family",
    "GeometryError",
    "OptResult",
    "PackingConfig",
    "PackingVariant",
    "TruncatedRegularCell",
    "VariantAbsent",
    "XPolicy",
    "build",
    "density",
    "lobachevsky",
    "maximize_over_p",
    "maximize_over_x",
    "x_interval",
]
