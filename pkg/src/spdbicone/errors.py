"""Exception hierarchy shared by all spdbicone modules."""


class GeometryError(Exception):
    """Base class for all spdbicone errors."""


class NonFiniteError(GeometryError):
    """Input contains NaN or infinite entries."""


class NoConvergenceError(GeometryError):
    """Iterative eigensolver failed to converge."""


class DomainError(GeometryError):
    """Value violates a domain invariant (definiteness, spectrum range, ...)."""


class DimensionError(GeometryError):
    """Dimension mismatch or unsupported dimension."""


class DegenerateDirectionError(GeometryError):
    """Direction vector too small to define a line."""


class DegenerateGeodesicError(GeometryError):
    """Geodesic endpoints coincide up to numerical tolerance."""


class IllConditionedError(GeometryError):
    """Input condition number exceeds the supported range."""


class ParseError(GeometryError):
    """Malformed input file or unknown file schema."""
