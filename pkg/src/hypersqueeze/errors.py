"""Exception types shared across the package."""


class HypersqueezeError(Exception):
    """Base class for all package errors."""


class DimensionError(HypersqueezeError, ValueError):
    """Operand shapes are incompatible."""


class RangeError(HypersqueezeError, ValueError):
    """Input lies outside the certified numerical range."""


class ConstraintError(HypersqueezeError, ValueError):
    """Input violates a group or normalization constraint.

    The offending residual is kept on ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DomainError(HypersqueezeError, ValueError):
    """Point lies off the coordinate chart."""


class UnsupportedError(HypersqueezeError, ValueError):
    """Requested variant has no implementation."""


class ResourceError(HypersqueezeError, RuntimeError):
    """Requested Hilbert space exceeds the configured dimension ceiling."""
