"""Sp(4;R) squeezed states: split quaternions, so(2,3) matrices, non-compact
Hopf maps and a truncated Fock-space engine for the squeeze operators."""

from . import fock, identities, matcore, so23, sp2r, splitq
from .errors import (ConstraintError, DimensionError, DomainError, HypersqueezeError,
                     RangeError, ResourceError, UnsupportedError)

__version__ = "0.1.0"

__all__ = [
    "fock", "identities", "matcore", "so23", "sp2r", "splitq",
    "ConstraintError", "DimensionError", "DomainError", "HypersqueezeError",
    "RangeError", "ResourceError", "UnsupportedError",
]
