"""Exception types raised across repkit."""

from __future__ import annotations


class RepkitError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(RepkitError, ValueError):
    """Malformed input data (quiver, object, morphism, JSON)."""


class FieldMismatch(RepkitError, ValueError):
    """Matrices over different fields were combined."""


class NotNilpotent(RepkitError, ValueError):
    pass


class PathExplosion(RepkitError):
    """Path enumeration requested on a quiver with a cycle."""


class CapabilityMissing(RepkitError):
    """The category instance lacks the requested test or structure."""


class IntertwinerViolation(RepkitError, ValueError):
    """A matrix does not commute with the module actions it should respect."""


class NotInPhi(RepkitError):
    """A representation fails the monicity hypothesis of the peel step."""


class NotWGFlat(RepkitError):
    pass


class InternalInconsistency(RepkitError, AssertionError):
    """A construction produced data that failed its own postcondition."""
