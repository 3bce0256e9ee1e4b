"""Exception types shared across the package."""

from __future__ import annotations


class SparrError(Exception):
    """Base class for all package errors."""


class ValidationError(SparrError, ValueError):
    """Malformed input: bad multiplicities, orders out of range, schema violations."""


class DimensionError(SparrError, ValueError):
    """Operands live over different point sets or have incompatible shapes."""


class UnsupportedSpaceError(SparrError, ValueError):
    """The requested ambient space is outside the supported families."""


class ConsistencyError(SparrError, RuntimeError):
    """Two routes to the same quantity disagreed. Always a bug."""
