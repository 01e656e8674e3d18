"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HarmonicError(Exception):
    """Base class; ``z`` carries the offending evaluation point when known."""

    def __init__(self, message: str, z: complex | None = None):
        if z is not None:
            message = f"{message} (at z={complex(z):.17g})"
        super().__init__(message)
        self.z = z


class DomainError(HarmonicError, ValueError):
    """Evaluation point outside the open unit disk."""


class SingularityError(HarmonicError, ArithmeticError):
    """A denominator fell below the singularity tolerance."""


class ConstructionError(HarmonicError, ValueError):
    """Invalid parameters for a primitive (e.g. |a| >= 1 for a Mobius map)."""


class SenseError(HarmonicError):
    """|omega(z)| >= 1 - tol: the map is not sense-preserving at z."""


class MissingQError(HarmonicError):
    """A CDO operator was requested for a map without a square-root dilatation."""


class DegenerateError(HarmonicError):
    """The affine normalization constant vanishes."""


class SeriesError(HarmonicError):
    """Taylor expansion of a map failed."""


class ParamError(HarmonicError, ValueError):
    """Family parameter missing, unknown, or out of range."""
