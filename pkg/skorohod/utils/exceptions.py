"""Exceptions raised by skorohod."""


class SkorohodError(Exception):
    """Base class of all errors raised by this package."""


class MomentOrderError(SkorohodError, ValueError):
    """Requested moment order is outside the range the construction covers."""


class NonIntegrableMean(SkorohodError, ValueError):
    """The mean of a measure is not finite."""


class DegenerateMeasure(SkorohodError, ValueError):
    """The p-th moment of a measure is zero or infinite."""


class QuadratureFailure(SkorohodError):
    """Adaptive quadrature did not converge within its subdivision limit."""


class UnboundedValue(SkorohodError, ValueError):
    """A quantile evaluation overflowed."""


class MeanNotZero(SkorohodError, ValueError):
    """The zeroth Fourier coefficient of a profile does not vanish."""


class ProfileNotEven(SkorohodError, ValueError):
    """A profile has non-negligible sine coefficients."""


class OutsideDisk(SkorohodError, ValueError):
    """The truncated power series is not meaningful at this point."""


class SingularityUnresolved(SkorohodError):
    """Principal value quadrature did not settle, usually at a jump."""


class NotSymmetric(SkorohodError, ValueError):
    """A curve is not symmetric about the real axis."""


class NotStarlike(SkorohodError, ValueError):
    """A domain is not starlike about the origin."""


class PathBudgetExceeded(SkorohodError):
    """Too many sample paths ran out of steps before leaving the domain."""


class LeakageExceeded(SkorohodError):
    """Too many sample paths left a clipped domain through the clip frame."""


class DistanceQueryFailure(SkorohodError):
    """Distance to the boundary could not be computed."""


class InsufficientTail(SkorohodError, ValueError):
    """Not enough order statistics above the tail threshold."""


class DerivativeVanishes(SkorohodError):
    """A map has a critical point on the boundary of interest."""


class VerticalTangent(SkorohodError):
    """A boundary branch has a vertical tangent in a requested cell."""


class EdgeSingularity(SkorohodError):
    """A density is evaluated at a point where it is singular."""


class WindowMismatch(SkorohodError, ValueError):
    """Two domains were clipped to different windows."""


class RunDirectoryExists(SkorohodError):
    """Output directory of a run holds files of an earlier run."""
