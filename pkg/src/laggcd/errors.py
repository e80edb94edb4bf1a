"""Exception and warning types shared across the package."""


class LagGcdError(Exception):
    """Base class for all errors raised by laggcd."""


class DuplicateNodesError(LagGcdError):
    """Two interpolation nodes coincide (or are far below the resolvable gap)."""


class InsufficientNodesError(LagGcdError):
    """Node set too small to carry the requested polynomial degree."""


class EigensolveFailureError(LagGcdError):
    """The generalized eigenvalue iteration did not converge."""


class DegenerateInputError(LagGcdError):
    """Input data does not define a usable polynomial (e.g. identically zero)."""


class ZeroPolynomialError(DegenerateInputError):
    """A GCD was requested for an identically-zero polynomial."""


class LengthMismatchError(LagGcdError):
    """Root vectors of different lengths; the pseudometric is undefined."""


class SizeGuardError(LagGcdError):
    """Problem size exceeds the guard on an oracle-only code path."""


class ProblemFileError(LagGcdError):
    """A problem/points file could not be parsed or failed validation."""


class NearDuplicateNodesWarning(UserWarning):
    """Two nodes are close enough to threaten conditioning, but still distinct."""
