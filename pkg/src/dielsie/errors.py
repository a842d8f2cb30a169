"""Exception and warning types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid grid orders, degenerate axes, or malformed run configuration."""


class UnsupportedGeometryError(ValueError):
    """Operation requires a sphere grid but received another shape."""


class PreconditionError(ValueError):
    """Input violates a documented precondition (e.g. non-tangential field)."""


class SingularEvaluationError(ValueError):
    """Kernel evaluated at a coincident point pair."""


class ParameterError(ValueError):
    """Electromagnetic parameters outside the admissible class."""


class AssemblyError(ValueError):
    """Operator blocks are incompatible (wrong shapes or mismatched grids)."""


class NearSingularSystemError(RuntimeError):
    """Factorization detected a (near-)singular system.

    Carries ``sigma_min`` and ``sigma_max`` estimates of the offending
    matrix so callers can report conditioning.
    """

    def __init__(self, message, sigma_min=None, sigma_max=None):
        super().__init__(message)
        self.sigma_min = sigma_min
        self.sigma_max = sigma_max


class RootNotFoundError(RuntimeError):
    """Newton iteration failed to converge; carries the iterate trace."""

    def __init__(self, message, iterates=None):
        super().__init__(message)
        self.iterates = list(iterates) if iterates is not None else []


class SeriesAccuracyError(RuntimeError):
    """A truncated series did not reach the requested accuracy."""


class HypothesisError(ValueError):
    """Operator-pencil instance does not satisfy a theorem's hypotheses."""


class AccuracyWarning(UserWarning):
    """Result is returned but expected to be less accurate than usual."""
