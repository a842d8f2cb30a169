"""Surface integral equations for time-harmonic dielectric scattering.

The package assembles the four-field transmission system (I + M) for a
smooth dielectric body, the Laplace-layer stabilizer J, and solves the
stabilized dense system (I + M + xi*J).  Analytic sphere results, a Mie
series oracle, and finite-dimensional operator-pencil experiments provide
independent verification of the solver's well-posedness diagnostics.
"""

from dielsie.errors import (
    AccuracyWarning,
    AssemblyError,
    ConfigurationError,
    HypothesisError,
    NearSingularSystemError,
    ParameterError,
    PreconditionError,
    RootNotFoundError,
    SeriesAccuracyError,
    SingularEvaluationError,
    UnsupportedGeometryError,
)
from dielsie.medium import MediumParams

__all__ = [
    "AccuracyWarning",
    "AssemblyError",
    "ConfigurationError",
    "HypothesisError",
    "MediumParams",
    "NearSingularSystemError",
    "ParameterError",
    "PreconditionError",
    "RootNotFoundError",
    "SeriesAccuracyError",
    "SingularEvaluationError",
    "UnsupportedGeometryError",
]

__version__ = "0.1.0"
