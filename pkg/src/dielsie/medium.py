"""Electromagnetic material parameters and derived wavenumbers."""

from dataclasses import dataclass, field

import numpy as np

from dielsie.errors import ParameterError


@dataclass(frozen=True)
class MediumParams:
    """Permittivities, permeabilities, frequency and wavenumbers.

    The admissible class is ``Re(eps_minus) > 0``, ``Im(eps_minus) >= 0``
    with ``eps_plus``, ``mu_plus`` and ``mu_minus`` positive reals.  The
    wavenumbers default to ``k = omega*sqrt(eps*mu)`` but can be overridden
    independently; the engineered singular-sphere experiments prescribe
    ``(k_plus, k_minus)`` directly, untied to a common frequency.
    """

    eps_plus: float
    eps_minus: complex
    mu_plus: float = 1.0
    mu_minus: float = 1.0
    omega: float = 1.0
    k_plus: complex = field(default=None)
    k_minus: complex = field(default=None)

    def __post_init__(self):
        eps_m = complex(self.eps_minus)
        if not (self.eps_plus > 0 and np.isrealobj(np.asarray(self.eps_plus))):
            raise ParameterError("eps_plus must be a positive real")
        if eps_m.real <= 0 or eps_m.imag < 0:
            raise ParameterError(
                "eps_minus must have positive real part and non-negative "
                f"imaginary part, got {eps_m}"
            )
        if not (self.mu_plus > 0 and self.mu_minus > 0):
            raise ParameterError("mu_plus and mu_minus must be positive reals")
        if not (self.omega > 0):
            raise ParameterError("omega must be positive")
        object.__setattr__(self, "eps_minus", eps_m)
        if self.k_plus is None:
            object.__setattr__(
                self, "k_plus", self.omega * np.sqrt(self.eps_plus * self.mu_plus)
            )
        if self.k_minus is None:
            km = self.omega * np.sqrt(eps_m * self.mu_minus)
            if km.imag < 0:
                km = -km
            object.__setattr__(self, "k_minus", km)
        for name in ("k_plus", "k_minus"):
            k = complex(getattr(self, name))
            if k.imag < -1e-15:
                raise ParameterError(f"{name} must have non-negative imaginary part")
            object.__setattr__(self, name, k)

    @classmethod
    def from_wavenumbers(cls, eps_plus, eps_minus, k_plus, k_minus,
                         mu_plus=1.0, mu_minus=1.0):
        """Medium with explicitly prescribed wavenumbers.

        ``omega`` is set from the exterior relation
        ``k_plus = omega*sqrt(eps_plus*mu_plus)``; ``k_minus`` is kept as
        given even when inconsistent with that frequency.
        """
        omega = float(np.real(k_plus)) / np.sqrt(eps_plus * mu_plus)
        return cls(eps_plus=eps_plus, eps_minus=eps_minus, mu_plus=mu_plus,
                   mu_minus=mu_minus, omega=omega,
                   k_plus=complex(k_plus), k_minus=complex(k_minus))

    def with_omega(self, omega):
        """Same materials at another frequency (wavenumbers re-derived)."""
        return MediumParams(eps_plus=self.eps_plus, eps_minus=self.eps_minus,
                            mu_plus=self.mu_plus, mu_minus=self.mu_minus,
                            omega=omega)

    @property
    def identical(self):
        """True when both media coincide (no scattering)."""
        return (self.eps_plus == self.eps_minus and self.mu_plus == self.mu_minus)
