"""Material response of an isotropic bi-isotropic (chiral) medium.

The constitutive convention couples D and B to both E and H through the
cross-susceptibility kappa (Boys-Post form); kappa > 0 labels a right-handed
medium. All response functions are evaluated at a single angular frequency.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS


@dataclass(frozen=True)
class MediumResponse:
    """Complex (eps, mu, kappa) of a chiral medium at angular frequency omega.

    Parameters
    ----------
    eps, mu, kappa : complex
        Relative permittivity, relative permeability and chiral
        cross-susceptibility (all dimensionless).
    omega : float
        Angular frequency in rad/s.
    """

    eps: complex
    mu: complex
    kappa: complex
    omega: float

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")

    @property
    def k0(self) -> float:
        """Vacuum wave number omega/c (1/m)."""
        return self.omega / CONSTANTS.c

    @property
    def n_r(self) -> complex:
        """Non-chiral refractive index, principal sqrt(eps*mu) with Re >= 0."""
        n = np.sqrt(complex(self.eps) * complex(self.mu))
        # principal branch already has Re >= 0; guard the negative-real-axis cut
        if n.real < 0:
            n = -n
        return complex(n)

    @property
    def lossless(self) -> bool:
        """True only when Im eps = Im mu = Im kappa = 0 exactly."""
        return (
            complex(self.eps).imag == 0.0
            and complex(self.mu).imag == 0.0
            and complex(self.kappa).imag == 0.0
        )

    def with_kappa(self, kappa: complex) -> "MediumResponse":
        return MediumResponse(self.eps, self.mu, kappa, self.omega)


def vacuum(omega: float) -> MediumResponse:
    return MediumResponse(1.0, 1.0, 0.0, omega)
