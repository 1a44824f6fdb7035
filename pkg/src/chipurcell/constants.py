"""Physical constants, SI units throughout.

eps0 is defined from mu0 and c so that c**2 * eps0 * mu0 == 1 holds to
floating-point accuracy; the independently rounded CODATA value of eps0
only satisfies the identity to ~1.6e-10.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PhysicalConstants:
    """Speed of light, reduced Planck constant and vacuum permittivity/permeability."""

    c: float = 299792458.0              # m/s, exact
    hbar: float = 1.054571817e-34       # J s
    mu0: float = 1.25663706212e-6       # H/m
    eps0: float = field(default=1.0 / (1.25663706212e-6 * 299792458.0**2))  # F/m


CONSTANTS = PhysicalConstants()
