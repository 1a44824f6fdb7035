"""Assembly of decay rates from (curls of) Green's tensors.

Two master contractions are provided:

* the electric rate Gamma_el = (2 mu0 w^2 / hbar) d . Im G . d*,
* the chiral rate   Gamma_ch = (4 mu0 w / hbar) Im[ d . (curl Im G) . m* ].

The ordering of d and m in the chiral contraction fixes a global sign for
the symmetric part of the curl matrix (antisymmetric parts are insensitive
to the ordering). The default ``BULK_LOCKED`` ordering is calibrated so the
contraction of the homogeneous-medium coincidence curl reproduces the bulk
closed form. The transposed ordering ``PLANAR_PAPER`` is the one under which
the planar-interface closed forms in this package were derived; the planar
numeric pathway uses it so that quadrature and closed forms agree. The two
conventions differ by an overall sign of the symmetric-part contribution
only; this mirrors a sign ambiguity between the bulk and planar families of
closed forms that cannot be reconciled by any single ordering.

For ``isotropic`` molecules all contractions are replaced by their rigid
orientation average: <d_i m_j*> = (1/3) delta_ij (d . m*), which turns any
matrix contraction into (1/3) Tr. This reproduces the familiar parallel
projection factor 2/3 (for diag(1,1,0) matrices) and the full+z factor 4/3
(for diag(1,1,2) matrices).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .constants import CONSTANTS
from .molecules import TransitionDipoles


class CurlKind(enum.Enum):
    FULL = "full"
    IMAGINARY_PART = "imaginary_part"


class Contraction(enum.Enum):
    """Ordering of the dipole vectors in the chiral contraction."""

    BULK_LOCKED = "bulk_locked"      # Im[d . T . m*]
    PLANAR_PAPER = "planar_paper"    # Im[m . T . d*]


@dataclass(frozen=True)
class CurlGreens:
    """3x3 Cartesian matrix of curl G (or curl Im G) at coincidence, units 1/m^2."""

    matrix: np.ndarray
    kind: CurlKind

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", np.asarray(self.matrix, dtype=complex).reshape(3, 3)
        )


class Method(enum.Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class RateBreakdown:
    """Decay-rate decomposition for one molecule/environment configuration.

    ``assembly`` records how gamma_total was put together, since the electric
    entry is the in-medium total for bulk geometries but the scattering-only
    part for planar ones (where gamma_vac is added separately).
    """

    gamma_el: float
    gamma_ch: float
    gamma_vac: float
    gamma_total: float
    s_disc: float
    method: Method
    assembly: str = ""
    details: dict = field(default_factory=dict)


def gamma_ch_from_curl(
    curl: CurlGreens,
    mol: TransitionDipoles,
    contraction: Contraction = Contraction.BULK_LOCKED,
) -> float:
    """Chiral decay-rate contribution from the curl of Im G at the molecule.

    Returns (4 mu0 w / hbar) * Im[d . T . m*] (default ordering; see module
    docstring), or the orientation-averaged (1/3) Tr form for isotropic
    molecules. Real-linear in the curl matrix.
    """
    if curl.kind is not CurlKind.IMAGINARY_PART:
        raise ValueError("gamma_ch_from_curl expects a curl of the imaginary part")
    t = curl.matrix
    pref = 4.0 * CONSTANTS.mu0 * mol.omega_ik / CONSTANTS.hbar
    if contraction is Contraction.BULK_LOCKED:
        if mol.isotropic:
            scalar = np.trace(t) / 3.0 * np.dot(mol.d, np.conj(mol.m))
        else:
            scalar = mol.d @ t @ np.conj(mol.m)
    else:
        if mol.isotropic:
            scalar = np.trace(t) / 3.0 * np.dot(mol.m, np.conj(mol.d))
        else:
            scalar = mol.m @ t @ np.conj(mol.d)
    return pref * float(np.imag(scalar))


def gamma_el_from_img(img_g: np.ndarray, mol: TransitionDipoles) -> float:
    """Electric decay-rate contribution (2 mu0 w^2 / hbar) d . Im G . d*.

    ``img_g`` is the 3x3 Im G at coincidence (units 1/m). The contraction is
    real for the symmetric matrices produced by reciprocal environments; the
    residual imaginary part is discarded.
    """
    t = np.asarray(img_g, dtype=complex).reshape(3, 3)
    pref = 2.0 * CONSTANTS.mu0 * mol.omega_ik**2 / CONSTANTS.hbar
    if mol.isotropic:
        scalar = np.trace(t) / 3.0 * mol.d_norm_sq
    else:
        scalar = mol.d @ t @ np.conj(mol.d)
    return pref * float(np.real(scalar))


def gamma_vacuum(mol: TransitionDipoles) -> float:
    """Free-space spontaneous decay rate w^3 |d|^2 / (3 pi eps0 hbar c^3)."""
    c = CONSTANTS
    return mol.omega_ik**3 * mol.d_norm_sq / (3.0 * np.pi * c.eps0 * c.hbar * c.c**3)


def degree_of_discrimination(gamma_disc: float, gamma_nd: float) -> float:
    """Normalized enantiomer contrast (G+ - G-)/(G+ + G-) = gamma_disc/gamma_nd.

    ``gamma_disc`` is the part of the rate that flips sign between
    enantiomers and ``gamma_nd`` the non-discriminating part.
    """
    if gamma_nd == 0:
        raise ZeroDivisionError("degree of discrimination undefined for gamma_nd = 0")
    return gamma_disc / gamma_nd
