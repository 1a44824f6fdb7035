import warnings

import numpy as np
import pytest

from chipurcell import (
    CONSTANTS,
    Handedness,
    Limit,
    MediumResponse,
    PlanarGeometry,
    TransitionDipoles,
    curl_img_scatter_numeric,
    img_g_scatter_numeric,
    mirror_reflections,
    rates_halfspace,
    rates_mirror,
    rotatory_strength,
    s_halfspace,
)
from chipurcell.errors import LosslessRequiredError, PhysicsError, QuadratureError
from chipurcell.halfspace import (
    ReflectionSet,
    gamma_ch_mirror_nonretarded_variant,
    gamma_el_halfspace_nonretarded,
    s_halfspace_nonretarded_variant,
    s_mirror_nonretarded_variant,
    s_mirror_retarded,
)
from chipurcell.sommerfeld import QuadratureSpec
from conftest import DEBYE, OMEGA
from oracles import random_rotations

W = OMEGA
K0 = W / CONSTANTS.c


def quiet(fn, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        return fn(*args, **kwargs)


class TestNumericCurl:
    def test_mirror_far_field_asymptote(self):
        """xx entry tends to the -sin(2 k0 z)/(16 pi z^2) closed form."""
        z = 20.0 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        curl = curl_img_scatter_numeric(geom, mirror_reflections(Handedness.RIGHT, W), W)
        closed = -np.sin(2 * K0 * z) / (16 * np.pi * z**2)
        assert curl.matrix[0, 0].real == pytest.approx(closed, rel=0.03)
        assert curl.matrix[1, 1].real == curl.matrix[0, 0].real

    def test_mirror_near_field_asymptote(self):
        """diag(1,1,2)/(32 pi k0 z^3) structure with the handedness sign."""
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        curl = curl_img_scatter_numeric(geom, mirror_reflections(Handedness.RIGHT, W), W)
        closed = -1.0 / (32 * np.pi * K0 * z**3)
        assert curl.matrix[0, 0].real == pytest.approx(closed, rel=0.02)
        assert curl.matrix[2, 2].real == pytest.approx(2 * closed, rel=0.02)
        left = curl_img_scatter_numeric(
            PlanarGeometry(z_m=z, handedness=Handedness.LEFT),
            mirror_reflections(Handedness.LEFT, W),
            W,
        )
        assert np.allclose(left.matrix, -curl.matrix)

    def test_zero_reflections_give_zero(self):
        provider = lambda k_par: ReflectionSet(0.0, 0.0, 0.0, 0.0, k_par, W)
        geom = PlanarGeometry(z_m=1.0 / K0, handedness=Handedness.RIGHT)
        assert np.all(curl_img_scatter_numeric(geom, provider, W).matrix == 0)
        assert np.all(img_g_scatter_numeric(geom, provider, W) == 0)

    def test_nonconvergence_raises(self):
        # a near-pole in the reflection data that a tiny panel budget cannot resolve
        def spiky(k_par):
            r_sp = 1.0 / (1e-14 + (k_par / K0 - 0.37) ** 2)
            return ReflectionSet(0.0, 0.0, r_sp, -r_sp, k_par, W)

        geom = PlanarGeometry(z_m=1.0 / K0, handedness=Handedness.RIGHT)
        spec = QuadratureSpec(rel_tol=1e-10, max_panels=6)
        with pytest.raises(QuadratureError):
            curl_img_scatter_numeric(geom, spiky, W, spec)


class TestMirrorRates:
    def test_sine_node_kills_far_field_rate(self, mol_iso):
        z = np.pi / 2 * CONSTANTS.c / W  # 2 w z / c = pi
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        b = quiet(rates_mirror, geom, mol_iso, Limit.RETARDED)
        # zero up to sin(pi) evaluated at the float representation of pi
        envelope = CONSTANTS.mu0 * W * abs(rotatory_strength(mol_iso)) / (6 * np.pi * CONSTANTS.hbar * z**2)
        assert abs(b.gamma_ch) <= 1e-15 * envelope

    def test_handedness_flip(self, mol_aniso):
        for limit in (Limit.RETARDED, Limit.NONRETARDED, Limit.NUMERIC):
            z = 1.0 / K0
            right = quiet(
                rates_mirror, PlanarGeometry(z_m=z, handedness=Handedness.RIGHT), mol_aniso, limit
            )
            left = quiet(
                rates_mirror, PlanarGeometry(z_m=z, handedness=Handedness.LEFT), mol_aniso, limit
            )
            assert left.gamma_ch == -right.gamma_ch
            assert left.gamma_el == right.gamma_el

    def test_near_field_closed_vs_quadrature(self, mol_iso):
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        closed = quiet(rates_mirror, geom, mol_iso, Limit.NONRETARDED)
        numeric = rates_mirror(geom, mol_iso, Limit.NUMERIC)
        assert numeric.gamma_ch == pytest.approx(closed.gamma_ch, rel=0.03)
        # scattering is purely chiral in this limit
        assert closed.gamma_el == 0.0 and numeric.gamma_el == 0.0

    def test_far_field_closed_vs_quadrature_in_plane(self):
        """In-plane dipoles: the far-field closed form keeps the full content."""
        mol = TransitionDipoles([DEBYE, 0.4j * DEBYE, 0], [1e-23j, 2e-24, 0], W)
        z = 20.0 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        closed = quiet(rates_mirror, geom, mol, Limit.RETARDED)
        numeric = rates_mirror(geom, mol, Limit.NUMERIC)
        assert numeric.gamma_ch == pytest.approx(closed.gamma_ch, rel=0.03)

    def test_far_field_rate_ignores_z_dipoles(self, mol_aniso):
        z = 15.0 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        base = quiet(rates_mirror, geom, mol_aniso, Limit.RETARDED)
        d, m = mol_aniso.d.copy(), mol_aniso.m.copy()
        d[2] *= 3.7
        m[2] += 5e-24j
        pert = TransitionDipoles(d, m, mol_aniso.omega_ik)
        assert quiet(rates_mirror, geom, pert, Limit.RETARDED).gamma_ch == base.gamma_ch

    def test_near_field_isotropic_value(self, mol_iso):
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        b = quiet(rates_mirror, geom, mol_iso, Limit.NONRETARDED)
        c = CONSTANTS
        expected = c.mu0 * c.c * rotatory_strength(mol_iso) / (6 * np.pi * c.hbar * z**3)
        assert b.gamma_ch == pytest.approx(expected, rel=1e-13)
        assert b.s_disc == pytest.approx(b.gamma_ch / b.gamma_vac, rel=1e-13)

    def test_drreths_forms(self, mol_iso):
        z = 12.0 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        dim = rates_mirror(geom, mol_iso, Limit.RETARDED, drreths_form="dimensional")
        pri = rates_mirror(geom, mol_iso, Limit.RETARDED, drreths_form="printed")
        assert dim.gamma_el == pytest.approx(pri.gamma_el * W**2, rel=1e-12)
        assert dim.gamma_ch == pri.gamma_ch

    def test_total_assembly(self, mol_iso):
        geom = PlanarGeometry(z_m=11.0 / K0, handedness=Handedness.RIGHT)
        b = rates_mirror(geom, mol_iso, Limit.RETARDED)
        assert b.gamma_total == b.gamma_vac + b.gamma_el + b.gamma_ch

    def test_variant_forms_pinned(self, mol_iso):
        """Alternative compact normalizations, pinned to their own formulas."""
        z = 0.01 / K0
        c = CONSTANTS
        r_ik = rotatory_strength(mol_iso)
        gv = gamma_ch_mirror_nonretarded_variant(mol_iso, z, Handedness.RIGHT)
        assert gv == pytest.approx(c.mu0 * c.c * r_ik / (8 * np.pi * c.hbar * z**3), rel=1e-14)
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        consistent = quiet(rates_mirror, geom, mol_iso, Limit.NONRETARDED).gamma_ch
        assert gv == pytest.approx(consistent * 3.0 / 4.0, rel=1e-13)
        sv = s_mirror_nonretarded_variant(mol_iso, z, Handedness.RIGHT)
        assert sv == pytest.approx(3 * c.c**2 * r_ik / (W**3 * z**3 * mol_iso.d_norm_sq), rel=1e-14)
        quotient = quiet(rates_mirror, geom, mol_iso, Limit.NONRETARDED).s_disc
        assert sv == pytest.approx(6.0 * quotient, rel=1e-12)

    def test_far_field_discrimination_is_the_quotient(self, mol_iso):
        z = 17.0 / K0
        geom = PlanarGeometry(z_m=z, handedness=Handedness.RIGHT)
        b = rates_mirror(geom, mol_iso, Limit.RETARDED)
        assert s_mirror_retarded(mol_iso, z, Handedness.RIGHT) == pytest.approx(b.s_disc, rel=1e-12)


class TestHalfspaceRates:
    def test_achiral_kills_chiral_rate(self, mol_iso):
        med = MediumResponse(2.25 + 0.1j, 1.0, 0.0, W)
        med_ll = MediumResponse(2.25, 1.0, 0.0, W)
        for limit, m in ((Limit.RETARDED, med), (Limit.NONRETARDED, med_ll), (Limit.NUMERIC, med_ll)):
            geom = PlanarGeometry(z_m=1.0 / K0, medium=m)
            b = quiet(rates_halfspace, geom, mol_iso, limit)
            assert abs(b.gamma_ch) <= 1e-300

    def test_near_field_isotropic_value_and_sign(self, medium_std, mol_iso):
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, medium=medium_std)
        b = quiet(rates_halfspace, geom, mol_iso, Limit.NONRETARDED)
        c = CONSTANTS
        den = 2.25 - 0.05**2 + 2.25 + 1 + 1
        r_sp = 2j * 0.05 / den
        expected = float(np.real(
            -1j * W * rotatory_strength(mol_iso) * r_sp / (3 * np.pi * c.hbar * c.eps0 * c.c**2 * z**2)
        ))
        assert b.gamma_ch == pytest.approx(expected, rel=1e-13)
        flipped = PlanarGeometry(z_m=z, medium=medium_std.with_kappa(-0.05))
        assert quiet(rates_halfspace, flipped, mol_iso, Limit.NONRETARDED).gamma_ch == pytest.approx(
            -b.gamma_ch, rel=1e-13
        )

    def test_near_field_electric_rate_vanishes_lossless(self, medium_std, mol_iso):
        z = 0.01 / K0
        b = quiet(rates_halfspace, PlanarGeometry(z_m=z, medium=medium_std), mol_iso, Limit.NONRETARDED)
        assert b.gamma_el == 0.0
        lossy = MediumResponse(2.25 + 0.5j, 1.0, 0.0, W)
        assert gamma_el_halfspace_nonretarded(lossy, mol_iso, z) > 0

    def test_near_field_requires_lossless(self, mol_iso):
        med = MediumResponse(2.25 + 0.1j, 1.0, 0.05, W)
        geom = PlanarGeometry(z_m=0.01 / K0, medium=med)
        with pytest.raises(LosslessRequiredError):
            quiet(rates_halfspace, geom, mol_iso, Limit.NONRETARDED)

    def test_near_field_closed_form_is_extrapolation_not_integral(self, medium_std, mol_iso):
        """Documented defect: the 1/z^2 near-field closed form is not the
        z -> 0 limit of the exact lossless integrals, whose chiral response
        stays bounded; the quadrature value is orders of magnitude smaller."""
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, medium=medium_std)
        closed = quiet(rates_halfspace, geom, mol_iso, Limit.NONRETARDED)
        numeric = rates_halfspace(geom, mol_iso, Limit.NUMERIC)
        assert abs(numeric.gamma_ch) < 0.05 * abs(closed.gamma_ch)

    def test_retarded_oscillation_structure(self, mol_iso):
        med = MediumResponse(2.25 + 0.1j, 1.0, 0.01 + 0.002j, W)
        z = 15.0 / K0
        geom = PlanarGeometry(z_m=z, medium=med)
        b = quiet(rates_halfspace, geom, mol_iso, Limit.RETARDED)
        from chipurcell import fresnel_retarded

        r = fresnel_retarded(med)
        arg = 2 * W * z / CONSTANTS.c
        osc = (np.cos(arg) - 1) * r.r_sp.real + np.sin(arg) * r.r_sp.imag
        c = CONSTANTS
        expected = c.mu0 * W**2 * rotatory_strength(mol_iso) / (3 * np.pi * c.c * c.hbar * z) * osc
        assert b.gamma_ch == pytest.approx(expected, rel=1e-13)

    def test_anisotropic_term_vector_structure(self, medium_std):
        """The diagonal-reflection channel is maximal for an orthogonal (d, m,
        e_z) triad and absent for parallel real-phased dipoles."""
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, medium=medium_std)
        d0, m0 = DEBYE, 1e-23
        triad = TransitionDipoles([d0, 0, 0], [1j * m0, 0, 0], W)  # d || m: no cross term
        b_par = quiet(rates_halfspace, geom, triad, Limit.NONRETARDED)
        ortho = TransitionDipoles([d0, 0, 0], [0, 1j * m0, 0], W)  # d x m* || e_z
        b_orth = quiet(rates_halfspace, geom, ortho, Limit.NONRETARDED)
        # parallel: only the cross-reflection channel (local R), no diagonal channel
        c = CONSTANTS
        refl_den = 2.25 - 0.05**2 + 2.25 + 1 + 1
        r_sp = 2j * 0.05 / refl_den
        par_expected = float(np.real(
            -1j * c.mu0 * W / (4 * np.pi * c.hbar * z**2) * r_sp * (rotatory_strength(triad))
        ))
        assert b_par.gamma_ch == pytest.approx(par_expected, rel=1e-12)
        # orthogonal triad: cross channel dead (Im(d.m*) = 0), diagonal channel alive
        assert rotatory_strength(ortho) == 0.0
        assert b_orth.gamma_ch != 0.0

    def test_numeric_electric_rate_matches_achiral_closed_form(self):
        """Independent route: for an achiral medium and an in-plane dipole the
        quadrature electric rate must reproduce the classic far-field form."""
        med = MediumResponse(2.25, 1.0, 0.0, W)
        mol = TransitionDipoles([DEBYE, 0, 0], [0, 0, 0], W)
        z = 20.0 / K0
        geom = PlanarGeometry(z_m=z, medium=med)
        numeric = rates_halfspace(geom, mol, Limit.NUMERIC)
        closed = quiet(rates_halfspace, geom, mol, Limit.RETARDED)
        assert numeric.gamma_el == pytest.approx(closed.gamma_el, rel=0.04)

    def test_numeric_pathway_with_traveling_branch_point(self, mol_iso):
        # weakly refractive chiral medium: one circular mode has |k| < k0,
        # putting its branch point inside the traveling segment
        med = MediumResponse(1.05, 1.0, 0.2, W)
        assert (med.n_r - 0.2).real < 1.0
        geom = PlanarGeometry(z_m=0.5 / K0, medium=med)
        b = rates_halfspace(geom, mol_iso, Limit.NUMERIC)
        assert np.isfinite(b.gamma_ch) and np.isfinite(b.gamma_el)
        flipped = PlanarGeometry(z_m=0.5 / K0, medium=med.with_kappa(-0.2))
        b2 = rates_halfspace(flipped, mol_iso, Limit.NUMERIC)
        assert b2.gamma_ch == pytest.approx(-b.gamma_ch, rel=1e-9)

    def test_numeric_breakdown_complete(self, medium_std, mol_iso):
        geom = PlanarGeometry(z_m=2.0 / K0, medium=medium_std)
        b = rates_halfspace(geom, mol_iso, Limit.NUMERIC)
        assert b.gamma_total == b.gamma_vac + b.gamma_el + b.gamma_ch
        assert b.method.value == "quadrature"
        assert np.isfinite(b.s_disc)

    def test_missing_medium(self, mol_iso):
        with pytest.raises(PhysicsError):
            rates_halfspace(PlanarGeometry(z_m=1.0 / K0), mol_iso, Limit.NUMERIC)


class TestHalfspaceDiscrimination:
    def test_achiral_zero(self, mol_iso):
        med = MediumResponse(2.25, 1.0, 0.0, W)
        assert s_halfspace(med, mol_iso, 0.01 / K0, Limit.NONRETARDED) == 0.0

    def test_inverse_square_law(self, medium_std, mol_iso):
        z = 0.01 / K0
        s1 = s_halfspace(medium_std, mol_iso, z, Limit.NONRETARDED)
        s2 = s_halfspace(medium_std, mol_iso, 2 * z, Limit.NONRETARDED)
        assert s2 == pytest.approx(s1 / 4.0, rel=1e-13)

    def test_near_field_quotient_identity(self, medium_std, mol_iso):
        z = 0.01 / K0
        geom = PlanarGeometry(z_m=z, medium=medium_std)
        b = quiet(rates_halfspace, geom, mol_iso, Limit.NONRETARDED)
        assert s_halfspace(medium_std, mol_iso, z, Limit.NONRETARDED) == pytest.approx(
            b.gamma_ch / b.gamma_vac, rel=1e-12
        )

    def test_variant_sign_convention_pinned(self, medium_std, mol_iso):
        z = 0.01 / K0
        sv = s_halfspace_nonretarded_variant(medium_std, mol_iso, z)
        assert sv == pytest.approx(-s_halfspace(medium_std, mol_iso, z, Limit.NONRETARDED), rel=1e-13)

    def test_retarded_compact_form(self, mol_iso):
        med = MediumResponse(2.25 + 0.1j, 1.0, 0.01 + 0.002j, W)
        z = 15.0 / K0
        s = s_halfspace(med, mol_iso, z, Limit.RETARDED)
        geom = PlanarGeometry(z_m=z, medium=med)
        b = quiet(rates_halfspace, geom, mol_iso, Limit.RETARDED)
        # compact form approximates the exact quotient (gamma_el^scatt small here)
        assert s == pytest.approx(b.gamma_ch / b.gamma_vac, rel=1e-12)
        assert b.s_disc == pytest.approx(b.gamma_ch / (b.gamma_vac + b.gamma_el), rel=1e-13)


class TestIsotropicAveraging:
    def test_orientation_averages(self, rng):
        """Rigid rotations of (d, m): <Im d_par.m_par*> = (2/3) R and
        <Im(d.m* + d_z m_z*)> = (4/3) R."""
        d = np.array([1.0 + 0.2j, -0.3j, 0.5]) * DEBYE
        m = np.array([0.8j, 0.1, -0.4 + 0.9j]) * 1e-23
        r_ik = float(np.imag(np.dot(d, np.conj(m))))
        rots = random_rotations(10_000, rng)
        dr = rots @ d
        mr = rots @ m
        par = np.imag(np.sum(dr[:, :2] * np.conj(mr[:, :2]), axis=1)).mean()
        full_z = np.imag(np.sum(dr * np.conj(mr), axis=1) + dr[:, 2] * np.conj(mr[:, 2])).mean()
        assert par == pytest.approx(2.0 / 3.0 * r_ik, rel=0.03)
        assert full_z == pytest.approx(4.0 / 3.0 * r_ik, rel=0.03)
