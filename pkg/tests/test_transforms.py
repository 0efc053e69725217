import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
from scipy import integrate

from vline_sampling.phantoms import Phantom, eval_phantom
from vline_sampling.transforms import (
    VLineSample,
    g_extended,
    radon,
    reduce_angles,
    slice_check,
    vline_direct,
    vline_via_radon,
)

angles = st.floats(0, 2 * math.pi)


def radon_by_quadrature(p, phi, s):
    th = np.array([math.cos(phi), math.sin(phi)])
    perp = np.array([-th[1], th[0]])
    val, _ = integrate.quad(lambda u: eval_phantom(p, s * th + u * perp), -2, 2,
                            points=[-0.5, 0, 0.5], epsabs=1e-13, limit=200)
    return val


class TestRadon:
    def test_zero(self):
        assert radon(Phantom.zero(), 0.3, 0.1) == 0.0

    def test_centered(self):
        # width 1/6 is the widest centered blob allowed in the unit disk
        p = Phantom.single((0, 0), 1 / 6)
        for phi in (0.0, 1.0, 4.0):
            assert radon(p, phi, 0.0) == pytest.approx(math.sqrt(2 * math.pi) / 6, abs=1e-14)
        assert radon(p, 0.0, 0.0) == pytest.approx(0.417772, abs=1e-6)

    def test_shifted(self):
        p = Phantom.single((0.3, 0), 0.1)
        assert radon(p, 0.0, 0.3) == pytest.approx(0.250663, abs=1e-6)

    @pytest.mark.parametrize("phi,s", [(0.0, 0.0), (0.7, 0.25), (2.9, -0.4), (5.0, 0.6)])
    def test_against_line_quadrature(self, blobs, phi, s):
        assert radon(blobs, phi, s) == pytest.approx(radon_by_quadrature(blobs, phi, s), abs=1e-10)

    @settings(max_examples=100, deadline=None)
    @given(phi=angles, s=st.floats(-2, 2))
    def test_symmetry(self, blobs, phi, s):
        assert radon(blobs, phi + math.pi, -s) == pytest.approx(radon(blobs, phi, s), abs=1e-14)

    def test_broadcast(self, blobs):
        assert radon(blobs, np.zeros((3, 1)), np.zeros(4)).shape == (3, 4)


class TestVLine:
    def test_zero(self):
        assert vline_direct(Phantom.zero(), 0.2, 0.3, 1.5) == 0.0
        assert vline_via_radon(Phantom.zero(), 0.2, 0.3, 1.5) == 0.0

    @pytest.mark.parametrize("psi", [math.pi / 2 + 0.1, 2.0, 3.0])
    def test_backward_vlines_vanish(self, blobs, psi):
        for phi in (0.0, 1.3, 4.4):
            assert abs(vline_direct(blobs, phi, psi, 1.5)) <= 1e-10
            assert vline_via_radon(blobs, phi, psi, 1.5) == 0.0

    def test_centered_example(self):
        p = Phantom.single((0, 0), 1 / 6)
        assert vline_direct(p, 0.0, 0.4, 1.5) == pytest.approx(vline_via_radon(p, 0.0, 0.4, 1.5), abs=1e-8)

    def test_radial_phantom_rotation_invariant(self):
        p = Phantom.single((0, 0), 1 / 6)
        vals = [vline_via_radon(p, phi, 0.3, 1.5) for phi in (0.0, 1.0, 2.5)]
        np.testing.assert_allclose(vals, vals[0], atol=1e-12, rtol=0)

    def test_generic_point(self, blob):
        assert vline_via_radon(blob, 1.0, 0.35, 1.5) == pytest.approx(vline_direct(blob, 1.0, 0.35, 1.5), abs=1e-8)

    def test_psi_zero_doubles_single_ray(self, blob):
        # both rays coincide with the diameter through the vertex
        assert vline_via_radon(blob, 0.4, 0.0, 1.5) == pytest.approx(2 * radon(blob, 0.4 - math.pi / 2, 0.0))

    @settings(max_examples=60, deadline=None)
    @given(phi=angles, psi=st.floats(-math.pi, math.pi), r=st.floats(1.05, 3.0))
    def test_radon_relation(self, blobs, phi, psi, r):
        assert vline_direct(blobs, phi, psi, r) == pytest.approx(vline_via_radon(blobs, phi, psi, r), abs=1e-8)

    @pytest.mark.parametrize("r", [1.0, 0.5])
    def test_rejects_r(self, blob, r):
        with pytest.raises(ValueError):
            vline_direct(blob, 0, 0.1, r)
        with pytest.raises(ValueError):
            vline_via_radon(blob, 0, 0.1, r)


class TestExtension:
    @settings(max_examples=100, deadline=None)
    @given(phi=angles, psi=st.floats(-math.pi, math.pi))
    def test_even_in_psi(self, blobs, phi, psi):
        assert g_extended(blobs, phi, -psi, 1.5) == g_extended(blobs, phi, psi, 1.5)

    @settings(max_examples=100, deadline=None)
    @given(phi=angles, psi=st.floats(0, math.pi))
    def test_periodic(self, blobs, phi, psi):
        a = g_extended(blobs, phi + 2 * math.pi, psi + 2 * math.pi, 1.5)
        assert a == pytest.approx(g_extended(blobs, phi, psi, 1.5), abs=1e-13)

    @settings(max_examples=100, deadline=None)
    @given(phi=st.floats(-20, 20), psi=st.floats(-20, 20))
    def test_reduced_ranges(self, phi, psi):
        a, b = reduce_angles(phi, psi)
        assert 0 <= a < 2 * math.pi
        assert 0 <= b <= math.pi

    def test_outside_window_is_tail_sized(self, blobs):
        r = 1.5
        psi = math.asin(1 / r) + 0.05
        # each ray stays at least 6 widths from every center
        amp = sum(abs(c.amplitude) * c.width for c in blobs.components) * math.sqrt(2 * math.pi)
        for phi in np.linspace(0, 2 * np.pi, 13):
            assert abs(g_extended(blobs, phi, psi, r)) <= 2 * amp * math.exp(-18)

    def test_matches_transform_inside(self, blobs):
        assert g_extended(blobs, 0.7, 0.3, 1.5) == vline_via_radon(blobs, 0.7, 0.3, 1.5)


class TestSlice:
    def test_zero(self):
        assert slice_check(Phantom.zero(), 0.3, 2.0) == (0j, 0j)

    def test_centered_at_origin(self):
        lhs, rhs = slice_check(Phantom.single((0, 0), 1 / 6), 0.0, 0.0)
        assert abs(lhs - rhs) <= 1e-8
        assert rhs.real == pytest.approx(math.sqrt(2 * math.pi) / 36)

    def test_generic(self):
        lhs, rhs = slice_check(Phantom.single((0.3, 0.2), 0.1), 0.7, 4.0)
        assert abs(lhs - rhs) <= 1e-8

    def test_grid(self, blobs):
        worst = max(abs(np.subtract(*slice_check(blobs, phi, sig)))
                    for phi in np.linspace(0, 2 * np.pi, 10, endpoint=False)
                    for sig in np.linspace(-5, 5, 10))
        assert worst <= 1e-8


class TestSample:
    def test_fields(self):
        s = VLineSample(1, 0.5, 2)
        assert (s.phi, s.psi, s.value) == (1.0, 0.5, 2.0)
        assert "psi=0.5" in repr(s)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            VLineSample(float("inf"), 0.1, 0.0)
