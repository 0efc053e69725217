import math

import numpy as np
import pytest

from vline_sampling.lattice import SpectrumSet, build_K
from vline_sampling.phantoms import Phantom
from vline_sampling.sampler import evaluation_grid
from vline_sampling.spectrum import (
    build_table,
    coeff_bessel,
    coeff_bessel_even_formula,
    coeff_direct,
    default_window,
    direct_grid_coefficients,
    tail_max,
)
from vline_sampling.transforms import g_extended

R = 1.5


@pytest.fixture(scope="module")
def direct12(request):
    blobs = request.getfixturevalue("blobs")
    return build_table(blobs, R, 12, 12, method="direct")


@pytest.fixture(scope="module")
def bessel12(request):
    blobs = request.getfixturevalue("blobs")
    return build_table(blobs, R, 12, 12, method="bessel", b=5.0)


def trapezoid_coeff(p, k, m, n=400):
    # plain loop-free quadrature, independent of the FFT indexing
    a = 2 * np.pi * (np.arange(n) + 0.5) / n
    G = g_extended(p, a[:, None], a[None, :], R)
    return complex(np.exp(-1j * k * a) @ G @ np.exp(-1j * m * a)) / n**2


class TestDirect:
    def test_zero(self):
        assert coeff_direct(Phantom.zero(), R, 2, 3) == 0

    def test_radial_has_only_k0(self):
        p = Phantom.single((0, 0), 0.1)
        for k in (1, 2, 5):
            for m in (0, 1, 4):
                assert abs(coeff_direct(p, R, k, m)) <= 1e-10

    def test_grid_refinement(self, blob):
        a = coeff_direct(blob, R, 2, 3, grid_n=512)
        assert a == pytest.approx(coeff_direct(blob, R, 2, 3, grid_n=1024), abs=1e-9)

    def test_independent_quadrature(self, blobs):
        for km in [(0, 0), (3, -2), (-5, 7)]:
            assert coeff_direct(blobs, R, *km) == pytest.approx(trapezoid_coeff(blobs, *km), abs=1e-12)

    def test_table_matches_single(self, blobs, direct12):
        for km in [(0, 0), (4, 1), (-12, 12)]:
            assert direct12[km] == pytest.approx(coeff_direct(blobs, R, *km, grid_n=256), abs=1e-14)

    def test_mean_value(self, blobs):
        a = 2 * np.pi * np.arange(512) / 512
        G = g_extended(blobs, a[:, None], a[None, :], R)
        assert coeff_direct(blobs, R, 0, 0).real == pytest.approx(G.mean(), abs=1e-15)

    @pytest.mark.parametrize("n", [128, 300])
    def test_rejects_grid(self, blob, n):
        with pytest.raises(ValueError):
            coeff_direct(blob, R, 1, 1, grid_n=n)

    def test_rejects_unresolved(self, blob):
        with pytest.raises(ValueError):
            coeff_direct(blob, R, 200, 0, grid_n=256)

    def test_grid_array_shape(self, blob):
        assert direct_grid_coefficients(blob, R, 256).shape == (256, 256)


class TestTableSymmetry:
    def test_conjugate(self, direct12):
        c = direct12.coeffs
        np.testing.assert_allclose(c[::-1, ::-1], c.conj(), atol=1e-10)

    def test_even_in_m(self, direct12):
        c = direct12.coeffs
        np.testing.assert_allclose(c[:, ::-1], c, atol=1e-10)

    def test_bessel_symmetric(self, bessel12):
        c = bessel12.coeffs
        np.testing.assert_allclose(c[::-1, ::-1], c.conj(), atol=1e-10)
        np.testing.assert_allclose(c[:, ::-1], c, atol=1e-10)


class TestBessel:
    def test_zero(self):
        assert coeff_bessel(Phantom.zero(), R, 2, 3) == 0
        table = build_table(Phantom.zero(), R, 3, 3, method="bessel")
        assert not np.any(table.coeffs)

    def test_radial(self):
        p = Phantom.single((0, 0), 0.1)
        for k in (1, 3):
            assert abs(coeff_bessel(p, R, k, 2)) <= 1e-10

    @pytest.mark.parametrize("km", [(2, 3), (2, 2), (0, 0), (-3, 5), (7, -1)])
    def test_matches_direct(self, blob, km):
        assert coeff_bessel(blob, R, *km, b=5.0) == pytest.approx(coeff_direct(blob, R, *km), abs=1e-6)

    def test_table_matches_direct(self, direct12, bessel12):
        assert np.abs(direct12.coeffs - bessel12.coeffs).max() <= 1e-6

    def test_even_formula_exact_for_even_m(self, blob):
        for km in [(2, 2), (-1, 4), (0, 0)]:
            assert coeff_bessel_even_formula(blob, R, *km) == pytest.approx(coeff_direct(blob, R, *km), abs=1e-10)

    def test_even_formula_misses_odd_m(self, blob):
        # the single integral vanishes for odd m but the data do not
        assert abs(coeff_bessel_even_formula(blob, R, 2, 3)) <= 1e-13
        assert abs(coeff_direct(blob, R, 2, 3)) > 1e-4

    def test_other_radius(self, blobs):
        for km in [(1, 1), (4, -3)]:
            assert coeff_bessel(blobs, 2.0, *km) == pytest.approx(coeff_direct(blobs, 2.0, *km), abs=1e-9)

    def test_rejects_small_sigma_max(self, blob):
        with pytest.raises(ValueError):
            coeff_bessel(blob, R, 1, 1, sigma_max=3.0, b=5.0)


class TestTable:
    def test_default_window(self):
        assert default_window(1.5, 5, 5 / 6) == (22, 30)

    def test_rejects(self, blob):
        with pytest.raises(ValueError):
            build_table(blob, R, 3, 3, method="spline")
        with pytest.raises(ValueError):
            build_table(blob, R, -1, 3)

    def test_indexing(self, direct12):
        assert direct12.ks()[0] == -12 and direct12.ms()[-1] == 12
        entries = dict(direct12.items())
        assert entries[(3, -4)] == direct12[(3, -4)]
        with pytest.raises(KeyError):
            direct12[(13, 0)]

    def test_parseval(self, blobs):
        a = 2 * np.pi * np.arange(512) / 512
        energy = np.mean(g_extended(blobs, a[:, None], a[None, :], R) ** 2)
        sums = [np.sum(np.abs(build_table(blobs, R, n, n).coeffs) ** 2) for n in (5, 20, 60, 120)]
        assert all(x <= y for x, y in zip(sums, sums[1:]))
        assert sums[-1] <= energy * (1 + 1e-12)
        assert sums[-1] == pytest.approx(energy, rel=1e-6)

    @staticmethod
    def _smoothed_shell_max(p, n):
        t = build_table(p, R, n, n)
        K, M = np.meshgrid(t.ks(), t.ms(), indexing="ij")
        shell = np.maximum(np.abs(K), np.abs(M))
        smax = np.array([np.abs(t.coeffs[shell == j]).max() for j in range(n + 1)])
        return np.convolve(smax, np.ones(3) / 3, mode="valid")

    @pytest.mark.parametrize("which,b", [("blob", 5), ("blobs", 30)])
    def test_shell_decay(self, request, which, b):
        # nonincreasing past r*b down to the roundoff floor; the three-blob
        # phantom (narrowest width 0.06) needs b = 30 for this
        smooth = self._smoothed_shell_max(request.getfixturevalue(which), 200)
        tail = smooth[int(math.ceil(R * b)):]
        tail = tail[tail > 1e-15]
        assert len(tail) > 10
        assert np.all(np.diff(tail) <= 0)

    def test_shell_decay_fails_below_true_band_limit(self, blobs):
        smooth = self._smoothed_shell_max(blobs, 60)
        assert np.any(np.diff(smooth[8:]) > 0)


class TestTail:
    def test_zero(self):
        K = build_K(1.5, 5, 5 / 6)
        kmax, mmax = default_window(1.5, 5, 5 / 6)
        rep = tail_max(build_table(Phantom.zero(), R, kmax, mmax), K)
        assert (rep.tail_max, rep.tail_sum) == (0.0, 0.0)

    def test_only_origin(self, blob):
        table = build_table(blob, R, 3, 3)
        table.coeffs[...] = 0
        table.coeffs[3, 3] = 1.0
        K = SpectrumSet(1, 1, np.zeros((1, 2), dtype=int))
        rep = tail_max(table, K)
        assert rep.tail_max == 0.0 and rep.in_max == 1.0

    def test_window_must_contain_K(self, blob):
        with pytest.raises(ValueError):
            tail_max(build_table(blob, R, 5, 5), build_K(1.5, 5, 5 / 6))

    def test_concentration_at_large_band_limit(self, blob):
        # with b = 30 the data are concentrated on K; at b = 5 they are not
        K = build_K(1.5, 30, 5 / 6)
        kmax, mmax = default_window(1.5, 30, 5 / 6)
        rep = tail_max(build_table(blob, R, kmax, mmax), K)
        assert rep.tail_max < 1e-2 * rep.in_max
        assert rep.edge_max < 1e-12

    def test_low_band_limit_not_concentrated(self, blob):
        K = build_K(1.5, 5, 5 / 6)
        kmax, mmax = default_window(1.5, 5, 5 / 6)
        rep = tail_max(build_table(blob, R, kmax, mmax), K)
        assert rep.tail_max > 0.1 * rep.in_max
