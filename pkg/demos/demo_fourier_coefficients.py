"""
Fourier coefficients of V-line data
===================================

Two independent routes give ``ghat_{k,m}``: a 2D FFT of ``g`` on a grid and a
Bessel-integral formula through the Fourier slice relation. The Bessel form
with a single ``J_{k-m} + J_{k+m}`` integral is right for even ``m`` only; odd
``m`` need the half-range correction.
"""

import numpy as np

from vline_sampling import GaussianComponent, Phantom, build_K
from vline_sampling.spectrum import build_table, coeff_bessel_even_formula, default_window, tail_max

phantom = Phantom((
    GaussianComponent((0.2, 0.1), 0.125, 1.0),
    GaussianComponent((-0.3, 0.25), 0.08, 0.7),
    GaussianComponent((0.05, -0.5), 0.06, 1.3),
))
r = 1.5

direct = build_table(phantom, r, 12, 12, method="direct")
bessel = build_table(phantom, r, 12, 12, method="bessel", b=5.0)
print(f"max |direct - Bessel| on |k|,|m| <= 12: {np.abs(direct.coeffs - bessel.coeffs).max():.2e}")

for km in [(2, 2), (2, 3), (-1, 5)]:
    print(f"{km}: direct {direct[km]:.6f}  single integral {coeff_bessel_even_formula(phantom, r, *km):.6f}")

# How much of the spectrum sits outside K, for two band limits.
for b in (5, 30):
    K = build_K(r, b, 5 / 6)
    kmax, mmax = default_window(r, b, 5 / 6)
    rep = tail_max(build_table(phantom, r, kmax, mmax), K)
    print(f"b={b:2d}: max outside K / max on K = {rep.tail_max / rep.in_max:.3e}, "
          f"sum outside K = {rep.tail_sum:.3e}")
