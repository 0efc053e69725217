"""
Standard and interlaced sampling
================================

Both schemes sample ``g`` on a lattice and rebuild it with the sampling
series. The interlaced grid shifts every other column by half a step and
needs about three quarters of the standard sample count.
"""

from fractions import Fraction

from vline_sampling import GaussianComponent, Geometry, Phantom, compare_schemes, interlaced_scheme, sample_budget
from vline_sampling import standard_scheme

phantom = Phantom((
    GaussianComponent((0.2, 0.1), 0.125, 1.0),
    GaussianComponent((-0.3, 0.25), 0.08, 0.7),
    GaussianComponent((0.05, -0.5), 0.06, 1.3),
))

for b in (5, 8, 15):
    geo = Geometry(Fraction(3, 2), 1, b, Fraction(5, 6))
    rep = compare_schemes(phantom, geo, grid_n=96)
    print(f"b={b:2d}  M0 {rep.m0_standard:4d} / {rep.m0_interlaced:4d}  ratio {rep.ratio:.3f}"
          f" (predicted {rep.predicted_ratio:.3f})  sup errors {rep.err_standard:.3e} / "
          f"{rep.err_interlaced:.3e}  bound {rep.bound:.3e}")

# The budget ratio approaches 3/4 as theta -> 1 and b grows.
for th, b in [(0.9, 20), (0.99, 50)]:
    geo = Geometry(1.5, 1.0, b, th)
    m_s, m_i = sample_budget(standard_scheme(geo)), sample_budget(interlaced_scheme(geo))
    print(f"theta={th} b={b}: {m_i}/{m_s} = {m_i / m_s:.4f}")
