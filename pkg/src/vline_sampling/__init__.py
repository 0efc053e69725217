"""Sampling and error estimates for the V-line transform with vertices on a circle."""

from .bessel import bessel_j, bessel_j_table, siegel_bound
from .bounds import BoundBreakdown, eta, eta123, eta_star, full_bound
from .lattice import (
    CosetPoint,
    LatticeSpec,
    SpectrumSet,
    build_K,
    build_lattice,
    cosets,
    reciprocal,
    translates_disjoint,
)
from .phantoms import (
    GaussianComponent,
    Geometry,
    Phantom,
    band_tail,
    eval_phantom,
    l1_norm,
    phantom_fourier,
)
from .sampler import SampledData, kernel_chiK, reconstruct, sample_g, sup_error
from .schemes import (
    SchemeSpec,
    compare_schemes,
    interlaced_scheme,
    sample_budget,
    standard_scheme,
)
from .spectrum import FourierTable, build_table, coeff_bessel, coeff_direct, tail_max
from .transforms import g_extended, radon, slice_check, vline_direct, vline_via_radon

__version__ = "0.1.0"
