"""Standard and interlaced sampling schemes for the V-line data.

Both schemes pick a reciprocal lattice ``2 pi W^{-T}`` whose translates of the
spectrum set ``K`` are disjoint, then round the implied sample counts up to
integers:

=========== ===================== ===================================
scheme      ``N_phi``             ``N_psi``
=========== ===================== ===================================
standard    ``2 rb / theta^2``    ``2 rb (1 + theta) / theta^2``
interlaced  ``2 rb / theta^2``    ``rb (1 + 2 theta) / theta^2``
=========== ===================== ===================================

The interlaced lattice shifts every other ``phi`` column by half a ``psi``
step, so the nodes are ``(2 pi k / N_phi, pi (k + 2 m) / N_psi)``. As
``theta -> 1`` its budget approaches three quarters of the standard one.
"""

from dataclasses import dataclass, asdict
import math

import numpy as np

from .bounds import full_bound
from .lattice import build_K, build_lattice, coset_arrays, find_overlap, reciprocal
from .sampler import DisjointnessError, measured_window, sample_g, sup_error

__all__ = [
    "SchemeSpec",
    "ComparisonReport",
    "standard_scheme",
    "interlaced_scheme",
    "make_scheme",
    "sample_budget",
    "compare_schemes",
]

STANDARD = "standard"
INTERLACED = "interlaced"


@dataclass(frozen=True)
class SchemeSpec:
    kind: str
    n_phi: int
    n_psi: int
    lattice: object
    recip_target: np.ndarray
    geom: object

    @property
    def nominal_n_phi(self):
        """Unrounded ``N_phi`` implied by ``recip_target``."""
        return float(self.recip_target[0, 0])

    @property
    def nominal_n_psi(self):
        """Unrounded ``N_psi``; the interlaced lattice spaces psi nodes by ``pi / N_psi``."""
        return float(self.recip_target[1, 1])


def _ceil(x):
    # absorbs float noise such as 21.999999999999996 for an exact 22
    return int(math.ceil(x * (1 - 1e-12)))


def _n_phi(rb, theta, conservative):
    return (2 * math.pi if conservative else 2.0) * rb / theta**2


def _check(spec_kind, lattice, geom):
    K = build_K(geom.r, geom.b, geom.theta)
    shift = find_overlap(K, reciprocal(lattice))
    if shift is not None:
        raise DisjointnessError(shift)
    return K


def standard_scheme(geom, conservative=False):
    """Cartesian grid ``phi_k = 2 pi k / N_phi``, ``psi_m = 2 pi m / N_psi``.

    ``conservative=True`` uses ``N_phi >= 2 pi rb / theta^2`` instead of the
    value implied by the reciprocal-lattice matrix.
    """
    rb, th = geom.r * geom.b, float(geom.theta)
    target = np.array([[2 * rb / th**2, 0.0], [0.0, 2 * rb * (1 + th) / th**2]])
    n_phi = _ceil(_n_phi(rb, th, conservative))
    n_psi = _ceil(target[1, 1])
    lattice = build_lattice(n_phi, n_psi, 0)
    _check(STANDARD, lattice, geom)
    return SchemeSpec(STANDARD, n_phi, n_psi, lattice, target, geom)


def interlaced_scheme(geom, conservative=False):
    """Sheared grid ``phi_k = 2 pi k / N_phi``, ``psi = pi l / N_psi`` with ``l = k (mod 2)``.

    ``N_phi`` is forced even so the lattice shift ``N_phi / 2`` is an integer.
    """
    rb, th = geom.r * geom.b, float(geom.theta)
    target = np.array([[2 * rb / th**2, -rb / th**2], [0.0, rb * (2 + 1 / th) / th]])
    n_phi = 2 * _ceil(0.5 * _n_phi(rb, th, conservative))
    n_psi = _ceil(target[1, 1])
    lattice = build_lattice(n_phi, n_psi, n_phi // 2)
    _check(INTERLACED, lattice, geom)
    return SchemeSpec(INTERLACED, n_phi, n_psi, lattice, target, geom)


def make_scheme(kind, geom, conservative=False):
    if kind == STANDARD:
        return standard_scheme(geom, conservative)
    if kind == INTERLACED:
        return interlaced_scheme(geom, conservative)
    raise ValueError(f"unknown scheme {kind!r}")


def sample_budget(scheme):
    """Number ``M_0`` of coset nodes whose V-line meets the support disk."""
    _, _, _, t = coset_arrays(scheme.lattice)
    return int(np.count_nonzero(measured_window(t, scheme.geom)))


@dataclass
class ComparisonReport:
    m0_standard: int
    m0_interlaced: int
    ratio: float
    predicted_ratio: float
    err_standard: float
    err_interlaced: float
    bound: float
    bound_asymptotic: bool

    @property
    def within_bound(self):
        return self.err_standard <= self.bound and self.err_interlaced <= self.bound

    def as_dict(self):
        d = asdict(self)
        d["within_bound"] = self.within_bound
        return d


def compare_schemes(p, geom, grid_n=128, conservative=False):
    """Sample, reconstruct and bound both schemes on the same geometry."""
    K = build_K(geom.r, geom.b, geom.theta)
    out = {}
    for kind in (STANDARD, INTERLACED):
        sch = make_scheme(kind, geom, conservative)
        data = sample_g(p, sch.lattice, geom)
        out[kind] = (data.measured_count, sup_error(data, K, p, grid_n))
    bd = full_bound(p, geom)
    th = float(geom.theta)
    m_std, m_int = out[STANDARD][0], out[INTERLACED][0]
    return ComparisonReport(
        m0_standard=m_std,
        m0_interlaced=m_int,
        ratio=m_int / m_std if m_std else float("nan"),
        predicted_ratio=(1 + 2 * th) / (2 * (1 + th)),
        err_standard=out[STANDARD][1],
        err_interlaced=out[INTERLACED][1],
        bound=bd.total,
        bound_asymptotic=bd.asymptotic,
    )
