r"""Sampling series on a lattice coset set.

For a 2pi-biperiodic ``g`` sampled on the cosets ``v`` of ``L_W / L_P``,

.. math::
    S_{W,K}g(x) = \frac{1}{PQ}\sum_{v} \tilde\chi_K(x - v)\,g(v),\qquad
    \tilde\chi_K(x) = \sum_{\xi\in K} e^{i\xi\cdot x}.

Reordering the finite double sum gives the equivalent form
:math:`S g(x) = \sum_{\xi\in K} c_\xi e^{i\xi\cdot x}` with
:math:`c_\xi = (PQ)^{-1}\sum_v g(v)e^{-i\xi\cdot v}`, which is what grid
evaluation uses.
"""

from dataclasses import dataclass
import math

import numpy as np

from .lattice import coset_arrays, find_overlap, reciprocal
from .transforms import g_extended

__all__ = [
    "MEASURED",
    "IMPLIED_ZERO",
    "SampledData",
    "kernel_chiK",
    "measured_window",
    "sample_g",
    "sample_function",
    "reconstruct",
    "reconstruct_kernel",
    "evaluation_grid",
    "sup_error",
    "DisjointnessError",
]

TWO_PI = 2.0 * math.pi
MEASURED = 1
IMPLIED_ZERO = 0


class DisjointnessError(ValueError):
    """Raised when translates of ``K`` by the reciprocal lattice overlap."""

    def __init__(self, shift):
        self.shift = shift
        super().__init__(f"K overlaps its translate by reciprocal-lattice vector l={shift}")


@dataclass(frozen=True)
class SampledData:
    """Values of ``g`` at every coset point of ``spec``.

    Arrays are aligned with :func:`lattice.coset_arrays`. ``flags`` holds
    :data:`MEASURED` or :data:`IMPLIED_ZERO`; implied-zero values are exactly 0.
    """

    spec: object
    s: np.ndarray
    t: np.ndarray
    values: np.ndarray
    flags: np.ndarray
    geometry: object = None

    def __post_init__(self):
        n = self.spec.index
        for name in ("s", "t", "values", "flags"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"{name} must have P*Q = {n} entries")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("sample values must be finite")
        if np.any(self.values[self.flags == IMPLIED_ZERO] != 0.0):
            raise ValueError("implied-zero samples must be exactly 0")

    @property
    def measured_count(self):
        return int(np.count_nonzero(self.flags == MEASURED))

    def points(self):
        return np.stack([self.s, self.t], -1)

    def __add__(self, other):
        return self._combine(other, 1.0)

    def scaled(self, a):
        return SampledData(self.spec, self.s, self.t, a * self.values, self.flags, self.geometry)

    def _combine(self, other, a):
        if other.spec != self.spec:
            raise ValueError("cannot combine data on different lattices")
        flags = np.maximum(self.flags, other.flags)
        return SampledData(self.spec, self.s, self.t, self.values + a * other.values,
                           flags, self.geometry)


def kernel_chiK(K, x):
    """Interpolation kernel ``sum_{(k,m) in K} cos(k phi + m psi)`` at ``x = (phi, psi)``."""
    x = np.asarray(x, dtype=float)
    phi = x[..., 0]
    psi = x[..., 1]
    out = np.zeros(phi.shape)
    for k, m in K.members:
        out += np.cos(k * phi + m * psi)
    return float(out) if out.ndim == 0 else out


def measured_window(psi, geometry):
    """``True`` where the V-line at half-angle ``psi`` meets the support disk."""
    psi = np.mod(np.asarray(psi, dtype=float) + math.pi, TWO_PI) - math.pi
    meets = float(geometry.r) * np.abs(np.sin(psi)) <= float(geometry.r0)
    return (np.abs(psi) < 0.5 * math.pi) & meets


def sample_g(p, spec, geometry):
    """Sample ``g = Vf`` at the cosets of ``spec``.

    Nodes whose V-line misses the support disk are stored as implied zeros
    rather than evaluated.
    """
    _, _, s, t = coset_arrays(spec)
    flags = np.where(measured_window(t, geometry), MEASURED, IMPLIED_ZERO)
    values = np.zeros(len(s))
    hit = flags == MEASURED
    if np.any(hit):
        values[hit] = g_extended(p, s[hit], t[hit], geometry.r)
    return SampledData(spec, s, t, values, flags, geometry)


def sample_function(fn, spec, geometry=None):
    """Sample an arbitrary biperiodic ``fn(phi, psi)``; every node counts as measured."""
    _, _, s, t = coset_arrays(spec)
    values = np.asarray(fn(s, t), dtype=float)
    return SampledData(spec, s, t, values, np.full(len(s), MEASURED), geometry)


def _require_disjoint(data, K):
    shift = find_overlap(K, reciprocal(data.spec))
    if shift is not None:
        raise DisjointnessError(shift)


def reconstruct_kernel(data, K, x, check=True):
    """Sampling series by explicit kernel summation over the cosets (slow path)."""
    if check:
        _require_disjoint(data, K)
    x = np.asarray(x, dtype=float)
    flat = x.reshape(-1, 2)
    out = np.empty(len(flat))
    v = data.points()
    for i, pt in enumerate(flat):
        out[i] = kernel_chiK(K, pt[None, :] - v) @ data.values
    out /= data.spec.index
    out = out.reshape(x.shape[:-1])
    return float(out) if out.ndim == 0 else out


def _series_coefficients(data, K):
    km = K.members.astype(float)
    phase = km @ np.stack([data.s, data.t])  # (|K|, PQ)
    return np.exp(-1j * phase) @ data.values / data.spec.index


def reconstruct(data, K, x, check=True, chunk=4096):
    """Evaluate the sampling series ``S_{W,K} g`` at points ``x`` (shape ``(..., 2)``).

    Raises :class:`DisjointnessError` if ``K`` overlaps one of its
    reciprocal-lattice translates.
    """
    if check:
        _require_disjoint(data, K)
    x = np.asarray(x, dtype=float)
    flat = x.reshape(-1, 2)
    coef = _series_coefficients(data, K)
    km = K.members.astype(float)
    out = np.empty(len(flat))
    for start in range(0, len(flat), chunk):
        blk = flat[start:start + chunk]
        out[start:start + chunk] = np.real(np.exp(1j * (blk @ km.T)) @ coef)
    out = out.reshape(x.shape[:-1])
    return float(out) if out.ndim == 0 else out


def evaluation_grid(grid_n, offset=True):
    """``grid_n x grid_n`` points of ``[0, 2pi)^2``, shifted half a cell by default."""
    h = TWO_PI / grid_n
    a = h * (np.arange(grid_n) + (0.5 if offset else 0.0))
    phi, psi = np.meshgrid(a, a, indexing="ij")
    return np.stack([phi, psi], -1)


def sup_error(data, K, p, grid_n=128, reference=None):
    """Max of ``|S_{W,K} g - g|`` over an offset uniform grid.

    ``reference`` overrides the phantom-based ``g`` with any callable
    ``fn(phi, psi)``.
    """
    pts = evaluation_grid(grid_n)
    approx = reconstruct(data, K, pts)
    if reference is None:
        exact = g_extended(p, pts[..., 0], pts[..., 1], data.geometry.r)
    else:
        exact = reference(pts[..., 0], pts[..., 1])
    return float(np.abs(approx - exact).max())
