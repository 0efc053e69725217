"""Sampling lattices for 2pi-biperiodic functions on the plane.

The period lattice is ``L_P = 2 pi Z^2``. Sampling lattices are generated by

    W = 2 pi [[1/P, 0], [N/(P Q), 1/Q]],   P, Q > 0, 0 <= N < P,

so ``L_P`` is a sublattice of ``L_W`` of index ``P Q``. One period cell holds
the cosets

    (s_j, t_jl) = (2 pi j / P, 2 pi (l + N j / P) / Q),  0 <= j < P, 0 <= l < Q,

and the reciprocal generator is ``2 pi W^{-T} = [[P, -N], [0, Q]]``.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import math

import numpy as np
from scipy.spatial import ConvexHull, QhullError

__all__ = [
    "LatticeSpec",
    "CosetPoint",
    "SpectrumSet",
    "build_lattice",
    "cosets",
    "coset_arrays",
    "reciprocal",
    "build_K",
    "find_overlap",
    "translates_disjoint",
]

TWO_PI = 2.0 * math.pi
_GUARD = 1e-12


@dataclass(frozen=True)
class LatticeSpec:
    p_count: int
    q_count: int
    shift: int

    @property
    def Pmat(self):
        return TWO_PI * np.eye(2)

    @property
    def Wmat(self):
        P, Q, N = self.p_count, self.q_count, self.shift
        return TWO_PI * np.array([[1.0 / P, 0.0], [N / (P * Q), 1.0 / Q]])

    @property
    def index(self):
        return self.p_count * self.q_count

    def integer_factor(self):
        """Integer ``M`` with ``Pmat = Wmat @ M``."""
        P, Q, N = self.p_count, self.q_count, self.shift
        return np.array([[P, 0], [-N, Q]])


@dataclass(frozen=True)
class CosetPoint:
    j: int
    l: int
    s: float
    t: float


@dataclass(frozen=True)
class SpectrumSet:
    """Integer frequencies ``(k, m)`` with ``|k| < rb/theta`` and
    ``max(|k+m|, |k-m|) < rb``.
    """

    half_width_k: float
    diag_width: float
    members: np.ndarray  # (n, 2) int

    def __len__(self):
        return len(self.members)

    def __contains__(self, km):
        return tuple(int(v) for v in km) in self.as_set()

    def as_set(self):
        return {(int(k), int(m)) for k, m in self.members}

    @property
    def kmax(self):
        return int(np.abs(self.members[:, 0]).max()) if len(self) else 0

    @property
    def mmax(self):
        return int(np.abs(self.members[:, 1]).max()) if len(self) else 0

    def diameter(self):
        if len(self) < 2:
            return 0.0
        pts = self.members.astype(float)
        if len(pts) > 16:
            try:
                pts = pts[ConvexHull(pts).vertices]
            except QhullError:  # collinear members
                pass
        d = pts[:, None, :] - pts[None, :, :]
        return float(np.sqrt((d**2).sum(-1)).max())


def build_lattice(P, Q, N):
    """Validated :class:`LatticeSpec` for integers ``P, Q > 0``, ``0 <= N < P``."""
    P, Q, N = int(P), int(Q), int(N)
    if P <= 0 or Q <= 0:
        raise ValueError("P and Q must be positive")
    if not 0 <= N < P:
        raise ValueError(f"shift N must satisfy 0 <= N < P, got N={N}, P={P}")
    spec = LatticeSpec(P, Q, N)
    M = spec.integer_factor()
    if not np.allclose(spec.Wmat @ M, spec.Pmat, rtol=0, atol=1e-12):
        raise AssertionError("L_P is not a sublattice of L_W")
    ratio = abs(np.linalg.det(spec.Pmat) / np.linalg.det(spec.Wmat))
    if abs(ratio - P * Q) > 1e-9 * P * Q:
        raise AssertionError("index of L_P in L_W differs from P*Q")
    return spec


def coset_arrays(spec):
    """``(j, l, s, t)`` arrays of the ``P*Q`` coset representatives, reduced to ``[0, 2pi)``."""
    P, Q, N = spec.p_count, spec.q_count, spec.shift
    j, l = np.meshgrid(np.arange(P), np.arange(Q), indexing="ij")
    j, l = j.ravel(), l.ravel()
    s = TWO_PI * j / P
    # (l + N j / P) / Q as an exact fraction of a full turn before scaling
    num = (l * P + N * j) % (P * Q)
    t = TWO_PI * num / (P * Q)
    return j, l, s, t


def cosets(spec):
    j, l, s, t = coset_arrays(spec)
    return [CosetPoint(int(a), int(b), float(c), float(d)) for a, b, c, d in zip(j, l, s, t)]


def reciprocal(spec):
    """Generator ``2 pi W^{-T}`` of the reciprocal lattice ``L_W^perp``."""
    W = spec.Wmat
    if abs(np.linalg.det(W)) < 1e-300:
        raise ValueError("singular sampling matrix")
    R = TWO_PI * np.linalg.inv(W).T
    return np.rint(R) if np.allclose(R, np.rint(R), atol=1e-9) else R


def _strict_less(value, bound):
    if isinstance(value, (int, Fraction)) and isinstance(bound, (int, Fraction)):
        return value < bound
    return float(value) < float(bound) - _GUARD * max(1.0, abs(float(bound)))


def _as_exact(x):
    return Fraction(x) if isinstance(x, (int, Fraction)) else float(x)


def build_K(r, b, theta):
    """Enumerate the spectrum set for detector radius ``r``, band limit ``b``
    and oversampling parameter ``theta``.

    Boundary points are excluded. Arguments given as ``int`` or
    :class:`fractions.Fraction` are compared exactly; floats use a relative
    guard band of 1e-12.
    """
    r, b, theta = _as_exact(r), _as_exact(b), _as_exact(theta)
    if not 0 < theta < 1:
        raise ValueError("theta must lie in (0, 1)")
    rb = r * b
    kb = rb / theta
    kmax = int(math.floor(float(kb))) + 1
    mmax = int(math.floor(float(rb))) * 2 + 1
    members = []
    for k in range(-kmax, kmax + 1):
        if not _strict_less(abs(k), kb):
            continue
        for m in range(-mmax, mmax + 1):
            if _strict_less(max(abs(k + m), abs(k - m)), rb):
                members.append((k, m))
    arr = np.array(members, dtype=int).reshape(-1, 2)
    return SpectrumSet(float(kb), float(rb), arr)


def find_overlap(K, recip):
    """First nonzero ``l`` with ``(K + recip @ l) & K`` non-empty, or ``None``.

    Only shifts with ``|recip @ l| <= diam(K) + 1`` can overlap, so the search
    is over that window.
    """
    recip = np.asarray(recip, dtype=float)
    if len(K) == 0:
        return None
    radius = K.diameter() + 1.0
    inv_norm = np.linalg.norm(np.linalg.inv(recip), 2)
    lmax = int(math.ceil(radius * inv_norm)) + 1
    kset = K.as_set()
    pts = K.members
    cands = []
    for l1, l2 in itertools.product(range(-lmax, lmax + 1), repeat=2):
        if l1 == 0 and l2 == 0:
            continue
        shift = recip @ np.array([l1, l2], dtype=float)
        if np.linalg.norm(shift) > radius:
            continue
        cands.append((float(np.linalg.norm(shift)), l1, l2, shift))
    for _, l1, l2, shift in sorted(cands, key=lambda c: c[:3]):
        ishift = np.rint(shift)
        if not np.allclose(shift, ishift, atol=1e-9):
            continue  # a non-integer shift cannot land on Z^2
        moved = pts + ishift.astype(int)
        if any((int(a), int(c)) in kset for a, c in moved):
            return (l1, l2)
    return None


def translates_disjoint(K, recip):
    """``True`` iff the translates ``K + recip @ l``, ``l in Z^2``, are mutually disjoint."""
    return find_overlap(K, recip) is None
