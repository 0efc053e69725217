"""Radon and V-line transforms of Gaussian phantoms.

The V-line with vertex ``r theta(phi)`` on the detector circle and half
opening angle ``psi`` consists of the two rays

    t -> r theta(phi) - t theta(phi +/- psi),   t >= 0,

whose common bisector passes through the origin. For ``|psi| < pi/2`` each
ray lies on the line with normal ``theta(phi +/- psi - pi/2)`` and signed
offset ``+/- r sin(psi)``; the opposite half-line stays outside the disk of
radius ``r`` and so carries none of ``f``. That gives

    Vf(phi, psi) = Rf(phi + psi - pi/2, r sin psi) + Rf(phi - psi - pi/2, -r sin psi).

For ``pi/2 <= psi <= pi`` both rays point away from the support and
``Vf = 0``.
"""

import math

import numpy as np
from scipy import integrate

from .phantoms import phantom_fourier

__all__ = [
    "VLineSample",
    "radon",
    "vline_direct",
    "vline_via_radon",
    "reduce_angles",
    "g_extended",
    "slice_check",
]

TWO_PI = 2.0 * math.pi


class VLineSample:
    """A single V-line measurement ``g(phi, psi)``."""

    __slots__ = ("phi", "psi", "value")

    def __init__(self, phi, psi, value):
        if not (math.isfinite(phi) and math.isfinite(psi)):
            raise ValueError("phi and psi must be finite")
        self.phi = float(phi)
        self.psi = float(psi)
        self.value = float(value)

    def __repr__(self):
        return f"VLineSample(phi={self.phi!r}, psi={self.psi!r}, value={self.value!r})"


def radon(p, phi, s):
    """Line integral of ``p`` over ``{x : x . theta(phi) = s}`` (broadcasts)."""
    phi = np.asarray(phi, dtype=float)
    s = np.asarray(s, dtype=float)
    out = np.zeros(np.broadcast(phi, s).shape)
    if p.is_zero:
        return float(out) if out.ndim == 0 else out
    cphi, sphi = np.cos(phi), np.sin(phi)
    for c in p.components:
        proj = c.center[0] * cphi + c.center[1] * sphi
        out = out + c.amplitude * c.width * math.sqrt(TWO_PI) * np.exp(
            -((s - proj) ** 2) / (2.0 * c.width**2)
        )
    return float(out) if np.ndim(out) == 0 else out


def _ray_integral(p, vertex, direction, t_max, epsabs):
    vx, vy = vertex
    ux, uy = direction
    # closest approach of the ray to each component center
    pts = []
    for c in p.components:
        t_star = (vx - c.center[0]) * ux + (vy - c.center[1]) * uy
        for off in (-4.0, 0.0, 4.0):
            t = t_star + off * c.width
            if 0.0 < t < t_max:
                pts.append(t)

    def f(t):
        x = vx - t * ux
        y = vy - t * uy
        val = 0.0
        for c in p.components:
            d2 = (x - c.center[0]) ** 2 + (y - c.center[1]) ** 2
            val += c.amplitude * math.exp(-d2 / (2.0 * c.width**2))
        return val

    val, _ = integrate.quad(
        f, 0.0, t_max, points=sorted(pts) or None, epsabs=epsabs, epsrel=0.0, limit=400
    )
    return val


def vline_direct(p, phi, psi, r, epsabs=1e-12):
    """V-line transform by adaptive quadrature along both half-rays.

    Each ray is integrated over ``0 <= t <= 2r``; the unit disk lies in
    ``r - 1 <= t <= r + 1``.
    """
    if not r > 1:
        raise ValueError("vertex radius r must exceed 1")
    if p.is_zero:
        return 0.0
    r = float(r)
    vertex = (r * math.cos(phi), r * math.sin(phi))
    total = 0.0
    for sgn in (1.0, -1.0):
        a = phi + sgn * psi
        total += _ray_integral(p, vertex, (math.cos(a), math.sin(a)), 2.0 * r, epsabs)
    return total


def vline_via_radon(p, phi, psi, r):
    """V-line transform from the closed-form Radon transform (broadcasts).

    ``psi`` is taken modulo ``2 pi``; the result is zero where the reduced
    half-angle is at least ``pi/2``.
    """
    if not r > 1:
        raise ValueError("vertex radius r must exceed 1")
    phi = np.asarray(phi, dtype=float)
    psi = np.asarray(psi, dtype=float)
    rs = float(r) * np.sin(psi)
    val = radon(p, phi + psi - 0.5 * math.pi, rs) + radon(p, phi - psi - 0.5 * math.pi, -rs)
    val = np.where(np.cos(psi) > 0.0, val, 0.0)
    return float(val) if val.ndim == 0 else val


def reduce_angles(phi, psi):
    """Map ``(phi, psi)`` to ``phi in [0, 2pi)`` and ``psi in [0, pi]``.

    Uses 2pi-periodicity in both arguments and evenness in ``psi``.
    """
    phi = np.mod(np.asarray(phi, dtype=float), TWO_PI)
    phi = np.where(phi >= TWO_PI, 0.0, phi)  # mod of a tiny negative rounds up to 2pi
    # fold on |psi| first so that psi and -psi reduce bit-identically
    psi = np.abs(np.asarray(psi, dtype=float))
    psi = np.where(psi > math.pi, np.mod(psi, TWO_PI), psi)
    psi = np.where(psi > math.pi, TWO_PI - psi, psi)
    return phi, psi


def g_extended(p, phi, psi, r):
    """``g = Vf`` extended evenly in ``psi`` and 2pi-periodically in both angles."""
    phi_r, psi_r = reduce_angles(phi, psi)
    out = vline_via_radon(p, phi_r, psi_r, r)
    return out


def slice_check(p, phi, sigma, r0=None, epsabs=1e-13):
    """Both sides of the projection-slice identity.

    Returns ``(lhs, rhs)`` where ``lhs`` is the 1D transform
    ``(2 pi)^{-1/2} int Rf(phi, s) exp(-i s sigma) ds`` by quadrature over
    ``|s| <= r0 + 1`` and ``rhs = sqrt(2 pi) fhat(sigma theta(phi))``.
    """
    r0 = p.support_radius if r0 is None else r0
    lim = r0 + 1.0
    theta = np.array([math.cos(phi), math.sin(phi)])
    rhs = math.sqrt(TWO_PI) * phantom_fourier(p, sigma * theta)
    if p.is_zero:
        return 0j, rhs
    pts = sorted(
        float(np.clip(c.center[0] * theta[0] + c.center[1] * theta[1] + k * c.width, -lim, lim))
        for c in p.components
        for k in (-3, 0, 3)
    )
    pts = [t for t in pts if -lim < t < lim]
    re, _ = integrate.quad(
        lambda s: radon(p, phi, s) * math.cos(s * sigma), -lim, lim,
        points=pts or None, epsabs=epsabs, epsrel=0.0, limit=400,
    )
    im, _ = integrate.quad(
        lambda s: -radon(p, phi, s) * math.sin(s * sigma), -lim, lim,
        points=pts or None, epsabs=epsabs, epsrel=0.0, limit=400,
    )
    lhs = complex(re, im) / math.sqrt(TWO_PI)
    return lhs, rhs
