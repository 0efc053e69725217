"""Gaussian-sum test emission functions and the scan geometry.

A :class:`Phantom` is a finite sum of isotropic Gaussians

    f(x) = sum_j A_j exp(-|x - c_j|^2 / (2 sigma_j^2)),

whose Fourier transform, Radon transform and L1 norm are all closed form.
Each component obeys the effective-support rule ``|c_j| + 6 sigma_j <= r0``,
so ``f`` is below ``exp(-18) * sum|A_j|`` outside the disk of radius ``r0``.

Fourier convention: ``fhat(xi) = (2 pi)^{-1} int f(x) exp(-i x.xi) dx``.
"""

from dataclasses import dataclass, field
import math

import numpy as np
from scipy import integrate

__all__ = [
    "SUPPORT_WIDTHS",
    "GaussianComponent",
    "Phantom",
    "Geometry",
    "eval_phantom",
    "phantom_fourier",
    "fourier_envelope",
    "band_tail",
    "l1_norm",
    "signed_mass",
]

SUPPORT_WIDTHS = 6.0


@dataclass(frozen=True)
class GaussianComponent:
    center: tuple
    width: float
    amplitude: float = 1.0

    def __post_init__(self):
        c = tuple(float(v) for v in self.center)
        if len(c) != 2:
            raise ValueError("center must be a 2-vector")
        object.__setattr__(self, "center", c)
        if not self.width > 0:
            raise ValueError(f"width must be positive, got {self.width}")

    @property
    def reach(self):
        """Radius of the disk that effectively contains this component."""
        return math.hypot(*self.center) + SUPPORT_WIDTHS * self.width


@dataclass(frozen=True)
class Phantom:
    """Sum of Gaussian components effectively supported in ``|x| <= support_radius``."""

    components: tuple = ()
    support_radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not 0 < self.support_radius <= 1:
            raise ValueError("support_radius must lie in (0, 1]")
        for c in self.components:
            if c.reach > self.support_radius * (1 + 1e-12):
                raise ValueError(
                    f"component at {c.center} with width {c.width} reaches "
                    f"{c.reach:.6g} > support radius {self.support_radius}; "
                    f"need |center| + {SUPPORT_WIDTHS:g}*width <= r0"
                )

    @classmethod
    def zero(cls, support_radius=1.0):
        return cls((), support_radius)

    @classmethod
    def single(cls, center, width, amplitude=1.0, support_radius=1.0):
        return cls((GaussianComponent(center, width, amplitude),), support_radius)

    @property
    def is_zero(self):
        return len(self.components) == 0

    @property
    def single_signed(self):
        signs = {math.copysign(1.0, c.amplitude) for c in self.components if c.amplitude != 0}
        return len(signs) <= 1

    def arrays(self):
        """Centers ``(J, 2)``, widths ``(J,)`` and amplitudes ``(J,)``."""
        if self.is_zero:
            return np.zeros((0, 2)), np.zeros(0), np.zeros(0)
        centers = np.array([c.center for c in self.components], dtype=float)
        widths = np.array([c.width for c in self.components], dtype=float)
        amps = np.array([c.amplitude for c in self.components], dtype=float)
        return centers, widths, amps


@dataclass(frozen=True)
class Geometry:
    """Detector circle radius ``r``, support radius ``r0``, essential band
    limit ``b`` and oversampling parameter ``theta``.

    The error bound additionally needs ``2 - theta**2 < r``; pass
    ``require_bound_condition=False`` to build a geometry that is only used
    for lattice construction.
    """

    r: float
    r0: float
    b: float
    theta: float
    require_bound_condition: bool = field(default=True, compare=False)

    def __post_init__(self):
        if not self.r > 1:
            raise ValueError(f"detector radius r must exceed 1, got {self.r}")
        if not 0 < self.r0 <= 1:
            raise ValueError(f"support radius r0 must lie in (0, 1], got {self.r0}")
        if not self.b > 1:
            raise ValueError(f"band limit b must exceed 1, got {self.b}")
        if not 0 < self.theta < 1:
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")
        if self.require_bound_condition and not self.rbar < self.r:
            raise ValueError(
                f"2 - theta^2 = {self.rbar:.6g} must be below r = {self.r}; "
                f"increase r or theta (theta > {math.sqrt(max(0.0, 2 - float(self.r))):.6g})"
            )

    @property
    def rbar(self):
        return 2.0 - float(self.theta) ** 2

    @property
    def rb(self):
        return self.r * self.b


def eval_phantom(p, x):
    """Evaluate ``f`` at points ``x`` (shape ``(..., 2)``)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape[:-1])
    for c in p.components:
        d2 = (x[..., 0] - c.center[0]) ** 2 + (x[..., 1] - c.center[1]) ** 2
        out += c.amplitude * np.exp(-d2 / (2.0 * c.width**2))
    return float(out) if out.ndim == 0 else out


def phantom_fourier(p, xi):
    """Closed-form 2D Fourier transform at frequencies ``xi`` (shape ``(..., 2)``)."""
    xi = np.asarray(xi, dtype=float)
    out = np.zeros(xi.shape[:-1], dtype=complex)
    rho2 = xi[..., 0] ** 2 + xi[..., 1] ** 2
    for c in p.components:
        s2 = c.width**2
        phase = xi[..., 0] * c.center[0] + xi[..., 1] * c.center[1]
        out += c.amplitude * s2 * np.exp(-0.5 * s2 * rho2) * np.exp(-1j * phase)
    return complex(out) if out.ndim == 0 else out


def fourier_envelope(p, rho):
    """Radial majorant ``sum_j |A_j| sigma_j^2 exp(-sigma_j^2 rho^2 / 2) >= |fhat|``."""
    rho = np.asarray(rho, dtype=float)
    out = np.zeros_like(rho)
    for c in p.components:
        s2 = c.width**2
        out += abs(c.amplitude) * s2 * np.exp(-0.5 * s2 * rho * rho)
    return float(out) if out.ndim == 0 else out


def _radial_tail(d, b, width, rtol):
    # int_b^inf rho^(d+1) exp(-w^2 rho^2 / 2) d rho, truncated where the
    # integrand drops below 1e-300
    a = 0.5 * width * width

    def integrand(rho):
        return math.exp((d + 1) * math.log(rho) - a * rho * rho) if rho > 0 else (1.0 if d == -1 else 0.0)

    peak = math.sqrt(max(d + 1, 0.0) / (2 * a)) if d + 1 > 0 else 0.0
    start = max(b, 0.0)
    # upper cut: log-integrand < log(1e-300)
    hi = max(start, peak) + 1.0
    while (d + 1) * math.log(hi) - a * hi * hi > math.log(1e-300):
        hi *= 1.5
    pts = [t for t in (peak, peak + 3 / math.sqrt(2 * a), peak + 8 / math.sqrt(2 * a)) if start < t < hi]
    val, _ = integrate.quad(integrand, start, hi, points=pts or None, epsabs=0.0, epsrel=rtol, limit=500)
    return val


def band_tail(p, d, b, rtol=1e-10):
    r"""Upper bound for :math:`\epsilon_d(f,b) = \int_{|\xi|>b} |\xi|^d |\hat f(\xi)|\,d\xi`.

    Uses the radial majorant from :func:`fourier_envelope`, which is exact
    for a single component centered anywhere.
    """
    if d < -1:
        raise ValueError("band_tail is only defined here for d >= -1")
    if not b > 0:
        raise ValueError("band_tail requires b > 0")
    total = 0.0
    for c in p.components:
        total += 2 * math.pi * abs(c.amplitude) * c.width**2 * _radial_tail(d, b, c.width, rtol)
    return total


def l1_norm(p):
    """``sum_j |A_j| 2 pi sigma_j^2``.

    Exact when all amplitudes share a sign; otherwise it is the
    triangle-inequality upper bound (see ``Phantom.single_signed``).
    """
    return sum(abs(c.amplitude) * 2 * math.pi * c.width**2 for c in p.components)


def signed_mass(p):
    return sum(c.amplitude * 2 * math.pi * c.width**2 for c in p.components)
