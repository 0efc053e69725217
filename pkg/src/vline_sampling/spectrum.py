r"""Fourier coefficients of the extended V-line data ``g``.

.. math::
    \hat g_{k,m} = \frac{1}{4\pi^2}\int_0^{2\pi}\!\!\int_{-\pi}^{\pi}
        g(\varphi,\psi)\,e^{-i(k\varphi+m\psi)}\,d\psi\,d\varphi

Two independent routes are provided.

*direct*
    Trapezoidal rule on a uniform grid (a single 2D FFT). ``g`` is smooth and
    periodic, so this converges spectrally.

*bessel*
    Through the Radon/Fourier slice relation. Writing
    :math:`A_k(\sigma) = \int_0^{2\pi}\hat f(\sigma\theta(\alpha))e^{-ik\alpha}d\alpha`,

    .. math::
        B_{k,j} = \frac{i^k}{4\pi}\int_{\mathbb R} A_k(\sigma)
            \bigl[J_{k-j}(r\sigma) + J_{k+j}(r\sigma)\bigr]\,d\sigma .

    For even ``m`` the coefficient is :math:`\hat g_{k,m} = B_{k,m}`. For odd
    ``m`` the Bessel integral vanishes identically, while ``g`` (which lives on
    ``|psi| < pi/2`` only) has non-zero odd harmonics. They come from
    multiplying the pi-periodic function :math:`\sum_j 2B_{k,j}e^{ij\psi}` by
    the indicator of ``|psi| < pi/2``:

    .. math::
        \hat g_{k,m} = 2\sum_{j\ \mathrm{even}} c_{m-j} B_{k,j},\qquad
        c_n = \frac{\sin(n\pi/2)}{n\pi}.
"""

from dataclasses import dataclass
import math

import numpy as np

from .bessel import MAX_ORDER, bessel_j_table
from .phantoms import fourier_envelope, phantom_fourier
from .transforms import g_extended

__all__ = [
    "FourierTable",
    "TailReport",
    "direct_grid_coefficients",
    "coeff_direct",
    "bessel_integrals",
    "coeff_bessel",
    "coeff_bessel_even_formula",
    "default_window",
    "build_table",
    "tail_max",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FourierTable:
    kmax: int
    mmax: int
    coeffs: np.ndarray  # (2*kmax+1, 2*mmax+1), index [k + kmax, m + mmax]
    method: str

    def __getitem__(self, km):
        k, m = km
        if abs(k) > self.kmax or abs(m) > self.mmax:
            raise KeyError(f"({k}, {m}) outside the table window")
        return self.coeffs[k + self.kmax, m + self.mmax]

    def ks(self):
        return np.arange(-self.kmax, self.kmax + 1)

    def ms(self):
        return np.arange(-self.mmax, self.mmax + 1)

    def items(self):
        for i, k in enumerate(self.ks()):
            for j, m in enumerate(self.ms()):
                yield (int(k), int(m)), self.coeffs[i, j]


@dataclass(frozen=True)
class TailReport:
    tail_max: float
    tail_sum: float
    in_max: float
    edge_max: float  # largest |coefficient| on the window boundary


# -- direct route ------------------------------------------------------------

def _check_grid(grid_n):
    if grid_n < 256 or grid_n & (grid_n - 1):
        raise ValueError("grid_n must be a power of two >= 256")


def direct_grid_coefficients(p, r, grid_n):
    """Full ``grid_n x grid_n`` array of trapezoidal coefficients.

    Entry ``[k mod n, m mod n]`` approximates ``ghat_{k,m}``.
    """
    _check_grid(grid_n)
    phi = TWO_PI * np.arange(grid_n) / grid_n
    psi = -math.pi + TWO_PI * np.arange(grid_n) / grid_n
    G = g_extended(p, phi[:, None], psi[None, :], r)
    F = np.fft.fft2(G) / grid_n**2
    # psi grid starts at -pi: exp(-i m psi_b) = (-1)^m exp(-2 pi i m b / n)
    sign = np.where(np.arange(grid_n) % 2 == 0, 1.0, -1.0)
    return F * sign[None, :]


def coeff_direct(p, r, k, m, grid_n=512):
    """``ghat_{k,m}`` by the trapezoidal rule on a ``grid_n``-square grid."""
    n = grid_n
    _check_grid(n)
    if 2 * max(abs(k), abs(m)) >= n:
        raise ValueError("frequency not resolved by grid_n")
    phi = TWO_PI * np.arange(n) / n
    psi = -math.pi + TWO_PI * np.arange(n) / n
    G = g_extended(p, phi[:, None], psi[None, :], r)
    ek = np.exp(-1j * k * phi)
    em = np.exp(-1j * m * psi)
    return complex(ek @ G @ em) / n**2


# -- Bessel route ------------------------------------------------------------

def _default_sigma_max(p, b):
    widths = [c.width for c in p.components]
    if not widths:
        return 2.0 * b
    # envelope below 1e-17 of its value at the origin
    rho = math.sqrt(2 * math.log(1e17)) / min(widths)
    return max(2.0 * b, rho)


def _gauss_legendre(a, b, panels, order):
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _angular_coeffs(p, sigma, ks, n_alpha):
    # A_k(sigma) for all k by the periodic trapezoid rule in alpha
    alpha = TWO_PI * np.arange(n_alpha) / n_alpha
    xi = sigma[:, None, None] * np.stack([np.cos(alpha), np.sin(alpha)], -1)[None, :, :]
    fh = phantom_fourier(p, xi)  # (n_sigma, n_alpha)
    F = np.fft.fft(fh, axis=1) * (TWO_PI / n_alpha)
    return F[:, np.asarray(ks) % n_alpha]  # (n_sigma, len(ks))


def _signed_orders(table, orders):
    # J_{-n} = (-1)^n J_n
    orders = np.asarray(orders)
    rows = table[np.abs(orders)]
    flip = (orders < 0) & (np.abs(orders) % 2 == 1)
    rows[flip] *= -1.0
    return rows


def bessel_integrals(p, r, ks, js, sigma_max, n_alpha=256, order=24, tol=1e-13,
                     max_panels=4096):
    """``B_{k,j}`` for every ``k in ks`` and ``j in js``.

    The sigma integral over ``[-sigma_max, sigma_max]`` uses composite
    Gauss-Legendre panels, doubled until successive results agree to ``tol``.
    """
    ks = np.asarray(ks, dtype=int)
    js = np.asarray(js, dtype=int)
    nmax = int(np.abs(ks).max() + np.abs(js).max())
    if nmax > MAX_ORDER or r * sigma_max > 500.0:
        raise ValueError(
            f"Bessel orders up to {nmax} at arguments up to {r * sigma_max:.4g} "
            f"exceed the validated envelope"
        )
    prefactor = (1j ** (ks % 4)) / (4 * math.pi)

    def evaluate(panels):
        nodes, weights = _gauss_legendre(-sigma_max, sigma_max, panels, order)
        A = _angular_coeffs(p, nodes, ks, n_alpha)  # (S, K)
        J = bessel_j_table(nmax, r * nodes)  # (nmax+1, S)
        out = np.empty((len(ks), len(js)), dtype=complex)
        for i, k in enumerate(ks):
            rows = _signed_orders(J, k - js) + _signed_orders(J, k + js)  # (len(js), S)
            out[i] = rows @ (weights * A[:, i])
        return out * prefactor[:, None]

    panels = max(8, int(math.ceil(sigma_max * r / 4)))
    prev = evaluate(panels)
    while True:
        panels *= 2
        cur = evaluate(panels)
        scale = max(1.0, float(np.abs(cur).max()))
        if np.abs(cur - prev).max() <= tol * scale or panels >= max_panels:
            return cur
        prev = cur


def _j_limit(r, sigma_max, kmax):
    x = r * sigma_max
    jm = int(math.ceil(x + 12 * x ** (1 / 3) + 20))
    jm = min(jm, MAX_ORDER - kmax)
    return jm - (jm % 2)


def _half_range(n):
    # Fourier coefficients of the indicator of |psi| < pi/2
    n = np.asarray(n)
    out = np.where(n == 0, 0.5, np.sin(0.5 * math.pi * n) / (math.pi * np.where(n == 0, 1, n)))
    return out


def _assemble(B, js, ms):
    # B: (K, len(js)) Bessel integrals on even js; returns (K, len(ms)) coefficients
    js = np.asarray(js)
    index = {int(j): i for i, j in enumerate(js)}
    out = np.empty((B.shape[0], len(ms)), dtype=complex)
    for col, m in enumerate(ms):
        m = int(m)
        if m % 2 == 0:
            out[:, col] = B[:, index[m]]
        else:
            c = _half_range(m - js)
            out[:, col] = 2.0 * B @ c
    return out


def coeff_bessel(p, r, k, m, sigma_max=None, quad_n=256, b=None):
    """``ghat_{k,m}`` through the Bessel-integral representation.

    Parameters
    ----------
    sigma_max : float, optional
        Radial frequency cut-off. Defaults to where the Fourier envelope of
        ``p`` falls below 1e-17 of its peak (at least ``2b``).
    quad_n : int
        Trapezoid nodes in the angular variable.
    b : float, optional
        Essential band limit; ``sigma_max < b`` is rejected.
    """
    if p.is_zero:
        return 0j
    if sigma_max is None:
        sigma_max = _default_sigma_max(p, b or 1.0)
    if b is not None and sigma_max < b:
        raise ValueError("sigma_max below the band limit truncates the spectrum")
    table = build_table(p, r, abs(k), abs(m), method="bessel", sigma_max=sigma_max,
                        quad_n=quad_n, ks=[k], ms=[m])
    return complex(table)


def coeff_bessel_even_formula(p, r, k, m, sigma_max=None, quad_n=256):
    """The single Bessel integral ``B_{k,m}`` applied to any ``m``.

    Equal to ``ghat_{k,m}`` for even ``m`` and identically zero for odd ``m``;
    kept so the discrepancy can be measured.
    """
    if p.is_zero:
        return 0j
    sigma_max = sigma_max or _default_sigma_max(p, 1.0)
    B = bessel_integrals(p, r, [k], [m], sigma_max, n_alpha=quad_n)
    return complex(B[0, 0])


def default_window(r, b, theta):
    kmax = int(math.ceil(2 * r * b / theta**2))
    return kmax, kmax + int(math.ceil(r * b))


def build_table(p, r, kmax, mmax, method="direct", grid_n=None, sigma_max=None,
                quad_n=256, b=None, ks=None, ms=None):
    """Coefficients for ``|k| <= kmax``, ``|m| <= mmax``.

    ``method="direct"`` evaluates ``g`` once on a grid and reads every entry
    from one FFT. ``method="bessel"`` shares the sigma quadrature across all
    entries. The private ``ks``/``ms`` arguments restrict the bessel route to
    a single entry and return it as a scalar.
    """
    if method not in ("direct", "bessel"):
        raise ValueError(f"unknown method {method!r}")
    if kmax < 0 or mmax < 0:
        raise ValueError("window bounds must be non-negative")
    kk = np.arange(-kmax, kmax + 1)
    mm = np.arange(-mmax, mmax + 1)
    if method == "direct":
        n = grid_n or max(256, 1 << int(math.ceil(math.log2(4 * max(kmax, mmax) + 2))))
        if 2 * max(kmax, mmax) >= n:
            raise ValueError("grid_n too small for the window")
        F = direct_grid_coefficients(p, r, n)
        coeffs = F[np.ix_(kk % n, mm % n)]
        return FourierTable(kmax, mmax, coeffs, "direct")

    single = ks is not None
    kk = np.asarray(ks) if single else kk
    mm = np.asarray(ms) if single else mm
    if p.is_zero:
        coeffs = np.zeros((len(kk), len(mm)), dtype=complex)
    else:
        if sigma_max is None:
            sigma_max = _default_sigma_max(p, b or 1.0)
        if b is not None and sigma_max < b:
            raise ValueError("sigma_max below the band limit truncates the spectrum")
        kabs = int(np.abs(kk).max())
        jm = max(_j_limit(r, sigma_max, kabs), int(np.abs(mm).max()) + 1)
        jm += jm % 2
        js = np.arange(-jm, jm + 1, 2)
        B = bessel_integrals(p, r, kk, js, sigma_max, n_alpha=quad_n)
        coeffs = _assemble(B, js, mm)
    if single:
        return coeffs[0, 0]
    return FourierTable(kmax, mmax, coeffs, "bessel")


def tail_max(table, K):
    """Largest and summed ``|ghat|`` over window members outside ``K``."""
    members = K.members
    if len(members) and (np.abs(members[:, 0]).max() >= table.kmax
                         or np.abs(members[:, 1]).max() >= table.mmax):
        raise ValueError("table window must strictly contain K")
    mask = np.zeros(table.coeffs.shape, dtype=bool)
    if len(members):
        mask[members[:, 0] + table.kmax, members[:, 1] + table.mmax] = True
    mag = np.abs(table.coeffs)
    outside = mag[~mask]
    edge = np.concatenate([mag[0], mag[-1], mag[:, 0], mag[:, -1]])
    return TailReport(
        tail_max=float(outside.max()) if outside.size else 0.0,
        tail_sum=float(outside.sum()),
        in_max=float(mag[mask].max()) if mask.any() else 0.0,
        edge_max=float(edge.max()),
    )
