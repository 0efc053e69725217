r"""Explicit error bound for the sampling series of V-line data.

With :math:`\eta(\vartheta,\gamma) = \gamma\vartheta\,e^{-(\gamma/3)(1-\vartheta^2)^{3/2}}`
and :math:`u = 1-\vartheta^2`,

.. math::
    \eta_1 &= \Bigl(\tfrac{3}{u^{3/2}} + \tfrac{9}{u^3\gamma}\Bigr)\eta, \qquad
    \eta_2 = \Bigl(\tfrac{9}{u^3} + \tfrac{54}{u^{9/2}\gamma}\Bigr)\eta, \qquad
    \eta_3 = \gamma\eta_1 + \eta_2,

    \eta^* &= \max\Bigl\{\tfrac{2b}{\vartheta^2}\eta_1(\vartheta, rb/\vartheta),\;
        \tfrac1r\eta_2(\vartheta, rb/\vartheta^2),\;
        \tfrac{\vartheta}{r^2-\bar r^2}\eta_3(\vartheta, rb/\vartheta^2)\Bigr\},
        \quad \bar r = 2-\vartheta^2,

and the sup-norm reconstruction error is bounded by

.. math::
    \frac{12}{\pi}\eta^*\|f\|_{L^1} + \frac{4r^2}{\pi\vartheta^3}(2b+1)\,\epsilon_1(f,b).
"""

from dataclasses import dataclass
import math

from .phantoms import band_tail, l1_norm

__all__ = [
    "BoundBreakdown",
    "eta",
    "eta123",
    "eta_star",
    "full_bound",
    "asymptotic_threshold",
]


@dataclass(frozen=True)
class BoundBreakdown:
    eta_star: float
    components: tuple
    term_f: float = 0.0
    term_tail: float = 0.0
    l1: float = 0.0
    eps1: float = 0.0
    l1_is_upper_bound: bool = False
    asymptotic: bool = True

    @property
    def total(self):
        return self.term_f + self.term_tail


def _check_theta(theta):
    if not 0 < theta < 1:
        raise ValueError(f"theta must lie in (0, 1), got {theta}")


def eta(theta, gamma):
    """``gamma * theta * exp(-(gamma/3) (1 - theta^2)^{3/2})``."""
    _check_theta(theta)
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    return gamma * theta * math.exp(-(gamma / 3.0) * (1.0 - theta * theta) ** 1.5)


def eta123(theta, gamma):
    """``(eta_1, eta_2, eta_3)`` at ``(theta, gamma)``; ``gamma`` must be positive."""
    _check_theta(theta)
    if not gamma > 0:
        raise ValueError("eta_1 and eta_2 contain 1/gamma; gamma must be positive")
    u = 1.0 - theta * theta
    e = eta(theta, gamma)
    e1 = (3.0 / u**1.5 + 9.0 / (u**3 * gamma)) * e
    e2 = (9.0 / u**3 + 54.0 / (u**4.5 * gamma)) * e
    return e1, e2, gamma * e1 + e2


def eta_star(geom):
    """``BoundBreakdown`` carrying ``eta*`` and its three candidates."""
    r, b, th = float(geom.r), float(geom.b), float(geom.theta)
    rbar = 2.0 - th * th
    if not rbar < r:
        raise ValueError(f"need 2 - theta^2 < r (got {rbar:.6g} >= {r})")
    rb = r * b
    c1 = (2 * b / th**2) * eta123(th, rb / th)[0]
    c2 = (1 / r) * eta123(th, rb / th**2)[1]
    c3 = (th / (r * r - rbar * rbar)) * eta123(th, rb / th**2)[2]
    comps = (c1, c2, c3)
    return BoundBreakdown(eta_star=max(comps), components=comps)


def asymptotic_threshold(theta):
    """Heuristic band limit ``5 / (1 - theta^2)^{3/2}`` above which the bound's
    large-``b`` regime is considered reached."""
    return 5.0 / (1.0 - theta * theta) ** 1.5


def full_bound(p, geom):
    """Right-hand side of the reconstruction error bound for phantom ``p``."""
    es = eta_star(geom)
    r, b, th = float(geom.r), float(geom.b), float(geom.theta)
    l1 = l1_norm(p)
    eps1 = band_tail(p, 1, b)
    return BoundBreakdown(
        eta_star=es.eta_star,
        components=es.components,
        term_f=(12.0 / math.pi) * es.eta_star * l1,
        term_tail=(4 * r * r / (math.pi * th**3)) * (2 * b + 1) * eps1,
        l1=l1,
        eps1=eps1,
        l1_is_upper_bound=not p.single_signed,
        asymptotic=b >= asymptotic_threshold(th),
    )
