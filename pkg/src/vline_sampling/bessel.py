r"""Bessel functions of the first kind for integer order.

Two algorithms cover the validated envelope :math:`|k| \le 200`,
:math:`|x| \le 500`:

* the ascending power series

  .. math:: J_k(x) = \sum_{m \ge 0} \frac{(-1)^m (x/2)^{2m+k}}{m!\,(m+k)!}

  for small arguments, and
* Miller's backward recurrence
  :math:`J_{n-1}(x) = \tfrac{2n}{x} J_n(x) - J_{n+1}(x)`, started far above
  the turning point and normalized by :math:`J_0 + 2\sum_{m\ge1} J_{2m} = 1`.

:func:`bessel_j_table` returns every order :math:`0..n` at once, which is what
the Fourier-coefficient code needs.
"""

import math

import numpy as np

__all__ = [
    "MAX_ORDER",
    "MAX_ARGUMENT",
    "bessel_j",
    "bessel_j_table",
    "bessel_series",
    "siegel_bound",
    "siegel_bound_sharp",
]

MAX_ORDER = 200
MAX_ARGUMENT = 500.0

# Series/recurrence crossover for order 0; see ``_series_threshold``.
_SERIES_X0 = 8.0
_RESCALE = 1e250


def _series_threshold(k):
    return max(_SERIES_X0, k / 2.0)


def _check_envelope(k, x):
    if abs(k) > MAX_ORDER:
        raise ValueError(f"order {k} outside validated envelope |k| <= {MAX_ORDER}")
    if np.any(~np.isfinite(x)) or np.any(np.abs(x) > MAX_ARGUMENT):
        raise ValueError(f"argument outside validated envelope |x| <= {MAX_ARGUMENT}")


def bessel_series(k, x):
    """Ascending power series for ``J_k(x)``, ``k >= 0``.

    Accurate to a few ulps of ``max|term|``; used directly for small
    arguments and as the recurrence's independent check.
    """
    if k < 0:
        raise ValueError("bessel_series expects a non-negative order")
    x = np.asarray(x, dtype=float)
    h = 0.5 * np.abs(x)
    out = np.zeros_like(h)
    nz = h > 0
    if k == 0:
        out[~nz] = 1.0
    if not np.any(nz):
        return np.where(x < 0, (-1) ** k * out, out)
    hz = h[nz]
    term = np.exp(k * np.log(hz) - math.lgamma(k + 1))
    total = term.copy()
    h2 = hz * hz
    m = 0
    while True:
        m += 1
        term = -term * h2 / (m * (m + k))
        total += term
        if m > hz.max() and np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(total), 1e-300)):
            break
        if m > 2000:
            break
    out[nz] = total
    # J_k(-x) = (-1)^k J_k(x)
    if k % 2:
        out = np.where(x < 0, -out, out)
    return out


def _miller_start(nmax, xmax):
    m = max(nmax, xmax)
    n = int(m + 20 + 12 * m ** (1.0 / 3.0))
    return n + (n % 2)


def bessel_j_table(nmax, x):
    """All orders ``J_0(x) .. J_nmax(x)`` by normalized backward recurrence.

    Parameters
    ----------
    nmax : int
        Highest order returned (``0 <= nmax <= MAX_ORDER``).
    x : array_like
        Arguments, ``|x| <= MAX_ARGUMENT``.

    Returns
    -------
    ndarray
        Shape ``(nmax + 1,) + x.shape``.
    """
    x = np.asarray(x, dtype=float)
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    _check_envelope(nmax, x)
    shape = x.shape
    ax = np.abs(x).ravel()
    out = np.zeros((nmax + 1, ax.size))
    # every order uses the series below _SERIES_X0, so only larger
    # arguments go through the recurrence (avoids overflow in 2/x)
    low = ax <= _SERIES_X0
    for k in range(nmax + 1):
        if np.any(low):
            out[k, low] = bessel_series(k, ax[low])
    pos = ~low
    if np.any(pos):
        xs = ax[pos]
        n_start = _miller_start(nmax, float(xs.max()))
        j_next = np.zeros_like(xs)  # J_{n+1}
        j_cur = np.full_like(xs, 1e-300)  # J_n, arbitrary seed
        norm = np.zeros_like(xs)
        vals = np.zeros((nmax + 1, xs.size))
        if n_start <= nmax:
            vals[n_start] = j_cur
        two_over_x = 2.0 / xs
        for n in range(n_start, 0, -1):
            j_prev = n * two_over_x * j_cur - j_next
            j_next, j_cur = j_cur, j_prev
            if (n - 1) <= nmax:
                vals[n - 1] = j_cur
            if (n - 1) % 2 == 0 and n - 1 > 0:
                norm += 2.0 * j_cur
            big = np.abs(j_cur) > _RESCALE
            if np.any(big):
                s = np.where(big, 1.0 / _RESCALE, 1.0)
                j_cur *= s
                j_next *= s
                norm *= s
                vals *= s
        norm += j_cur
        vals /= norm
        # Small arguments: the series is cheaper and exact to rounding there.
        for k in range(nmax + 1):
            small = xs <= _series_threshold(k)
            if np.any(small):
                vals[k, small] = bessel_series(k, xs[small])
        out[:, pos] = vals
    neg = (x.ravel() < 0)
    if np.any(neg):
        odd = np.arange(nmax + 1) % 2 == 1
        out[np.ix_(odd, neg)] *= -1.0
    return out.reshape((nmax + 1,) + shape)


def bessel_j(k, x):
    """First-kind Bessel function ``J_k(x)`` for integer ``k``.

    Parameters
    ----------
    k : int
        Order, ``|k| <= 200``. Negative orders use ``J_{-k} = (-1)^k J_k``.
    x : float or array_like
        Argument, ``|x| <= 500``.

    Returns
    -------
    float or ndarray
        Absolute accuracy about 1e-12 over the envelope.
    """
    k = int(k)
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    _check_envelope(k, x)
    ka = abs(k)
    ax = np.abs(np.atleast_1d(x))
    val = np.empty_like(ax)
    small = ax <= _series_threshold(ka)
    if np.any(small):
        val[small] = bessel_series(ka, ax[small])
    if np.any(~small):
        val[~small] = bessel_j_table(ka, ax[~small])[ka]
    sign = np.where(np.atleast_1d(x) < 0, (-1.0) ** ka, 1.0)
    val = val * sign
    if k < 0 and ka % 2:
        val = -val
    val = val.reshape(x.shape)
    return float(val) if scalar else val


def siegel_bound(v, s):
    r"""Simplified Siegel bound :math:`e^{-(v/3)(1-s^2)^{3/2}}` on :math:`J_v(vs)`.

    Valid for ``v >= 0`` and ``0 < s <= 1``.
    """
    if np.any(np.asarray(v) < 0):
        raise ValueError("siegel_bound requires v >= 0")
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0) or np.any(s > 1):
        raise ValueError("siegel_bound requires 0 < s <= 1")
    out = np.exp(-(v / 3.0) * (1.0 - s * s) ** 1.5)
    return float(out) if out.ndim == 0 else out


def siegel_bound_sharp(v, s):
    r"""Original Siegel inequality
    :math:`s^v e^{v\sqrt{1-s^2}} / (1 + \sqrt{1-s^2})^{v}`.

    The exponent on the denominator is ``v`` (the classical form); with it the
    bound never exceeds :func:`siegel_bound`.
    """
    if np.any(np.asarray(v) < 0):
        raise ValueError("siegel_bound_sharp requires v >= 0")
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0) or np.any(s > 1):
        raise ValueError("siegel_bound_sharp requires 0 < s <= 1")
    w = np.sqrt(1.0 - s * s)
    out = np.exp(v * (np.log(s) + w - np.log1p(w)))
    return float(out) if out.ndim == 0 else out
