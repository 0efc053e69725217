"""CSV writers for the library's tables.

All files are comma separated with a header row. Floats are written with 17
significant digits so identical inputs give byte-identical files.
"""

import csv

import numpy as np

from .lattice import coset_arrays

__all__ = [
    "fmt",
    "write_rows",
    "write_spectrum_set",
    "write_cosets",
    "write_fourier_table",
    "write_samples",
    "write_grid",
    "write_bound",
    "bound_text",
]


def fmt(x):
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def write_rows(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def write_spectrum_set(path, K):
    write_rows(path, ["k", "m"], (tuple(km) for km in K.members))


def write_cosets(path, spec):
    j, l, s, t = coset_arrays(spec)
    write_rows(path, ["j", "l", "s", "t"], zip(j, l, s, t))


def write_fourier_table(path, table, K=None):
    kset = K.as_set() if K is not None else set()
    rows = (
        (k, m, c.real, c.imag, abs(c), (k, m) in kset)
        for (k, m), c in table.items()
    )
    write_rows(path, ["k", "m", "re", "im", "abs", "in_K"], rows)


def write_samples(path, data):
    j, l, _, _ = coset_arrays(data.spec)
    rows = zip(j, l, data.s, data.t, data.values, data.flags)
    write_rows(path, ["j", "l", "phi", "psi", "value", "measured"], rows)


def write_grid(path, points, values, errors=None):
    phi = points[..., 0].ravel()
    psi = points[..., 1].ravel()
    vals = np.asarray(values).ravel()
    if errors is None:
        write_rows(path, ["phi", "psi", "value"], zip(phi, psi, vals))
    else:
        write_rows(path, ["phi", "psi", "value", "error"],
                   zip(phi, psi, vals, np.asarray(errors).ravel()))


def write_bound(path, bd):
    header = ["eta_star", "eta_c1", "eta_c2", "eta_c3", "l1", "eps1",
              "term_f", "term_tail", "total", "l1_is_upper_bound", "asymptotic"]
    c1, c2, c3 = bd.components
    row = (bd.eta_star, c1, c2, c3, bd.l1, bd.eps1, bd.term_f, bd.term_tail,
           bd.total, bd.l1_is_upper_bound, bd.asymptotic)
    write_rows(path, header, [row])


def bound_text(bd):
    lines = [
        f"eta*          {bd.eta_star:.6g}  (candidates {', '.join(f'{c:.6g}' for c in bd.components)})",
        f"||f||_1       {bd.l1:.6g}{'  (upper bound)' if bd.l1_is_upper_bound else ''}",
        f"eps_1(f, b)   {bd.eps1:.6g}",
        f"term_f        {bd.term_f:.6g}",
        f"term_tail     {bd.term_tail:.6g}",
        f"total         {bd.total:.6g}",
    ]
    if not bd.asymptotic:
        lines.append("note: b is below the asymptotic regime 5/(1-theta^2)^{3/2}")
    return "\n".join(lines)
