"""Command-line driver.

Subcommands write CSV files into ``--out``:

``transform``  ``g.csv``: V-line data on a uniform ``grid x grid`` grid.
``spectrum``   ``spectrum_<method>.csv`` and ``K.csv``.
``compare``    per-scheme samples and error grids, ``bound.csv``, ``summary.csv``.
``bound``      ``bound.csv``.

Exit status: 0 when every check passes, 2 when a reconstruction error
exceeds the bound, 3 for configuration or precondition errors.
"""

import argparse
import os
import sys

import numpy as np

from . import export
from .bounds import full_bound
from .config import ConfigError, load_config
from .lattice import build_K, build_lattice
from .sampler import DisjointnessError, evaluation_grid, reconstruct, sample_g
from .schemes import make_scheme
from .spectrum import build_table, default_window
from .transforms import g_extended

EXIT_OK = 0
EXIT_BOUND = 2
EXIT_PRECONDITION = 3


def _parser():
    ap = argparse.ArgumentParser(prog="vline-sampling", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, metavar="PATH")
    common.add_argument("--out", default=".", metavar="DIR")
    common.add_argument("--grid", type=int, metavar="N")
    common.add_argument("--scheme", choices=("standard", "interlaced", "both"))
    common.add_argument("--method", choices=("direct", "bessel"))
    common.add_argument("--conservative-n", action="store_true", default=None,
                        help="use N_phi >= 2 pi rb / theta^2")
    sub.add_parser("transform", parents=[common], help="tabulate g = Vf")
    sub.add_parser("spectrum", parents=[common], help="Fourier coefficients with K flags")
    cmp_ = sub.add_parser("compare", parents=[common], help="run both sampling schemes")
    cmp_.add_argument("--lattice", metavar="P,Q,N",
                      help="replace the scheme lattices with a custom one")
    sub.add_parser("bound", parents=[common], help="evaluate the error bound")
    return ap


def _prepare_out(path):
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {path}: {exc}") from exc
    if not os.access(path, os.W_OK):
        raise ConfigError(f"output directory {path} is not writable")
    return path


def cmd_transform(cfg):
    n = cfg.grid
    pts = evaluation_grid(n, offset=False)
    vals = g_extended(cfg.phantom, pts[..., 0], pts[..., 1], cfg.geometry.r)
    export.write_grid(os.path.join(cfg.out_dir, "g.csv"), pts, vals)
    print(f"wrote g.csv ({n}x{n})")
    return EXIT_OK


def cmd_spectrum(cfg):
    geo = cfg.geometry
    K = build_K(geo.r, geo.b, geo.theta)
    kmax, mmax = default_window(float(geo.r), float(geo.b), float(geo.theta))
    table = build_table(cfg.phantom, float(geo.r), kmax, mmax, method=cfg.method,
                        grid_n=cfg.spectrum_grid, b=float(geo.b))
    export.write_spectrum_set(os.path.join(cfg.out_dir, "K.csv"), K)
    name = f"spectrum_{cfg.method}.csv"
    export.write_fourier_table(os.path.join(cfg.out_dir, name), table, K)
    print(f"wrote {name} (|k|<={kmax}, |m|<={mmax}) and K.csv (|K|={len(K)})")
    return EXIT_OK


def _custom_lattice(text):
    try:
        P, Q, N = (int(v) for v in text.split(","))
        return build_lattice(P, Q, N)
    except ValueError as exc:
        raise ConfigError(f"--lattice expects P,Q,N with 0 <= N < P: {exc}") from exc


def cmd_compare(cfg, lattice_override=None):
    geo, p = cfg.geometry, cfg.phantom
    K = build_K(geo.r, geo.b, geo.theta)
    kinds = ("standard", "interlaced") if cfg.scheme == "both" else (cfg.scheme,)
    pts = evaluation_grid(cfg.grid)
    exact = g_extended(p, pts[..., 0], pts[..., 1], geo.r)
    bd = full_bound(p, geo)
    errs, budgets = {}, {}
    for kind in kinds:
        if lattice_override is not None:
            lattice = _custom_lattice(lattice_override)
        else:
            lattice = make_scheme(kind, geo, cfg.conservative_n).lattice
        data = sample_g(p, lattice, geo)
        approx = reconstruct(data, K, pts)
        err = np.abs(approx - exact)
        errs[kind] = float(err.max())
        budgets[kind] = data.measured_count
        export.write_samples(os.path.join(cfg.out_dir, f"samples_{kind}.csv"), data)
        export.write_grid(os.path.join(cfg.out_dir, f"error_grid_{kind}.csv"), pts, approx, err)
    export.write_bound(os.path.join(cfg.out_dir, "bound.csv"), bd)

    th = float(geo.theta)
    m_std = budgets.get("standard")
    m_int = budgets.get("interlaced")
    ratio = m_int / m_std if (m_std and m_int is not None) else float("nan")
    header = ["scheme", "m0", "sup_error", "bound", "within_bound"]
    rows = [(k, budgets[k], errs[k], bd.total, errs[k] <= bd.total) for k in kinds]
    export.write_rows(os.path.join(cfg.out_dir, "summary.csv"), header, rows)

    print(export.bound_text(bd))
    for k in kinds:
        print(f"{k:<11} M0={budgets[k]:<7d} sup_error={errs[k]:.6g}")
    if len(kinds) == 2:
        predicted = (1 + 2 * th) / (2 * (1 + th))
        print(f"budget ratio interlaced/standard = {ratio:.6g} (asymptotic {predicted:.6g})")
    ok = all(errs[k] <= bd.total for k in kinds)
    print("all sup errors within bound" if ok else "BOUND VIOLATED")
    return EXIT_OK if ok else EXIT_BOUND


def cmd_bound(cfg):
    bd = full_bound(cfg.phantom, cfg.geometry)
    export.write_bound(os.path.join(cfg.out_dir, "bound.csv"), bd)
    print(export.bound_text(bd))
    return EXIT_OK


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        cfg = load_config(args.config).with_overrides(
            grid=args.grid, scheme=args.scheme, method=args.method,
            conservative_n=args.conservative_n, out_dir=args.out,
        )
        _prepare_out(cfg.out_dir)
        if args.command == "transform":
            return cmd_transform(cfg)
        if args.command == "spectrum":
            return cmd_spectrum(cfg)
        if args.command == "compare":
            return cmd_compare(cfg, args.lattice)
        return cmd_bound(cfg)
    except DisjointnessError as exc:
        print(f"error: sampling lattice too coarse: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
