"""Run configuration in INI form.

Example::

    [phantom]
    support_radius = 1

    [component.0]
    cx = 0.2
    cy = 0.1
    sigma = 0.125
    amplitude = 1

    [geometry]
    r = 3/2
    b = 5
    theta = 5/6
    # r0 defaults to the phantom support radius

    [run]
    scheme = both          # standard | interlaced | both
    grid = 128             # evaluation / output grid size
    method = direct        # direct | bessel
    conservative_n = false
    spectrum_grid = 512    # FFT grid for the direct coefficients

Numbers may be written as decimals or fractions (``5/6``); geometry values
are kept as exact rationals so the spectrum set is enumerated exactly.
"""

import configparser
from dataclasses import dataclass, replace
from fractions import Fraction
import re

from .phantoms import GaussianComponent, Geometry, Phantom

__all__ = ["ConfigError", "RunConfig", "load_config", "parse_number"]

SCHEMES = ("standard", "interlaced", "both")
METHODS = ("direct", "bessel")
_COMPONENT = re.compile(r"^component\.(\d+)$")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    phantom: Phantom
    geometry: Geometry
    scheme: str = "both"
    grid: int = 128
    method: str = "direct"
    conservative_n: bool = False
    spectrum_grid: int = 512
    out_dir: str = "."

    def with_overrides(self, **kw):
        kw = {k: v for k, v in kw.items() if v is not None}
        cfg = replace(self, **kw)
        cfg.validate()
        return cfg

    def validate(self):
        if self.scheme not in SCHEMES:
            raise ConfigError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.method not in METHODS:
            raise ConfigError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.grid < 2:
            raise ConfigError("grid must be at least 2")
        if self.spectrum_grid < 256 or self.spectrum_grid & (self.spectrum_grid - 1):
            raise ConfigError("spectrum_grid must be a power of two >= 256")


def parse_number(text):
    """Exact rational from ``'1.5'``, ``'5/6'`` or ``'2'``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not a number: {text!r}") from exc


def _get(section, key, name):
    if key not in section:
        raise ConfigError(f"[{name}] is missing required key {key!r}")
    return parse_number(section[key])


def load_config(path):
    """Read and validate a :class:`RunConfig` from an INI file."""
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc

    support = parse_number(cp.get("phantom", "support_radius", fallback="1"))
    comps = []
    indexed = sorted(
        (int(m.group(1)), name) for name in cp.sections() if (m := _COMPONENT.match(name))
    )
    for _, name in indexed:
        sec = cp[name]
        try:
            comps.append(GaussianComponent(
                (float(_get(sec, "cx", name)), float(_get(sec, "cy", name))),
                float(_get(sec, "sigma", name)),
                float(parse_number(sec.get("amplitude", "1"))),
            ))
        except ValueError as exc:
            raise ConfigError(f"[{name}]: {exc}") from exc
    try:
        phantom = Phantom(tuple(comps), float(support))
    except ValueError as exc:
        raise ConfigError(f"phantom: {exc}") from exc

    if "geometry" not in cp:
        raise ConfigError("missing [geometry] section (keys r, b, theta, optional r0)")
    geo = cp["geometry"]
    r0 = parse_number(geo["r0"]) if "r0" in geo else support
    try:
        geometry = Geometry(_get(geo, "r", "geometry"), r0,
                            _get(geo, "b", "geometry"), _get(geo, "theta", "geometry"))
    except ValueError as exc:
        raise ConfigError(f"geometry: {exc}") from exc
    if float(r0) < float(support):
        raise ConfigError(f"geometry r0={r0} is smaller than the phantom support radius {support}")

    run = cp["run"] if "run" in cp else {}
    try:
        cfg = RunConfig(
            phantom=phantom,
            geometry=geometry,
            scheme=run.get("scheme", "both").strip(),
            grid=int(run.get("grid", "128")),
            method=run.get("method", "direct").strip(),
            conservative_n=str(run.get("conservative_n", "false")).strip().lower()
            in ("1", "true", "yes", "on"),
            spectrum_grid=int(run.get("spectrum_grid", "512")),
        )
    except ValueError as exc:
        raise ConfigError(f"[run]: {exc}") from exc
    cfg.validate()
    return cfg
