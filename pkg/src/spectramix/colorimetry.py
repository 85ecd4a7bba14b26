"""Spectral-to-sRGB colorimetry: canonical data tables and conversions.

Reflectance curves are sampled on a fixed 36-point grid, 380-730 nm in
10 nm steps.  A reflectance curve maps to D65-referenced linear rgb
through a single 3x36 matrix (``T_CANONICAL``); linear rgb maps to 8-bit
sRGB through gamma companding.  All tables are module-level constants
loaded once from the plain-text files in ``spectramix/data`` and are
immutable; every function here is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

import numpy as np

from .errors import DegenerateIlluminantError, DomainError

__all__ = [
    "WAVELENGTHS_NM",
    "N_WAVELENGTHS",
    "CMF_CIE1931",
    "SRGB_M",
    "D65_SPD",
    "T_CANONICAL",
    "WHITE_XYZ",
    "LinearRgb",
    "Srgb8",
    "Xyz",
    "Lab",
    "TMatrix",
    "as_reflectance",
    "srgb_decode",
    "srgb_encode",
    "reflectance_to_linear_rgb",
    "linear_rgb_to_srgb8",
    "srgb8_to_linear",
    "as_srgb8",
    "clip_gamut",
    "compose_t_matrix",
    "xyz_from_linear_rgb",
    "xyz_to_lab",
    "srgb8_to_lab",
]

WAVELENGTHS_NM = np.arange(380, 731, 10)
N_WAVELENGTHS = 36

# Companding constants from the sRGB standard (IEC 61966-2-1).
_DECODE_THRESHOLD = 0.04045
_ENCODE_THRESHOLD = 0.0031308
_LINEAR_SLOPE = 12.92
_GAMMA = 2.4
_OFFSET = 0.055

# CIE 1976 L*a*b* piecewise threshold (6/29)^3 and linear-branch slope.
_LAB_EPS = (6.0 / 29.0) ** 3
_LAB_SLOPE = 1.0 / (3.0 * (6.0 / 29.0) ** 2)


class LinearRgb(NamedTuple):
    """Pre-companding rgb intensities; may lie outside [0, 1] (out of gamut)."""

    r: float
    g: float
    b: float

    def in_gamut(self) -> bool:
        return all(0.0 <= v <= 1.0 for v in self)


class Srgb8(NamedTuple):
    """Companded 8-bit sRGB triple, each channel an integer in 0-255."""

    r: int
    g: int
    b: int


class Xyz(NamedTuple):
    """Tristimulus values, scaled so Y = 1 at the reference white."""

    x: float
    y: float
    z: float


class Lab(NamedTuple):
    """CIE 1976 L*a*b* coordinates under the D65 white point."""

    l: float
    a: float
    b: float


@dataclass(frozen=True)
class TMatrix:
    """3x36 map from a reflectance curve to D65-referenced linear rgb.

    Each row sums to 1 (within 1e-3): the all-ones curve is the white
    point, whose linear rgb is (1, 1, 1) by construction.
    """

    entries: np.ndarray
    provenance: str = "builtin-srgb-d65"

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (3, N_WAVELENGTHS):
            raise DomainError(f"T matrix must be 3x{N_WAVELENGTHS}, got {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise DomainError("T matrix entries must be finite")
        row_sums = entries.sum(axis=1)
        if np.any(np.abs(row_sums - 1.0) > 1e-3):
            raise DomainError(f"T matrix rows must sum to 1 within 1e-3, got {row_sums}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)


def _load_rows(name: str) -> np.ndarray:
    text = (resources.files("spectramix") / "data" / name).read_text(encoding="utf-8")
    rows = [[float(cell) for cell in line.split(",")] for line in text.splitlines() if line.strip()]
    out = np.array(rows, dtype=float)
    out.setflags(write=False)
    return out


def _validate_cmf(a: np.ndarray) -> np.ndarray:
    if a.shape != (3, N_WAVELENGTHS):
        raise DomainError(f"CMF matrix must be 3x{N_WAVELENGTHS}, got {a.shape}")
    if np.any(a < 0):
        raise DomainError("CMF entries must be nonnegative")
    if np.any(a[1, 1:-1] <= 0):
        raise DomainError("luminance CMF row must be strictly positive on interior wavelengths")
    return a


def _validate_rgb_matrix(m: np.ndarray) -> np.ndarray:
    if m.shape != (3, 3):
        raise DomainError(f"rgb conversion matrix must be 3x3, got {m.shape}")
    if not np.isfinite(np.linalg.cond(m)) or np.linalg.cond(m) > 1e8:
        raise DomainError("rgb conversion matrix is singular or badly conditioned")
    return m


#: CIE 1931 2-degree color matching functions (xbar, ybar, zbar rows).
CMF_CIE1931 = _validate_cmf(_load_rows("cie1931_cmf_2deg.csv"))

#: XYZ -> linear sRGB conversion matrix, D65 referenced.
SRGB_M = _validate_rgb_matrix(_load_rows("xyz_to_srgb.csv"))

#: Relative spectral power of CIE standard illuminant D65 on the 10 nm grid.
D65_SPD = _load_rows("d65_spd.csv")[0]

#: Canonical reflectance -> linear rgb matrix: the source of truth.
T_CANONICAL = TMatrix(_load_rows("t_matrix_srgb_d65.csv"), provenance="builtin-srgb-d65")

#: D65 white point, defined as the XYZ whose linear rgb is (1, 1, 1).
WHITE_XYZ = Xyz(*np.linalg.solve(SRGB_M, np.ones(3)))


def as_reflectance(values) -> np.ndarray:
    """Validate and return a 36-sample reflectance curve as a float array.

    Only shape and finiteness are checked here; positivity and the [0, 1]
    range are contracts of the individual producers (mixing requires
    strictly positive curves, LLSS may exceed 1).
    """
    rho = np.asarray(values, dtype=float)
    if rho.shape != (N_WAVELENGTHS,):
        raise DomainError(f"reflectance curve must have {N_WAVELENGTHS} samples, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise DomainError("reflectance curve values must be finite")
    return rho


def srgb_decode(v: float) -> float:
    """Companded sRGB channel in [0, 1] -> linear channel (inverse gamma)."""
    if not 0.0 <= v <= 1.0:
        raise DomainError(f"companded channel must be in [0, 1], got {v}")
    if v < _DECODE_THRESHOLD:
        return v / _LINEAR_SLOPE
    return ((v + _OFFSET) / (1 + _OFFSET)) ** _GAMMA


def srgb_encode(v: float) -> float:
    """Linear channel in [0, 1] -> companded sRGB channel (gamma companding)."""
    if not 0.0 <= v <= 1.0:
        raise DomainError(f"linear channel must be in [0, 1], got {v}")
    if v <= _ENCODE_THRESHOLD:
        return _LINEAR_SLOPE * v
    if v == 1.0:
        return 1.0  # the power formula drops an ulp at the top end
    return (1 + _OFFSET) * v ** (1.0 / _GAMMA) - _OFFSET


def reflectance_to_linear_rgb(rho, t: TMatrix = T_CANONICAL) -> LinearRgb:
    """Exact 3x36 matrix-vector product; no clipping is applied."""
    rho = as_reflectance(rho)
    return LinearRgb(*(t.entries @ rho))


def clip_gamut(rgb: LinearRgb) -> tuple[LinearRgb, bool]:
    """Clamp each channel to [0, 1]; the flag reports whether anything moved."""
    clipped = LinearRgb(*(min(1.0, max(0.0, v)) for v in rgb))
    return clipped, clipped != tuple(rgb)


def linear_rgb_to_srgb8(rgb: LinearRgb) -> Srgb8:
    """Compand an already-clipped linear triple and quantize to 0-255.

    Rounding is half-away-from-zero.  Unclipped input is a caller bug,
    so it raises rather than clipping silently (use clip_gamut first).
    """
    if not all(0.0 <= v <= 1.0 for v in rgb):
        raise DomainError(f"linear rgb must be clipped to [0, 1] before companding, got {tuple(rgb)}")
    return Srgb8(*(int(math.floor(255.0 * srgb_encode(v) + 0.5)) for v in rgb))


def srgb8_to_linear(c: Srgb8) -> LinearRgb:
    """8-bit sRGB triple -> linear rgb (divide by 255, then decode)."""
    c = as_srgb8(c)
    return LinearRgb(*(srgb_decode(v / 255.0) for v in c))


def as_srgb8(c) -> Srgb8:
    """Validate a triple of integers in 0-255 and return it as Srgb8."""
    try:
        r, g, b = c
    except (TypeError, ValueError):
        raise DomainError(f"sRGB triple expected, got {c!r}") from None
    channels = []
    for v in (r, g, b):
        try:
            iv = int(v)
        except (TypeError, ValueError):
            raise DomainError(f"sRGB channels must be integers in 0-255, got {(r, g, b)}") from None
        if iv != v or not 0 <= iv <= 255:
            raise DomainError(f"sRGB channels must be integers in 0-255, got {(r, g, b)}")
        channels.append(iv)
    return Srgb8(*channels)


def compose_t_matrix(cmf, m, illuminant) -> TMatrix:
    """Build T = M . A' . diag(W) / w from its constituent tables.

    w is the scalar product of the illuminant with the luminance CMF row,
    which cancels the illuminant's units and pins Y = 1 at the white
    point.  Exists for validation of the canonical table and for
    alternate observers / color spaces / illuminants.
    """
    a = _validate_cmf(np.asarray(cmf, dtype=float))
    m = _validate_rgb_matrix(np.asarray(m, dtype=float))
    w_vec = np.asarray(illuminant, dtype=float)
    if w_vec.shape != (N_WAVELENGTHS,):
        raise DomainError(f"illuminant must have {N_WAVELENGTHS} samples, got shape {w_vec.shape}")
    if np.any(w_vec < 0) or not np.any(w_vec > 0):
        raise DomainError("illuminant power must be nonnegative and not all zero")
    w = float(a[1] @ w_vec)
    if w <= 0.0:
        raise DegenerateIlluminantError("illuminant normalization (ybar . W) must be positive")
    return TMatrix(m @ a @ np.diag(w_vec) / w, provenance="composed")


def xyz_from_linear_rgb(rgb: LinearRgb, m=SRGB_M) -> Xyz:
    """Invert the XYZ -> rgb map with a dense 3x3 solve."""
    return Xyz(*np.linalg.solve(np.asarray(m, dtype=float), np.asarray(rgb, dtype=float)))


def _lab_f(t: float) -> float:
    # Linear branch also covers t < 0 (out-of-gamut colors), keeping f real.
    if t > _LAB_EPS:
        return t ** (1.0 / 3.0)
    return _LAB_SLOPE * t + 4.0 / 29.0


def xyz_to_lab(xyz: Xyz, white: Xyz = WHITE_XYZ) -> Lab:
    """Standard CIE 1976 L*a*b* relative to the given white point."""
    if not all(v > 0 for v in white):
        raise DomainError(f"white point components must be positive, got {tuple(white)}")
    fx = _lab_f(xyz[0] / white[0])
    fy = _lab_f(xyz[1] / white[1])
    fz = _lab_f(xyz[2] / white[2])
    return Lab(116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def srgb8_to_lab(c: Srgb8) -> Lab:
    """Decode an 8-bit triple and express it in L*a*b* (D65 white)."""
    return xyz_to_lab(xyz_from_linear_rgb(srgb8_to_linear(c)))
