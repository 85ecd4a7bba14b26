"""Subtractive mixing of reflectance curves.

The mixing rule is the weighted geometric mean: each curve is raised to
the fraction of the total it contributes, then the curves are multiplied
per wavelength.  Equal parts of two colors reduce to the square root of
the product.  Zeros are rejected, not floored: a zero reflectance acts
as a colorant with infinite shading power, so curves must be floored at
ingestion (see catalog loading) before they ever reach a mix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .colorimetry import Srgb8, as_reflectance
from .errors import DomainError

__all__ = [
    "REFLECTANCE_FLOOR",
    "MixWeights",
    "MixInput",
    "weights_from_parts",
    "wgm_mix",
    "mixing_path",
    "naive_multiply_rgb",
    "filter_product",
    "floor_reflectance",
]

#: Smallest reflectance admitted into a mix; applied at ingestion points.
REFLECTANCE_FLOOR = 1e-5


@dataclass(frozen=True)
class MixWeights:
    """Normalized mixing exponents: nonnegative, summing to 1.

    Construction renormalizes, so user-entered parts that sum to 1 only
    approximately still satisfy the invariant to within 1e-12.
    """

    deltas: np.ndarray

    def __post_init__(self):
        deltas = np.asarray(self.deltas, dtype=float)
        if deltas.ndim != 1 or deltas.size < 1:
            raise DomainError("weights must be a nonempty 1-d sequence")
        if np.any(~np.isfinite(deltas)) or np.any(deltas < 0):
            raise DomainError(f"weights must be finite and nonnegative, got {deltas}")
        total = deltas.sum()
        if total <= 0:
            raise DomainError("at least one weight must be positive")
        deltas = deltas / total
        deltas.setflags(write=False)
        object.__setattr__(self, "deltas", deltas)

    def __len__(self) -> int:
        return self.deltas.size


def weights_from_parts(parts) -> MixWeights:
    """Proportions by parts -> normalized exponents (5:2 -> 5/7, 2/7)."""
    return MixWeights(np.asarray(parts, dtype=float))


@dataclass(frozen=True)
class MixInput:
    """Curves paired with their mixing weights, one weight per curve.

    Curves must be strictly positive; ingestion points floor raw data at
    REFLECTANCE_FLOOR so catalog curves always qualify.
    """

    curves: tuple[np.ndarray, ...]
    weights: MixWeights

    def __post_init__(self):
        curves = tuple(as_reflectance(c) for c in self.curves)
        if len(curves) != len(self.weights):
            raise DomainError(
                f"got {len(curves)} curves but {len(self.weights)} weights"
            )
        for k, curve in enumerate(curves):
            bad = np.nonzero(curve <= 0)[0]
            if bad.size:
                raise DomainError(
                    f"curve {k} has nonpositive reflectance {curve[bad[0]]} at index "
                    f"{bad[0]} ({380 + 10 * int(bad[0])} nm); zeros have infinite shading power"
                )
        object.__setattr__(self, "curves", curves)


def wgm_mix(mix: MixInput) -> np.ndarray:
    """Weighted geometric mean of the input curves, per wavelength.

    The result lies between the per-wavelength min and max of the inputs.
    Plain power-products (not log-space) keep degenerate weights exact:
    weights (1, 0, ...) return the first curve bitwise.
    """
    out = np.ones(36)
    for curve, delta in zip(mix.curves, mix.weights.deltas):
        out = out * np.power(curve, delta)
    return out


def floor_reflectance(rho, floor: float = REFLECTANCE_FLOOR) -> np.ndarray:
    """Raise values below `floor` to it; used when ingesting raw curves."""
    return np.maximum(as_reflectance(rho), floor)


def mixing_path(a, b, steps: int) -> list[np.ndarray]:
    """Sweep from pure `a` to pure `b` through `steps` interior mixes.

    Interior mix k uses parts (steps+1-k : k), so steps=9 gives the
    familiar 9:1, 8:2, ..., 1:9 progression.  The first and last entries
    are the unmixed inputs themselves.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    a = as_reflectance(a)
    b = as_reflectance(b)
    path = [a.copy()]
    for k in range(1, steps + 1):
        weights = weights_from_parts([steps + 1 - k, k])
        path.append(wgm_mix(MixInput((a, b), weights)))
    path.append(b.copy())
    return path


def naive_multiply_rgb(a: Srgb8, b: Srgb8) -> Srgb8:
    """Multiply sRGB channels on the 0-1 scale and re-quantize.

    The classic broken baseline: it nails the cyan/magenta/yellow
    identities but collapses red x yellow to red and makes white inert.
    Kept for tests and documentation, not for actual mixing.
    """
    products = [(x / 255.0) * (y / 255.0) for x, y in zip(a, b)]
    return Srgb8(*(int(np.floor(255.0 * p + 0.5)) for p in products))


def filter_product(a, b) -> np.ndarray:
    """Per-wavelength plain product of two curves.

    Models white light passing through two stacked transmittance
    filters; this is not the paint-mixing rule (use wgm_mix for that).
    """
    return as_reflectance(a) * as_reflectance(b)
