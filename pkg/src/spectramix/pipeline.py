"""End-to-end orchestration shared by the CLI and the HTTP service.

Requests come in as hex sRGB strings plus mixing parts; this module
recovers (or catalog-matches) a reflectance curve per input, mixes the
curves, converts forward with gamut clipping, and packages results and
solver diagnostics in plain dataclasses.  Both front ends serialize the
same objects, so their outputs agree by construction.
"""

from __future__ import annotations

import importlib.resources
import os
from dataclasses import dataclass

import numpy as np

from .catalog import Catalog, catalog_mix, load_catalog, nearest_entry
from .colorimetry import (
    Srgb8,
    as_srgb8,
    clip_gamut,
    linear_rgb_to_srgb8,
    reflectance_to_linear_rgb,
)
from .errors import DomainError, NonConvergenceError
from .mixing import MixInput, mixing_path, weights_from_parts, wgm_mix
from .recovery import ALGORITHMS, NewtonSettings, RecoveryResult, recover

__all__ = [
    "DEFAULT_ALGORITHM",
    "DEFAULT_STEPS",
    "MIX_ALGORITHMS",
    "MixRequest",
    "InputReport",
    "PathSwatch",
    "MixOutcome",
    "RecoverOutcome",
    "parse_hex",
    "format_hex",
    "perform_mix",
    "perform_recover",
    "ppm_strip_bytes",
    "load_active_catalog",
]

#: Environment variable naming the default catalog CSV.
CATALOG_ENV_VAR = "SPECTRAMIX_CATALOG"

DEFAULT_ALGORITHM = "illss"
DEFAULT_STEPS = 9
PPM_STRIPE_SIZE = 64

MIX_ALGORITHMS = ALGORITHMS + ("catalog",)


def parse_hex(text: str) -> Srgb8:
    """Parse `RRGGBB` (optional leading '#', any case) into an Srgb8."""
    if not isinstance(text, str):
        raise DomainError(f"hex color must be a string, got {type(text).__name__}")
    body = text[1:] if text.startswith("#") else text
    if len(body) != 6:
        raise DomainError(f"hex color must have 6 digits, got {text!r}")
    try:
        value = int(body, 16)
    except ValueError:
        raise DomainError(f"invalid hex color {text!r}") from None
    return Srgb8(value >> 16, (value >> 8) & 0xFF, value & 0xFF)


def format_hex(srgb: Srgb8) -> str:
    """Canonical hex form: six uppercase digits, no '#'."""
    r, g, b = as_srgb8(srgb)
    return f"{r:02X}{g:02X}{b:02X}"


@dataclass(frozen=True)
class MixRequest:
    """A mixing job: hex colors with parts, plus algorithm options.

    `steps` controls the two-color mixing path (interior ratio count);
    None means the default for two-color mixes and no path otherwise.
    `metric` only matters for the catalog algorithm.
    """

    colors: tuple[tuple[str, float], ...]
    algorithm: str = DEFAULT_ALGORITHM
    steps: int | None = None
    metric: str = "lab"

    def __post_init__(self):
        object.__setattr__(
            self, "colors", tuple((str(h), float(p)) for h, p in self.colors)
        )
        if not self.colors:
            raise DomainError("mix request needs at least one color")
        if self.algorithm not in MIX_ALGORITHMS:
            raise DomainError(
                f"unknown algorithm {self.algorithm!r}; expected one of {MIX_ALGORITHMS}"
            )
        if self.steps is not None:
            if int(self.steps) != self.steps or self.steps < 1:
                raise DomainError(f"steps must be a positive integer, got {self.steps}")
            object.__setattr__(self, "steps", int(self.steps))
            if len(self.colors) != 2:
                raise DomainError(
                    f"a mixing path needs exactly two colors, got {len(self.colors)}"
                )


@dataclass(frozen=True)
class InputReport:
    """Recovered or matched curve for one input, with solver counts."""

    hex: str
    reflectance: np.ndarray
    inner_iterations: int = 0
    outer_iterations: int = 0
    converged: bool = True
    matched_name: str | None = None

    def as_dict(self) -> dict:
        return {
            "hex": self.hex,
            "reflectance": [float(v) for v in self.reflectance],
            "inner_iterations": self.inner_iterations,
            "outer_iterations": self.outer_iterations,
            "converged": self.converged,
            "matched_name": self.matched_name,
        }


@dataclass(frozen=True)
class PathSwatch:
    """One stop on a two-color mixing path."""

    parts: tuple[int, int]
    hex: str
    reflectance: np.ndarray
    clipped: bool

    def as_dict(self) -> dict:
        return {
            "parts": list(self.parts),
            "hex": self.hex,
            "reflectance": [float(v) for v in self.reflectance],
            "clipped": self.clipped,
        }


@dataclass(frozen=True)
class MixOutcome:
    """Mixed color plus everything needed to audit how it was made."""

    result_hex: str
    result_reflectance: np.ndarray
    clipped: bool
    algorithm: str
    inputs: tuple[InputReport, ...]
    path: tuple[PathSwatch, ...] | None

    def as_dict(self) -> dict:
        return {
            "result_hex": self.result_hex,
            "result_reflectance": [float(v) for v in self.result_reflectance],
            "clipped": self.clipped,
            "algorithm": self.algorithm,
            "inputs": [r.as_dict() for r in self.inputs],
            "path": None if self.path is None else [s.as_dict() for s in self.path],
        }


@dataclass(frozen=True)
class RecoverOutcome:
    """A recovered curve plus its round-trip rendering and solver counts."""

    hex: str
    algorithm: str
    reflectance: np.ndarray
    inner_iterations: int
    outer_iterations: int
    converged: bool
    round_trip_hex: str

    def as_dict(self) -> dict:
        return {
            "hex": self.hex,
            "algorithm": self.algorithm,
            "reflectance": [float(v) for v in self.reflectance],
            "inner_iterations": self.inner_iterations,
            "outer_iterations": self.outer_iterations,
            "converged": self.converged,
            "round_trip_hex": self.round_trip_hex,
        }


def _forward_hex(rho) -> tuple[str, bool]:
    clipped_rgb, was_clipped = clip_gamut(reflectance_to_linear_rgb(rho))
    return format_hex(linear_rgb_to_srgb8(clipped_rgb)), was_clipped


def _recover_checked(srgb: Srgb8, algorithm: str, settings: NewtonSettings | None) -> RecoveryResult:
    result = recover(srgb, algorithm, settings)
    if not result.converged:
        raise NonConvergenceError(
            f"{algorithm} did not converge for {format_hex(srgb)}",
            diagnostics={
                "algorithm": algorithm,
                "hex": format_hex(srgb),
                "inner_iterations": result.inner_iterations,
                "outer_iterations": result.outer_iterations,
            },
        )
    return result


def _path_swatches(a, b, steps: int) -> tuple[PathSwatch, ...]:
    swatches = []
    for i, rho in enumerate(mixing_path(a, b, steps)):
        hex_, clipped = _forward_hex(rho)
        swatches.append(
            PathSwatch(parts=(steps + 1 - i, i), hex=hex_, reflectance=rho, clipped=clipped)
        )
    return tuple(swatches)


def perform_mix(
    request: MixRequest,
    catalog: Catalog | None = None,
    settings: NewtonSettings | None = None,
) -> MixOutcome:
    """Run a full mix: per-input curves, WGM blend, forward conversion.

    The catalog algorithm needs `catalog`; recovery algorithms ignore
    it.  Raises DomainError for bad requests and NonConvergenceError
    (with diagnostics) when a solver exhausts its iteration budget.
    """
    srgbs = [parse_hex(h) for h, _ in request.colors]
    parts = [p for _, p in request.colors]
    weights = weights_from_parts(parts)  # validates parts before any solve

    if request.algorithm == "catalog":
        if catalog is None:
            raise DomainError("catalog algorithm requested but no catalog is loaded")
        matched = [nearest_entry(s, catalog, request.metric) for s in srgbs]
        mix_result = catalog_mix(
            list(zip(srgbs, parts)), catalog, metric=request.metric
        )
        inputs = tuple(
            InputReport(
                hex=format_hex(entry.srgb),
                reflectance=entry.reflectance,
                matched_name=entry.name,
            )
            for entry in matched
        )
        curves = [entry.reflectance for entry in matched]
        result_hex = format_hex(mix_result.srgb)
        result_rho = mix_result.reflectance
        clipped = mix_result.clipped
    else:
        recoveries = [_recover_checked(s, request.algorithm, settings) for s in srgbs]
        inputs = tuple(
            InputReport(
                hex=format_hex(s),
                reflectance=r.rho,
                inner_iterations=r.inner_iterations,
                outer_iterations=r.outer_iterations,
                converged=r.converged,
            )
            for s, r in zip(srgbs, recoveries)
        )
        curves = [r.rho for r in recoveries]
        result_rho = wgm_mix(MixInput(curves=tuple(curves), weights=weights))
        result_hex, clipped = _forward_hex(result_rho)

    path = None
    if len(curves) == 2:
        steps = DEFAULT_STEPS if request.steps is None else request.steps
        path = _path_swatches(curves[0], curves[1], steps)

    return MixOutcome(
        result_hex=result_hex,
        result_reflectance=result_rho,
        clipped=clipped,
        algorithm=request.algorithm,
        inputs=inputs,
        path=path,
    )


def perform_recover(
    color: str, algorithm: str = DEFAULT_ALGORITHM, settings: NewtonSettings | None = None
) -> RecoverOutcome:
    """Recover one hex color's curve and report its round-trip hex."""
    srgb = parse_hex(color)
    result = _recover_checked(srgb, algorithm, settings)
    round_trip, _ = _forward_hex(result.rho)
    return RecoverOutcome(
        hex=format_hex(srgb),
        algorithm=algorithm,
        reflectance=result.rho,
        inner_iterations=result.inner_iterations,
        outer_iterations=result.outer_iterations,
        converged=result.converged,
        round_trip_hex=round_trip,
    )


def load_active_catalog(explicit: str | None = None) -> Catalog:
    """Load the catalog to serve queries from.

    Resolution order: explicit path argument, then the CATALOG_ENV_VAR
    environment variable, then the bundled sample catalog.
    """
    path = explicit or os.environ.get(CATALOG_ENV_VAR)
    if path:
        return load_catalog(path)
    resource = importlib.resources.files("spectramix").joinpath(
        "data/sample_catalog.csv"
    )
    with importlib.resources.as_file(resource) as real_path:
        return load_catalog(real_path)


def ppm_strip_bytes(hexes, stripe: int = PPM_STRIPE_SIZE) -> bytes:
    """Render hex colors as a horizontal strip of square stripes.

    Binary PPM (P6), `stripe` x `stripe` pixels per color, deterministic
    byte-for-byte for a fixed input.
    """
    colors = [parse_hex(h) if isinstance(h, str) else as_srgb8(h) for h in hexes]
    if not colors:
        raise DomainError("ppm strip needs at least one color")
    if stripe < 1:
        raise DomainError(f"stripe size must be >= 1, got {stripe}")
    width = stripe * len(colors)
    header = f"P6\n{width} {stripe}\n255\n".encode("ascii")
    row = b"".join(bytes(c) * stripe for c in colors)
    return header + row * stripe
