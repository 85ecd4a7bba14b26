"""Named reflectance curves and nearest-color queries over them.

A catalog is an ordered, immutable collection of named 36-sample
reflectance curves loaded from CSV.  Each entry carries its forward
conversions (unclipped linear rgb, L*a*b* of that unclipped rgb, and
8-bit sRGB after gamut clipping) so queries reduce to vectorized
distance scans.  Out-of-gamut entries are kept and remain matchable;
clipping only affects the 8-bit rendering, never whether they compete.
"""

from __future__ import annotations

import csv
import io
import os
import warnings
from dataclasses import dataclass, field

import numpy as np

from .colorimetry import (
    N_WAVELENGTHS,
    Lab,
    LinearRgb,
    Srgb8,
    as_srgb8,
    clip_gamut,
    linear_rgb_to_srgb8,
    reflectance_to_linear_rgb,
    srgb8_to_lab,
    xyz_from_linear_rgb,
    xyz_to_lab,
)
from .errors import CatalogError, DomainError
from .mixing import REFLECTANCE_FLOOR, MixInput, weights_from_parts, wgm_mix

__all__ = [
    "CatalogEntry",
    "Catalog",
    "CatalogMixResult",
    "entry_from_reflectance",
    "load_catalog",
    "nearest_entry",
    "catalog_mix",
    "METRICS",
]

#: Accepted nearest-neighbor metrics: squared distance over 8-bit sRGB
#: channels, or squared distance in L*a*b* (the default used by callers).
METRICS = ("srgb", "lab")


@dataclass(frozen=True)
class CatalogEntry:
    """One named curve plus its precomputed colorimetric renderings.

    `linear` is the raw T-projection of the curve and may leave [0, 1];
    `lab` is computed from that unclipped triple so out-of-gamut entries
    keep distinct coordinates, while `srgb` is the clipped, quantized
    rendering used for display and for 8-bit channel distances.
    """

    name: str
    reflectance: np.ndarray
    linear: LinearRgb
    srgb: Srgb8
    lab: Lab
    gamut_clipped: bool
    floored_values: int = 0


def entry_from_reflectance(name: str, rho, floored_values: int = 0) -> CatalogEntry:
    """Build an entry, computing every derived field from the curve."""
    rho = np.asarray(rho, dtype=float).copy()
    rho.setflags(write=False)
    linear = reflectance_to_linear_rgb(rho)
    clipped_linear, was_clipped = clip_gamut(linear)
    srgb = linear_rgb_to_srgb8(clipped_linear)
    return CatalogEntry(
        name=name,
        reflectance=rho,
        linear=linear,
        srgb=srgb,
        lab=xyz_to_lab(xyz_from_linear_rgb(linear)),
        gamut_clipped=was_clipped,
        floored_values=floored_values,
    )


@dataclass(frozen=True)
class Catalog:
    """Ordered entries plus stacked query matrices (one row per entry)."""

    entries: tuple[CatalogEntry, ...]
    source: str = "<memory>"
    srgb_points: np.ndarray = field(init=False, repr=False)
    lab_points: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        seen: set[str] = set()
        for entry in entries:
            if entry.name in seen:
                raise CatalogError(f"duplicate catalog entry name {entry.name!r}")
            seen.add(entry.name)
        srgb_points = np.array([e.srgb for e in entries], dtype=float).reshape(-1, 3)
        lab_points = np.array([e.lab for e in entries], dtype=float).reshape(-1, 3)
        srgb_points.setflags(write=False)
        lab_points.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "srgb_points", srgb_points)
        object.__setattr__(self, "lab_points", lab_points)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _parse_row(row: list[str], line: int, where: str) -> tuple[str, np.ndarray]:
    if len(row) != 1 + N_WAVELENGTHS:
        raise CatalogError(
            f"{where}, line {line}: expected 37 fields (name + 36 reflectances), "
            f"got {len(row)}"
        )
    name = row[0].strip()
    if not name:
        raise CatalogError(f"{where}, line {line}: empty entry name")
    values = np.empty(N_WAVELENGTHS)
    for k, text in enumerate(row[1:]):
        try:
            values[k] = float(text)
        except ValueError:
            raise CatalogError(
                f"{where}, line {line}: column {k + 2} is not a number: {text!r}"
            ) from None
    if not np.all(np.isfinite(values)):
        raise CatalogError(f"{where}, line {line}: non-finite reflectance value")
    return name, values


def load_catalog(source) -> Catalog:
    """Parse a catalog from a CSV path or an open text stream.

    Schema: a header row (`name` plus 36 reflectance column labels,
    380 nm first), then one row per entry.  Values must be finite;
    values <= 0 are floored to REFLECTANCE_FLOOR with a warning so the
    curves stay usable in geometric-mean mixes.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            return _load_from_stream(handle, str(source))
    return _load_from_stream(source, getattr(source, "name", "<stream>"))


def _load_from_stream(stream: io.TextIOBase, where: str) -> Catalog:
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise CatalogError(f"{where}: empty stream, expected a header row") from None
    if len(header) != 1 + N_WAVELENGTHS or header[0].strip().lower() != "name":
        raise CatalogError(
            f"{where}, line 1: header must be 'name' followed by 36 reflectance "
            f"column labels"
        )

    entries: list[CatalogEntry] = []
    first_line: dict[str, int] = {}
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue  # tolerate blank lines, e.g. a trailing newline
        line = reader.line_num
        name, values = _parse_row(row, line, where)
        if name in first_line:
            raise CatalogError(
                f"{where}, line {line}: duplicate entry name {name!r} "
                f"(first defined on line {first_line[name]})"
            )
        first_line[name] = line
        floored = int(np.count_nonzero(values <= 0.0))
        if floored:
            warnings.warn(
                f"catalog entry {name!r} ({where}, line {line}): floored {floored} "
                f"nonpositive reflectance value(s) to {REFLECTANCE_FLOOR}",
                stacklevel=2,
            )
            values = np.where(values <= 0.0, REFLECTANCE_FLOOR, values)
        entries.append(entry_from_reflectance(name, values, floored_values=floored))
    return Catalog(entries=tuple(entries), source=where)


def nearest_entry(target: Srgb8, catalog: Catalog, metric: str = "lab") -> CatalogEntry:
    """Entry minimizing squared distance to `target` in the chosen space.

    Exhaustive scan; ties resolve to the earliest row.  `metric` is
    "srgb" (8-bit channel distance) or "lab".
    """
    target = as_srgb8(target)
    if not catalog.entries:
        raise CatalogError(f"catalog {catalog.source!r} has no entries to query")
    if metric == "srgb":
        query = np.array(target, dtype=float)
        points = catalog.srgb_points
    elif metric == "lab":
        query = np.array(srgb8_to_lab(target), dtype=float)
        points = catalog.lab_points
    else:
        raise DomainError(f"unknown metric {metric!r}; expected one of {METRICS}")
    d2 = ((points - query) ** 2).sum(axis=1)
    return catalog.entries[int(np.argmin(d2))]


@dataclass(frozen=True)
class CatalogMixResult:
    """Outcome of mixing nearest-match curves for a list of targets."""

    srgb: Srgb8
    reflectance: np.ndarray
    matched_names: tuple[str, ...]
    clipped: bool


def catalog_mix(targets, catalog: Catalog, metric: str = "lab") -> CatalogMixResult:
    """Match each (srgb, parts) target to its nearest entry and mix them.

    The matched curves are combined by weighted geometric mean and
    converted forward; `clipped` reports whether the mixed color needed
    gamut clipping, which lets callers probe whether mixes of in-gamut
    entries ever leave the gamut.
    """
    targets = list(targets)
    if len(targets) < 2:
        raise DomainError("catalog mixing needs at least two target colors")
    matched = [nearest_entry(srgb, catalog, metric) for srgb, _ in targets]
    weights = weights_from_parts([parts for _, parts in targets])
    mixed = wgm_mix(
        MixInput(curves=tuple(e.reflectance for e in matched), weights=weights)
    )
    linear = reflectance_to_linear_rgb(mixed)
    clipped_linear, was_clipped = clip_gamut(linear)
    return CatalogMixResult(
        srgb=linear_rgb_to_srgb8(clipped_linear),
        reflectance=mixed,
        matched_names=tuple(e.name for e in matched),
        clipped=was_clipped,
    )
