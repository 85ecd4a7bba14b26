#!/usr/bin/env python3
"""Regenerate the bundled sample catalog CSV.

The sample mixes two measured artist pigments (titanium white, ivory
black) with deterministic synthetic chips: flat grays, smooth
single-band chips across the spectrum, two ramps, and six saturated
block dyes.  The block dyes deliberately land outside the sRGB gamut so
out-of-gamut handling stays exercised by real data.
"""

from __future__ import annotations

import argparse
import csv
import pathlib

import numpy as np

WAVELENGTHS = np.arange(380, 731, 10)

TITANIUM_WHITE = [
    0.1228, 0.2032, 0.3886, 0.6489, 0.8518, 0.9362, 0.9568, 0.9625, 0.9673,
    0.9678, 0.9677, 0.9694, 0.9691, 0.9691, 0.9701, 0.9692, 0.9692, 0.9693,
    0.9668, 0.9695, 0.9679, 0.9676, 0.9671, 0.9673, 0.96734, 0.9655, 0.9661,
    0.9676, 0.9700, 0.9694, 0.9680, 0.9678, 0.9692, 0.9704, 0.9705, 0.9730,
]

IVORY_BLACK = [
    0.0298, 0.0466, 0.0635, 0.0803, 0.0931, 0.0957, 0.0984, 0.1028, 0.1077,
    0.1129, 0.1183, 0.1208, 0.1210, 0.1225, 0.1251, 0.1274, 0.1300, 0.1325,
    0.1347, 0.1374, 0.1394, 0.1421, 0.1442, 0.1456, 0.1472, 0.1493, 0.1517,
    0.1537, 0.1561, 0.1579, 0.1602, 0.1622, 0.1642, 0.1669, 0.1690, 0.1711,
]


def band_chip(center: float, sigma: float = 45.0) -> np.ndarray:
    """Smooth single-bump chip: low base with a Gaussian band."""
    return 0.08 + 0.72 * np.exp(-(((WAVELENGTHS - center) / sigma) ** 2))


def block_dye(lo: float, hi: float, high: float = 0.9, low: float = 0.02) -> np.ndarray:
    """Idealized block dye: `high` inside [lo, hi] nm, `low` elsewhere."""
    inside = (WAVELENGTHS >= lo) & (WAVELENGTHS <= hi)
    return np.where(inside, high, low)


def build_rows() -> list[tuple[str, np.ndarray]]:
    rows: list[tuple[str, np.ndarray]] = [
        ("TitaniumWhite", np.asarray(TITANIUM_WHITE)),
        ("IvoryBlack", np.asarray(IVORY_BLACK)),
    ]
    for level in range(10, 100, 10):
        rows.append((f"Gray{level:02d}", np.full(36, level / 100.0)))
    for center in range(400, 701, 25):
        rows.append((f"Band{center}", band_chip(center)))
    ramp = (WAVELENGTHS - 380.0) / 350.0
    rows.append(("WarmRamp", 0.05 + 0.85 * ramp))
    rows.append(("CoolRamp", 0.90 - 0.85 * ramp))
    rows.append(("BlockBlue", block_dye(430, 490)))
    rows.append(("BlockGreen", block_dye(500, 570)))
    rows.append(("BlockRed", block_dye(620, 730)))
    rows.append(("BlockCyan", block_dye(380, 570)))
    rows.append(("BlockYellow", block_dye(510, 730)))
    rows.append(("BlockMagenta", 0.92 - block_dye(500, 580)))
    return rows


def main() -> int:
    default_out = (
        pathlib.Path(__file__).resolve().parent.parent
        / "src" / "spectramix" / "data" / "sample_catalog.csv"
    )
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path, default=default_out)
    args = parser.parse_args()

    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["name"] + [f"r{wl}" for wl in WAVELENGTHS])
        for name, curve in build_rows():
            writer.writerow([name] + [f"{v:.6g}" for v in curve])
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
