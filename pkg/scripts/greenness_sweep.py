#!/usr/bin/env python3
"""Sweep yellow:blue mixing ratios and track where green dominates.

For each recovery algorithm, the two endpoint curves are recovered once
and then mixed across a parts ladder (9:1 ... 1:9 by default).  Each stop
prints its hex, channels, and whether G is the strict channel maximum.
The summary line per algorithm counts green-dominant stops, which makes
the blue bias of the 1:1 log-domain mix easy to see in context.

Usage:
    python3 scripts/greenness_sweep.py
    python3 scripts/greenness_sweep.py --steps 19 --pair FF0000 0000FF
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from spectramix.colorimetry import (
    Srgb8,
    clip_gamut,
    linear_rgb_to_srgb8,
    reflectance_to_linear_rgb,
)
from spectramix.mixing import mixing_path
from spectramix.pipeline import format_hex, parse_hex
from spectramix.recovery import ALGORITHMS, recover


@dataclass(frozen=True)
class SweepConfig:
    first_hex: str = "FFFF00"
    second_hex: str = "0000FF"
    steps: int = 9
    algorithms: tuple[str, ...] = tuple(ALGORITHMS)


def render(rho: np.ndarray) -> Srgb8:
    clipped, _ = clip_gamut(reflectance_to_linear_rgb(rho))
    return linear_rgb_to_srgb8(clipped)


def sweep(config: SweepConfig) -> None:
    first = parse_hex(config.first_hex)
    second = parse_hex(config.second_hex)
    for algorithm in config.algorithms:
        a = recover(first, algorithm).rho
        b = recover(second, algorithm).rho
        stops = mixing_path(a, b, steps=config.steps)
        ladder_top = config.steps + 1
        green_wins = 0
        print(f"\n{algorithm}: {format_hex(first)} -> {format_hex(second)}, "
              f"{config.steps} steps")
        for k, rho in enumerate(stops):
            parts = (ladder_top - k, k)
            c = render(rho)
            dominant = c.g > c.r and c.g > c.b
            green_wins += dominant
            mark = "G" if dominant else " "
            print(f"  {parts[0]:>2}:{parts[1]:<2} {format_hex(c)} "
                  f"rgb({c.r:>3},{c.g:>3},{c.b:>3}) {mark}")
        print(f"  green strict max at {green_wins}/{len(stops)} stops")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pair", nargs=2, metavar=("HEX", "HEX"),
                        default=["FFFF00", "0000FF"],
                        help="endpoint colors (default yellow blue)")
    parser.add_argument("--steps", type=int, default=9,
                        help="ladder steps between the endpoints (default 10)")
    parser.add_argument("--algorithms", nargs="+", default=list(ALGORITHMS),
                        choices=list(ALGORITHMS))
    args = parser.parse_args(argv)
    sweep(SweepConfig(first_hex=args.pair[0], second_hex=args.pair[1],
                      steps=args.steps, algorithms=tuple(args.algorithms)))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
