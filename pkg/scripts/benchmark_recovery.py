#!/usr/bin/env python3
"""Benchmark the three reflectance-recovery algorithms over an sRGB grid.

Reports mean/max per-call time, iteration counts, convergence, and exact
round-trip rate for each algorithm.  The grid is the same shape the
acceptance suite uses: every channel stepped by a fixed stride, plus the
255 endpoint so the corners are exact.

Usage:
    python3 scripts/benchmark_recovery.py
    python3 scripts/benchmark_recovery.py --stride 16 --repeats 3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from spectramix.colorimetry import (
    Srgb8,
    clip_gamut,
    linear_rgb_to_srgb8,
    reflectance_to_linear_rgb,
)
from spectramix.recovery import ALGORITHMS, recover


def srgb8_round_trip(rho: np.ndarray) -> Srgb8:
    clipped, _ = clip_gamut(reflectance_to_linear_rgb(rho))
    return linear_rgb_to_srgb8(clipped)


@dataclass(frozen=True)
class BenchmarkConfig:
    stride: int = 32
    repeats: int = 1
    algorithms: tuple[str, ...] = tuple(ALGORITHMS)

    def levels(self) -> tuple[int, ...]:
        stops = list(range(0, 256, self.stride))
        if stops[-1] != 255:
            stops.append(255)
        return tuple(stops)


@dataclass
class AlgorithmStats:
    name: str
    calls: int = 0
    total_s: float = 0.0
    worst_s: float = 0.0
    inner: int = 0
    outer: int = 0
    converged: int = 0
    exact: int = 0
    samples: list[float] = field(default_factory=list)

    @property
    def mean_ms(self) -> float:
        return 1000.0 * self.total_s / max(self.calls, 1)


def run(config: BenchmarkConfig) -> list[AlgorithmStats]:
    levels = config.levels()
    triplets = [Srgb8(r, g, b) for r in levels for g in levels for b in levels]
    stats = []
    for name in config.algorithms:
        tally = AlgorithmStats(name=name)
        for _ in range(config.repeats):
            for triplet in triplets:
                start = time.perf_counter()
                result = recover(triplet, name)
                elapsed = time.perf_counter() - start
                tally.calls += 1
                tally.total_s += elapsed
                tally.worst_s = max(tally.worst_s, elapsed)
                tally.inner += result.inner_iterations
                tally.outer += result.outer_iterations
                tally.converged += result.converged
                tally.exact += srgb8_round_trip(result.rho) == triplet
                tally.samples.append(float(result.rho.max()))
        stats.append(tally)
    return stats


def report(config: BenchmarkConfig, stats: list[AlgorithmStats]) -> None:
    levels = config.levels()
    print(f"grid: {len(levels)}^3 = {len(levels) ** 3} triplets, "
          f"levels {levels[0]}..{levels[-1]} stride {config.stride}, "
          f"repeats {config.repeats}")
    header = (f"{'algorithm':<10} {'mean ms':>8} {'max ms':>8} {'inner/call':>10} "
              f"{'outer/call':>10} {'converged':>10} {'exact rt':>9} {'max rho':>8}")
    print(header)
    print("-" * len(header))
    base = stats[0].mean_ms if stats else 1.0
    for s in stats:
        print(f"{s.name:<10} {s.mean_ms:>8.3f} {1000 * s.worst_s:>8.3f} "
              f"{s.inner / s.calls:>10.2f} {s.outer / s.calls:>10.2f} "
              f"{s.converged}/{s.calls:<5} {s.exact}/{s.calls:<5} "
              f"{max(s.samples):>8.4f}")
    if len(stats) > 1 and base > 0:
        ratios = ", ".join(f"{s.name} {s.mean_ms / base:.1f}x" for s in stats[1:])
        print(f"relative to {stats[0].name}: {ratios}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--stride", type=int, default=32,
                        help="channel step for the grid (default 32)")
    parser.add_argument("--repeats", type=int, default=1,
                        help="full passes over the grid (default 1)")
    parser.add_argument("--algorithms", nargs="+", default=list(ALGORITHMS),
                        choices=list(ALGORITHMS))
    args = parser.parse_args(argv)
    config = BenchmarkConfig(stride=args.stride, repeats=args.repeats,
                             algorithms=tuple(args.algorithms))
    report(config, run(config))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
