"""Shared test helpers and the acceptance-criteria terminal report."""

from __future__ import annotations

import numpy as np

from spectramix.colorimetry import (
    Srgb8,
    clip_gamut,
    linear_rgb_to_srgb8,
    reflectance_to_linear_rgb,
)

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str) -> None:
    """Queue one pass/fail line for the end-of-run acceptance section."""
    _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.line(line)


def forward_srgb8(rho) -> Srgb8:
    """Round-trip oracle: project, clip to gamut, compand, quantize."""
    clipped, _ = clip_gamut(reflectance_to_linear_rgb(rho))
    return linear_rgb_to_srgb8(clipped)


def random_curve(rng: np.random.Generator, low: float = 1e-5, high: float = 1.0) -> np.ndarray:
    """Log-uniform reflectance curve, exercising several decades."""
    return np.exp(rng.uniform(np.log(low), np.log(high), size=36))
