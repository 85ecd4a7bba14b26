"""Reflectance recovery: plausible 36-sample curves from sRGB triplets.

The linear system rgb = T . rho is badly underdetermined (3 equations,
36 unknowns), so each algorithm picks the curve minimizing a
sum-of-squared-slopes objective, which favors the smooth curves real
pigments exhibit:

* ilss  -- least slope squared on rho itself, with iterative pinning of
  values that leave [1e-5, 1].  Fast (pure linear algebra), output
  always within bounds, but undershoots sharp peaks.
* llss  -- least slope squared on log(rho), solved with Newton's method
  on the Lagrangian.  Smoother results; values may exceed 1 for bright
  saturated colors (fluorescence-like overshoot).
* illss -- llss plus an outer loop that pins values above 1 and
  re-solves until the whole curve fits in (0, 1].  Best quality,
  most expensive.

All three enforce T . rho = rgb exactly at convergence, so a converged
curve reproduces its source triplet bit-exactly after forward conversion
and quantization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .colorimetry import (
    N_WAVELENGTHS,
    Srgb8,
    TMatrix,
    T_CANONICAL,
    srgb_decode,
    as_srgb8,
)
from .errors import DomainError

__all__ = [
    "ALGORITHMS",
    "NewtonSettings",
    "IlssPrecomputation",
    "RecoveryResult",
    "build_difference_matrix",
    "build_ilss_precomputation",
    "ilss",
    "llss",
    "illss",
    "recover",
]

#: Recovery algorithm names accepted by `recover`, fastest first.
ALGORITHMS = ("ilss", "llss", "illss")

#: Lower reflectance bound used by ilss (the log-domain algorithms use a
#: 1e-4 black special case instead; the discrepancy is intentional).
ILSS_RHO_MIN = 1e-5


@dataclass(frozen=True)
class NewtonSettings:
    """Iteration budget and tolerances of the recovery solvers."""

    max_iterations: int = 100
    function_tolerance: float = 1e-8
    step_tolerance: float = 1e-8
    max_outer_iterations: int = 10

    def __post_init__(self):
        if self.max_iterations <= 0 or self.max_outer_iterations <= 0:
            raise DomainError("iteration limits must be positive")
        if self.function_tolerance <= 0 or self.step_tolerance <= 0:
            raise DomainError("tolerances must be positive")


LLSS_DEFAULTS = NewtonSettings(max_iterations=100)
ILLSS_DEFAULTS = NewtonSettings(max_iterations=50, max_outer_iterations=10)
ILSS_DEFAULTS = NewtonSettings(max_outer_iterations=10)


@dataclass(frozen=True)
class RecoveryResult:
    """A recovered curve plus solver diagnostics.

    `inner_iterations` counts Newton updates (total across outer passes
    for illss); `outer_iterations` counts bound-activation passes.  When
    `converged` is set, forward conversion of `rho` reproduces the input
    triplet after quantization.
    """

    rho: np.ndarray
    algorithm: str
    inner_iterations: int
    outer_iterations: int
    converged: bool
    lagrange_rgb: np.ndarray | None = None


def build_difference_matrix() -> np.ndarray:
    """Second-difference matrix D with zTDz = 2 * sum of squared slopes.

    Tridiagonal: 4 on the main diagonal and -2 off it, except the first
    and last diagonal entries are 2.  Row sums vanish, so constant
    curves cost nothing.
    """
    d = np.diag(np.full(N_WAVELENGTHS, 4.0))
    off = np.diag(np.full(N_WAVELENGTHS - 1, -2.0), 1)
    d = d + off + off.T
    d[0, 0] = 2.0
    d[-1, -1] = 2.0
    return d


@dataclass(frozen=True)
class IlssPrecomputation:
    """Blocks of the inverted ilss KKT matrix, reusable across calls.

    b11 is the upper-left 36x36 block and b12 the upper-right 36x3 block
    of inv([[D, T^T], [T, 0]]).  b12 maps a linear rgb target straight
    to the unconstrained minimum-slope curve, and T . b12 = I.
    """

    b11: np.ndarray
    b12: np.ndarray


def build_ilss_precomputation(t: TMatrix = T_CANONICAL) -> IlssPrecomputation:
    d = build_difference_matrix()
    n = N_WAVELENGTHS
    kkt = np.zeros((n + 3, n + 3))
    kkt[:n, :n] = d
    kkt[:n, n:] = t.entries.T
    kkt[n:, :n] = t.entries
    try:
        inv = np.linalg.inv(kkt)
    except np.linalg.LinAlgError as exc:
        raise DomainError("ilss KKT matrix is singular; T is degenerate") from exc
    return IlssPrecomputation(b11=inv[:n, :n], b12=inv[:n, n:])


def _target_linear_rgb(srgb: Srgb8) -> np.ndarray:
    return np.array([srgb_decode(v / 255.0) for v in srgb])


def ilss(
    srgb: Srgb8,
    pre: IlssPrecomputation | None = None,
    settings: NewtonSettings = ILSS_DEFAULTS,
) -> RecoveryResult:
    """Iterative least slope squared: linear-domain recovery with bounds.

    Solves min sum (rho_{i+1} - rho_i)^2 subject to T rho = rgb, then
    repeatedly pins any value outside [1e-5, 1] to the violated bound
    and re-solves the reduced system until the whole curve is in range.
    """
    srgb = as_srgb8(srgb)
    if pre is None:
        pre = _default_precomputation()
    n = N_WAVELENGTHS

    if all(v == 255 for v in srgb):
        return RecoveryResult(np.ones(n), "ilss", 0, 0, True)
    if all(v == 0 for v in srgb):
        return RecoveryResult(np.full(n, ILSS_RHO_MIN), "ilss", 0, 0, True)

    rgb = _target_linear_rgb(srgb)
    unconstrained = pre.b12 @ rgb
    rho = unconstrained.copy()
    count = 1

    while (np.any(rho > 1.0) or np.any(rho < ILSS_RHO_MIN)) and count <= settings.max_outer_iterations:
        upper = rho >= 1.0
        lower = rho <= ILSS_RHO_MIN
        active = np.concatenate([np.nonzero(upper)[0], np.nonzero(lower)[0]])
        targets = np.concatenate(
            [np.ones(int(upper.sum())), np.full(int(lower.sum()), ILSS_RHO_MIN)]
        )
        # rho = R - B11 K' (K B11 K')^-1 (K R - targets), with K selecting
        # the active rows; index slicing stands in for forming K.
        gram = pre.b11[np.ix_(active, active)]
        residual = unconstrained[active] - targets
        rho = unconstrained - pre.b11[:, active] @ np.linalg.solve(gram, residual)
        rho[upper] = 1.0
        rho[lower] = ILSS_RHO_MIN
        count += 1

    converged = not (np.any(rho > 1.0) or np.any(rho < ILSS_RHO_MIN))
    return RecoveryResult(rho, "ilss", 0, count, converged)


_ILSS_PRE: IlssPrecomputation | None = None


def _default_precomputation() -> IlssPrecomputation:
    global _ILSS_PRE
    if _ILSS_PRE is None:
        _ILSS_PRE = build_ilss_precomputation(T_CANONICAL)
    return _ILSS_PRE


def _newton_solve(
    rgb: np.ndarray,
    t: np.ndarray,
    d: np.ndarray,
    pinned: np.ndarray,
    settings: NewtonSettings,
) -> tuple[np.ndarray, np.ndarray, int, bool]:
    """Newton iteration on the slope-of-log Lagrangian.

    Stationarity: D z - diag(exp(z)) T^T lambda (+ K^T mu) = 0 together
    with the constraints T exp(z) = rgb and z = 0 on pinned indices.
    Returns (z, lambda, newton_steps, converged); the pinned set may be
    empty, which reduces to the plain llss system.
    """
    n = N_WAVELENGTHS
    nf = pinned.size
    z = np.zeros(n)
    lam = np.zeros(3)
    mu = np.zeros(nf)
    k = np.zeros((nf, n))
    k[np.arange(nf), pinned] = 1.0

    steps = 0
    count = 0
    while count <= settings.max_iterations:
        r = np.exp(z)
        v = -r * (t.T @ lam)
        m2 = -t * r  # -T diag(r)
        f = np.concatenate([d @ z + v + k.T @ mu, -t @ r + rgb, k @ z])
        if not np.all(np.isfinite(f)):
            break  # iteration diverged (exp overflow); report non-convergence
        jac = np.zeros((n + 3 + nf, n + 3 + nf))
        jac[:n, :n] = d + np.diag(v)
        jac[:n, n : n + 3] = m2.T
        jac[n : n + 3, :n] = m2
        jac[:n, n + 3 :] = k.T
        jac[n + 3 :, :n] = k
        delta = np.linalg.solve(jac, -f)
        z += delta[:n]
        lam += delta[n : n + 3]
        mu += delta[n + 3 :]
        steps += 1
        if np.all(np.abs(f) < settings.function_tolerance) and np.all(
            np.abs(delta) < settings.step_tolerance
        ):
            return z, lam, steps, True
        count += 1
    return z, lam, steps, False


def llss(
    srgb: Srgb8,
    t: TMatrix = T_CANONICAL,
    settings: NewtonSettings = LLSS_DEFAULTS,
) -> RecoveryResult:
    """Least log slope squared: min sum (z_{i+1} - z_i)^2 s.t. T e^z = rgb.

    Reflectance is exp(z), hence strictly positive, and is allowed to
    exceed 1 (bright reds typically do).
    """
    srgb = as_srgb8(srgb)
    n = N_WAVELENGTHS
    if all(v == 0 for v in srgb):
        return RecoveryResult(np.full(n, 1e-4), "llss", 0, 0, True)

    rgb = _target_linear_rgb(srgb)
    z, lam, steps, ok = _newton_solve(
        rgb, t.entries, build_difference_matrix(), np.array([], dtype=int), settings
    )
    return RecoveryResult(np.exp(z), "llss", steps, 0, ok, lagrange_rgb=lam)


def illss(
    srgb: Srgb8,
    t: TMatrix = T_CANONICAL,
    settings: NewtonSettings = ILLSS_DEFAULTS,
) -> RecoveryResult:
    """llss with an outer loop clipping values above 1.

    Each outer pass pins every reflectance >= 1 at exactly 1 (z = 0) and
    re-runs the Newton solve with the extra equality constraints, until
    the curve lies in (0, 1].
    """
    srgb = as_srgb8(srgb)
    n = N_WAVELENGTHS
    if all(v == 0 for v in srgb):
        return RecoveryResult(np.full(n, 1e-4), "illss", 0, 0, True)
    if all(v == 255 for v in srgb):
        return RecoveryResult(np.ones(n), "illss", 0, 0, True)

    rgb = _target_linear_rgb(srgb)
    d = build_difference_matrix()
    rho = np.zeros(n)
    lam = np.zeros(3)
    total_steps = 0
    outer = 0
    first_pass = True
    inner_ok = False

    while (np.any(rho > 1.0) and outer <= settings.max_outer_iterations) or first_pass:
        first_pass = False
        pinned = np.nonzero(rho >= 1.0)[0]
        z, lam, steps, inner_ok = _newton_solve(rgb, t.entries, d, pinned, settings)
        total_steps += steps
        rho = np.exp(z)
        outer += 1
        if not inner_ok:
            break

    converged = inner_ok and not np.any(rho > 1.0)
    return RecoveryResult(rho, "illss", total_steps, outer, converged, lagrange_rgb=lam)


def recover(srgb: Srgb8, algorithm: str = "illss", settings: NewtonSettings | None = None) -> RecoveryResult:
    """Dispatch to one of the three recovery algorithms by name."""
    if algorithm == "ilss":
        return ilss(srgb, settings=settings or ILSS_DEFAULTS)
    if algorithm == "llss":
        return llss(srgb, settings=settings or LLSS_DEFAULTS)
    if algorithm == "illss":
        return illss(srgb, settings=settings or ILLSS_DEFAULTS)
    raise DomainError(f"unknown recovery algorithm {algorithm!r}; expected ilss, llss, or illss")
