"""Scalar special-function kernels.

``lambert_w0`` is the principal branch of the Lambert W function, solved by
Halley iteration with a branch-point series start and a bisection fallback.
``spectral_efficiency`` is log2(1 + snr) evaluated through ``log1p``.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, InvalidArgumentError

__all__ = ["SolverConfig", "lambert_w0", "spectral_efficiency", "LOG2_E"]

LOG2_E = 1.0 / math.log(2.0)
_INV_E = math.exp(-1.0)
_BRANCH_SLACK = 1e-15
_ABS_TOL_NEAR_ZERO = 1e-14
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class SolverConfig:
    rel_tolerance: float = 1e-12
    max_iterations: int = 100

    def __post_init__(self):
        if not self.rel_tolerance > 0:
            raise InvalidArgumentError("rel_tolerance must be > 0")
        if self.max_iterations < 1:
            raise InvalidArgumentError("max_iterations must be >= 1")


DEFAULT_SOLVER = SolverConfig()


def _initial_guess(a):
    if a < -0.25:
        # series about the branch point, p = sqrt(2(e*a + 1))
        p = math.sqrt(max(2.0 * (math.e * a + 1.0), 0.0))
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
    if a > math.e:
        la = math.log(a)
        return la - math.log(la)
    return a / (1.0 + a)


def _residual_ok(w, a, tol):
    return abs(w * math.exp(w) - a) <= max(tol * abs(a), _ABS_TOL_NEAR_ZERO)


def _halley(a, w, max_iterations):
    for _ in range(max_iterations):
        ew = math.exp(w)
        f = w * ew - a
        if abs(f) <= _EPS * abs(a):
            return w, True
        wp1 = w + 1.0
        if wp1 == 0.0:
            return w, False
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denom == 0.0 or not math.isfinite(denom):
            return w, False
        dw = f / denom
        w_new = w - dw
        if w_new < -1.0:
            w_new = -1.0 + 0.5 * (w + 1.0)
        if abs(w_new - w) <= 4.0 * _EPS * (1.0 + abs(w_new)):
            return w_new, True
        w = w_new
    return w, False


def _bisect(a, max_iterations):
    lo = -1.0
    hi = 1.0 if a <= math.e else math.log(a)
    for _ in range(max(max_iterations, 1100)):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if mid * math.exp(mid) < a:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lambert_w0(a, cfg=DEFAULT_SOLVER):
    """Principal branch W0 of the Lambert W function for real ``a``.

    Parameters
    ----------
    a : float
        Argument, ``a >= -1/e``. Values up to 1e-15 below -1/e are clamped to
        the branch point.
    cfg : SolverConfig
        Residual tolerance (relative on ``a``; absolute 1e-14 near 0) and the
        Halley iteration budget.

    Returns
    -------
    float
        ``w >= -1`` with ``w * exp(w) == a`` to within tolerance.

    Raises
    ------
    DomainError
        If ``a`` is below the branch point or not finite.
    ConvergenceError
        If neither Halley iteration nor the bisection fallback meets the
        tolerance.
    """
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"lambert_w0 needs a finite argument, got {a}")
    if a < -_INV_E - _BRANCH_SLACK:
        raise DomainError(f"lambert_w0 undefined below -1/e, got {a}")
    if a <= -_INV_E:
        return -1.0
    if a == 0.0:
        return 0.0

    w, converged = _halley(a, _initial_guess(a), cfg.max_iterations)
    if converged and _residual_ok(w, a, cfg.rel_tolerance):
        return w
    w = _bisect(a, cfg.max_iterations)
    if _residual_ok(w, a, cfg.rel_tolerance):
        return w
    raise ConvergenceError(
        f"lambert_w0({a}) did not converge within {cfg.max_iterations} iterations", w
    )


def spectral_efficiency(snr):
    """log2(1 + snr) in bit/s/Hz, accurate for tiny ``snr``."""
    s = float(snr)
    if not math.isfinite(s) or s < 0:
        raise InvalidArgumentError(f"snr must be finite and >= 0, got {s}")
    return math.log1p(s) * LOG2_E
