"""Energy efficiency with circuit power, and its closed-form optimum.

Two consumption models are supported. The constant model charges ``P + mu``.
The varying model charges ``P + nu*B + eta*C``: a per-Hz term for sampling
and baseband work plus a per-bit term for coding. With ``z = P/B`` the varying
model becomes a function of ``z`` alone:

    EE(z) = f(z) / (z + nu + eta f(z)),   f(z) = log2(1 + beta z / N0)

and ``1/EE = (z + nu)/f(z) + eta``, so the maximizer does not depend on eta.
Setting the derivative of ``f(z)/(z + nu)`` to zero and substituting
``x = ln(1 + beta z / N0)`` gives ``(x - 1) e^(x - 1) = beta nu/(N0 e) - 1/e``,
solved by the principal Lambert W branch.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateOptimumError, InvalidArgumentError
from .link_limits import siso_capacity
from .quantities import BandwidthHz, DataRate, EnergyEfficiency, NoisePsd, PowerWatts
from .special import LOG2_E, lambert_w0, spectral_efficiency

__all__ = [
    "CircuitParams",
    "OperatingPoint",
    "OracleResult",
    "ee_constant_circuit",
    "ee_varying_circuit",
    "ee_varying_circuit_mimo",
    "optimal_operating_point_siso",
    "optimal_operating_point_mimo",
    "rate_at_optimum",
    "bandwidth_for_rate",
    "grid_search_oracle",
]


@dataclass(frozen=True)
class CircuitParams:
    """Circuit-power constants.

    mu : constant circuit power [W]
    nu : power per Hz of processed bandwidth [W/Hz, i.e. J per sample]
    eta : coding energy per bit [J/bit]
    """

    mu: float = 0.0
    nu: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        for name in ("mu", "nu", "eta"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v < 0:
                raise InvalidArgumentError(f"{name} must be finite and >= 0, got {v}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class OperatingPoint:
    """EE-maximizing operating point.

    ``ratio_p_over_b`` is P/B for a scalar link and P/(M B) for the MIMO model.
    Any (P, B) on that ratio attains ``ee``.
    """

    x: float
    ratio_p_over_b: float
    snr: float
    se: float
    ee: float

    def power_for_bandwidth(self, b, antennas=1):
        return PowerWatts(self.ratio_p_over_b * antennas * BandwidthHz(b))


@dataclass(frozen=True)
class OracleResult:
    power: float
    bandwidth: float
    ee: float
    log_step_power: float
    log_step_bandwidth: float
    evaluations: int

    @property
    def ratio(self):
        return self.power / self.bandwidth


def ee_constant_circuit(link, p, b, mu):
    """Capacity over ``P + mu``."""
    p = PowerWatts(p)
    mu = PowerWatts(mu)
    if p + mu == 0:
        raise InvalidArgumentError("P + mu must be > 0")
    return EnergyEfficiency(siso_capacity(link, p, b) / (p + mu))


def _varying_ee(rate, b, p, nu, eta, antennas):
    denom = p + nu * b * antennas + eta * rate
    if denom <= 0:
        raise InvalidArgumentError("power consumption P + nu*B + eta*C must be > 0")
    return EnergyEfficiency(rate / denom)


def ee_varying_circuit(link, p, b, cp):
    """Capacity over ``P + nu*B + eta*C``; ``cp.mu`` is not used here."""
    rate = siso_capacity(link, p, b)
    return _varying_ee(rate, float(b), float(p), cp.nu, cp.eta, 1)


def ee_varying_circuit_mimo(cfg, p, b, cp, n0=None):
    """MIMO version with M antennas at each end and equal singular values.

    The per-Hz term is charged once per antenna pair (``nu*B*M``).
    """
    if cfg.m_tx != cfg.n_rx:
        raise InvalidArgumentError(
            f"the MIMO circuit model assumes M == N, got M={cfg.m_tx}, N={cfg.n_rx}"
        )
    n0 = cfg.n0 if n0 is None else NoisePsd(n0)
    p = PowerWatts(p)
    b = BandwidthHz(b)
    m = cfg.m_tx
    rate = m * b * spectral_efficiency(p * cfg.sigma_max_sq / (m * b * n0))
    return _varying_ee(rate, b, p, cp.nu, cp.eta, m)


def _optimum(gain, n0, cp):
    gain_over_n0 = gain / n0
    if cp.nu == 0:
        # sup over z of f(z)/(z + eta f(z)) is reached only as z -> 0
        supremum = 1.0 / (1.0 / (LOG2_E * gain_over_n0) + cp.eta)
        raise DegenerateOptimumError(
            "nu = 0: EE grows as P/B -> 0 and has no finite maximizer", supremum
        )
    x = lambert_w0(gain_over_n0 * cp.nu / math.e - 1.0 / math.e) + 1.0
    snr = math.expm1(x)
    ratio = snr / gain_over_n0
    se = x * LOG2_E
    ee = se / (ratio + cp.nu + cp.eta * se)
    return OperatingPoint(x=x, ratio_p_over_b=ratio, snr=snr, se=se, ee=EnergyEfficiency(ee))


def optimal_operating_point_siso(link, cp):
    """Closed-form maximizer of :func:`ee_varying_circuit`.

    Raises
    ------
    DegenerateOptimumError
        If ``cp.nu == 0``; its ``supremum`` attribute carries the limiting EE.
    """
    return _optimum(link.beta, link.n0, cp)


def optimal_operating_point_mimo(cfg, cp, n0=None):
    """Maximizer of :func:`ee_varying_circuit_mimo`; the ratio is P/(M B)."""
    n0 = cfg.n0 if n0 is None else NoisePsd(n0)
    return _optimum(cfg.sigma_max_sq, n0, cp)


def rate_at_optimum(b, point):
    """Data rate ``B x log2(e)`` obtained at bandwidth ``b`` on the optimal ratio."""
    return DataRate(BandwidthHz(b) * point.x * LOG2_E)


def bandwidth_for_rate(rate, point):
    rate = DataRate(rate)
    if point.x <= 0:
        raise InvalidArgumentError("operating point carries zero spectral efficiency")
    return rate / (point.x * LOG2_E)


def grid_search_oracle(ee_eval, p_range, b_range, grid=256):
    """Brute-force maximizer of ``ee_eval(P, B)`` over a log-spaced lattice.

    Ties go to the lowest P, then the lowest B. On the varying-circuit model
    the lattice optimum never exceeds the closed-form EE and approaches it as
    ``grid`` grows.

    Parameters
    ----------
    ee_eval : callable
        ``ee_eval(p, b) -> float``.
    p_range, b_range : (float, float)
        Positive, ordered bounds in W and Hz.
    grid : int
        Points per axis, at least 16.

    Raises
    ------
    InvalidArgumentError
        Bad ranges, too coarse a grid, or a non-finite evaluation (the message
        names the lattice point).
    """
    if int(grid) < 16:
        raise InvalidArgumentError(f"grid must be >= 16 points per axis, got {grid}")
    grid = int(grid)
    axes = []
    for name, (lo, hi) in (("p_range", p_range), ("b_range", b_range)):
        lo, hi = float(lo), float(hi)
        if not (0 < lo < hi and math.isfinite(hi)):
            raise InvalidArgumentError(f"{name} must satisfy 0 < lo < hi, got ({lo}, {hi})")
        axes.append(np.logspace(math.log10(lo), math.log10(hi), grid))
    powers, bandwidths = axes

    best = (-math.inf, None, None)
    for i, p in enumerate(powers):
        for j, b in enumerate(bandwidths):
            val = float(ee_eval(float(p), float(b)))
            if not math.isfinite(val):
                raise InvalidArgumentError(
                    f"non-finite EE {val} at lattice point [{i}, {j}] (P={p:.6g} W, B={b:.6g} Hz)"
                )
            if val > best[0]:
                best = (val, float(p), float(b))

    ee, p_best, b_best = best
    return OracleResult(
        power=p_best,
        bandwidth=b_best,
        ee=ee,
        log_step_power=math.log10(p_range[1] / p_range[0]) / (grid - 1),
        log_step_bandwidth=math.log10(b_range[1] / b_range[0]) / (grid - 1),
        evaluations=grid * grid,
    )
