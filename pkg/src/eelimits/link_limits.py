"""Capacity and energy-efficiency expressions for deterministic links.

Covers the transmit-power-only energy model: Shannon capacity of a scalar
channel, the EE it implies and its P/B -> 0 supremum, interference treated as
noise, the equal-singular-value MIMO capacity bound, and the geometry used to
argue that the squared singular values of a physical channel never exceed 1.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvalidArgumentError
from .quantities import (
    NOISE_PSD_ROOM_TEMPERATURE,
    BandwidthHz,
    DataRate,
    EnergyEfficiency,
    LinearGain,
    NoisePsd,
    PowerWatts,
)
from .special import LOG2_E, spectral_efficiency

__all__ = [
    "SPEED_OF_LIGHT",
    "ROUNDED_SPEED_OF_LIGHT",
    "SisoLink",
    "MimoConfig",
    "SphereGeometry",
    "ConstantModulusGain",
    "siso_capacity",
    "siso_ee_tx_only",
    "siso_ee_limit",
    "siso_ee_with_interference",
    "rate_limit_infinite_bandwidth",
    "mimo_capacity_upper",
    "mimo_ee_limit",
    "sigma_max_sq_constant_modulus",
    "ultimate_ee",
    "sphere_antenna_count",
    "isotropic_aperture",
    "free_space_gain",
    "free_space_distance",
]

SPEED_OF_LIGHT = 2.998e8
# round value that makes the wavelength exactly 0.1 m at 3 GHz
ROUNDED_SPEED_OF_LIGHT = 3e8


@dataclass(frozen=True)
class SisoLink:
    """Deterministic scalar channel with gain ``beta`` and noise PSD ``n0``.

    ``beta`` above 1 means receiving more power than was sent. It is refused
    unless the link is built through :meth:`unchecked`.
    """

    beta: float
    n0: float = NOISE_PSD_ROOM_TEMPERATURE
    physical: bool = field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "beta", LinearGain(self.beta))
        object.__setattr__(self, "n0", NoisePsd(self.n0))
        if self.physical and self.beta > 1.0:
            raise InvalidArgumentError(
                f"channel gain {float(self.beta)} exceeds 1; use SisoLink.unchecked for unphysical gains"
            )

    @classmethod
    def unchecked(cls, beta, n0=NOISE_PSD_ROOM_TEMPERATURE):
        return cls(beta, n0, physical=False)


@dataclass(frozen=True)
class MimoConfig:
    """M transmit and N receive antennas with squared top singular value ``sigma_max_sq``."""

    m_tx: int
    n_rx: int
    sigma_max_sq: float
    n0: float = NOISE_PSD_ROOM_TEMPERATURE
    physical: bool = field(default=True, repr=False)

    def __post_init__(self):
        for name in ("m_tx", "n_rx"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise InvalidArgumentError(f"{name} must be an integer >= 1, got {v!r}")
            object.__setattr__(self, name, int(v))
        object.__setattr__(self, "sigma_max_sq", LinearGain(self.sigma_max_sq))
        object.__setattr__(self, "n0", NoisePsd(self.n0))
        if self.physical and self.sigma_max_sq > 1.0:
            raise InvalidArgumentError(
                f"sigma_max_sq {float(self.sigma_max_sq)} exceeds 1; use MimoConfig.unchecked"
            )

    @classmethod
    def unchecked(cls, m_tx, n_rx, sigma_max_sq, n0=NOISE_PSD_ROOM_TEMPERATURE):
        return cls(m_tx, n_rx, sigma_max_sq, n0, physical=False)

    @property
    def streams(self):
        return min(self.m_tx, self.n_rx)


@dataclass(frozen=True)
class SphereGeometry:
    radius: float
    antenna_area: float
    carrier_frequency: float = 3e9

    def __post_init__(self):
        for name in ("radius", "antenna_area", "carrier_frequency"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v > 0):
                raise InvalidArgumentError(f"{name} must be finite and > 0, got {v}")
            object.__setattr__(self, name, v)


class ConstantModulusGain(NamedTuple):
    sigma_max_sq: float
    physical: bool


def _positive(x, name):
    v = float(x)
    if not (math.isfinite(v) and v > 0):
        raise InvalidArgumentError(f"{name} must be finite and > 0, got {v}")
    return v


def siso_capacity(link, p, b):
    """Shannon capacity ``B log2(1 + P beta / (B N0))`` in bit/s."""
    p = PowerWatts(p)
    b = BandwidthHz(b)
    return DataRate(b * spectral_efficiency(p * link.beta / (b * link.n0)))


def siso_ee_tx_only(link, p, b):
    """Capacity per Watt of transmit power, for ``p > 0``.

    There is no value at ``p == 0``; the P/B -> 0 supremum is
    :func:`siso_ee_limit`.
    """
    if PowerWatts(p) == 0:
        raise InvalidArgumentError("EE is undefined at zero transmit power; see siso_ee_limit")
    return EnergyEfficiency(siso_capacity(link, p, b) / p)


def siso_ee_limit(link):
    """Supremum ``log2(e) beta / N0`` of the transmit-only EE.

    This is the reciprocal of the minimum energy per bit ``N0 ln 2 / beta``.
    """
    return EnergyEfficiency(LOG2_E * link.beta / link.n0)


def siso_ee_with_interference(link, alpha, p, b):
    """EE with interference power ``alpha * p`` treated as extra noise."""
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0:
        raise InvalidArgumentError(f"alpha must be finite and >= 0, got {alpha}")
    p = PowerWatts(p)
    b = BandwidthHz(b)
    if p == 0:
        raise InvalidArgumentError("EE is undefined at zero transmit power")
    sinr = p * link.beta / (b * link.n0 + p * alpha)
    return EnergyEfficiency(b * spectral_efficiency(sinr) / p)


def rate_limit_infinite_bandwidth(link, p):
    """Capacity as B -> inf: ``log2(e) P beta / N0`` (zero for zero power)."""
    return DataRate(LOG2_E * PowerWatts(p) * link.beta / link.n0)


def mimo_capacity_upper(cfg, p, b):
    """Capacity bound with every singular value set to the largest one.

    ``min(M, N) B log2(1 + P sigma_max^2 / (M B N0))``, power split evenly over
    the M transmit antennas.
    """
    p = PowerWatts(p)
    b = BandwidthHz(b)
    snr = p * cfg.sigma_max_sq / (cfg.m_tx * b * cfg.n0)
    return DataRate(cfg.streams * b * spectral_efficiency(snr))


def mimo_ee_limit(cfg):
    return EnergyEfficiency(cfg.streams / cfg.m_tx * LOG2_E * cfg.sigma_max_sq / cfg.n0)


def sigma_max_sq_constant_modulus(beta, m, n):
    """Top squared singular value when every entry of H has magnitude sqrt(beta).

    Equals ``beta * max(M, N)``. The ``physical`` flag is False when the value
    exceeds 1, i.e. the model claims more received than transmitted power.
    """
    beta = LinearGain(beta)
    for name, v in (("m", m), ("n", n)):
        if int(v) != v or v < 1:
            raise InvalidArgumentError(f"{name} must be an integer >= 1, got {v!r}")
    value = beta * max(int(m), int(n))
    return ConstantModulusGain(value, value <= 1.0)


def ultimate_ee(n0=NOISE_PSD_ROOM_TEMPERATURE):
    """``log2(e) / N0``: the EE bound with a lossless channel (gain 1)."""
    return EnergyEfficiency(LOG2_E / NoisePsd(n0))


def sphere_antenna_count(geom):
    """Antennas of area A needed to tile a sphere of radius r (rounded up)."""
    return math.ceil(4.0 * math.pi * geom.radius**2 / geom.antenna_area)


def isotropic_aperture(carrier_frequency, c=SPEED_OF_LIGHT):
    """Effective area ``lambda^2 / (4 pi)`` of a lossless isotropic antenna."""
    wavelength = _positive(c, "c") / _positive(carrier_frequency, "carrier_frequency")
    return wavelength**2 / (4.0 * math.pi)


def free_space_gain(distance, carrier_frequency, c=SPEED_OF_LIGHT):
    """Friis gain ``(lambda / (4 pi d))^2`` between isotropic antennas."""
    wavelength = _positive(c, "c") / _positive(carrier_frequency, "carrier_frequency")
    return LinearGain((wavelength / (4.0 * math.pi * _positive(distance, "distance"))) ** 2)


def free_space_distance(gain, carrier_frequency, c=SPEED_OF_LIGHT):
    """Distance at which :func:`free_space_gain` equals ``gain``."""
    wavelength = _positive(c, "c") / _positive(carrier_frequency, "carrier_frequency")
    return wavelength / (4.0 * math.pi * math.sqrt(LinearGain(gain)))
