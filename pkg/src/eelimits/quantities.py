"""Unit-tagged scalar quantities and dB conversions.

Every formula in the package works on linear SI values. The classes below are
thin ``float`` subclasses: they validate on construction and otherwise behave
exactly like floats, so ``PowerWatts(0.1) * 2`` is a plain ``0.2``.
"""

import math

from .errors import InvalidArgumentError

__all__ = [
    "LinearGain",
    "PowerWatts",
    "BandwidthHz",
    "NoisePsd",
    "EnergyEfficiency",
    "DataRate",
    "db_to_linear",
    "linear_to_db",
    "dbm_to_watts",
    "watts_to_dbm",
    "format_si",
    "NOISE_PSD_ROOM_TEMPERATURE",
]


class _Quantity(float):
    unit = ""
    strictly_positive = False

    def __new__(cls, value):
        try:
            v = float(value)
        except (TypeError, ValueError) as exc:
            raise InvalidArgumentError(f"{cls.__name__} needs a number, got {value!r}") from exc
        if not math.isfinite(v):
            raise InvalidArgumentError(f"{cls.__name__} must be finite, got {v}")
        if cls.strictly_positive and v <= 0:
            raise InvalidArgumentError(f"{cls.__name__} must be > 0, got {v}")
        if v < 0:
            raise InvalidArgumentError(f"{cls.__name__} must be >= 0, got {v}")
        return super().__new__(cls, v)

    def __repr__(self):
        return f"{type(self).__name__}({float(self)!r})"


class LinearGain(_Quantity):
    """Dimensionless power ratio such as a channel gain."""

    strictly_positive = True


class PowerWatts(_Quantity):
    unit = "W"


class BandwidthHz(_Quantity):
    unit = "Hz"
    strictly_positive = True


class NoisePsd(_Quantity):
    """Noise power spectral density in W/Hz."""

    unit = "W/Hz"
    strictly_positive = True


class EnergyEfficiency(_Quantity):
    unit = "bit/Joule"


class DataRate(_Quantity):
    unit = "bit/s"


def _finite(x, name):
    try:
        v = float(x)
    except (TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"{name} must be a number, got {x!r}") from exc
    if not math.isfinite(v):
        raise InvalidArgumentError(f"{name} must be finite, got {v}")
    return v


def db_to_linear(x_db):
    """Convert a power ratio in dB to a :class:`LinearGain`."""
    return LinearGain(10.0 ** (_finite(x_db, "x_db") / 10.0))


def linear_to_db(g):
    """Convert a positive power ratio to dB."""
    v = _finite(g, "g")
    if v <= 0:
        raise InvalidArgumentError(f"cannot express non-positive ratio {v} in dB")
    return 10.0 * math.log10(v)


def dbm_to_watts(x_dbm):
    """Convert dBm (or dBm/Hz) to W (or W/Hz)."""
    return PowerWatts(10.0 ** ((_finite(x_dbm, "x_dbm") - 30.0) / 10.0))


def watts_to_dbm(p):
    return linear_to_db(p) + 30.0


NOISE_PSD_ROOM_TEMPERATURE = NoisePsd(dbm_to_watts(-174.0))
"""-174 dBm/Hz, the thermal noise floor at room temperature."""


_PREFIXES = [
    (1e18, "E"),
    (1e15, "P"),
    (1e12, "T"),
    (1e9, "G"),
    (1e6, "M"),
    (1e3, "k"),
    (1.0, ""),
]


def _sig(x, digits):
    if abs(x) >= 10**digits:
        return f"{x:.0f}"
    return f"{x:.{digits}g}"


def format_si(value, unit, digits=2):
    """Render ``value`` with an engineering prefix, e.g. ``3.6 Gbit/Joule``.

    Values below 1 are printed without a prefix.
    """
    v = float(value)
    for scale, prefix in _PREFIXES:
        if abs(v) >= scale:
            return f"{_sig(v / scale, digits)} {prefix}{unit}"
    return f"{v:.{digits}g} {unit}"
