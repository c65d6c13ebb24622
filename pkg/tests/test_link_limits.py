import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eelimits.errors import InvalidArgumentError
from eelimits.link_limits import (
    ROUNDED_SPEED_OF_LIGHT,
    MimoConfig,
    SisoLink,
    SphereGeometry,
    free_space_distance,
    free_space_gain,
    isotropic_aperture,
    mimo_capacity_upper,
    mimo_ee_limit,
    rate_limit_infinite_bandwidth,
    sigma_max_sq_constant_modulus,
    siso_capacity,
    siso_ee_limit,
    siso_ee_tx_only,
    siso_ee_with_interference,
    sphere_antenna_count,
    ultimate_ee,
)
from eelimits.quantities import DataRate, EnergyEfficiency, db_to_linear, linear_to_db

N0 = 3.981071705534986e-21


def shannon(p, b, beta, n0=N0, interference=0.0):
    """Direct evaluation with log2, no log1p."""
    return b * math.log2(1.0 + p * beta / (b * n0 + interference))


# ---- links and capacity ------------------------------------------------------


def test_siso_link_physical_mode():
    with pytest.raises(InvalidArgumentError):
        SisoLink(10.0)
    link = SisoLink.unchecked(10.0)
    assert link.beta == 10.0
    assert SisoLink(1.0).beta == 1.0
    with pytest.raises(InvalidArgumentError):
        SisoLink(0.0)
    with pytest.raises(InvalidArgumentError):
        SisoLink(1e-8, n0=-1.0)


def test_mimo_config_validation():
    with pytest.raises(InvalidArgumentError):
        MimoConfig(4, 4, 2.0)
    assert MimoConfig.unchecked(4, 4, 2.0).sigma_max_sq == 2.0
    for m, n in [(0, 1), (1, 0), (1.5, 2), (True, 1)]:
        with pytest.raises(InvalidArgumentError):
            MimoConfig(m, n, 0.5)


@pytest.mark.parametrize(
    "beta, p, b, expected",
    [
        (1e-8, 0.0, 1e7, 0.0),
        (1e-8, 0.1, 1e7, 146165410.5108523),
        (1e-11, 0.1, 1e9, 323299322.69384146),
    ],
)
def test_siso_capacity(beta, p, b, expected):
    c = siso_capacity(SisoLink(beta, N0), p, b)
    assert isinstance(c, DataRate)
    assert c == pytest.approx(expected, rel=1e-12, abs=0)
    assert c == pytest.approx(shannon(p, b, beta), rel=1e-12, abs=0)


@pytest.mark.parametrize("p, b", [(-0.1, 1e6), (0.1, 0.0), (math.nan, 1e6), (0.1, math.inf)])
def test_siso_capacity_rejects(p, b):
    with pytest.raises(InvalidArgumentError):
        siso_capacity(SisoLink(1e-8, N0), p, b)


def test_siso_ee_tx_only():
    link = SisoLink(1e-8, N0)
    assert siso_ee_tx_only(link, 0.1, 1e7) == pytest.approx(1461654105.108523, rel=1e-12)
    with pytest.raises(InvalidArgumentError):
        siso_ee_tx_only(link, 0.0, 1e7)


def test_siso_ee_tx_only_near_limit():
    link = SisoLink(1e-11, N0)
    ee = siso_ee_tx_only(link, 1e-6, 1e9)
    assert ee < siso_ee_limit(link)
    assert ee == pytest.approx(siso_ee_limit(link), rel=1e-4)


@pytest.mark.parametrize(
    "beta, expected",
    [(1e-11, 3.623886098015134e9), (1e-5, 3.623886098015134e15), (1.0, 3.623886098015134e20)],
)
def test_siso_ee_limit(beta, expected):
    v = siso_ee_limit(SisoLink(beta, N0))
    assert isinstance(v, EnergyEfficiency)
    assert v == pytest.approx(expected, rel=1e-12)
    # reciprocal of the minimum energy per bit
    assert v == pytest.approx(1.0 / (N0 * math.log(2) / beta), rel=1e-14)


def test_siso_ee_limit_scaling():
    base = siso_ee_limit(SisoLink(1e-8, N0))
    assert siso_ee_limit(SisoLink(3e-8, N0)) == pytest.approx(3 * base, rel=1e-15)
    assert siso_ee_limit(SisoLink(1e-8, 2 * N0)) == pytest.approx(base / 2, rel=1e-15)


@given(
    beta_db=st.floats(-120, 0),
    p=st.floats(1e-9, 100),
    b=st.floats(1e3, 1e15),
)
def test_tx_only_ee_below_limit(beta_db, p, b):
    link = SisoLink(db_to_linear(beta_db), N0)
    assert siso_ee_tx_only(link, p, b) <= siso_ee_limit(link)


@given(
    beta_db=st.floats(-120, 0),
    p=st.floats(1e-6, 10),
    b=st.floats(1e3, 1e14),
    factor=st.floats(1.01, 1e3),
)
def test_tx_only_ee_increasing_in_bandwidth(beta_db, p, b, factor):
    link = SisoLink(db_to_linear(beta_db), N0)
    assert siso_ee_tx_only(link, p, b) <= siso_ee_tx_only(link, p, b * factor)


def test_ee_strictly_increasing_at_moderate_snr():
    link = SisoLink(db_to_linear(-110), N0)
    vals = [siso_ee_tx_only(link, 0.1, b) for b in (1e6, 1e7, 1e8, 1e9, 1e10)]
    assert all(x < y for x, y in zip(vals, vals[1:]))


def test_fig3_convergence_ratio():
    p = 0.1
    expected = math.log(1.2512) / 0.2512
    for beta_db, b in [(-110, 1e9), (-90, 1e11)]:
        link = SisoLink(db_to_linear(beta_db), N0)
        assert siso_ee_tx_only(link, p, b) / siso_ee_limit(link) == pytest.approx(expected, abs=1e-3)


# ---- interference ------------------------------------------------------------


def test_interference_zero_alpha_matches_tx_only():
    link = SisoLink(1e-8, N0)
    assert siso_ee_with_interference(link, 0.0, 0.1, 1e7) == siso_ee_tx_only(link, 0.1, 1e7)


def test_interference_value():
    link = SisoLink(1e-8, N0)
    ee = siso_ee_with_interference(link, 1e-9, 0.1, 1e7)
    assert ee == pytest.approx(shannon(0.1, 1e7, 1e-8, interference=0.1 * 1e-9) / 0.1, rel=1e-12)
    assert ee == pytest.approx(345890959.81328404, rel=1e-12)


def test_interference_limit_invariance():
    link = SisoLink(1e-8, N0)
    ee = siso_ee_with_interference(link, 1e-9, 1e-9, 1e9)
    assert ee == pytest.approx(siso_ee_limit(link), rel=1e-3)


@given(beta=st.floats(1e-11, 1e-7), alpha=st.floats(0, 1e-7), b=st.floats(1e6, 1e12))
def test_interference_limit_invariance_property(beta, alpha, b):
    link = SisoLink(beta, N0)
    ee = siso_ee_with_interference(link, alpha, 1e-18 * b, b)
    assert ee == pytest.approx(siso_ee_limit(link), rel=1e-4)


@pytest.mark.parametrize("alpha", [-1e-9, math.nan])
def test_interference_rejects_bad_alpha(alpha):
    with pytest.raises(InvalidArgumentError):
        siso_ee_with_interference(SisoLink(1e-8, N0), alpha, 0.1, 1e7)


# ---- infinite bandwidth --------------------------------------------------------


def test_rate_limit_infinite_bandwidth():
    link = SisoLink(10**-7.5, N0)
    assert rate_limit_infinite_bandwidth(link, 0.1) == pytest.approx(1.146e12, rel=1e-3)
    assert rate_limit_infinite_bandwidth(link, 0.0) == 0.0
    assert rate_limit_infinite_bandwidth(SisoLink(1e-8, N0), 1.0) == pytest.approx(3.624e12, rel=1e-3)


def test_capacity_approaches_infinite_bandwidth_rate():
    link = SisoLink(10**-7.5, N0)
    limit = rate_limit_infinite_bandwidth(link, 0.1)
    assert siso_capacity(link, 0.1, 1e18) == pytest.approx(limit, rel=1e-5)
    assert siso_capacity(link, 0.1, 1e18) < limit


# ---- MIMO --------------------------------------------------------------------


def test_mimo_reduces_to_siso():
    cfg = MimoConfig(1, 1, 1e-8, N0)
    assert mimo_capacity_upper(cfg, 0.1, 1e7) == siso_capacity(SisoLink(1e-8, N0), 0.1, 1e7)
    assert mimo_ee_limit(cfg) == pytest.approx(siso_ee_limit(SisoLink(1e-8, N0)), rel=1e-15)


def test_mimo_capacity_value():
    c = mimo_capacity_upper(MimoConfig(4, 4, 1.0, N0), 0.1, 1e7)
    assert c == pytest.approx(4e7 * math.log2(1 + 0.1 / (4e7 * N0)), rel=1e-12)
    assert c == pytest.approx(1567676335.0642235, rel=1e-12)


def test_mimo_capacity_zero_power():
    assert mimo_capacity_upper(MimoConfig(2, 8, 1.0, N0), 0.0, 1e7) == 0.0


@pytest.mark.parametrize(
    "m, n, sigma, expected",
    [(4, 4, 1.0, 3.623886098015134e20), (2, 1, 1.0, 3.623886098015134e20 / 2), (1, 4, 1.0, 3.623886098015134e20)],
)
def test_mimo_ee_limit(m, n, sigma, expected):
    assert mimo_ee_limit(MimoConfig(m, n, sigma, N0)) == pytest.approx(expected, rel=1e-12)


@given(beta_db=st.floats(-120, 0), p=st.floats(1e-6, 10), b=st.floats(1e3, 1e12), m=st.integers(1, 64))
def test_mimo_bound_dominates_siso(beta_db, p, b, m):
    link = SisoLink(db_to_linear(beta_db), N0)
    assert mimo_capacity_upper(MimoConfig(m, m, 1.0, N0), p, b) >= siso_capacity(link, p, b)


@pytest.mark.parametrize(
    "beta, m, n, value, physical",
    [(1e-8, 64, 1, 6.4e-7, True), (1e-2, 1000, 1, 10.0, False), (0.5, 2, 2, 1.0, True)],
)
def test_sigma_max_sq_constant_modulus(beta, m, n, value, physical):
    out = sigma_max_sq_constant_modulus(beta, m, n)
    assert out.sigma_max_sq == pytest.approx(value, rel=1e-12)
    assert out.physical is physical


def test_constant_modulus_matches_frobenius_over_rank():
    # all entries magnitude sqrt(beta): ||H||_F^2 / min(M, N) = beta M N / min(M, N)
    beta, m, n = 1e-6, 8, 3
    assert sigma_max_sq_constant_modulus(beta, m, n).sigma_max_sq == pytest.approx(beta * m * n / min(m, n))


@pytest.mark.parametrize("m, n", [(16, 5), (8, 8), (3, 12)])
def test_constant_modulus_equal_singular_values_numerically(m, n):
    import numpy as np

    # partial DFT: every entry has magnitude sqrt(beta), all singular values equal
    beta = 1e-4
    k = max(m, n)
    dft = np.exp(-2j * np.pi * np.outer(np.arange(k), np.arange(k)) / k)
    h = math.sqrt(beta) * dft[:n, :m]
    sv = np.linalg.svd(h, compute_uv=False)
    assert np.allclose(np.abs(h), math.sqrt(beta))
    assert np.allclose(sv, sv[0])
    assert sv[0] ** 2 == pytest.approx(sigma_max_sq_constant_modulus(beta, m, n).sigma_max_sq, rel=1e-10)


# ---- ultimate limit and geometry ---------------------------------------------


def test_ultimate_ee():
    v = ultimate_ee(N0)
    assert v == pytest.approx(3.623886098015134e20, rel=1e-12)
    assert math.log10(v) == pytest.approx(20.559, abs=1e-3)
    assert ultimate_ee(2 * N0) == pytest.approx(v / 2, rel=1e-15)
    assert v == siso_ee_limit(SisoLink(1.0, N0))


def test_sphere_antenna_count():
    a = 0.1**2 / (4 * math.pi)
    n = sphere_antenna_count(SphereGeometry(10.0, a))
    assert n == 1579137
    assert sphere_antenna_count(SphereGeometry(1.0, 4 * math.pi)) == 1
    assert sphere_antenna_count(SphereGeometry(20.0, a)) == pytest.approx(4 * n, abs=4)


@given(r=st.floats(0.01, 1e3), area=st.floats(1e-6, 10.0))
def test_sphere_count_never_under_covers(r, area):
    geom = SphereGeometry(r, area)
    assert sphere_antenna_count(geom) * area >= 4 * math.pi * r**2 * (1 - 1e-12)


def test_sphere_geometry_validation():
    with pytest.raises(InvalidArgumentError):
        SphereGeometry(0.0, 1.0)
    with pytest.raises(InvalidArgumentError):
        SphereGeometry(1.0, -1.0)


def test_isotropic_aperture():
    a3 = isotropic_aperture(3e9, c=ROUNDED_SPEED_OF_LIGHT)
    assert a3 == pytest.approx(0.1**2 / (4 * math.pi), rel=1e-12)
    assert isotropic_aperture(6e9, c=ROUNDED_SPEED_OF_LIGHT) == pytest.approx(a3 / 4, rel=1e-12)
    assert isotropic_aperture(3e8, c=ROUNDED_SPEED_OF_LIGHT) == pytest.approx(100 * a3, rel=1e-12)
    assert isotropic_aperture(3e9) < a3  # default c = 2.998e8


def fspl_db(d, f, c):
    """Friis path loss in dB, 20 log10(4 pi d f / c)."""
    return 20 * math.log10(4 * math.pi * d * f / c)


@pytest.mark.parametrize("d, target_db", [(2.5, -49.9), (80.0, -80.0), (800.0, -100.0)])
def test_free_space_anchors(d, target_db):
    g = free_space_gain(d, 3e9, c=ROUNDED_SPEED_OF_LIGHT)
    assert linear_to_db(g) == pytest.approx(-fspl_db(d, 3e9, ROUNDED_SPEED_OF_LIGHT), abs=1e-12)
    assert linear_to_db(g) == pytest.approx(target_db, abs=0.2)


def test_free_space_footnote_value():
    assert free_space_gain(2.5, 3e9, c=ROUNDED_SPEED_OF_LIGHT) == pytest.approx(1.013e-5, rel=1e-3)


@given(d=st.floats(0.1, 1e5), f=st.floats(1e8, 1e11))
def test_free_space_distance_inverts_gain(d, f):
    assert free_space_distance(free_space_gain(d, f), f) == pytest.approx(d, rel=1e-12)


@pytest.mark.parametrize("args", [(0.0, 3e9), (1.0, 0.0), (-1.0, 3e9)])
def test_free_space_rejects(args):
    with pytest.raises(InvalidArgumentError):
        free_space_gain(*args)
