"""
Multi-antenna limits
====================

Equal singular values give an upper bound on MIMO capacity. The constant-
modulus channel model lets the top squared singular value grow with the
antenna count, but energy conservation caps it at 1. With that cap and the
same hardware constants as the single-antenna example, the optimum lands in
the hundreds of Tbit/Joule.
"""

# %%
import eelimits as ee

for m in (1, 64, 1_000, 100_000):
    g = ee.sigma_max_sq_constant_modulus(1e-5, m, 1)
    print(f"M = {m:>7}: sigma_max^2 = {g.sigma_max_sq:.3g}  physical={g.physical}")

# %%
cfg = ee.MimoConfig(4, 4, 1.0)
print("tx-only EE limit:", ee.format_si(ee.mimo_ee_limit(cfg), "bit/Joule"))
print("capacity bound at 0.1 W, 10 MHz:", ee.format_si(ee.mimo_capacity_upper(cfg, 0.1, 1e7), "bit/s"))

# %%
cp = ee.CircuitParams(nu=1e-14, eta=1e-15)
op = ee.optimal_operating_point_mimo(cfg, cp)
print(f"x = {op.x:.4f}, P/(M B) = {op.ratio_p_over_b:.4e} W/Hz, SNR = {ee.linear_to_db(op.snr):.1f} dB")
print("max EE:", ee.format_si(op.ee, "bit/Joule"))
for m in (1, 16, 256):
    c = ee.MimoConfig(m, m, 1.0)
    b = 1e8
    value = ee.ee_varying_circuit_mimo(c, op.power_for_bandwidth(b, m), b, cp)
    print(f"M = {m:>3}: EE at the optimal ratio = {ee.format_si(value, 'bit/Joule')}")
