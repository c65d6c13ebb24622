"""
The EE-optimal power/bandwidth ratio with hardware costs
========================================================

Once bandwidth-proportional processing power (nu B) and rate-proportional
coding power (eta C) are charged, the EE peaks at one particular P/B. The
closed form uses the Lambert W function; a brute-force lattice search
confirms it, and moving along the optimal ratio buys any rate at the same EE.
"""

# %%
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eelimits as ee
from eelimits.sweeps import sweep_fig4

link = ee.SisoLink(ee.db_to_linear(-80))
cp = ee.CircuitParams(nu=1e-14, eta=1e-15)
op = ee.optimal_operating_point_siso(link, cp)
print(f"x = {op.x:.5f}, P/B = {op.ratio_p_over_b:.4e} W/Hz")
print(f"SNR = {ee.linear_to_db(op.snr):.2f} dB, SE = {op.se:.4f} bit/s/Hz")
print(f"max EE = {ee.format_si(op.ee, 'bit/Joule')}")

# %%
# Independent check: exhaustive search over a 256 x 256 log lattice.
res = ee.grid_search_oracle(lambda p, b: ee.ee_varying_circuit(link, p, b, cp), (1e-8, 1.0), (1e6, 1e13))
print(f"lattice best EE / closed form = {res.ee / op.ee:.7f}")
print(f"lattice ratio off by {abs(math.log10(res.ratio / op.ratio_p_over_b)):.4f} decades")

# %%
# Coding energy lowers the peak but leaves the optimal ratio untouched.
for eta in (0.0, 1e-15, 1e-13):
    p2 = ee.optimal_operating_point_siso(link, ee.CircuitParams(nu=1e-14, eta=eta))
    print(f"eta = {eta:.0e}: ratio {p2.ratio_p_over_b:.4e}, EE {ee.format_si(p2.ee, 'bit/Joule')}")

# %%
# The EE surface over (P, B) with the optimal locus drawn on top.
tables = sweep_fig4()
n = int(round(len(tables.ee_surface.rows) ** 0.5))
p = tables.ee_surface.column("power_w").reshape(n, n)
b = tables.ee_surface.column("bandwidth_hz").reshape(n, n)
z = tables.ee_surface.column("ee_bit_per_joule").reshape(n, n)
fig, ax = plt.subplots()
pc = ax.pcolormesh(p, b, np.log10(z), shading="auto")
fig.colorbar(pc, ax=ax, label="log10 EE [bit/Joule]")
ax.plot(tables.locus.column("power_w"), tables.locus.column("bandwidth_hz"), "k-", lw=2.5)
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel("Transmit power P [W]")
ax.set_ylabel("Bandwidth B [Hz]")
fig.savefig("03_ee_surface.png", dpi=120)

rates = tables.locus.column("rate_bit_per_s")
print(f"rates along the locus: {ee.format_si(rates[0], 'bit/s')} .. {ee.format_si(rates[-1], 'bit/s')}")
