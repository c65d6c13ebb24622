"""
Energy-efficiency limits of a single link
=========================================

With transmit power as the only cost, the EE of a Shannon-capacity link grows
as P/B shrinks and saturates at log2(e) * beta / N0. This script tabulates that
ceiling over practical channel gains, shows that interference does not change
it, and ends with the lossless-channel value log2(e) / N0.
"""

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eelimits as ee
from eelimits.sweeps import sweep_fig1

n0 = ee.NOISE_PSD_ROOM_TEMPERATURE
print(f"N0 = {float(n0):.4e} W/Hz (-174 dBm/Hz)")

# %%
# The ceiling for gains between -110 dB and -50 dB. The distance column is
# the free-space range that produces each gain at 3 GHz.
table = sweep_fig1(c=ee.ROUNDED_SPEED_OF_LIGHT)
beta_db = table.column("beta_db")
limit = table.column("ee_limit_bit_per_joule")
for target in (-110.0, -80.0, -50.0):
    k = int(np.argmin(np.abs(beta_db - target)))
    print(f"beta = {target:6.1f} dB: {ee.format_si(limit[k], 'bit/Joule'):>16}"
          f" at {table.column('free_space_distance_m')[k]:7.1f} m")

fig, ax = plt.subplots()
ax.semilogy(beta_db, limit)
ax.set_xlabel("Channel gain beta [dB]")
ax.set_ylabel("Maximum EE [bit/Joule]")
ax.grid(True, which="both", alpha=0.3)
fig.savefig("01_ee_limit_vs_gain.png", dpi=120)

# %%
# Interference treated as noise vanishes from the limit: at tiny P/B the
# receiver is noise limited whatever alpha is.
link = ee.SisoLink(1e-8)
for alpha in (0.0, 1e-9, 1e-8):
    v = ee.siso_ee_with_interference(link, alpha, 1e-9, 1e9)
    print(f"alpha = {alpha:.0e}: EE / limit = {v / ee.siso_ee_limit(link):.6f}")

# %%
# A sphere of receive antennas captures every transmitted Watt, which caps
# the squared singular values at 1 and gives the ultimate value.
aperture = ee.isotropic_aperture(3e9, c=ee.ROUNDED_SPEED_OF_LIGHT)
count = ee.sphere_antenna_count(ee.SphereGeometry(10.0, aperture))
print(f"antennas to cover a 10 m sphere at 3 GHz: {count:,}")
print(f"ultimate EE: {float(ee.ultimate_ee()):.4e} bit/Joule"
      f" = {ee.format_si(ee.ultimate_ee(), 'bit/Joule')}")
