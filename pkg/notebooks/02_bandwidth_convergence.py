"""
How fast the EE reaches its limit as bandwidth grows
====================================================

At fixed transmit power (20 dBm) the transmit-only EE creeps up to its ceiling
as B grows. The ratio EE / limit depends only on the SNR P beta / (B N0), so
every extra 20 dB of channel gain needs 100x more bandwidth for the same
fraction of the limit.
"""

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

import eelimits as ee
from eelimits.sweeps import sweep_fig3

p = ee.dbm_to_watts(20)
table = sweep_fig3(p=p)
b = table.column("bandwidth_hz")

fig, ax = plt.subplots()
for name in table.columns[1::2]:
    line, = ax.loglog(b, table.column(name), label=name.replace("ee_beta_m", "beta = -").replace("db", " dB"))
    ax.loglog(b, table.column(name.replace("ee_", "limit_")), "--", color=line.get_color())
ax.set_xlabel("Bandwidth B [Hz]")
ax.set_ylabel("EE [bit/Joule]")
ax.legend()
fig.savefig("02_ee_vs_bandwidth.png", dpi=120)

# %%
for beta_db, bw in ((-110, 1e9), (-90, 1e11), (-70, 1e13)):
    link = ee.SisoLink(ee.db_to_linear(beta_db))
    frac = ee.siso_ee_tx_only(link, p, bw) / ee.siso_ee_limit(link)
    print(f"beta = {beta_db} dB, B = {bw:.0e} Hz: EE / limit = {frac:.4f}")

# %%
# Rate, on the other hand, depends on which way P/B goes to zero.
link = ee.SisoLink(ee.db_to_linear(-75))
print("rate as B -> inf:", ee.format_si(ee.rate_limit_infinite_bandwidth(link, p), "bit/s"))
print("rate as P -> 0:  ", float(ee.rate_limit_infinite_bandwidth(link, 0.0)), "bit/s")
