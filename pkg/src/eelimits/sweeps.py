"""Parameter sweeps behind the three line/surface figures.

Each sweep returns a :class:`SweepTable`; :meth:`SweepTable.to_csv` writes it
with ``#``-prefixed metadata lines above a header row. Rows are produced in a
fixed order and floats are printed with 9 significant digits, so the same
inputs always give byte-identical files.
"""

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .circuit_models import (
    CircuitParams,
    ee_varying_circuit,
    optimal_operating_point_siso,
    rate_at_optimum,
)
from .errors import InvalidArgumentError
from .link_limits import (
    SPEED_OF_LIGHT,
    SisoLink,
    free_space_distance,
    siso_capacity,
    siso_ee_limit,
    siso_ee_tx_only,
)
from .quantities import NOISE_PSD_ROOM_TEMPERATURE, db_to_linear, linear_to_db

__all__ = [
    "SweepSpec",
    "SweepTable",
    "Fig4Tables",
    "sweep_fig1",
    "sweep_fig3",
    "sweep_fig4",
    "run_sweep",
    "write_plot_script",
    "FIG3_DEFAULT_BETAS_DB",
]

FIG3_DEFAULT_BETAS_DB = (-110.0, -90.0, -70.0, -50.0)
FIGURES = ("fig1", "fig3", "fig4")


@dataclass
class SweepTable:
    columns: list
    rows: list
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise InvalidArgumentError(
                    f"row {i} has {len(row)} values, expected {len(self.columns)}"
                )
            if not all(math.isfinite(v) for v in row):
                raise InvalidArgumentError(f"row {i} contains a non-finite value")

    def column(self, name):
        k = self.columns.index(name)
        return np.array([row[k] for row in self.rows])

    def to_csv_text(self):
        lines = [f"# {key}: {value}" for key, value in self.metadata.items()]
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(f"{v:.8e}" for v in row))
        return "\n".join(lines) + "\n"

    def to_csv(self, path):
        path = Path(path)
        path.write_text(self.to_csv_text(), encoding="utf-8")
        return path


@dataclass
class Fig4Tables:
    ee_surface: SweepTable
    rate_surface: SweepTable
    locus: SweepTable


@dataclass(frozen=True)
class SweepSpec:
    """Which figure to regenerate, over which ranges, and where to write it.

    ``ranges`` maps axis names to ``(lo, hi)``: ``beta_db`` for fig1,
    ``bandwidth_hz`` for fig3, ``power_w`` and ``bandwidth_hz`` for fig4.
    Missing axes fall back to the defaults of the sweep functions.
    """

    figure_id: str
    samples_per_axis: int | None = None
    ranges: dict = field(default_factory=dict)
    output_path: str | None = None

    def __post_init__(self):
        if self.figure_id not in FIGURES:
            raise InvalidArgumentError(f"figure_id must be one of {FIGURES}, got {self.figure_id!r}")
        if self.samples_per_axis is not None and self.samples_per_axis < 2:
            raise InvalidArgumentError("samples_per_axis must be >= 2")
        for name, (lo, hi) in self.ranges.items():
            if not lo < hi:
                raise InvalidArgumentError(f"range {name} must be ordered, got ({lo}, {hi})")


def _meta(figure, **params):
    meta = {"figure": figure, "generator": f"eelimits {__version__}"}
    meta.update({k: v for k, v in params.items()})
    return meta


def _logspace(lo, hi, n):
    if not 0 < lo < hi:
        raise InvalidArgumentError(f"log-spaced range needs 0 < lo < hi, got ({lo}, {hi})")
    if n < 2:
        raise InvalidArgumentError("need at least 2 samples")
    return np.logspace(math.log10(lo), math.log10(hi), int(n))


def sweep_fig1(beta_db_range=(-110.0, -50.0), n0=NOISE_PSD_ROOM_TEMPERATURE, samples=121,
               carrier_frequency=3e9, c=SPEED_OF_LIGHT):
    """EE limit versus channel gain, with the free-space distance giving each gain."""
    lo, hi = map(float, beta_db_range)
    if not -200.0 <= lo < hi <= 0.0:
        raise InvalidArgumentError(f"beta_db range must lie in [-200, 0] and be ordered, got {beta_db_range}")
    rows = []
    for beta_db in np.linspace(lo, hi, int(samples)):
        beta = db_to_linear(beta_db)
        rows.append([
            float(beta_db),
            float(siso_ee_limit(SisoLink(beta, n0))),
            free_space_distance(beta, carrier_frequency, c),
        ])
    meta = _meta("fig1", beta_db_range=f"{lo}..{hi}", samples=int(samples), n0_w_per_hz=float(n0),
                 carrier_frequency_hz=carrier_frequency, speed_of_light_m_per_s=c)
    return SweepTable(["beta_db", "ee_limit_bit_per_joule", "free_space_distance_m"], rows, meta)


def _beta_tag(beta_db):
    v = f"{abs(beta_db):g}".replace(".", "p")
    return ("m" if beta_db < 0 else "") + v + "db"


def sweep_fig3(beta_db_set=FIG3_DEFAULT_BETAS_DB, p=0.1, n0=NOISE_PSD_ROOM_TEMPERATURE,
               b_range=(1e6, 1e16), samples=101):
    """Transmit-only EE versus bandwidth at fixed power, one column pair per gain."""
    links = [SisoLink(db_to_linear(bd), n0) for bd in beta_db_set]
    columns = ["bandwidth_hz"]
    for bd in beta_db_set:
        columns += [f"ee_beta_{_beta_tag(bd)}", f"limit_beta_{_beta_tag(bd)}"]
    rows = []
    for b in _logspace(*b_range, samples):
        row = [float(b)]
        for link in links:
            row += [float(siso_ee_tx_only(link, p, b)), float(siso_ee_limit(link))]
        rows.append(row)
    meta = _meta(
        "fig3", beta_db_set=" ".join(f"{bd:g}" for bd in beta_db_set), power_w=float(p),
        n0_w_per_hz=float(n0), bandwidth_range_hz=f"{b_range[0]:g}..{b_range[1]:g}",
        samples=int(samples),
        assumption="gain set not printed with the figure; default spans -110..-50 dB in 20 dB steps",
    )
    return SweepTable(columns, rows, meta)


def sweep_fig4(p_range=(1e-5, 1e1), b_range=(1e9, 1e13), link=None, cp=None, samples=41):
    """EE and rate surfaces over (P, B), plus the EE-optimal locus.

    The locus has one row per bandwidth sample, with power set from the
    closed-form optimal ratio.
    """
    link = link or SisoLink(1e-8)
    cp = cp or CircuitParams(nu=1e-14, eta=1e-15)
    point = optimal_operating_point_siso(link, cp)
    powers = _logspace(*p_range, samples)
    bandwidths = _logspace(*b_range, samples)

    ee_rows, rate_rows, locus_rows = [], [], []
    for p in powers:
        for b in bandwidths:
            ee_rows.append([float(p), float(b), float(ee_varying_circuit(link, p, b, cp))])
            rate_rows.append([float(p), float(b), float(siso_capacity(link, p, b))])
    for b in bandwidths:
        p = point.ratio_p_over_b * b
        locus_rows.append([float(b), float(p), float(ee_varying_circuit(link, p, b, cp)),
                           float(rate_at_optimum(b, point))])

    meta = _meta(
        "fig4", beta=float(link.beta), n0_w_per_hz=float(link.n0), nu=cp.nu, eta=cp.eta,
        power_range_w=f"{p_range[0]:g}..{p_range[1]:g}",
        bandwidth_range_hz=f"{b_range[0]:g}..{b_range[1]:g}", samples_per_axis=int(samples),
        optimal_ratio_w_per_hz=f"{point.ratio_p_over_b:.8e}",
        optimal_snr_db=f"{linear_to_db(point.snr):.4f}", max_ee=f"{float(point.ee):.8e}",
        assumption="axis ranges inferred from locus rates 0.3 Gbit/s..3 Tbit/s",
    )
    return Fig4Tables(
        SweepTable(["power_w", "bandwidth_hz", "ee_bit_per_joule"], ee_rows, dict(meta, surface="ee")),
        SweepTable(["power_w", "bandwidth_hz", "rate_bit_per_s"], rate_rows, dict(meta, surface="rate")),
        SweepTable(["bandwidth_hz", "power_w", "ee_bit_per_joule", "rate_bit_per_s"], locus_rows,
                   dict(meta, surface="locus")),
    )


def run_sweep(spec, **model):
    """Evaluate ``spec`` and write its CSV file(s).

    For fig4 ``output_path`` is a prefix and three files are written:
    ``<prefix>_ee.csv``, ``<prefix>_rate.csv`` and ``<prefix>_locus.csv``.
    Extra keyword arguments go to the sweep function. Returns
    ``{name: (table, path)}``.
    """
    kwargs = dict(model)
    if spec.samples_per_axis is not None:
        kwargs["samples"] = spec.samples_per_axis
    r = spec.ranges
    if spec.figure_id == "fig1":
        if "beta_db" in r:
            kwargs["beta_db_range"] = r["beta_db"]
        tables = {"fig1": sweep_fig1(**kwargs)}
    elif spec.figure_id == "fig3":
        if "bandwidth_hz" in r:
            kwargs["b_range"] = r["bandwidth_hz"]
        tables = {"fig3": sweep_fig3(**kwargs)}
    else:
        if "power_w" in r:
            kwargs["p_range"] = r["power_w"]
        if "bandwidth_hz" in r:
            kwargs["b_range"] = r["bandwidth_hz"]
        t = sweep_fig4(**kwargs)
        tables = {"ee": t.ee_surface, "rate": t.rate_surface, "locus": t.locus}

    out = {}
    base = Path(spec.output_path or spec.figure_id)
    for name, table in tables.items():
        if spec.figure_id == "fig4":
            stem = base.name[:-4] if base.suffix == ".csv" else base.name
            path = base.with_name(f"{stem}_{name}.csv")
        else:
            path = base if base.suffix == ".csv" else base.with_suffix(".csv")
        out[name] = (table, table.to_csv(path))
    return out


_PLOT_TEMPLATE = '''"""Plot {figure} from CSV files written by eelimits. Needs matplotlib."""
import csv
import sys

import matplotlib.pyplot as plt


def read(path):
    with open(path, encoding="utf-8") as fh:
        rows = [line for line in fh if not line.startswith("#")]
    reader = csv.reader(rows)
    header = next(reader)
    data = [[float(v) for v in row] for row in reader]
    return header, [list(col) for col in zip(*data)]


{body}

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "{figure}.png"
    plt.tight_layout()
    plt.savefig(out, dpi=150)
'''

_PLOT_BODIES = {
    "fig1": '''header, cols = read({csv0!r})
fig, ax = plt.subplots()
ax.semilogy(cols[0], cols[1])
ax.set_xlabel("Channel gain beta [dB]")
ax.set_ylabel("Maximum EE [bit/Joule]")
ax.grid(True, which="both", alpha=0.3)''',
    "fig3": '''header, cols = read({csv0!r})
fig, ax = plt.subplots()
for k in range(1, len(header), 2):
    line, = ax.loglog(cols[0], cols[k], label=header[k])
    ax.loglog(cols[0], cols[k + 1], "--", color=line.get_color())
ax.set_xlabel("Bandwidth B [Hz]")
ax.set_ylabel("EE [bit/Joule]")
ax.legend()
ax.grid(True, which="both", alpha=0.3)''',
    "fig4": '''import numpy as np

fig, axes = plt.subplots(1, 2, figsize=(11, 4.5))
_, locus = read({csv2!r})
for ax, path, label in zip(axes, [{csv0!r}, {csv1!r}], ["EE [bit/Joule]", "Rate [bit/s]"]):
    _, cols = read(path)
    p, b, z = (np.asarray(c) for c in cols)
    n = int(round(len(p) ** 0.5))
    pc = ax.pcolormesh(p.reshape(n, n), b.reshape(n, n), np.log10(z.reshape(n, n)), shading="auto")
    fig.colorbar(pc, ax=ax, label="log10 " + label)
    ax.plot(locus[1], locus[0], "k-", lw=2.5, label="Maximum EE")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("Transmit power P [W]")
    ax.set_ylabel("Bandwidth B [Hz]")
    ax.legend(loc="lower right")''',
}


def write_plot_script(figure_id, csv_paths, script_path):
    """Write a standalone matplotlib script that redraws ``figure_id`` from CSV."""
    if figure_id not in FIGURES:
        raise InvalidArgumentError(f"unknown figure {figure_id!r}")
    names = {f"csv{i}": str(p) for i, p in enumerate(csv_paths)}
    body = _PLOT_BODIES[figure_id].format(**names)
    script_path = Path(script_path)
    script_path.write_text(_PLOT_TEMPLATE.format(figure=figure_id, body=body), encoding="utf-8")
    return script_path
