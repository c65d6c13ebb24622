"""Command-line front end.

Subcommands: ``limit``, ``optimum``, ``sweep`` and ``verify``. Gains, powers
and the noise PSD can each be given in linear units (``--beta 1e-8``) or in
dB (``--beta-db -80``), but not both. ``--config FILE`` reads flat
``key = value`` lines using the long option names (``beta_db = -80``). Flags
given on the command line override the file.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 degenerate
optimum (nu = 0), 4 I/O error.
"""

import argparse
import json
import math
import sys

from . import __version__
from .circuit_models import (
    CircuitParams,
    optimal_operating_point_mimo,
    optimal_operating_point_siso,
    rate_at_optimum,
)
from .errors import DegenerateOptimumError, InvalidArgumentError
from .link_limits import (
    ROUNDED_SPEED_OF_LIGHT,
    SPEED_OF_LIGHT,
    MimoConfig,
    SisoLink,
    mimo_ee_limit,
    siso_ee_limit,
    ultimate_ee,
)
from .quantities import (
    NOISE_PSD_ROOM_TEMPERATURE,
    db_to_linear,
    dbm_to_watts,
    format_si,
    linear_to_db,
    watts_to_dbm,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4

# each entry: linear dest, dB dest, converter from the dB form
_PAIRS = {
    "beta": ("beta", "beta_db", db_to_linear),
    "sigma_sq": ("sigma_sq", "sigma_sq_db", db_to_linear),
    "n0": ("n0", "n0_dbm_hz", dbm_to_watts),
    "p": ("p", "p_dbm", dbm_to_watts),
}


class UsageError(Exception):
    pass


def _add_pair(parser, key, help_linear, help_db):
    lin, db, _ = _PAIRS[key]
    parser.add_argument("--" + lin.replace("_", "-"), dest=lin, type=float, help=help_linear)
    parser.add_argument("--" + db.replace("_", "-"), dest=db, type=float, help=help_db)


def _add_common(parser):
    parser.add_argument("--config", help="flat key=value file; command-line flags win")
    parser.add_argument("--format", dest="format", choices=("human", "json", "csv"))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eelimits", description="Energy-efficiency limits of wireless links."
    )
    parser.add_argument("--version", action="version", version=f"eelimits {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("limit", help="EE upper limit in bit/Joule")
    _add_common(p)
    _add_pair(p, "beta", "channel gain (linear)", "channel gain [dB]")
    _add_pair(p, "sigma_sq", "squared max singular value (linear)", "squared max singular value [dB]")
    _add_pair(p, "n0", "noise PSD [W/Hz]", "noise PSD [dBm/Hz], default -174")
    p.add_argument("--ultimate", action="store_const", const=True, help="lossless-channel limit log2(e)/N0")
    p.add_argument("--m", type=int, help="transmit antennas (with --sigma-sq)")
    p.add_argument("--n", type=int, help="receive antennas (with --sigma-sq)")
    p.add_argument("--unchecked", action="store_const", const=True, help="allow gains above 1")

    p = sub.add_parser("optimum", help="EE-optimal P/B ratio with circuit power")
    _add_common(p)
    _add_pair(p, "beta", "channel gain (linear)", "channel gain [dB]")
    _add_pair(p, "sigma_sq", "squared max singular value (linear)", "squared max singular value [dB]")
    _add_pair(p, "n0", "noise PSD [W/Hz]", "noise PSD [dBm/Hz], default -174")
    p.add_argument("--nu", type=float, help="circuit power per Hz [W/Hz]")
    p.add_argument("--eta", type=float, help="coding energy [J/bit], default 0")
    p.add_argument("--m", type=int, help="antennas per side for the MIMO model, default 1")
    p.add_argument("--bandwidth", type=float, help="report P and rate at this bandwidth [Hz]")
    p.add_argument("--unchecked", action="store_const", const=True, help="allow gains above 1")

    p = sub.add_parser("sweep", help="write figure data as CSV")
    _add_common(p)
    p.add_argument("--figure", choices=("fig1", "fig3", "fig4"))
    p.add_argument("--out", help="output file (fig1, fig3) or prefix (fig4)")
    p.add_argument("--samples", type=int, help="samples per axis")
    p.add_argument("--beta-db-min", type=float)
    p.add_argument("--beta-db-max", type=float)
    p.add_argument("--b-min", type=float, help="bandwidth lower bound [Hz]")
    p.add_argument("--b-max", type=float, help="bandwidth upper bound [Hz]")
    p.add_argument("--p-min", type=float, help="power lower bound [W] (fig4)")
    p.add_argument("--p-max", type=float, help="power upper bound [W] (fig4)")
    _add_pair(p, "p", "transmit power [W] (fig3)", "transmit power [dBm] (fig3), default 20")
    _add_pair(p, "n0", "noise PSD [W/Hz]", "noise PSD [dBm/Hz], default -174")
    p.add_argument("--plot-script", help="also write a matplotlib script to this path")
    p.add_argument("--c", type=float, help=f"speed of light [m/s], default {SPEED_OF_LIGHT:g}")

    p = sub.add_parser("verify", help="run the published-number regression checks")
    p.add_argument("--json", action="store_const", const=True, help="print a JSON report")
    p.add_argument("--c", type=float, help=f"speed of light [m/s], default {ROUNDED_SPEED_OF_LIGHT:g}")
    return parser


def _subparser(parser, name):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[name]
    raise KeyError(name)


def read_config(path):
    """Parse a flat UTF-8 ``key = value`` file; ``#`` starts a comment line."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


def _merge_config(parser, ns):
    """Fill options missing on the command line from ``ns.config``."""
    sub = _subparser(parser, ns.command)
    actions = {a.dest: a for a in sub._actions if a.dest not in ("help", "config")}
    given = {k for k, v in vars(ns).items() if v is not None}
    for key, raw in read_config(ns.config).items():
        if key not in actions:
            raise UsageError(f"unknown config key {key!r} for '{ns.command}'")
        group = next((pair[:2] for pair in _PAIRS.values() if key in pair[:2]), (key,))
        if given.intersection(group):
            continue
        action = actions[key]
        if action.const is True:
            value = raw.lower() in ("1", "true", "yes", "on")
        else:
            try:
                value = action.type(raw) if action.type else raw
            except ValueError as exc:
                raise UsageError(f"bad value for {key}: {raw!r}") from exc
            if action.choices and value not in action.choices:
                raise UsageError(f"{key} must be one of {sorted(action.choices)}")
        setattr(ns, key, value)


def _pair(ns, key, default=None):
    lin, db, conv = _PAIRS[key]
    v_lin, v_db = getattr(ns, lin, None), getattr(ns, db, None)
    if v_lin is not None and v_db is not None:
        raise UsageError(f"give either --{lin.replace('_', '-')} or --{db.replace('_', '-')}, not both")
    if v_db is not None:
        return float(conv(v_db))
    if v_lin is not None:
        return v_lin
    return default


def _gain_source(ns):
    beta, sigma = _pair(ns, "beta"), _pair(ns, "sigma_sq")
    if beta is not None and sigma is not None:
        raise UsageError("give a channel gain (--beta) or a singular value (--sigma-sq), not both")
    return beta, sigma


def _emit(fmt, record, human_lines):
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        print(",".join(record))
        print(",".join(repr(v) if isinstance(v, float) else str(v) for v in record.values()))
    else:
        print("\n".join(human_lines))


def cmd_limit(ns):
    n0 = _pair(ns, "n0", float(NOISE_PSD_ROOM_TEMPERATURE))
    beta, sigma = _gain_source(ns)
    chosen = sum(v is not None and v is not False for v in (beta, sigma, ns.ultimate))
    if chosen != 1:
        raise UsageError("choose exactly one of --beta/--beta-db, --sigma-sq/--sigma-sq-db, --ultimate")
    if (ns.m is not None or ns.n is not None) and sigma is None:
        raise UsageError("--m/--n only apply together with --sigma-sq")

    if ns.ultimate:
        kind, value = "ultimate", ultimate_ee(n0)
    elif beta is not None:
        link = SisoLink.unchecked(beta, n0) if ns.unchecked else SisoLink(beta, n0)
        kind, value = "siso", siso_ee_limit(link)
    else:
        m, n = ns.m or 1, ns.n or ns.m or 1
        cls = MimoConfig.unchecked if ns.unchecked else MimoConfig
        kind, value = "mimo", mimo_ee_limit(cls(m, n, sigma, n0))
    record = {"model": kind, "n0_w_per_hz": n0, "ee_bit_per_joule": float(value)}
    _emit(ns.format, record, [
        f"EE limit ({kind}): {float(value):.4e} bit/Joule",
        f"  = {format_si(value, 'bit/Joule')} (log10 = {math.log10(value):.3f})",
    ])
    return EXIT_OK


def cmd_optimum(ns):
    n0 = _pair(ns, "n0", float(NOISE_PSD_ROOM_TEMPERATURE))
    beta, sigma = _gain_source(ns)
    if beta is None and sigma is None:
        raise UsageError("give --beta/--beta-db or --sigma-sq/--sigma-sq-db")
    if ns.nu is None:
        raise UsageError("--nu is required")
    cp = CircuitParams(nu=ns.nu, eta=ns.eta or 0.0)
    m = ns.m or 1
    gain = beta if beta is not None else sigma
    try:
        if m == 1 and sigma is None:
            link = SisoLink.unchecked(gain, n0) if ns.unchecked else SisoLink(gain, n0)
            point = optimal_operating_point_siso(link, cp)
        else:
            cls = MimoConfig.unchecked if ns.unchecked else MimoConfig
            point = optimal_operating_point_mimo(cls(m, m, gain, n0), cp)
    except DegenerateOptimumError as exc:
        print(f"degenerate optimum: {exc}; supremum {exc.supremum:.4e} bit/Joule", file=sys.stderr)
        return EXIT_DEGENERATE

    ratio_label = "P/B" if m == 1 else "P/(M B)"
    record = {
        "x": point.x,
        "ratio_w_per_hz": point.ratio_p_over_b,
        "ratio_dbm_per_mhz": watts_to_dbm(point.ratio_p_over_b * 1e6),
        "snr_db": linear_to_db(point.snr),
        "se_bit_per_s_per_hz": point.se,
        "ee_bit_per_joule": float(point.ee),
    }
    lines = [
        f"x = {point.x:.6g}",
        f"{ratio_label} = {point.ratio_p_over_b:.6e} W/Hz ({record['ratio_dbm_per_mhz']:.2f} dBm per MHz)",
        f"SNR = {record['snr_db']:.2f} dB",
        f"spectral efficiency = {point.se:.4f} bit/s/Hz",
        f"max EE = {float(point.ee):.4e} bit/Joule ({format_si(point.ee, 'bit/Joule')})",
    ]
    if ns.bandwidth is not None:
        power = point.power_for_bandwidth(ns.bandwidth, m)
        rate = m * rate_at_optimum(ns.bandwidth, point)
        record.update(bandwidth_hz=ns.bandwidth, power_w=float(power), rate_bit_per_s=float(rate))
        lines += [
            f"at B = {ns.bandwidth:.4g} Hz: P = {float(power):.4e} W, rate = {float(rate):.4e} bit/s "
            f"({format_si(rate, 'bit/s')})",
        ]
    _emit(ns.format, record, lines)
    return EXIT_OK


def cmd_sweep(ns):
    from .sweeps import SweepSpec, run_sweep, write_plot_script

    if ns.figure is None:
        raise UsageError("--figure is required")
    ranges = {}
    for name, lo, hi in (("beta_db", ns.beta_db_min, ns.beta_db_max), ("bandwidth_hz", ns.b_min, ns.b_max),
                         ("power_w", ns.p_min, ns.p_max)):
        if lo is not None or hi is not None:
            if lo is None or hi is None:
                raise UsageError(f"give both bounds for {name}")
            ranges[name] = (lo, hi)
    spec = SweepSpec(ns.figure, ns.samples, ranges, ns.out)

    model = {}
    n0 = _pair(ns, "n0")
    if n0 is not None:
        if ns.figure == "fig4":
            model["link"] = SisoLink(1e-8, n0)
        else:
            model["n0"] = n0
    power = _pair(ns, "p")
    if power is not None and ns.figure == "fig3":
        model["p"] = power
    if ns.c is not None and ns.figure == "fig1":
        model["c"] = ns.c

    try:
        written = run_sweep(spec, **model)
        paths = [path for _, path in written.values()]
        if ns.plot_script:
            write_plot_script(ns.figure, paths, ns.plot_script)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    for table, path in written.values():
        print(f"wrote {len(table.rows)} rows to {path}")
    if ns.plot_script:
        print(f"wrote plot script {ns.plot_script}")
    return EXIT_OK


def cmd_verify(ns):
    from .verify import run_checks

    results = run_checks(c=ns.c if ns.c is not None else ROUNDED_SPEED_OF_LIGHT)
    if ns.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} [{r.check_id}] {r.description}: "
                  f"actual {r.actual}, expected {r.expected} ({r.tolerance})")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


COMMANDS = {"limit": cmd_limit, "optimum": cmd_optimum, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if getattr(ns, "config", None):
            try:
                _merge_config(parser, ns)
            except OSError as exc:
                raise UsageError(f"cannot read config file: {exc}") from exc
        if getattr(ns, "format", None) is None:
            ns.format = "human"
        return COMMANDS[ns.command](ns)
    except (UsageError, InvalidArgumentError) as exc:
        parser.print_usage(sys.stderr)
        print(f"eelimits {ns.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
