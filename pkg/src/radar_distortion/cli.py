"""Command-line front end: ``radar-distortion {simulate,matched-filter,verify,figure}``."""

from __future__ import annotations

import argparse
import contextlib
import math
import sys

from .analysis import matched_filter, peak_metrics
from .config import ConfigError, ScenarioConfig, parse_config
from .csvio import read_trace, write_columns, write_trace
from .errors import DomainError
from .figures import figure_data, simulate
from .verify import run_verify, standard_waveforms

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4
EXIT_IO = 1


def load_config(args) -> ScenarioConfig:
    text = ""
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            text = fh.read()
    cfg = parse_config(text)
    changes = {}
    if getattr(args, "seed", None) is not None:
        changes["seed"] = args.seed
    decimate = getattr(args, "decimate", None)
    if decimate is not None:
        if decimate < 1:
            raise ConfigError("must be at least 1", key="--decimate")
        changes["dt"] = cfg.dt * decimate
        changes["n_samples"] = math.ceil(cfg.n_samples / decimate)
    return cfg.with_(**changes) if changes else cfg


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def cmd_simulate(args) -> int:
    cfg = load_config(args)
    trace = simulate(cfg)
    with _output(args.out or cfg.output_path) as fh:
        write_trace(fh, trace)
    return EXIT_OK


def cmd_matched_filter(args) -> int:
    with open(args.received, encoding="utf-8") as fh:
        received = read_trace(fh)
    with open(args.reference, encoding="utf-8") as fh:
        reference = read_trace(fh)
    try:
        mf = matched_filter(received, reference)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if args.out:
        with _output(args.out) as fh:
            write_columns(fh, ("lag_s", "magnitude"), (mf.times, mf.magnitude))
    m = peak_metrics(mf)
    for key in ("peak_time", "peak_magnitude", "width_3db", "pslr"):
        print(f"{key} = {getattr(m, key)!r}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = load_config(args)
    report = run_verify(cfg.motion(), standard_waveforms(cfg.seed))
    with _output(args.out) as fh:
        fh.write(report.format())
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_figure(args) -> int:
    cfg = load_config(args)
    data = figure_data(cfg, args.figure_id)
    with _output(args.out or cfg.output_path) as fh:
        data.write_csv(fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radar-distortion", description="Radar echoes from an accelerating target under several space-time models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_flags(p, out_help):
        p.add_argument("--config", metavar="PATH", help="scenario file of 'key = value' lines")
        p.add_argument("--out", metavar="PATH", help=out_help)
        p.add_argument("--decimate", metavar="N", type=int, help="keep every Nth sample (dt * N)")
        p.add_argument("--seed", metavar="N", type=int, help="seed for the Gaussian sub-pulse codes")

    p = sub.add_parser("simulate", help="write the received trace as t_s,re,im CSV")
    scenario_flags(p, "output CSV (default: output_path from the config, else stdout)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("matched-filter", help="correlate a received trace against a reference trace")
    p.add_argument("received", help="received trace CSV")
    p.add_argument("reference", help="reference trace CSV")
    p.add_argument("--out", metavar="PATH", help="write the lag_s,magnitude CSV here")
    p.set_defaults(func=cmd_matched_filter)

    p = sub.add_parser("verify", help="compare closed forms with the propagation pipeline")
    p.add_argument("--config", metavar="PATH", help="scenario file (motion parameters and seed are used)")
    p.add_argument("--out", metavar="PATH", help="report file (default: stdout)")
    p.add_argument("--seed", metavar="N", type=int, help="seed for the Gaussian sub-pulse codes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write one figure's data series as CSV")
    p.add_argument("figure_id", type=int, choices=range(1, 6), metavar="{1..5}")
    scenario_flags(p, "output CSV (default: output_path from the config, else stdout)")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
