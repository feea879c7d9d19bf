"""Command-line entry point: ``polarloss {sweep,compare,modes,default-config}``."""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from .config import SweepConfig, parse_config
from .errors import ConfigError, ModelError
from .model import diagonalize
from .sweep import emit, evaluate_point, run_sweep

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2


def default_config_text() -> str:
    return resources.files("polarloss").joinpath("scenarios/default.cfg").read_text(encoding="utf-8")


def load_config(path: str) -> SweepConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def _coupling(args, config: SweepConfig) -> float:
    return config.sweep.max if args.g is None else args.g


def _cmd_sweep(args, config: SweepConfig) -> None:
    reports = run_sweep(config, workers=args.workers)
    fmt = args.format or config.output.format
    destination = args.output or config.output.path
    emit(reports, fmt, destination, config)


def _cmd_compare(args, config: SweepConfig) -> None:
    g = _coupling(args, config)
    report = evaluate_point(config, g)
    unit = config.frequency_unit
    print(f"g/omega_x = {g:.6g}   mirror = {report.mirror.to_spec()}   (internal units)")
    print(f"{'branch':<7}{'omega':>15}{'standard':>15}{'electric':>15}{'magnetic':>15}{'maxwell':>15}  status")
    for b in report.branches:
        mbc = "nan" if b.maxwell is None else f"{b.maxwell * unit:.8e}"
        print(
            f"{b.branch:<7}{b.omega * unit:>15.10g}{b.standard * unit:>15.8e}"
            f"{b.electric * unit:>15.8e}{b.magnetic * unit:>15.8e}{mbc:>15}  {b.maxwell_status}"
        )


def _cmd_modes(args, config: SweepConfig) -> None:
    g = _coupling(args, config)
    params = config.natural_params(g)
    print(f"g/omega_x = {g:.6g}   omega_c/omega_x = {params.omega_c:.10g}")
    print(f"{'branch':<7}{'omega':>15}  {'w':>24}{'x':>24}{'y':>24}{'z':>24}{'norm':>10}")
    for mode in diagonalize(params):
        coeffs = "".join(f"{complex(c):>24.8g}" for c in mode.coefficients)
        print(f"{mode.branch:<7}{mode.omega * config.frequency_unit:>15.10g}  {coeffs}{mode.norm:>10.6f}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarloss", description="Cavity-polariton loss rates in the ultrastrong coupling regime."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="run the coupling sweep and write CSV/JSON")
    p.add_argument("--config", required=True)
    p.add_argument("--output", help="output path (overrides [output] path; default stdout)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--workers", type=int, default=1, help="parallel processes")

    for name, text in (("compare", "single-point comparison table"), ("modes", "polariton frequencies and coefficients")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", required=True)
        p.add_argument("--g", type=float, help="g/omega_x to evaluate (default: sweep max)")

    sub.add_parser("default-config", help="print the shipped default scenario")
    return parser


COMMANDS = {"sweep": _cmd_sweep, "compare": _cmd_compare, "modes": _cmd_modes}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "default-config":
        sys.stdout.write(default_config_text())
        return EXIT_OK
    try:
        config = load_config(args.config)
        COMMANDS[args.command](args, config)
    except (ConfigError, ModelError) as exc:
        print(f"polarloss: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"polarloss: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
