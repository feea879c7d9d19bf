"""Coupling sweeps and CSV/JSON emission."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from .config import SweepConfig
from .errors import EmitError
from .maxwell import loss_rates_maxwell
from .rates import LossRateReport, build_report

COLUMNS = (
    "g_over_omega_x",
    "omega_L",
    "omega_U",
    "kappa_std_L",
    "kappa_std_U",
    "kappa_elec_L",
    "kappa_elec_U",
    "kappa_mag_L",
    "kappa_mag_U",
    "kappa_mbc_L",
    "kappa_mbc_U",
    "mbc_status_L",
    "mbc_status_U",
)


def evaluate_point(config: SweepConfig, g_over_omega_x: float) -> LossRateReport:
    """All four methods at one coupling strength, in internal units."""
    params = config.natural_params(g_over_omega_x)
    mirror = config.natural_mirror()
    report = build_report(params, mirror)
    lower, upper = loss_rates_maxwell(params, mirror, config.solver.tol, config.solver.max_iter)
    return report.with_maxwell((lower.kappa, lower.status), (upper.kappa, upper.status))


def _evaluate(args):
    return evaluate_point(*args)


def run_sweep(config: SweepConfig, workers: int = 1) -> list[LossRateReport]:
    """One report per grid point, in grid order.

    Points are independent; ``workers > 1`` spreads them over processes.
    Boundary-condition failures are carried as per-branch status codes.
    """
    jobs = [(config, float(g)) for g in config.sweep.grid()]
    if workers <= 1:
        return [_evaluate(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate, jobs))


def _fmt(value) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "nan"
    return format(value, ".12g")


def report_row(report: LossRateReport, frequency_unit: float = 1.0) -> dict:
    """Output row; frequencies and rates are converted by ``frequency_unit``."""
    lo, up = report.lower, report.upper

    def scaled(value):
        return None if value is None else value * frequency_unit

    return {
        "g_over_omega_x": report.params.g / report.params.omega_x,
        "omega_L": scaled(lo.omega),
        "omega_U": scaled(up.omega),
        "kappa_std_L": scaled(lo.standard),
        "kappa_std_U": scaled(up.standard),
        "kappa_elec_L": scaled(lo.electric),
        "kappa_elec_U": scaled(up.electric),
        "kappa_mag_L": scaled(lo.magnetic),
        "kappa_mag_U": scaled(up.magnetic),
        "kappa_mbc_L": scaled(lo.maxwell),
        "kappa_mbc_U": scaled(up.maxwell),
        "mbc_status_L": lo.maxwell_status,
        "mbc_status_U": up.maxwell_status,
    }


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else _fmt(v) for v in row.values()])
    return buf.getvalue()


def _json_text(rows, config) -> str:
    def clean(row):
        out = {}
        for key, value in row.items():
            if isinstance(value, str):
                out[key] = value
            elif value is None or math.isnan(value):
                out[key] = None
            else:
                out[key] = float(_fmt(value))
        return out

    payload = {
        "header": {"columns": list(COLUMNS), "config": config.to_dict() if config else None},
        "rows": [clean(row) for row in rows],
    }
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def render(reports, fmt: str = "csv", config: SweepConfig | None = None) -> str:
    unit = config.frequency_unit if config else 1.0
    rows = [report_row(r, unit) for r in reports]
    if fmt == "csv":
        return _csv_text(rows)
    if fmt == "json":
        return _json_text(rows, config)
    raise ValueError(f"unknown format {fmt!r}")


def emit(reports, fmt: str = "csv", destination=None, config: SweepConfig | None = None) -> None:
    """Write reports as CSV or JSON to ``destination`` (a path, a stream or ``None`` for stdout)."""
    text = render(reports, fmt, config)
    if destination is None:
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        try:
            with open(destination, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise EmitError(f"cannot write {destination}: {exc}") from exc
