"""Command-line driver: config ingestion, canned runs, CSV + manifest output.

Interface::

    bubblerad --task spectrum|analytic|casimir|suppress|stats|compare
              [--config FILE] [--out DIR] [--seed N] [--tol X] [--workers N]

Config files are flat ``key = value`` documents with dotted keys (``#``
starts a comment).  Flags override file values; everything has a
documented default (the defaults reproduce the ambient-bubble scenario:
n = 1.33, R = 4.5 um, K = 2*pi/0.4 um^-1).  SI units live only here;
everything behind this module runs in natural units.

Every run writes one CSV per task plus ``manifest.json`` recording the
resolved configuration, tolerances, seed, versions and runtime, so any
output can be regenerated.  Failures write ``error.json`` and exit 1.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from . import __version__, analytic, photonstats, spectrum, suppression, units
from .spectrum import GridSpec
from .units import BubbleConfig

__all__ = ["RunConfig", "parse_config", "parse_config_text", "serialize_config",
           "write_csv", "run", "main"]

TASKS = ("spectrum", "analytic", "casimir", "suppress", "stats", "compare")
CSV_SCHEMA_VERSION = 1

_DEFAULTS: dict[str, Any] = {
    "task": "spectrum",
    "scenario.n_inside": 1.0,
    "scenario.n_outside": 1.33,
    "scenario.radius_um": 4.5,
    "scenario.cutoff_per_um": 2.0 * math.pi / 0.4,
    "scenario.label": "ambient bubble",
    "grid.points": 256,
    "grid.scale": "log",
    "grid.min_factor": 1e-3,
    "tol.kernel_rel": 1e-4,
    "tol.quad": 1e-4,
    "stats.samples": 100_000,
    "stats.mean_occupation": 1.0,
    "suppress.tau_fs": "0,1,10,100",
    "run.workers": 1,
    "out": "out",
    "seed": 12345,
}

_INT_KEYS = {"grid.points", "stats.samples", "run.workers", "seed"}
_FLOAT_KEYS = {
    "scenario.n_inside", "scenario.n_outside", "scenario.radius_um",
    "scenario.cutoff_per_um", "grid.min_factor", "tol.kernel_rel", "tol.quad",
    "stats.mean_occupation",
}


@dataclass(frozen=True)
class RunConfig:
    """Fully validated run description (scenario still in CLI units)."""

    task: str = "spectrum"
    scenario: BubbleConfig = field(
        default_factory=lambda: BubbleConfig(
            n_outside=1.33, radius_R=4.5, cutoff_K=2.0 * math.pi / 0.4,
            label="ambient bubble",
        )
    )
    grid: GridSpec = field(default_factory=GridSpec)
    kernel_rel_tol: float = 1e-4
    quad_tol: float = 1e-4
    stats_samples: int = 100_000
    stats_mean_occupation: float = 1.0
    suppress_tau_fs: tuple[float, ...] = (0.0, 1.0, 10.0, 100.0)
    workers: int = 1
    out_dir: str = "out"
    seed: int = 12345

    def __post_init__(self) -> None:
        if self.task not in TASKS:
            raise ValueError(f"unknown task {self.task!r}; expected one of {TASKS}")
        if not (0.0 < self.kernel_rel_tol < 1.0):
            raise ValueError(f"tol.kernel_rel must be in (0, 1), got {self.kernel_rel_tol}")
        if not (0.0 < self.quad_tol < 1.0):
            raise ValueError(f"tol.quad must be in (0, 1), got {self.quad_tol}")
        if self.stats_samples < 2:
            raise ValueError(f"stats.samples must be >= 2, got {self.stats_samples}")
        if self.stats_mean_occupation < 0.0:
            raise ValueError("stats.mean_occupation must be >= 0")
        if any(t < 0.0 for t in self.suppress_tau_fs):
            raise ValueError("suppress.tau_fs values must be >= 0")
        if self.workers < 1:
            raise ValueError(f"run.workers must be >= 1, got {self.workers}")


def parse_config_text(text: str) -> dict[str, Any]:
    """Parse a flat key = value document into a typed mapping."""
    values: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _DEFAULTS:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        try:
            if key in _INT_KEYS:
                values[key] = int(val)
            elif key in _FLOAT_KEYS:
                values[key] = float(val)
            else:
                values[key] = val
        except ValueError as exc:
            raise ValueError(f"line {lineno}: bad value for {key!r}: {val!r}") from exc
    return values


def _build_run_config(values: dict[str, Any]) -> RunConfig:
    merged = dict(_DEFAULTS)
    merged.update(values)
    taus = merged["suppress.tau_fs"]
    if isinstance(taus, str):
        try:
            taus = tuple(float(t) for t in taus.split(",") if t.strip())
        except ValueError as exc:
            raise ValueError(f"bad value for 'suppress.tau_fs': {merged['suppress.tau_fs']!r}") from exc
    try:
        scenario = BubbleConfig(
            n_inside=merged["scenario.n_inside"],
            n_outside=merged["scenario.n_outside"],
            radius_R=merged["scenario.radius_um"],
            cutoff_K=merged["scenario.cutoff_per_um"],
            label=merged["scenario.label"],
        )
    except ValueError as exc:
        raise ValueError(f"invalid scenario: {exc}") from exc
    return RunConfig(
        task=merged["task"],
        scenario=scenario,
        grid=GridSpec(points=merged["grid.points"], scale=merged["grid.scale"],
                      min_factor=merged["grid.min_factor"]),
        kernel_rel_tol=merged["tol.kernel_rel"],
        quad_tol=merged["tol.quad"],
        stats_samples=merged["stats.samples"],
        stats_mean_occupation=merged["stats.mean_occupation"],
        suppress_tau_fs=taus,
        workers=merged["run.workers"],
        out_dir=str(merged["out"]),
        seed=merged["seed"],
    )


def parse_config(text: str) -> RunConfig:
    """Parse and validate a config document, filling documented defaults."""
    return _build_run_config(parse_config_text(text))


def serialize_config(config: RunConfig) -> str:
    """Render a RunConfig back to the flat key = value format."""
    lines = [
        f"task = {config.task}",
        f"scenario.n_inside = {config.scenario.n_inside!r}",
        f"scenario.n_outside = {config.scenario.n_outside!r}",
        f"scenario.radius_um = {config.scenario.radius_R!r}",
        f"scenario.cutoff_per_um = {config.scenario.cutoff_K!r}",
        f"scenario.label = {config.scenario.label}",
        f"grid.points = {config.grid.points}",
        f"grid.scale = {config.grid.scale}",
        f"grid.min_factor = {config.grid.min_factor!r}",
        f"tol.kernel_rel = {config.kernel_rel_tol!r}",
        f"tol.quad = {config.quad_tol!r}",
        f"stats.samples = {config.stats_samples}",
        f"stats.mean_occupation = {config.stats_mean_occupation!r}",
        "suppress.tau_fs = " + ",".join(repr(t) for t in config.suppress_tau_fs),
        f"run.workers = {config.workers}",
        f"out = {config.out_dir}",
        f"seed = {config.seed}",
    ]
    return "\n".join(lines) + "\n"


def _fmt(value: Any) -> str:
    if isinstance(value, float) or isinstance(value, np.floating):
        return format(float(value), ".17g")
    return str(value)


def write_csv(path: Path | str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """RFC-4180-style CSV: header row, LF endings, 17-significant-digit floats."""
    path = Path(path)
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(v) for v in row])
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc


def _scan(config: RunConfig) -> spectrum.Spectrum:
    return spectrum.scan(
        config.scenario, config.grid, quad_tol=config.quad_tol,
        kernel_rel_tol=config.kernel_rel_tol, workers=config.workers,
    )


def _task_spectrum(config: RunConfig, out: Path) -> dict[str, Any]:
    sp = _scan(config)
    rows = [
        (units.omega_to_si(w), dn * units.LENGTH_UNIT_M / units.C_M_PER_S)
        for w, dn in zip(sp.omega_grid, sp.dn_domega)
    ]
    write_csv(out / "spectrum.csv", ("omega_rad_per_s", "dn_domega_seconds"), rows)
    return {
        "total_photon_number": sp.total_n,
        "total_energy_ev": units.energy_to_ev(sp.total_e),
        "quadrature_report": sp.quadrature_report,
        "outputs": ["spectrum.csv"],
    }


def _task_analytic(config: RunConfig, out: Path) -> dict[str, Any]:
    res = analytic.analytic_result(config.scenario)
    grid = spectrum.build_grid(config.scenario, config.grid)
    rows = [
        (units.omega_to_si(w),
         analytic.analytic_dn_domega(config.scenario, w) * units.LENGTH_UNIT_M / units.C_M_PER_S)
        for w in grid
    ]
    write_csv(out / "analytic.csv", ("omega_rad_per_s", "dn_domega_seconds"), rows)
    print(f"photon number N = {res.photon_number:.6g}")
    print(f"energy E = {units.energy_to_ev(res.energy):.6g} eV")
    return {
        "photon_number": res.photon_number,
        "energy_ev": units.energy_to_ev(res.energy),
        "provenance": res.provenance,
        "outputs": ["analytic.csv"],
    }


def _task_casimir(config: RunConfig, out: Path) -> dict[str, Any]:
    cavity = analytic.schwinger_casimir_energy(config.scenario)
    disp = analytic.dispersion_casimir_energy(config.scenario)
    disp_quad = analytic.dispersion_casimir_energy_quadrature(config.scenario)
    radiated = analytic.analytic_total_energy(config.scenario)
    write_csv(
        out / "casimir.csv",
        ("cavity_energy_ev", "dispersion_energy_ev", "dispersion_quadrature_ev",
         "radiated_energy_ev", "radiated_over_static"),
        [(units.energy_to_ev(cavity), units.energy_to_ev(disp),
          units.energy_to_ev(disp_quad), units.energy_to_ev(radiated),
          radiated / disp if disp != 0.0 else float("nan"))],
    )
    print(f"static cavity energy = {units.energy_to_ev(cavity):.6g} eV")
    print(f"radiated / static    = {radiated / disp if disp else float('nan'):.6g}")
    return {"outputs": ["casimir.csv"]}


def _task_suppress(config: RunConfig, out: Path) -> dict[str, Any]:
    base = _scan(config)
    rows = []
    for tau_fs in config.suppress_tau_fs:
        model = suppression.TimescaleModel.from_femtoseconds(tau_fs)
        sp = suppression.apply_suppression(base, model)
        survival = sp.total_n / base.total_n if base.total_n > 0 else float("nan")
        rows.append((tau_fs, sp.total_n, units.energy_to_ev(sp.total_e), survival))
        print(f"tau = {tau_fs:g} fs: N = {sp.total_n:.6g}, survival = {survival:.3e}")
    write_csv(out / "suppress.csv",
              ("tau_fs", "total_photon_number", "total_energy_ev", "survival_ratio"),
              rows)
    return {"base_total_n": base.total_n, "outputs": ["suppress.csv"]}


def _task_stats(config: RunConfig, out: Path) -> dict[str, Any]:
    rows = []
    mean = config.stats_mean_occupation
    for kind in (photonstats.KIND_THERMAL, photonstats.KIND_SQUEEZED):
        ens = photonstats.sample(kind, mean, config.stats_samples, config.seed)
        est = photonstats.variance_nab(ens)
        theory = photonstats.theoretical_variance(kind, mean, mean)
        rows.append((kind, mean, config.stats_samples, theory, est.value, est.std_error))
        print(f"{kind}: theory {theory:.6g}, empirical {est.value:.6g} "
              f"+/- {est.std_error:.2g}")
    write_csv(out / "stats.csv",
              ("kind", "mean_occupation", "samples", "variance_theory",
               "variance_empirical", "std_error"),
              rows)
    return {"outputs": ["stats.csv"]}


def _task_compare(config: RunConfig, out: Path) -> dict[str, Any]:
    sp = _scan(config)
    scn = config.scenario
    rows = [
        (units.omega_to_si(w),
         dn * units.LENGTH_UNIT_M / units.C_M_PER_S,
         analytic.analytic_dn_domega(scn, w) * units.LENGTH_UNIT_M / units.C_M_PER_S)
        for w, dn in zip(sp.omega_grid, sp.dn_domega)
    ]
    write_csv(out / "compare.csv",
              ("omega_rad_per_s", "dn_domega_seconds", "dn_domega_analytic_seconds"),
              rows)
    dist = spectrum.shape_distance(sp, scn)
    # sensitivity of the in-frequency domain choice (0, K] vs (0, nK],
    # reported so the knob is never hidden
    probe = 0.5 * scn.cutoff_K / scn.n_outside
    base = spectrum.dn_domega(scn, probe, config.quad_tol,
                              kernel_rel_tol=config.kernel_rel_tol)
    wide = spectrum.dn_domega(scn, probe, config.quad_tol,
                              kernel_rel_tol=config.kernel_rel_tol,
                              omega_in_max=scn.n_outside * scn.cutoff_K)
    sensitivity = abs(wide - base) / base if base > 0 else float("nan")
    print(f"binned shape distance from analytic curve: {dist:.4g}")
    print(f"omega_in upper-limit sensitivity at mid-band: {sensitivity:.3e}")
    return {
        "shape_distance": dist,
        "omega_in_domain_sensitivity_midband": sensitivity,
        "outputs": ["compare.csv"],
    }


_TASK_FUNCS = {
    "spectrum": _task_spectrum,
    "analytic": _task_analytic,
    "casimir": _task_casimir,
    "suppress": _task_suppress,
    "stats": _task_stats,
    "compare": _task_compare,
}


def run(config: RunConfig) -> int:
    """Execute one task; write CSV artifacts, a manifest, and return 0.

    On failure an ``error.json`` record is written and a nonzero status
    returned.
    """
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    started = time.time()
    try:
        result = _TASK_FUNCS[config.task](config, out)
    except Exception as exc:  # noqa: BLE001 - boundary: record and signal
        record = {
            "error_type": type(exc).__name__,
            "message": str(exc),
            "task": config.task,
        }
        with open(out / "error.json", "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2, sort_keys=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    manifest = {
        "package": "bubblerad",
        "version": __version__,
        "csv_schema_version": CSV_SCHEMA_VERSION,
        "task": config.task,
        "config": serialize_config(config),
        "seed": config.seed,
        "tolerances": {"kernel_rel": config.kernel_rel_tol, "quad": config.quad_tol},
        "runtime_s": time.time() - started,
        "result": result,
    }
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True, default=str)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="bubblerad",
        description="Quantum-vacuum photon production from a dielectric bubble.",
    )
    parser.add_argument("--task", choices=TASKS, help="computation to run")
    parser.add_argument("--config", type=Path, help="flat key = value config file")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--seed", type=int, help="RNG seed for sampling tasks")
    parser.add_argument("--tol", type=float,
                        help="sets both tol.kernel_rel and tol.quad")
    parser.add_argument("--workers", type=int, help="parallel scan workers")
    args = parser.parse_args(argv)

    try:
        values: dict[str, Any] = {}
        if args.config is not None:
            values = parse_config_text(args.config.read_text(encoding="utf-8"))
        # flags override file values
        if args.task is not None:
            values["task"] = args.task
        if args.out is not None:
            values["out"] = args.out
        if args.seed is not None:
            values["seed"] = args.seed
        if args.tol is not None:
            values["tol.kernel_rel"] = args.tol
            values["tol.quad"] = args.tol
        if args.workers is not None:
            values["run.workers"] = args.workers
        config = _build_run_config(values)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
