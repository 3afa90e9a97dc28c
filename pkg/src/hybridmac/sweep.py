"""Comparative sweep experiments and their CSV output."""
import csv
import zlib
from dataclasses import dataclass, replace

from .baselines import run_baseline_scenario
from .config import ScenarioConfig
from .engine import run_scenario
from .metrics import SimStats

AXES = ("K", "L", "Tframe")

CSV_COLUMNS = ("protocol", "axis", "value", "frames", "mean_throughput",
               "utility", "mean_delay", "infeasible_frames", "seed")


@dataclass(frozen=True)
class SweepCell:
    """One (protocol, axis value) result; error is set when the cell failed
    and its stats are absent."""

    protocol: str
    axis: str
    value: float
    seed: int
    stats: SimStats | None
    error: str | None = None


def cell_seed(base_seed: int, protocol: str, axis: str, value) -> int:
    """Per-cell seed, stable in the face of added protocols or values."""
    key = f"{protocol}:{axis}:{value!r}".encode()
    return (int(base_seed) ^ zlib.crc32(key)) & 0xFFFFFFFFFFFFFFFF


def _cell_config(base: ScenarioConfig, protocol: str, axis: str,
                 value) -> ScenarioConfig:
    cfg = replace(base, protocol=protocol,
                  seed=cell_seed(base.seed, protocol, axis, value))
    if axis == "K":
        return replace(cfg, k_total=int(value))
    if axis == "L":
        return replace(cfg, activity_rule="fixed_count",
                       activity_value=float(value),
                       k_total=max(base.k_total, int(value)))
    if axis == "Tframe":
        return replace(cfg, timing=replace(base.timing, t_frame=float(value)))
    raise ValueError(f"unknown sweep axis {axis!r}")


def run_cell(cfg: ScenarioConfig) -> SimStats:
    if cfg.protocol == "hybrid":
        return run_scenario(cfg)
    return run_baseline_scenario(cfg)


def sweep(axis: str, values, protocols, base: ScenarioConfig) -> list[SweepCell]:
    """One SimStats row per (protocol, value); cells are independent and a
    failing cell is recorded in-row without aborting the sweep."""
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}")
    rows = []
    for protocol in protocols:
        for value in values:
            seed = cell_seed(base.seed, protocol, axis, value)
            try:
                cfg = _cell_config(base, protocol, axis, value)
                stats = run_cell(cfg)
                rows.append(SweepCell(protocol, axis, float(value),
                                      seed, stats))
            except Exception as e:  # noqa: BLE001 - recorded per cell
                rows.append(SweepCell(protocol, axis, float(value),
                                      seed, None, error=str(e)))
    return rows


def _fmt(x: float) -> str:
    return format(x, ".6g")


def write_csv(rows, path) -> None:
    """Fixed-order CSV, floats at 6 significant digits; failed cells carry
    zero frames and empty metric fields."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in rows:
            if r.stats is None:
                w.writerow([r.protocol, r.axis, _fmt(r.value), 0,
                            "", "", "", "", r.seed])
            else:
                s = r.stats
                w.writerow([r.protocol, r.axis, _fmt(r.value), s.frames,
                            _fmt(s.mean_throughput), _fmt(s.utility),
                            _fmt(s.mean_delay), s.infeasible_frames, r.seed])
