"""Parsers for the benchmark report formats.

Reads the versioned JSON report and the flat CSV mirror that the
benchmark CLI writes, and normalises both into one shape: a series per
input file, keyed by configuration name and optimisation level, with
per-scenario ratio and timing fields.  Only documented fields are
touched; nothing is recomputed from raw samples.
"""

from __future__ import annotations

import csv
import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class ScenarioEntry:
    """Per-scenario numbers as they appear in the file."""

    tau: float | None = None
    sigma_tau: float | None = None
    plain_mean: float | None = None
    plain_std: float | None = None
    vector_mean: float | None = None
    vector_std: float | None = None


@dataclass
class Series:
    """One input file's worth of results."""

    config_name: str
    opt_level: str
    os_family: str  # "unknown" when the format does not carry it (CSV)
    scenarios: dict[int, ScenarioEntry] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return f"{self.config_name} {self.opt_level}"


def _entry_from_result(result: dict) -> ScenarioEntry:
    entry = ScenarioEntry()
    ratio = result.get("ratio") or {}
    entry.tau = ratio.get("tau")
    entry.sigma_tau = ratio.get("sigma_tau")
    plain = result.get("plain_stats") or {}
    vector = result.get("vector_stats") or {}
    if plain.get("count"):
        entry.plain_mean = plain.get("mean_ns")
        entry.plain_std = plain.get("std_ns")
    if vector.get("count"):
        entry.vector_mean = vector.get("mean_ns")
        entry.vector_std = vector.get("std_ns")
    return entry


def load_json_report(path: str | Path) -> Series:
    doc = json.loads(Path(path).read_text())
    config = doc.get("config", {})
    series = Series(
        config_name=config.get("config_name", "unknown"),
        opt_level=config.get("opt_level", "unknown"),
        os_family=config.get("os_family", "unknown"),
    )
    for result in doc.get("results", []):
        sid = result.get("scenario_id")
        if sid is None:
            continue
        series.scenarios[int(sid)] = _entry_from_result(result)
    return series


def load_csv_table(path: str | Path) -> list[Series]:
    """The CSV mirror may hold several (config, opt) groups in one file."""
    groups: dict[tuple[str, str], Series] = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["config_name"], row["opt_level"])
            series = groups.setdefault(
                key, Series(config_name=key[0], opt_level=key[1], os_family="unknown")
            )
            sid = int(row["scenario"])
            entry = series.scenarios.setdefault(sid, ScenarioEntry())
            entry.tau = float(row["tau"])
            entry.sigma_tau = float(row["sigma_tau"])
            mean, std = float(row["mean_ns"]), float(row["std_ns"])
            if row["variant"] == "plain":
                entry.plain_mean, entry.plain_std = mean, std
            elif row["variant"] == "vector":
                entry.vector_mean, entry.vector_std = mean, std
    return [groups[key] for key in sorted(groups)]


def load_inputs(paths: list[str | Path], require_os_family: bool = False) -> list[Series]:
    """Load every input, JSON or CSV by extension, sorted deterministically.

    ``require_os_family`` rejects formats that cannot say which device
    family a configuration belongs to (the CSV mirror).
    """
    series: list[Series] = []
    for path in paths:
        path = Path(path)
        if path.suffix.lower() == ".csv":
            if require_os_family:
                raise ValueError(
                    f"{path}: CSV input carries no os_family; "
                    "time-bars needs the JSON report"
                )
            series.extend(load_csv_table(path))
        else:
            series.append(load_json_report(path))
    series.sort(key=lambda s: (s.config_name, s.opt_level))
    return series


def warn_missing(series: Series, scenario_id: int) -> None:
    warnings.warn(
        f"{series.label}: scenario {scenario_id} missing from input; point omitted",
        stacklevel=2,
    )
