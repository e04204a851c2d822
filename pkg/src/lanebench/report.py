"""Report file: a versioned JSON document plus a flat CSV mirror.

The JSON report is the single source of truth a run leaves behind:
configuration identity, generator identity (so the workload can be
rebuilt bit-for-bit), every scenario's statistics, verification record
and raw samples, and any verification failure that stopped the run.
The CSV export flattens the same numbers to one row per
(scenario, variant) for spreadsheet use; ratios are carried as
fractions in both formats.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .configmeta import ConfigMetadata
from .harness import ScenarioResult, SchedulingScheme, VerificationRecord
from .stats import RatioResult, RunStats

FORMAT_VERSION = "1"

TABULAR_COLUMNS = [
    "config_name", "opt_level", "scenario", "variant",
    "mean_ns", "std_ns", "tau", "sigma_tau",
]


@dataclass
class GeneratorInfo:
    """PRNG identity: enough to regenerate every workload in the report."""

    name: str
    seed: int
    fill: str
    numpy_version: str = np.__version__


@dataclass
class Report:
    format_version: str
    created_at: str
    config: ConfigMetadata
    generator: GeneratorInfo
    results: list[ScenarioResult]
    failures: list[dict] = field(default_factory=list)


def build_report(
    config: ConfigMetadata,
    generator: GeneratorInfo,
    results: list[ScenarioResult],
    failures: list[dict] | None = None,
) -> Report:
    return Report(
        format_version=FORMAT_VERSION,
        created_at=datetime.now(timezone.utc).isoformat(),
        config=config,
        generator=generator,
        results=list(results),
        failures=list(failures or []),
    )


# -- JSON encoding -----------------------------------------------------------

def _stats_dict(s: RunStats) -> dict:
    return {"mean_ns": s.mean, "std_ns": s.std_dev, "count": s.count}


def _result_dict(r: ScenarioResult) -> dict:
    return {
        "scenario_id": r.scenario_id,
        "length": r.length,
        "seed": r.seed,
        "scheme": {"tag": r.scheme.tag, "repeats": r.scheme.repeats},
        "plain_stats": _stats_dict(r.plain_stats),
        "vector_stats": _stats_dict(r.vector_stats),
        "ratio": {"tau": r.ratio.tau, "sigma_tau": r.ratio.sigma_tau},
        "verification": {
            "max_abs_diff": r.verification.max_abs_diff,
            "max_rel_diff": r.verification.max_rel_diff,
            "worst_index": r.verification.worst_index,
            "tolerance": r.verification.tolerance,
            "passed": r.verification.passed,
        },
        "plain_samples_ns": list(r.plain_samples),
        "vector_samples_ns": list(r.vector_samples),
        "plain_checksum": r.plain_checksum,
        "vector_checksum": r.vector_checksum,
        "timer_resolution_ns": r.timer_resolution_ns,
        "timer_warning": r.timer_warning,
        "sequence_emulated": r.sequence_emulated,
    }


def report_to_dict(report: Report) -> dict:
    return {
        "format_version": report.format_version,
        "created_at": report.created_at,
        "config": vars(report.config).copy(),
        "generator": {
            "name": report.generator.name,
            "seed": report.generator.seed,
            "fill": report.generator.fill,
            "numpy_version": report.generator.numpy_version,
        },
        "results": [_result_dict(r) for r in report.results],
        "failures": list(report.failures),
    }


def _stats_from(d: dict) -> RunStats:
    return RunStats(mean=d["mean_ns"], std_dev=d["std_ns"], count=d["count"])


def _result_from(d: dict) -> ScenarioResult:
    return ScenarioResult(
        scenario_id=d["scenario_id"],
        length=d["length"],
        seed=d["seed"],
        scheme=SchedulingScheme(tag=d["scheme"]["tag"], repeats=d["scheme"]["repeats"]),
        plain_stats=_stats_from(d["plain_stats"]),
        vector_stats=_stats_from(d["vector_stats"]),
        ratio=RatioResult(tau=d["ratio"]["tau"], sigma_tau=d["ratio"]["sigma_tau"]),
        verification=VerificationRecord(
            max_abs_diff=d["verification"]["max_abs_diff"],
            max_rel_diff=d["verification"]["max_rel_diff"],
            worst_index=d["verification"]["worst_index"],
            tolerance=d["verification"]["tolerance"],
            passed=d["verification"]["passed"],
        ),
        plain_samples=list(d["plain_samples_ns"]),
        vector_samples=list(d["vector_samples_ns"]),
        plain_checksum=d["plain_checksum"],
        vector_checksum=d["vector_checksum"],
        timer_resolution_ns=d["timer_resolution_ns"],
        timer_warning=d["timer_warning"],
        sequence_emulated=d["sequence_emulated"],
    )


def report_from_dict(d: dict) -> Report:
    return Report(
        format_version=d["format_version"],
        created_at=d["created_at"],
        config=ConfigMetadata(**d["config"]),
        generator=GeneratorInfo(
            name=d["generator"]["name"],
            seed=d["generator"]["seed"],
            fill=d["generator"]["fill"],
            numpy_version=d["generator"]["numpy_version"],
        ),
        results=[_result_from(r) for r in d["results"]],
        failures=list(d.get("failures", [])),
    )


def write_report(report: Report, path: str | Path) -> None:
    Path(path).write_text(json.dumps(report_to_dict(report), indent=2) + "\n")


def load_report(path: str | Path) -> Report:
    return report_from_dict(json.loads(Path(path).read_text()))


# -- CSV mirror --------------------------------------------------------------

def write_tabular(report: Report, path: str | Path) -> None:
    """One row per (scenario, variant); ratio columns repeat on both rows."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TABULAR_COLUMNS)
        for r in report.results:
            for variant, s in (("plain", r.plain_stats), ("vector", r.vector_stats)):
                writer.writerow([
                    report.config.config_name,
                    report.config.opt_level,
                    r.scenario_id,
                    variant,
                    s.mean,
                    s.std_dev,
                    r.ratio.tau,
                    r.ratio.sigma_tau,
                ])
