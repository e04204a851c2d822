"""Chart rendering: per-scenario ratio curves and execution-time bars.

Output is deterministic for identical inputs: series are ordered by
(config_name, opt_level), scenarios ascend, figure geometry is fixed
and the PNG metadata is pinned.  Ratio values are plotted exactly as
they appear in the input files.
"""

from __future__ import annotations

import warnings
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .loader import Series, warn_missing

SCENARIO_IDS = range(1, 9)
DEFAULT_Y_CLIP = 200.0  # percent ceiling for ratio curves

_PNG_METADATA = {"Software": "lanebench-plots"}
_FIGSIZE = (7.0, 4.5)
_DPI = 100

_BAND_COLOURS = {
    "linux": "#dbe9f6",
    "macos": "#e8f0e0",
    "windows": "#f6e8db",
    "other": "#ececec",
    "unknown": "#ececec",
}

_OPT_MARKERS = ["o", "s", "^", "D", "v", "P"]


def _save(fig, out_dir: Path, kind: str, scenario_id: int) -> Path:
    path = out_dir / f"{kind}_scenario_{scenario_id}.png"
    fig.savefig(path, metadata=_PNG_METADATA)
    plt.close(fig)
    return path


def family_bands(inputs: list[Series]) -> list[tuple[int, int, str]]:
    """Contiguous (first, last, os_family) runs over the plotted order."""
    bands = []
    start = 0
    while start < len(inputs):
        end = start
        while end + 1 < len(inputs) and inputs[end + 1].os_family == inputs[start].os_family:
            end += 1
        bands.append((start, end, inputs[start].os_family))
        start = end + 1
    return bands


def render_ratio_curves(
    inputs: list[Series], out_dir: str | Path, y_clip: float = DEFAULT_Y_CLIP
) -> dict[int, dict]:
    """One chart per scenario: ratio (%) vs configuration, a series per
    optimisation level, error bars from the ratio spread.

    Points above ``y_clip`` stay in the data but are pinned visually at
    the ceiling, annotated with their true value, and the series legend
    is flagged.  Returns per-scenario info: output path, clipped points,
    omitted points.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    config_names = sorted({s.config_name for s in inputs})
    positions = {name: i for i, name in enumerate(config_names)}
    opt_levels = sorted({s.opt_level for s in inputs})

    info: dict[int, dict] = {}
    for sid in SCENARIO_IDS:
        fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
        clipped: list[tuple[str, str, float]] = []
        omitted: list[str] = []
        for idx, opt in enumerate(opt_levels):
            xs, ys, errs = [], [], []
            for series in inputs:
                if series.opt_level != opt:
                    continue
                entry = series.scenarios.get(sid)
                if entry is None or entry.tau is None:
                    warn_missing(series, sid)
                    omitted.append(series.label)
                    continue
                tau_pct = entry.tau * 100.0
                sigma_pct = (entry.sigma_tau or 0.0) * 100.0
                xs.append(positions[series.config_name])
                if tau_pct > y_clip:
                    clipped.append((series.config_name, opt, tau_pct))
                    ys.append(y_clip)
                    errs.append(0.0)
                    ax.annotate(
                        f"{tau_pct:.0f}%",
                        xy=(positions[series.config_name], y_clip),
                        xytext=(0, -12),
                        textcoords="offset points",
                        ha="center",
                        fontsize=8,
                    )
                else:
                    ys.append(tau_pct)
                    errs.append(sigma_pct)
            if not xs:
                continue
            label = opt
            if any(o == opt for _, o, _ in clipped):
                label += " (clipped)"
            ax.errorbar(
                xs, ys, yerr=errs,
                marker=_OPT_MARKERS[idx % len(_OPT_MARKERS)],
                linestyle="-", capsize=3, label=label,
            )
        ax.axhline(100.0, color="grey", linewidth=0.8, linestyle="--")
        ax.set_xticks(range(len(config_names)))
        ax.set_xticklabels(config_names)
        ax.set_ylim(0.0, y_clip)
        ax.set_ylabel("execution time ratio (%)")
        ax.set_xlabel("configuration")
        ax.text(0.97, 0.92, str(sid), transform=ax.transAxes,
                fontsize=14, fontweight="bold", ha="right")
        ax.legend(loc="upper left", fontsize=8)
        path = _save(fig, out_dir, "ratio-curves", sid)
        info[sid] = {"path": path, "clipped": clipped, "omitted": omitted}
    return info


def render_time_bars(inputs: list[Series], out_dir: str | Path) -> dict[int, dict]:
    """One chart per scenario: grouped plain/vector bars per configuration
    with standard-deviation whiskers, and background bands grouping
    configurations that live on the same device family.

    A variant without statistics is omitted with a warning.  Returns
    per-scenario info: output path and omitted bars.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    labels = [s.label for s in inputs]
    width = 0.35

    info: dict[int, dict] = {}
    for sid in SCENARIO_IDS:
        fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
        omitted: list[str] = []

        # one pastel band per contiguous device-family group
        for start, end, family in family_bands(inputs):
            colour = _BAND_COLOURS.get(family, _BAND_COLOURS["unknown"])
            ax.axvspan(start - 0.5, end + 0.5, color=colour, zorder=0)

        seen_variant_label = set()
        for pos, series in enumerate(inputs):
            entry = series.scenarios.get(sid)
            if entry is None:
                warn_missing(series, sid)
                omitted.append(f"{series.label}: plain")
                omitted.append(f"{series.label}: vector")
                continue
            for offset, variant, mean, std, colour in (
                (-width / 2, "plain", entry.plain_mean, entry.plain_std, "#4878a8"),
                (+width / 2, "vector", entry.vector_mean, entry.vector_std, "#b8542c"),
            ):
                if mean is None:
                    warnings.warn(
                        f"{series.label}: scenario {sid} has no {variant} statistics; "
                        "bar omitted"
                    )
                    omitted.append(f"{series.label}: {variant}")
                    continue
                label = variant if variant not in seen_variant_label else None
                seen_variant_label.add(variant)
                ax.bar(
                    pos + offset, mean / 1e6, width,
                    yerr=(std or 0.0) / 1e6,
                    color=colour, capsize=3, label=label, zorder=2,
                )
        ax.set_xticks(range(len(inputs)))
        ax.set_xticklabels(labels, fontsize=8)
        ax.set_ylabel("execution time (ms)")
        ax.set_xlabel("configuration")
        ax.text(0.97, 0.92, str(sid), transform=ax.transAxes,
                fontsize=14, fontweight="bold", ha="right")
        ax.legend(loc="upper left", fontsize=8)
        path = _save(fig, out_dir, "time-bars", sid)
        info[sid] = {"path": path, "omitted": omitted}
    return info
