"""Chart renderer for benchmark report files."""

from .loader import ScenarioEntry, Series, load_csv_table, load_inputs, load_json_report
from .render import DEFAULT_Y_CLIP, family_bands, render_ratio_curves, render_time_bars

__version__ = "0.1.0"

__all__ = [
    "ScenarioEntry", "Series",
    "load_csv_table", "load_inputs", "load_json_report",
    "DEFAULT_Y_CLIP", "family_bands", "render_ratio_curves", "render_time_bars",
]
