"""Report files: a versioned JSON document plus a flat CSV mirror.

A report holds everything needed to read a run later: configuration
identity, generator identity, per-scenario statistics, verification
records and the raw samples.  Files round-trip exactly, and the CSV
mirror gives one row per (scenario, variant) for spreadsheets.
"""

import tempfile
from pathlib import Path

from lanebench import (
    GENERATOR_NAME, FILL_RECIPE, SCENARIOS, GeneratorInfo, SchedulingScheme,
    build_report, detect, load_report, run_scenario, write_report, write_tabular,
)

seed = 42
results = [
    run_scenario(SCENARIOS[sid], length=5_000, seed=seed,
                 scheme=SchedulingScheme("interleaved", 5))
    for sid in (1, 6)
]
report = build_report(
    detect(),
    GeneratorInfo(name=GENERATOR_NAME, seed=seed, fill=FILL_RECIPE),
    results,
)

with tempfile.TemporaryDirectory() as tmp:
    json_path = Path(tmp) / "report.json"
    csv_path = Path(tmp) / "report.csv"
    write_report(report, json_path)
    write_tabular(report, csv_path)

    loaded = load_report(json_path)
    print(f"round-trip equal: {loaded == report}")
    print(f"format version {loaded.format_version}, created {loaded.created_at}")
    print(f"config {loaded.config.config_name}, "
          f"generator {loaded.generator.name} seed {loaded.generator.seed}")
    for r in loaded.results:
        print(f"  scenario {r.scenario_id}: ratio {r.ratio.tau * 100.0:.1f} % "
              f"({len(r.plain_samples)} samples per variant)")
    print("\nCSV mirror:")
    print(csv_path.read_text().strip())
