"""lanebench: plain whole-array kernels vs explicit 8-lane vector kernels.

Eight scenario kernels, each written twice: once as a straightforward
whole-array float32 expression and once as an explicit 8-lane blocked
loop with masked selects and a scalar tail.  The harness times both
forms under an alternating protocol, the stats layer reduces the
samples to a vector-over-plain time ratio with propagated spread, and
reports capture enough metadata to reproduce a run bit-for-bit.
"""

from .advisor import Recommendation, advise
from .configmeta import ConfigMetadata, derive_config_name, detect
from .datagen import (
    DEFAULT_SEED,
    FILL_RECIPE,
    GENERATOR_NAME,
    SizingError,
    WorkloadData,
    generate,
)
from .harness import (
    DEFAULT_LENGTH,
    DEFAULT_REPEATS,
    DEFAULT_TOLERANCES,
    ScenarioResult,
    SchedulingScheme,
    VerificationFailure,
    VerificationRecord,
    run_scenario,
    verify,
)
from .kernels import (
    LANE_WIDTH,
    SCENARIOS,
    KernelPreconditionError,
    ScenarioSpec,
    compare_gt,
    lanewise_transcendental,
    run_plain,
    run_vector,
    select_lanes,
)
from .report import (
    GeneratorInfo,
    Report,
    build_report,
    load_report,
    report_from_dict,
    report_to_dict,
    write_report,
    write_tabular,
)
from .stats import RatioResult, RunStats, ratio, summarise

__version__ = "0.1.0"

__all__ = [
    "advise", "Recommendation",
    "ConfigMetadata", "derive_config_name", "detect",
    "DEFAULT_SEED", "FILL_RECIPE", "GENERATOR_NAME",
    "SizingError", "WorkloadData", "generate",
    "DEFAULT_LENGTH", "DEFAULT_REPEATS", "DEFAULT_TOLERANCES",
    "ScenarioResult", "SchedulingScheme", "VerificationFailure",
    "VerificationRecord", "run_scenario", "verify",
    "LANE_WIDTH", "SCENARIOS", "KernelPreconditionError", "ScenarioSpec",
    "compare_gt", "lanewise_transcendental", "run_plain", "run_vector", "select_lanes",
    "GeneratorInfo", "Report", "build_report", "load_report",
    "report_from_dict", "report_to_dict", "write_report", "write_tabular",
    "RatioResult", "RunStats", "ratio", "summarise",
]
