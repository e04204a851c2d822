"""Measurement protocol: warmup, equivalence gate, alternating timed rounds.

One scenario run builds its workload once, executes each variant once
untimed (first-touch warmup), checks that the two variants agree, and
only then starts timing.  The default scheme alternates the variants
round by round, plain first, so slow background drift hits both series
equally; a blocked scheme (all plain rounds, then all vector rounds) is
available for cross-checking.  Each timed region covers exactly one
kernel execution; data generation, verification and checksum folding all
happen outside it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import kernels, stats
from .datagen import WorkloadData, generate

DEFAULT_LENGTH = 50_000_000
DEFAULT_REPEATS = 50

# Relative verification tolerance per scenario.  The purely arithmetic
# scenarios must agree bit-for-bit; the transcendental ones get room for
# lane math and scalar tail math to disagree in the last bits.
DEFAULT_TOLERANCES = {1: 0.0, 2: 0.0, 3: 1e-5, 4: 1e-5, 5: 0.0, 6: 0.0, 7: 0.0, 8: 1e-5}

Clock = Callable[[], int]
KernelFn = Callable[[WorkloadData], None]


@dataclass(frozen=True)
class SchedulingScheme:
    """How timed rounds are ordered: alternating pairs or two blocks."""

    tag: str = "interleaved"
    repeats: int = DEFAULT_REPEATS

    def __post_init__(self):
        if self.tag not in ("interleaved", "blocked"):
            raise ValueError(f"scheme tag must be 'interleaved' or 'blocked', got {self.tag!r}")
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")


@dataclass(frozen=True)
class VerificationRecord:
    """Element-wise comparison of the two output buffers."""

    max_abs_diff: float
    max_rel_diff: float
    worst_index: int
    tolerance: float
    passed: bool


class VerificationFailure(RuntimeError):
    """The two variants disagreed; measurement was not started."""

    def __init__(self, scenario_id: int, record: VerificationRecord):
        super().__init__(
            f"scenario {scenario_id}: outputs differ (max rel diff {record.max_rel_diff:.3e} "
            f"at index {record.worst_index}, tolerance {record.tolerance:.1e})"
        )
        self.scenario_id = scenario_id
        self.record = record


@dataclass
class ScenarioResult:
    """Everything measured for one scenario on one workload."""

    scenario_id: int
    length: int
    seed: int
    scheme: SchedulingScheme
    plain_stats: stats.RunStats
    vector_stats: stats.RunStats
    ratio: stats.RatioResult
    verification: VerificationRecord
    plain_samples: list = field(default_factory=list)  # ns per round
    vector_samples: list = field(default_factory=list)
    plain_checksum: float = 0.0
    vector_checksum: float = 0.0
    timer_resolution_ns: float = 0.0
    timer_warning: bool = False
    sequence_emulated: bool = False


def verify(
    spec: kernels.ScenarioSpec, data: WorkloadData, tolerance: Optional[float] = None
) -> VerificationRecord:
    """Compare d_plain against d_vector element-wise.

    An element passes when both values are exactly equal or when
    |p - v| <= tolerance * max(|p|, |v|).  Both variants must have been
    run on ``data`` beforehand.
    """
    if tolerance is None:
        tolerance = DEFAULT_TOLERANCES[spec.id]
    p = data.d_plain
    v = data.d_vector
    if p.shape != v.shape:
        raise ValueError(f"output buffers disagree in shape: {p.shape} vs {v.shape}")
    diff = np.abs(p.astype(np.float64) - v.astype(np.float64))
    denom = np.maximum(np.abs(p), np.abs(v)).astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(diff == 0.0, 0.0, diff / denom)
    max_abs = float(np.max(diff))
    max_rel = float(np.max(rel))
    worst = int(np.argmax(rel)) if max_abs > 0.0 else -1
    passed = bool(np.all((diff == 0.0) | (rel <= tolerance)))
    return VerificationRecord(
        max_abs_diff=max_abs,
        max_rel_diff=max_rel,
        worst_index=worst,
        tolerance=tolerance,
        passed=passed,
    )


def _estimate_resolution_ns(clock: Clock, probes: int = 64) -> float:
    """Smallest positive step the clock exposes over a burst of readings."""
    best = float("inf")
    prev = clock()
    for _ in range(probes):
        cur = clock()
        if cur > prev:
            best = min(best, cur - prev)
        prev = cur
    if best == float("inf"):
        # Clock never ticked during the burst; treat one full burst as
        # the resolution floor.
        start = clock()
        while clock() == start:
            pass
        best = clock() - start
    return float(best)


def run_scenario(
    spec: kernels.ScenarioSpec,
    length: int = DEFAULT_LENGTH,
    seed: Optional[int] = None,
    scheme: Optional[SchedulingScheme] = None,
    tolerance: Optional[float] = None,
    *,
    plain_fn: Optional[KernelFn] = None,
    vector_fn: Optional[KernelFn] = None,
    clock: Clock = time.perf_counter_ns,
    data: Optional[WorkloadData] = None,
) -> ScenarioResult:
    """Measure one scenario under the given scheme and return its result.

    ``plain_fn`` / ``vector_fn`` default to the catalogue kernels; tests
    inject substitutes here to exercise the protocol itself.  ``clock``
    must be a monotonic nanosecond counter.

    Raises :class:`VerificationFailure` if the post-warmup equivalence
    check fails; no timing samples are collected in that case.
    """
    from .datagen import DEFAULT_SEED

    if seed is None:
        seed = DEFAULT_SEED
    if scheme is None:
        scheme = SchedulingScheme()
    if scheme.repeats < 2:
        raise ValueError(
            f"repeats must be >= 2 so a standard deviation exists, got {scheme.repeats}"
        )
    if plain_fn is None:
        plain_fn = lambda d: kernels.run_plain(spec, d)
    if vector_fn is None:
        vector_fn = lambda d: kernels.run_vector(spec, d)

    if data is None:
        data = generate(length, seed)

    # Untimed warmup, one execution per variant: touches every page and
    # yields the outputs the equivalence gate inspects.
    plain_fn(data)
    vector_fn(data)

    record = verify(spec, data, tolerance)
    if not record.passed:
        raise VerificationFailure(spec.id, record)

    plain_samples: list[int] = []
    vector_samples: list[int] = []
    plain_checksum = 0.0
    vector_checksum = 0.0

    def timed(fn: KernelFn) -> int:
        t0 = clock()
        fn(data)
        t1 = clock()
        return t1 - t0

    if scheme.tag == "interleaved":
        for _ in range(scheme.repeats):
            plain_samples.append(timed(plain_fn))
            plain_checksum += float(np.sum(data.d_plain, dtype=np.float64))
            vector_samples.append(timed(vector_fn))
            vector_checksum += float(np.sum(data.d_vector, dtype=np.float64))
    else:
        for _ in range(scheme.repeats):
            plain_samples.append(timed(plain_fn))
            plain_checksum += float(np.sum(data.d_plain, dtype=np.float64))
        for _ in range(scheme.repeats):
            vector_samples.append(timed(vector_fn))
            vector_checksum += float(np.sum(data.d_vector, dtype=np.float64))

    plain_stats = stats.summarise(plain_samples)
    vector_stats = stats.summarise(vector_samples)
    ratio_result = stats.ratio(vector_stats, plain_stats)

    resolution = _estimate_resolution_ns(clock)
    warn = resolution > 0.01 * min(plain_stats.mean, vector_stats.mean)

    return ScenarioResult(
        scenario_id=spec.id,
        length=data.length,
        seed=data.seed,
        scheme=scheme,
        plain_stats=plain_stats,
        vector_stats=vector_stats,
        ratio=ratio_result,
        verification=record,
        plain_samples=plain_samples,
        vector_samples=vector_samples,
        plain_checksum=plain_checksum,
        vector_checksum=vector_checksum,
        timer_resolution_ns=resolution,
        timer_warning=bool(warn),
    )
