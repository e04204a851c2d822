"""Timing-sample summaries and the execution-time ratio with its spread.

The ratio of interest is vector-variant time over plain-variant time;
below 1.0 the explicit lane version is faster.  Its spread combines the
two relative spreads in quadrature, treating the two timing series as
uncorrelated.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

# One timing sample: elapsed wall-clock nanoseconds, strictly positive.
TimingSample = float


@dataclass(frozen=True)
class RunStats:
    """Mean and sample standard deviation of one variant's timings, in ns."""

    mean: float
    std_dev: float
    count: int


@dataclass(frozen=True)
class RatioResult:
    """Vector-over-plain time ratio and its propagated standard deviation."""

    tau: float
    sigma_tau: float


def summarise(samples: Sequence[TimingSample]) -> RunStats:
    """Reduce timing samples to mean / sample (n-1) standard deviation.

    Needs at least two samples; every duration must be positive.
    """
    if len(samples) < 2:
        raise ValueError(f"need at least 2 timing samples, got {len(samples)}")
    values = [float(s) for s in samples]
    if min(values) <= 0.0:
        raise ValueError("timing samples must be positive durations")
    return RunStats(
        mean=statistics.fmean(values),
        std_dev=statistics.stdev(values),
        count=len(values),
    )


def ratio(intrinsic: RunStats, plain: RunStats) -> RatioResult:
    """Ratio of the first argument's mean over the second's.

    sigma is |tau| * sqrt((std_i/mean_i)^2 + (std_p/mean_p)^2), the
    quadrature sum of the two relative spreads.
    """
    if intrinsic.mean <= 0.0 or plain.mean <= 0.0:
        raise ValueError("ratio needs strictly positive means")
    tau = intrinsic.mean / plain.mean
    sigma_tau = abs(tau) * math.sqrt(
        (intrinsic.std_dev / intrinsic.mean) ** 2 + (plain.std_dev / plain.mean) ** 2
    )
    return RatioResult(tau=tau, sigma_tau=sigma_tau)
