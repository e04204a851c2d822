"""Seeded generation of the float32 workload arrays shared by all scenario kernels.

Every scenario reads from the same kind of workload: three input arrays
filled with uniform values in [1.0, 10.0] and two zeroed output buffers,
one per kernel variant.  The [1, 10] range keeps every lane trap-free:
divisions, square roots and power bases all stay strictly positive, so
branchless evaluation can compute every branch for every lane.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Identity of the PRNG and the exact fill recipe; both are written into
# report files so a run can be regenerated bit-for-bit.
GENERATOR_NAME = "pcg64"
FILL_RECIPE = "1.0 + 9.0 * (u32 / 2**32), rounded once to float32"

DEFAULT_SEED = 42424242

# Allocation ceiling: five float32 arrays per workload.  Anything past
# this is a typo, not a benchmark.
MAX_LENGTH = 2**40


class SizingError(ValueError):
    """Requested workload length is zero, negative or absurdly large."""


@dataclass
class WorkloadData:
    """Input/output arrays for one scenario run.

    Inputs ``a``, ``b``, ``c`` may be shared read-only between the two
    kernel variants; the output buffers ``d_plain`` and ``d_vector`` are
    always distinct so neither variant can see the other's writes.
    """

    length: int
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d_plain: np.ndarray
    d_vector: np.ndarray
    seed: int


def _uniform_1_10(rng: np.random.Generator, length: int) -> np.ndarray:
    # One 32-bit draw per element, scaled in float64, rounded once to
    # float32.  u = 0 hits 1.0 exactly; the top of the range can round
    # up to exactly 10.0.
    u = rng.integers(0, 2**32, size=length, dtype=np.uint32)
    return (1.0 + 9.0 * (u.astype(np.float64) / 2.0**32)).astype(np.float32)


def generate(length: int, seed: int = DEFAULT_SEED) -> WorkloadData:
    """Build a deterministic workload: same (length, seed) -> same bytes.

    Raises :class:`SizingError` for non-positive or overflow-scale lengths.
    """
    if length < 1:
        raise SizingError(f"workload length must be >= 1, got {length}")
    if length > MAX_LENGTH:
        raise SizingError(f"workload length {length} exceeds the {MAX_LENGTH} cap")
    rng = np.random.Generator(np.random.PCG64(seed))
    a = _uniform_1_10(rng, length)
    b = _uniform_1_10(rng, length)
    c = _uniform_1_10(rng, length)
    return WorkloadData(
        length=length,
        a=a,
        b=b,
        c=c,
        d_plain=np.zeros(length, dtype=np.float32),
        d_vector=np.zeros(length, dtype=np.float32),
        seed=seed,
    )
