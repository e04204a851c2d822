"""The eight scenario kernels, each in a plain and an 8-lane vector form.

The plain variant states each computation as a whole-array float32
expression: the runtime's bulk loops do the work, the way a compiler
auto-vectorises a scalar loop.  The vector variant spells the lane
structure out by hand: a main loop walks the array in blocks of eight
32-bit floats (one 256-bit register's worth), loading lanes, computing,
and storing back, and a scalar tail loop finishes whatever a block of
eight cannot cover.  Conditionals in the vector form are branchless:
every branch is computed for every lane, then a mask routes each lane
to the branch a scalar loop would have taken.

Both variants of a scenario share identical float32 arithmetic: multiply
and add stay separate steps (no fused contraction), so the purely
arithmetic scenarios (1, 2, 5, 6, 7) agree bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .datagen import WorkloadData

# 32-bit float lanes in a 256-bit register.
LANE_WIDTH = 256 // (8 * 4)

_F5 = np.float32(5.0)
_F8 = np.float32(8.0)
_EXP = np.float32(2.5)

# Lane parity for the index-conditional scenario; valid because the main
# loop always starts blocks at even offsets (multiples of LANE_WIDTH).
_EVEN_LANES = (np.arange(LANE_WIDTH) % 2) == 0


class KernelPreconditionError(ValueError):
    """Workload too small for the kernel's index-offset pattern."""


@dataclass(frozen=True)
class ScenarioSpec:
    """Identity and shape of one benchmark kernel pair."""

    id: int
    description: str
    uses_offsets: bool
    uses_transcendentals: bool
    conditional_kind: str  # none | index | data | nested-data


SCENARIOS: dict[int, ScenarioSpec] = {
    1: ScenarioSpec(1, "basic operations", False, False, "none"),
    2: ScenarioSpec(2, "basic operations with index offset", True, False, "none"),
    3: ScenarioSpec(3, "advanced operations", False, True, "none"),
    4: ScenarioSpec(4, "advanced operations with index offset", True, True, "none"),
    5: ScenarioSpec(5, "condition on index with basic operations", False, False, "index"),
    6: ScenarioSpec(6, "condition on random data with basic operations", False, False, "data"),
    7: ScenarioSpec(
        7, "condition on random data with sub-branches and basic operations", False, False, "nested-data"
    ),
    8: ScenarioSpec(
        8, "condition on random data with sub-branches and advanced operations", False, True, "nested-data"
    ),
}

_LANE_FUNCS: dict[str, Callable] = {
    "sqrt": np.sqrt,
    "abs": np.abs,
    "cos": np.cos,
    "pow": np.power,
    "ceil": np.ceil,
}


def select_lanes(mask: np.ndarray, if_true: np.ndarray, if_false: np.ndarray) -> np.ndarray:
    """Per-lane select: lane i takes if_true[i] where mask[i], else if_false[i]."""
    return np.where(mask, if_true, if_false)


def compare_gt(a: np.ndarray, threshold: float) -> np.ndarray:
    """Ordered greater-than per lane; lanes holding NaN compare false."""
    return np.greater(a, np.float32(threshold))


def lanewise_transcendental(op: str, *operands: np.ndarray) -> np.ndarray:
    """Apply one of sqrt/abs/cos/pow/ceil across lanes.

    ``pow`` takes (base_lanes, exponent); the others take a single lane
    vector.  Results are float32.
    """
    try:
        func = _LANE_FUNCS[op]
    except KeyError:
        raise ValueError(f"unknown lane operation {op!r}") from None
    return func(*operands)


def _check_offsets(spec: ScenarioSpec, length: int) -> None:
    if spec.uses_offsets and length < 3:
        raise KernelPreconditionError(
            f"scenario {spec.id} reads neighbours i-1 and i+1 and needs length >= 3, got {length}"
        )


# -- plain variants ----------------------------------------------------------
#
# Whole-array float32 expressions with the same association order as the
# per-element statement they stand for.

def _plain_1(a, b, c, out):
    out[:] = a * b + c


def _plain_2(a, b, c, out):
    out[1:-1] = a[:-2] * b[1:-1] + c[1:-1] + b[2:]
    out[0] = 0.0
    out[-1] = 0.0


def _plain_3(a, b, c, out):
    out[:] = a * np.sqrt(b) + np.abs(c) - np.cos(a) / c + np.power(b, _EXP)


def _plain_4(a, b, c, out):
    body = slice(1, -1)
    out[body] = (
        a[:-2] * np.sqrt(b[body])
        + np.abs(c[body])
        - np.cos(a[body]) / c[body]
        + np.power(b[2:], _EXP)
    )
    out[0] = 0.0
    out[-1] = 0.0


def _plain_5(a, b, c, out):
    even = (np.arange(len(a)) % 2) == 0
    out[:] = np.where(even, a + b, a - b)


def _plain_6(a, b, c, out):
    out[:] = np.where(a > _F5, a + b, a - b)


def _plain_7(a, b, c, out):
    inner = np.where(b >= _F8, a * b, np.where(b <= _F5, a / b, a + b))
    out[:] = np.where(a > _F5, inner, a - b)


def _plain_8(a, b, c, out):
    inner = np.where(b >= _F8, np.sqrt(a), np.where(b <= _F5, np.power(a, b), np.cos(a)))
    out[:] = np.where(a > _F5, inner, np.ceil(a))


# -- vector variants ---------------------------------------------------------
#
# Explicit block loop over LANE_WIDTH lanes plus a scalar tail identical
# to the plain per-element statement.

def _vector_1(a, b, c, out):
    n = len(a)
    main = n - n % LANE_WIDTH
    for i in range(0, main, LANE_WIDTH):
        va = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        vc = c[i : i + LANE_WIDTH]
        vd = va * vb
        vd = vd + vc
        out[i : i + LANE_WIDTH] = vd
    for i in range(main, n):
        out[i] = a[i] * b[i] + c[i]


def _vector_2(a, b, c, out):
    n = len(a)
    body = n - 2
    stop = 1 + body - body % LANE_WIDTH
    for i in range(1, stop, LANE_WIDTH):
        va = a[i - 1 : i - 1 + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        vc = c[i : i + LANE_WIDTH]
        vb1 = b[i + 1 : i + 1 + LANE_WIDTH]
        vd = va * vb
        vd = vd + vc
        vd = vd + vb1
        out[i : i + LANE_WIDTH] = vd
    for i in range(stop, n - 1):
        out[i] = a[i - 1] * b[i] + c[i] + b[i + 1]
    out[0] = 0.0
    out[n - 1] = 0.0


def _vector_3(a, b, c, out):
    n = len(a)
    main = n - n % LANE_WIDTH
    for i in range(0, main, LANE_WIDTH):
        va = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        vc = c[i : i + LANE_WIDTH]
        vd = va * lanewise_transcendental("sqrt", vb)
        vd = vd + lanewise_transcendental("abs", vc)
        vd = vd - lanewise_transcendental("cos", va) / vc
        vd = vd + lanewise_transcendental("pow", vb, _EXP)
        out[i : i + LANE_WIDTH] = vd
    for i in range(main, n):
        out[i] = a[i] * np.sqrt(b[i]) + np.abs(c[i]) - np.cos(a[i]) / c[i] + np.power(b[i], _EXP)


def _vector_4(a, b, c, out):
    n = len(a)
    body = n - 2
    stop = 1 + body - body % LANE_WIDTH
    for i in range(1, stop, LANE_WIDTH):
        va = a[i - 1 : i - 1 + LANE_WIDTH]
        vai = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        vc = c[i : i + LANE_WIDTH]
        vb1 = b[i + 1 : i + 1 + LANE_WIDTH]
        vd = va * lanewise_transcendental("sqrt", vb)
        vd = vd + lanewise_transcendental("abs", vc)
        vd = vd - lanewise_transcendental("cos", vai) / vc
        vd = vd + lanewise_transcendental("pow", vb1, _EXP)
        out[i : i + LANE_WIDTH] = vd
    for i in range(stop, n - 1):
        out[i] = (
            a[i - 1] * np.sqrt(b[i]) + np.abs(c[i]) - np.cos(a[i]) / c[i] + np.power(b[i + 1], _EXP)
        )
    out[0] = 0.0
    out[n - 1] = 0.0


def _vector_5(a, b, c, out):
    n = len(a)
    main = n - n % LANE_WIDTH
    for i in range(0, main, LANE_WIDTH):
        va = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        out[i : i + LANE_WIDTH] = select_lanes(_EVEN_LANES, va + vb, va - vb)
    for i in range(main, n):
        if i % 2 == 0:
            out[i] = a[i] + b[i]
        else:
            out[i] = a[i] - b[i]


def _vector_6(a, b, c, out):
    n = len(a)
    main = n - n % LANE_WIDTH
    for i in range(0, main, LANE_WIDTH):
        va = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        mask = compare_gt(va, 5.0)
        out[i : i + LANE_WIDTH] = select_lanes(mask, va + vb, va - vb)
    for i in range(main, n):
        if a[i] > _F5:
            out[i] = a[i] + b[i]
        else:
            out[i] = a[i] - b[i]


def _vector_7(a, b, c, out):
    n = len(a)
    main = n - n % LANE_WIDTH
    for i in range(0, main, LANE_WIDTH):
        va = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        outer = compare_gt(va, 5.0)
        inner = select_lanes(vb >= _F8, va * vb, select_lanes(vb <= _F5, va / vb, va + vb))
        out[i : i + LANE_WIDTH] = select_lanes(outer, inner, va - vb)
    for i in range(main, n):
        if a[i] > _F5:
            if b[i] >= _F8:
                out[i] = a[i] * b[i]
            elif b[i] <= _F5:
                out[i] = a[i] / b[i]
            else:
                out[i] = a[i] + b[i]
        else:
            out[i] = a[i] - b[i]


def _vector_8(a, b, c, out):
    n = len(a)
    main = n - n % LANE_WIDTH
    for i in range(0, main, LANE_WIDTH):
        va = a[i : i + LANE_WIDTH]
        vb = b[i : i + LANE_WIDTH]
        outer = compare_gt(va, 5.0)
        inner = select_lanes(
            vb >= _F8,
            lanewise_transcendental("sqrt", va),
            select_lanes(
                vb <= _F5,
                lanewise_transcendental("pow", va, vb),
                lanewise_transcendental("cos", va),
            ),
        )
        out[i : i + LANE_WIDTH] = select_lanes(outer, inner, lanewise_transcendental("ceil", va))
    for i in range(main, n):
        if a[i] > _F5:
            if b[i] >= _F8:
                out[i] = np.sqrt(a[i])
            elif b[i] <= _F5:
                out[i] = np.power(a[i], b[i])
            else:
                out[i] = np.cos(a[i])
        else:
            out[i] = np.ceil(a[i])


_PLAIN = {1: _plain_1, 2: _plain_2, 3: _plain_3, 4: _plain_4,
          5: _plain_5, 6: _plain_6, 7: _plain_7, 8: _plain_8}
_VECTOR = {1: _vector_1, 2: _vector_2, 3: _vector_3, 4: _vector_4,
           5: _vector_5, 6: _vector_6, 7: _vector_7, 8: _vector_8}


def run_plain(spec: ScenarioSpec, data: WorkloadData) -> None:
    """Run the plain variant, writing into ``data.d_plain``."""
    _check_offsets(spec, data.length)
    _PLAIN[spec.id](data.a, data.b, data.c, data.d_plain)


def run_vector(spec: ScenarioSpec, data: WorkloadData) -> None:
    """Run the 8-lane vector variant, writing into ``data.d_vector``."""
    _check_offsets(spec, data.length)
    _VECTOR[spec.id](data.a, data.b, data.c, data.d_vector)
