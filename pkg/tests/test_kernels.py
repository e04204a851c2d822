import math

import numpy as np
import pytest

from lanebench import (
    LANE_WIDTH,
    SCENARIOS,
    KernelPreconditionError,
    compare_gt,
    generate,
    lanewise_transcendental,
    run_plain,
    run_vector,
    select_lanes,
)
from lanebench.datagen import WorkloadData

from scalar_oracle import max_rel_diff, oracle_output, ulp_distance

BITEXACT_IDS = (1, 2, 5, 6, 7)
TRANSCENDENTAL_IDS = (3, 4, 8)
EQUIV_LENGTHS = list(range(1, 2 * LANE_WIDTH + 2)) + [1000, 12345]
SEEDS = [11, 22, 33, 44, 55]


def make_data(a, b, c=None):
    a = np.asarray(a, dtype=np.float32)
    b = np.asarray(b, dtype=np.float32)
    c = np.ones_like(a) if c is None else np.asarray(c, dtype=np.float32)
    return WorkloadData(
        length=len(a), a=a, b=b, c=c,
        d_plain=np.zeros(len(a), dtype=np.float32),
        d_vector=np.zeros(len(a), dtype=np.float32),
        seed=0,
    )


def test_lane_width_is_eight():
    assert LANE_WIDTH == 256 // (8 * 4) == 8


def test_catalogue_flags():
    assert sorted(SCENARIOS) == list(range(1, 9))
    assert {sid for sid in SCENARIOS if SCENARIOS[sid].uses_offsets} == {2, 4}
    assert {sid for sid in SCENARIOS if SCENARIOS[sid].uses_transcendentals} == {3, 4, 8}
    kinds = {sid: SCENARIOS[sid].conditional_kind for sid in SCENARIOS}
    assert kinds == {1: "none", 2: "none", 3: "none", 4: "none",
                     5: "index", 6: "data", 7: "nested-data", 8: "nested-data"}


# -- plain variant against the per-element oracle -----------------------------

def test_plain_scenario1_single_element():
    d = make_data([2.0], [3.0], [4.0])
    run_plain(SCENARIOS[1], d)
    assert d.d_plain.tolist() == [10.0]


def test_plain_scenario2_boundary_zeros():
    d = make_data([1, 2, 3, 4, 5], [5, 4, 3, 2, 1], [1, 1, 1, 1, 1])
    run_plain(SCENARIOS[2], d)
    assert d.d_plain[0] == 0.0
    assert d.d_plain[4] == 0.0


def test_plain_scenario6_branch_routing():
    d = make_data([6.0, 5.0], [2.0, 2.0])
    run_plain(SCENARIOS[6], d)
    assert d.d_plain.tolist() == [8.0, 3.0]


def test_plain_scenario7_all_four_branches():
    # Frozen from the oracle: covers A*B, A/B, A+B and A-B routing.
    d = make_data([6, 6, 6, 2, 7, 3, 9, 5], [9, 3, 6, 1, 8, 8, 2, 9])
    run_plain(SCENARIOS[7], d)
    assert d.d_plain.tolist() == [54.0, 2.0, 12.0, 1.0, 56.0, -5.0, 4.5, -4.0]


def test_plain_scenario8_ceil_branch():
    d = make_data([3.0], [1.0])
    run_plain(SCENARIOS[8], d)
    assert d.d_plain.tolist() == [3.0]


@pytest.mark.parametrize("sid", sorted(SCENARIOS))
@pytest.mark.parametrize("length", [3, 17, 301])
def test_plain_matches_oracle(sid, length):
    data = generate(length, seed=97 + sid)
    run_plain(SCENARIOS[sid], data)
    expected = oracle_output(sid, data.a, data.b, data.c)
    if sid in BITEXACT_IDS:
        assert data.d_plain.tobytes() == expected.tobytes()
    else:
        assert max_rel_diff(data.d_plain, expected) <= 1e-5


# -- vector variant against the plain variant ---------------------------------

@pytest.mark.parametrize("sid", sorted(SCENARIOS))
@pytest.mark.parametrize("length", EQUIV_LENGTHS)
@pytest.mark.parametrize("seed", SEEDS)
def test_vector_matches_plain(sid, length, seed):
    spec = SCENARIOS[sid]
    if spec.uses_offsets and length < 3:
        pytest.skip("offset pattern needs length >= 3")
    data = generate(length, seed)
    run_plain(spec, data)
    run_vector(spec, data)
    if sid in BITEXACT_IDS:
        assert data.d_plain.tobytes() == data.d_vector.tobytes()
    else:
        assert max_rel_diff(data.d_plain, data.d_vector) <= 1e-5


def test_vector_scenario6_single_tail_element():
    # 9 mod 8 = 1: exactly one element goes through the scalar tail.
    data = generate(9, 3)
    run_plain(SCENARIOS[6], data)
    run_vector(SCENARIOS[6], data)
    assert data.d_plain[8] == data.d_vector[8]
    assert data.d_plain.tobytes() == data.d_vector.tobytes()


@pytest.mark.parametrize("sid", sorted(SCENARIOS))
@pytest.mark.parametrize("length", [9, 13, 15, 23])
def test_tail_writes_every_remaining_index(sid, length):
    spec = SCENARIOS[sid]
    data = generate(length, seed=5)
    data.d_vector[:] = np.float32(-999.0)  # sentinel no kernel produces
    run_vector(spec, data)
    assert not np.any(data.d_vector == np.float32(-999.0))


@pytest.mark.parametrize("sid", [2, 4])
@pytest.mark.parametrize("length", [3, 7, 8, 9, 64, 1000, 12345])
def test_boundary_zeroing_both_variants(sid, length):
    data = generate(length, seed=8)
    run_plain(SCENARIOS[sid], data)
    run_vector(SCENARIOS[sid], data)
    for out in (data.d_plain, data.d_vector):
        assert out[0] == 0.0
        assert out[length - 1] == 0.0


@pytest.mark.parametrize("sid", [2, 4])
@pytest.mark.parametrize("variant", [run_plain, run_vector])
@pytest.mark.parametrize("length", [1, 2])
def test_offset_scenarios_reject_short_arrays(sid, variant, length):
    data = generate(length, seed=1)
    before = data.d_plain.copy(), data.d_vector.copy()
    with pytest.raises(KernelPreconditionError):
        variant(SCENARIOS[sid], data)
    # no partial writes
    assert np.array_equal(before[0], data.d_plain)
    assert np.array_equal(before[1], data.d_vector)


def test_scenario7_masks_partition_every_lane():
    data = generate(4096, seed=21)
    a, b = data.a, data.b
    outer = a > np.float32(5)
    m1 = outer & (b >= np.float32(8))
    m2 = outer & ~(b >= np.float32(8)) & (b <= np.float32(5))
    m3 = outer & ~(b >= np.float32(8)) & ~(b <= np.float32(5))
    m4 = ~outer
    total = m1.astype(int) + m2.astype(int) + m3.astype(int) + m4.astype(int)
    assert np.all(total == 1)


# -- lane primitives -----------------------------------------------------------

def lanes(value):
    return np.full(LANE_WIDTH, value, dtype=np.float32)


def test_select_all_true_and_all_false():
    x, y = lanes(1.0), lanes(0.0)
    assert np.array_equal(select_lanes(np.full(LANE_WIDTH, True), x, y), x)
    assert np.array_equal(select_lanes(np.full(LANE_WIDTH, False), x, y), y)


def test_select_alternating_mask():
    mask = np.array([True, False] * 4)
    out = select_lanes(mask, lanes(1.0), lanes(0.0))
    assert out.tolist() == [1, 0, 1, 0, 1, 0, 1, 0]


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_select_same_both_sides_is_identity(seed):
    rng = np.random.default_rng(seed)
    x = rng.random(LANE_WIDTH).astype(np.float32)
    mask = rng.random(LANE_WIDTH) > 0.5
    assert np.array_equal(select_lanes(mask, x, x), x)


def test_compare_gt_strict_and_nan_ordered():
    assert compare_gt(lanes(6.0), 5.0).all()
    assert not compare_gt(lanes(5.0), 5.0).any()
    assert not compare_gt(lanes(np.nan), 5.0).any()


def test_lanewise_sqrt_exact_square():
    assert lanewise_transcendental("sqrt", lanes(4.0)).tolist() == [2.0] * LANE_WIDTH


def test_lanewise_pow_frozen_value():
    out = lanewise_transcendental("pow", lanes(2.0), np.float32(2.5))
    # math.pow(2.0, 2.5) rounded to float32
    assert out.tolist() == [5.656854152679443] * LANE_WIDTH


def test_lanewise_ceil_integer_fixed_point():
    assert lanewise_transcendental("ceil", lanes(3.0)).tolist() == [3.0] * LANE_WIDTH


def test_lanewise_unknown_op_rejected():
    with pytest.raises(ValueError):
        lanewise_transcendental("tan", lanes(1.0))


@pytest.mark.parametrize("op,ref", [
    ("sqrt", math.sqrt),
    ("abs", abs),
    ("cos", math.cos),
    ("ceil", math.ceil),
])
def test_lanewise_within_two_ulp_of_math_library(op, ref):
    rng = np.random.default_rng(1234)
    worst = 0
    for _ in range(50):
        x = (1.0 + 9.0 * rng.random(LANE_WIDTH)).astype(np.float32)
        got = lanewise_transcendental(op, x)
        want = np.array([np.float32(ref(float(v))) for v in x], dtype=np.float32)
        worst = max(worst, int(ulp_distance(got, want).max()))
    assert worst <= 2


def test_lanewise_pow_within_two_ulp_of_math_library():
    rng = np.random.default_rng(4321)
    worst = 0
    for _ in range(50):
        base = (1.0 + 9.0 * rng.random(LANE_WIDTH)).astype(np.float32)
        exp = (1.0 + 9.0 * rng.random(LANE_WIDTH)).astype(np.float32)
        got = lanewise_transcendental("pow", base, exp)
        want = np.array(
            [np.float32(math.pow(float(u), float(v))) for u, v in zip(base, exp)],
            dtype=np.float32,
        )
        worst = max(worst, int(ulp_distance(got, want).max()))
    assert worst <= 2
