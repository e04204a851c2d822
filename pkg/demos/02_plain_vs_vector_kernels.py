"""The two kernel forms, side by side.

Each of the eight scenarios exists twice.  The plain form is the
computation stated as one whole-array float32 expression -- the bulk
path the runtime vectorises for you.  The vector form walks the array
in blocks of eight lanes, computing and storing each block explicitly,
with a scalar tail for the leftover elements.  Conditionals become
masked selects: compute both branches for all lanes, route per lane.
"""

import numpy as np

from lanebench import LANE_WIDTH, SCENARIOS, generate, run_plain, run_vector, verify

print(f"lane width: {LANE_WIDTH} float32 lanes per 256-bit block\n")

for sid in sorted(SCENARIOS):
    spec = SCENARIOS[sid]
    # 27 = 3 full blocks + 3 tail elements; offsets shrink the body by 2.
    data = generate(27, seed=100 + sid)
    run_plain(spec, data)
    run_vector(spec, data)
    record = verify(spec, data)
    print(
        f"scenario {sid} ({spec.description}): "
        f"{'ok' if record.passed else 'MISMATCH'}, "
        f"max rel diff {record.max_rel_diff:.2e}"
    )

# A closer look at the branchless conditional of scenario 6: lanes with
# a > 5 take a + b, the rest take a - b.
data = generate(8, seed=3)
spec = SCENARIOS[6]
run_plain(spec, data)
mask = data.a > np.float32(5)
print("\nscenario 6 lanes:")
print("  a     :", np.array2string(data.a, precision=2))
print("  a > 5 :", mask)
print("  out   :", np.array2string(data.d_plain, precision=2))
