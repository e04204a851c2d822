"""The three lane primitives the vector kernels are built from.

compare_gt turns a threshold test into a boolean lane vector,
select_lanes merges two candidate results through that mask, and
lanewise_transcendental applies sqrt/abs/cos/pow/ceil across lanes.
That triple is enough to express every conditional scenario without a
branch in the loop body.
"""

import numpy as np

from lanebench import compare_gt, lanewise_transcendental, select_lanes

a = np.array([6.0, 5.0, 9.5, 1.0, 7.2, 5.0, 2.2, 8.8], dtype=np.float32)
b = np.array([2.0, 2.0, 0.5, 4.0, 1.1, 3.3, 6.0, 0.2], dtype=np.float32)

mask = compare_gt(a, 5.0)
print("a        :", a)
print("a > 5    :", mask, " (5.0 itself is false: strict, ordered)")

merged = select_lanes(mask, a + b, a - b)
print("selected :", merged, " (a+b where true, a-b where false)")

# NaN lanes compare false under the ordered comparison:
with_nan = a.copy()
with_nan[0] = np.nan
print("NaN lane :", compare_gt(with_nan, 5.0))

# Lane math matches the scalar math library to within a couple ULP.
print("sqrt     :", lanewise_transcendental("sqrt", np.full(8, 4.0, dtype=np.float32)))
print("pow ^2.5 :", lanewise_transcendental("pow", np.full(8, 2.0, dtype=np.float32),
                                            np.float32(2.5)))
print("ceil     :", lanewise_transcendental("ceil", a))
