"""The measurement protocol, end to end on a desk-sized workload.

One run: generate the workload, warm both variants up untimed, gate on
output equivalence, then time alternating rounds -- plain first in each
pair so background drift hits both series equally.  Nothing but the
kernel call sits inside a timed region; checksums of every output are
folded outside it so results stay observable.
"""

from lanebench import SCENARIOS, SchedulingScheme, run_scenario

scheme = SchedulingScheme("interleaved", repeats=10)
result = run_scenario(SCENARIOS[6], length=50_000, seed=42, scheme=scheme)

print(f"scenario {result.scenario_id}, length {result.length}, seed {result.seed}")
print(f"scheme: {result.scheme.tag}, {result.scheme.repeats} rounds per variant")
print(f"verification: passed={result.verification.passed}, "
      f"max rel diff {result.verification.max_rel_diff:.2e}")
print(f"plain : {result.plain_stats.mean / 1e6:8.3f} ms "
      f"+/- {result.plain_stats.std_dev / 1e6:.3f}")
print(f"vector: {result.vector_stats.mean / 1e6:8.3f} ms "
      f"+/- {result.vector_stats.std_dev / 1e6:.3f}")
print(f"ratio : {result.ratio.tau * 100.0:.1f} +/- {result.ratio.sigma_tau * 100.0:.1f} % "
      "(below 100 % means the explicit lane form won)")
if result.timer_warning:
    print("note: timer resolution is coarse relative to one execution")

# The blocked scheme (all plain rounds, then all vector rounds) exists
# as a cross-check; on a quiet machine the two schemes agree.
blocked = run_scenario(
    SCENARIOS[6], length=50_000, seed=42, scheme=SchedulingScheme("blocked", repeats=10)
)
print(f"blocked scheme ratio: {blocked.ratio.tau * 100.0:.1f} "
      f"+/- {blocked.ratio.sigma_tau * 100.0:.1f} %")
