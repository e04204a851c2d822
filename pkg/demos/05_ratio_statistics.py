"""How timing samples become the headline number.

Samples reduce to mean and sample standard deviation per variant; the
headline is the vector-over-plain ratio of means.  Its spread combines
the two relative spreads in quadrature (the series are treated as
uncorrelated), and both numbers are scale-free: the clock unit cancels.
"""

from lanebench import RunStats, ratio, summarise

plain_ns = [221_400_000 + d for d in (-600_000, 0, 400_000, 600_000, -400_000)]
vector_ns = [33_300_000 + d for d in (-500_000, 500_000, 0, 250_000, -250_000)]

plain = summarise(plain_ns)
vector = summarise(vector_ns)
print(f"plain : mean {plain.mean / 1e6:.1f} ms, std {plain.std_dev / 1e6:.2f} ms")
print(f"vector: mean {vector.mean / 1e6:.1f} ms, std {vector.std_dev / 1e6:.2f} ms")

r = ratio(vector, plain)
print(f"ratio : {r.tau * 100.0:.1f} +/- {r.sigma_tau * 100.0:.1f} %")

# Scale invariance: convert nanoseconds to microseconds, nothing moves.
k = 1e-3
scaled = ratio(
    RunStats(vector.mean * k, vector.std_dev * k, vector.count),
    RunStats(plain.mean * k, plain.std_dev * k, plain.count),
)
print(f"after unit change: {scaled.tau * 100.0:.1f} +/- {scaled.sigma_tau * 100.0:.1f} % "
      "(identical)")

# Swapping the arguments inverts the ratio exactly.
print(f"plain-over-vector: {ratio(plain, vector).tau:.4f} "
      f"= 1 / {r.tau:.4f}")
