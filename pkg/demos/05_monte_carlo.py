"""Monte Carlo percolation against the exact pipeline.

Each trial keeps every edge independently with probability p and counts
components with a union-find; batches draw from counter-based Philox
streams, so a (seed, trial budget) pair is fully reproducible.
"""
from fractions import Fraction

from relpoly import cross_check, estimate, fixture

g = fixture("complete_minus_matching", 6, 3)
print(f"graph: K6 minus a perfect matching ({g.n} vertices, {g.m} edges)")

for k in (1, 2):
    for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        report = cross_check(g, k, p, trials=200_000, seed=42)
        est = report.estimate
        print(
            f"  k={k} p={p}: estimate {est.mean:.5f} +- {est.stderr:.5f}, "
            f"exact {float(report.exact):.5f}, "
            f"{'agrees' if report.passed else 'DISAGREES'} within "
            f"{report.tolerance_sigmas:g} sigma"
        )

print()
a = estimate(g, 1, Fraction(1, 2), trials=100_000, seed=7)
b = estimate(g, 1, Fraction(1, 2), trials=100_000, seed=7)
print("same seed, same answer:", a == b)

bad = cross_check(g, 1, Fraction(1, 2), trials=100_000, seed=7,
                  exact=report.exact + Fraction(1, 20))
print("corrupted exact value is caught:", not bad.passed)
