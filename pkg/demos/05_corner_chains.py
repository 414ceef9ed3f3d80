"""Corner chains need two coupled count vectors; a 2x2 matrix rules them.

Corners belong to two arcs, so states split by whether the rightmost corner
carries a pending half-edge.  Condensing the coupled band recursion into
column sums gives a 2x2 integer matrix whose dominant eigenvalue drives the
growth; its r-th root peaks at r = 8.
"""

from ncmatch import (
    chain_counts,
    condensed_table,
    dominant_eigenvalue,
    extract_band,
    weighted_drift,
)

print("down-free counts of 2-chains (these are zigzag chains):")
print(" ", chain_counts(2, 8))

print("\nr, condensed matrix, per-point rate:")
for r, condensed, rate in condensed_table(10):
    print(f"  {r:2d} {str(condensed):28s} {rate:.4f}")

sys8 = extract_band(8)
m = dominant_eigenvalue(sys8.condensed)
print(f"\nr=8 eigenvalue: {m} ~ {m.to_float():.6f}")
print(f"per-point rate: {m.root_float(8):.9f}")
print("jump-size matrix:", sys8.jumps)
print("weighted drift:", weighted_drift(sys8), "(zero: the runner walk is unbiased)")
print("band coefficients positive at offsets -1,0,1:", sys8.positive_core)
