"""
Counting balanced binary necklaces
==================================

Exhaustive search over all 2**L strings, keeping one representative per
rotation class.
"""

import time

from pkseq.census import census

print(" L  count  seconds")
for length in range(1, 21):
    res = census(2, length)
    print(f"{length:2d}  {res.count:5d}  {res.elapsed:.3f}")

# The counts dip at powers of two, where only de Bruijn sequences qualify.
print([census(2, n).count for n in (15, 16, 17)])

# Shards can go to separate processes; the total is unchanged.
t0 = time.perf_counter()
print(census(2, 22, workers=4).count, f"{time.perf_counter() - t0:.1f}s")

# Ternary, small lengths.
print([census(3, n).count for n in range(1, 11)])
