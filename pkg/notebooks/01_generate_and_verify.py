"""
Building a balanced necklace and checking it
============================================

A necklace is balanced when every string of length m shows up either
floor(L / K**m) or ceil(L / K**m) times.  Here we build one, look at its
counts, and then break it on purpose.
"""

from pkseq import Necklace, classify, generate_pkl, is_pkl
from pkseq.verify import profile_histogram

# A binary necklace of length 12, printed in its least rotation.
n = generate_pkl(2, 12)
print("generated:", n)

# For each substring length, how many strings occur how many times.
# At m = 3 there are 8 strings and 12 windows, so four strings
# have to appear twice and four once.
for m in range(1, 5):
    print(f"m={m}", profile_histogram(n, m))

print(is_pkl(n).describe())

# Swap one character and the checker names the string that broke.
broken = Necklace("000111101011", 2)
print(is_pkl(broken).describe())

# The weaker classes still hold for it.
print(classify(broken).tier.value)

# Lengths that are powers of K come out as de Bruijn sequences.
db = generate_pkl(3, 27)
print("K=3, L=27:", db)
print("every length-3 string once:", profile_histogram(db, 3) == {1: 27})

# The construction scales to millions of characters.
import time

t0 = time.perf_counter()
big = generate_pkl(2, 1_000_003)
print(f"L=1000003 in {time.perf_counter() - t0:.2f}s, balanced: {is_pkl(big).accepted}")
