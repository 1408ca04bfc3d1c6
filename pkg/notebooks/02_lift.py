"""
Integrating a necklace
======================

The lift turns a length-L necklace into a small family of necklaces whose
successive differences give back the original.
"""

from pkseq import Necklace, discrete_derivative, lempel_lift, lifted_strings

b = Necklace("0011", 2)
fam = lempel_lift(b)

# The characters of 0011 sum to 2, which is 0 mod 2, so one pass closes up
# (d = 1) and there are two members, one per constant of integration.
print("d =", fam.d, " p =", fam.p)
for member in fam:
    print(member.text(), "->", discrete_derivative(member).text())

# With six letters and the necklace 12 the running sum only returns to a
# multiple of 6 after two passes, so each member is twice as long.
fam6 = lempel_lift(Necklace("12", 6))
print("d =", fam6.d, " p =", fam6.p, [m.text() for m in fam6])

# Substring counts carry over: a string w occurring t times in b means each
# of these K strings occurs t times across the family.
print(lifted_strings("1", 2))

from pkseq import count_occurrences

for xi in lifted_strings("1", 2):
    total = sum(count_occurrences(m, xi) for m in fam)
    print(xi, total, "vs", count_occurrences(b, "1"))
