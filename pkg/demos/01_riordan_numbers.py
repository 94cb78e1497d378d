"""
Riordan numbers four ways
=========================

The Riordan numbers count short bushes, Riordan paths and (321, 3-bar-142)
avoiding derangements. Here we compute them from the closed binomial sum, the
three-term recurrence, the alternating Catalan transform and by brute
enumeration, and watch all four agree.
"""

# %%
from riordan.paths import PathClass, iter_paths
from riordan.sequences import (
    catalan, catalan_from_riordan, riordan_closed, riordan_from_catalan,
    riordan_recurrence,
)

print(f"{'n':>3} {'closed':>10} {'recurrence':>10} {'from c_k':>10} {'paths':>10}")
for n in range(15):
    print(f"{n:>3} {riordan_closed(n):>10} {riordan_recurrence(n):>10} "
          f"{riordan_from_catalan(n):>10} {sum(1 for _ in iter_paths(PathClass.RIORDAN, n)):>10}")

# %%
# The binomial transform of the Riordan numbers is the Catalan sequence.
print([catalan_from_riordan(n) for n in range(12)])
print([catalan(n) for n in range(12)])

# %%
# Exact integers all the way; r_200 has 90-odd digits.
print(riordan_recurrence(200))
