"""
Motzkin paths, strip decomposition and pattern-avoiding permutations
=====================================================================

Peeling strips off a Motzkin path yields (head, tail) pairs. Read as a
canonical reduced decomposition they give a (321, 3-bar-142)-avoiding
permutation; axis level steps become fixed points, so Riordan paths land on
derangements.
"""

# %%
from riordan.bijections import phi, phi_inverse, strip_decompose
from riordan.paths import PathClass, area, axis_level_labels, iter_paths, up_height_sum
from riordan.permutations import enumerate_avoiders, fixed_points, inversion_number

path = "UHHDUUHHDHUUDDHHD"
print("parameters:", strip_decompose(path))
print("permutation:", phi(path))
print("area - up heights =", area(path) - up_height_sum(path), "inversions =", inversion_number(phi(path)))
print("back again:", phi_inverse(phi(path)))

# %%
# Every Motzkin path of length 5 with its image; fixed points sit one past
# the axis level steps.
for p in iter_paths(PathClass.MOTZKIN, 5):
    q = phi(p)
    print(f"{p}  {q}  axis={axis_level_labels(p)}  fixed={fixed_points(q)}")

# %%
for n in range(1, 10):
    riordan = sorted(phi(p) for p in iter_paths(PathClass.RIORDAN, n))
    print(n, len(riordan), riordan == enumerate_avoiders(n, derangements_only=True))
