"""
Short bushes and Riordan paths
==============================

Preorder edge coding turns a plane tree without outdegree-one vertices into a
Riordan path: the first child edge of a vertex is an up step, the last a down
step, every middle edge a level step.
"""

# %%
from riordan.paths import PathClass, enumerate_paths
from riordan.sequences import bush_count_by_internal
from riordan.trees import (
    bush_to_riordan, enumerate_short_bushes, format_tree, internal_vertex_count,
    riordan_to_bush,
)

for n in range(6):
    for bush in enumerate_short_bushes(n):
        path = bush_to_riordan(bush)
        print(f"{n}  {format_tree(bush):<16} {path or '(empty)':<8} k={internal_vertex_count(bush)}")

# %%
# The coding is onto: decoding every Riordan path of length 8 gives back bushes
# whose count by internal vertices matches the binomial formula.
tally = {}
for p in enumerate_paths(PathClass.RIORDAN, 8):
    k = internal_vertex_count(riordan_to_bush(p))
    tally[k] = tally.get(k, 0) + 1
print(tally, {k: bush_count_by_internal(8, k) for k in tally})
