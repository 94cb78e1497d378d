"""
A bijective proof of (n+1) r_n = (n-1)(2 r_{n-1} + 3 r_{n-2})
==============================================================

The left side counts Riordan paths of length n with at most one starred step.
The right side counts Riordan paths of length n-2 with an a/b/c label (plus
three unlabelled copies) and paths of length n-1 with a 1/2 label. psi maps
one to the other, case by case.
"""

# %%
from collections import Counter

from riordan.bijections import psi, psi_codomain, psi_domain, psi_inverse
from riordan.bijections.psi import format_element, format_starred

for e in psi_domain(4):
    print(f"{format_element(e):>6}  ->  {format_starred(psi(e, 4))}")

# %%
for n in range(2, 11):
    domain = list(psi_domain(n))
    images = [psi(e, n) for e in domain]
    codomain = set(psi_codomain(n))
    ok = len(set(images)) == len(domain) == len(codomain) and set(images) == codomain
    back = all(psi_inverse(s, n) == e for e, s in zip(domain, images))
    print(n, len(domain), ok and back)

# %%
# Which case produced each starred path of length 7?
kinds = Counter(type(psi_inverse(s, 7)).__name__ + ":" + getattr(psi_inverse(s, 7), "label", "-")
                for s in psi_codomain(7))
print(sorted(kinds.items()))
