"""
Permutations in one-line notation and their canonical reduced decompositions.

Permutations are tuples of the values 1..n. A canonical decomposition is a
tuple of ``(head, tail)`` pairs with ``head >= tail >= 1`` and strictly
increasing heads; the pair (h, t) stands for the word s_h s_{h-1} ... s_t of
adjacent transpositions acting on positions from the right.

>>> apply_decomposition(6, [(2, 1), (4, 3), (5, 5)])
(3, 1, 5, 2, 6, 4)
>>> extract_decomposition((3, 1, 5, 2, 6, 4))
((2, 1), (4, 3), (5, 5))
"""

from itertools import permutations as _all_permutations
from typing import Iterator, Sequence

from .errors import PreconditionError

__all__ = [
    "Permutation", "Decomposition", "parse_permutation", "format_permutation",
    "is_permutation", "avoids_321", "avoids_3bar142", "fixed_points",
    "inversion_number", "apply_decomposition", "extract_decomposition",
    "satisfies_avoidance_condition", "satisfies_derangement_condition",
    "iter_decompositions", "enumerate_avoiders", "brute_force_avoiders",
]

Permutation = tuple  # tuple[int, ...], values 1..n
Decomposition = tuple  # tuple[tuple[int, int], ...]


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def parse_permutation(text: str) -> Permutation:
    """Read space-separated one-line notation, e.g. ``"3 1 5 2 6 4"``."""
    try:
        p = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise PreconditionError(f"not a list of integers: {text!r}") from None
    if not is_permutation(p):
        raise PreconditionError(f"not a permutation of 1..{len(p)}: {text!r}")
    return p


def format_permutation(p: Sequence[int]) -> str:
    return " ".join(map(str, p))


def avoids_321(p: Sequence[int]) -> bool:
    """True iff no i < j < k has p_i > p_j > p_k.

    A 321 occurrence exists iff some middle entry has a larger entry to its
    left and a smaller one to its right, which a prefix-max / suffix-min scan
    decides in linear time.
    """
    n = len(p)
    suffix_min = [n + 1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(p[i], suffix_min[i + 1])
    prefix_max = 0
    for j in range(n):
        if prefix_max > p[j] > suffix_min[j + 1]:
            return False
        prefix_max = max(prefix_max, p[j])
    return True


def avoids_3bar142(p: Sequence[int]) -> bool:
    """True iff every 231 occurrence p_i p_j p_k (p_j > p_i > p_k) extends to
    a 3142 occurrence: some i < m < j has p_m < p_k.
    """
    n = len(p)
    for j in range(n):
        between_min = n + 1  # min of p[i+1:j], maintained as i walks left
        for i in range(j - 1, -1, -1):
            if p[i] < p[j]:
                for k in range(j + 1, n):
                    if p[k] < p[i] and not between_min < p[k]:
                        return False
            between_min = min(between_min, p[i])
    return True


def fixed_points(p: Sequence[int]) -> list[int]:
    """1-based positions i with p_i = i."""
    return [i for i, v in enumerate(p, 1) if v == i]


def inversion_number(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def apply_decomposition(n: int, d: Sequence[tuple[int, int]]) -> Permutation:
    """The permutation (1 2 ... n) s_{h_1} ... s_{t_1} ... s_{h_k} ... s_{t_k}.

    Each s_i swaps the entries in positions i and i+1.
    """
    if d and d[-1][0] > n - 1:
        raise PreconditionError(f"head {d[-1][0]} exceeds n - 1 = {n - 1}")
    w = list(range(1, n + 1))
    for h, t in d:
        for i in range(h, t - 1, -1):
            w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def extract_decomposition(p: Sequence[int]) -> Decomposition:
    """Canonical reduced decomposition of p, recovered by peeling.

    The last block relocates the value h_k + 1 from position h_k + 1 to t_k and
    never touches larger values, so h_k + 1 is the largest value that is not a
    fixed point. Moving it back and repeating recovers the blocks last-first.
    """
    w = list(p)
    pairs = []
    v = len(w)
    while v > 0:
        if w[v - 1] == v:
            v -= 1
            continue
        pos = w.index(v) + 1
        pairs.append((v - 1, pos))
        del w[pos - 1]
        w.insert(v - 1, v)
        v -= 1
    pairs.reverse()
    assert all(a[0] < b[0] for a, b in zip(pairs, pairs[1:])), pairs
    return tuple(pairs)


def satisfies_avoidance_condition(d: Sequence[tuple[int, int]]) -> bool:
    """Tails grow by at least two: t_{i+1} >= t_i + 2."""
    return all(b[1] >= a[1] + 2 for a, b in zip(d, d[1:]))


def satisfies_derangement_condition(n: int, d: Sequence[tuple[int, int]]) -> bool:
    """t_1 = 1, h_k = n - 1 and h_i + 2 >= t_{i+1} >= t_i + 2 for every i."""
    if not d:
        return n == 0
    return (
        d[0][1] == 1
        and d[-1][0] == n - 1
        and all(a[0] + 2 >= b[1] >= a[1] + 2 for a, b in zip(d, d[1:]))
    )


def iter_decompositions(n: int, derangements_only: bool = False) -> Iterator[Decomposition]:
    """Decompositions with heads <= n - 1 whose tails grow by at least two.

    With ``derangements_only`` the extra derangement clauses are imposed while
    growing, so nothing is generated and then discarded.
    """
    if n == 0:
        yield ()
        return
    if not derangements_only:
        yield ()

    def grow(pairs, h_prev, t_prev):
        for h in range(h_prev + 1, n):
            t_lo = t_prev + 2
            t_hi = h
            if derangements_only:
                t_hi = min(t_hi, h_prev + 2)
            for t in range(t_lo, t_hi + 1):
                nxt = pairs + ((h, t),)
                if not derangements_only or h == n - 1:
                    yield nxt
                yield from grow(nxt, h, t)

    if derangements_only:
        for h in range(1, n):
            first = ((h, 1),)
            if h == n - 1:
                yield first
            yield from grow(first, h, 1)
    else:
        for h in range(1, n):
            for t in range(1, h + 1):
                first = ((h, t),)
                yield first
                yield from grow(first, h, t)


def enumerate_avoiders(n: int, derangements_only: bool = False) -> list[Permutation]:
    """S_n(321, 3-bar-142), or its derangements, in lexicographic order.

    Built from decompositions rather than by filtering S_n.
    """
    perms = [apply_decomposition(n, d) for d in iter_decompositions(n, derangements_only)]
    perms.sort()
    return perms


def brute_force_avoiders(n: int, derangements_only: bool = False) -> list[Permutation]:
    """Filter all of S_n by the pattern definitions directly."""
    out = []
    for p in _all_permutations(range(1, n + 1)):
        if derangements_only and fixed_points(p):
            continue
        if avoids_321(p) and avoids_3bar142(p):
            out.append(p)
    return out
