"""
Strip decomposition of Motzkin paths and the bijection phi onto
(321, 3-bar-142)-avoiding permutations.

One round of the decomposition takes the last up step A->B and the last down
step E->F, lowers the stretch from B to E by one unit and flattens both
steps. In the step string that is just two substitutions: A->B becomes a
level step and E->F becomes a level step on the axis. The round records

* head = (x+y)-label of the cell under E->F, and
* tail = (x+y)-label of the cell under the step leaving B.

>>> strip_decompose("UHHDUUHHDHUUDDHHD")
((3, 1), (8, 5), (12, 7), (13, 12), (16, 14))
>>> phi("UD")
(2, 1)
"""

from ..errors import PreconditionError
from ..paths import PathClass, heights, validate, xy_cell_label
from ..permutations import (
    Decomposition, Permutation, apply_decomposition, extract_decomposition,
    satisfies_avoidance_condition,
)

__all__ = ["strip_decompose", "strip_insert", "phi", "phi_inverse"]


def _require_motzkin(path: str, what: str) -> None:
    if not validate(path, PathClass.MOTZKIN):
        raise PreconditionError(f"{what}: {path!r} is not a motzkin path")


def strip_decompose(path: str) -> Decomposition:
    """(head, tail) pairs harvested by the strip decomposition, heads increasing."""
    _require_motzkin(path, "strip_decompose")
    steps = list(path)
    pairs = []
    while True:
        a = _rfind(steps, "U")
        if a < 0:
            break
        e = _rfind(steps, "D")
        cur = "".join(steps)
        ys = heights(cur)
        assert a < e and ys[e + 1] == 0, cur
        assert steps[a + 1] != "U", cur
        pairs.append((xy_cell_label(cur, e), xy_cell_label(cur, a + 1)))
        steps[a] = "H"
        steps[e] = "H"
    pairs.reverse()
    assert all(p[0] < q[0] for p, q in zip(pairs, pairs[1:])), pairs
    assert not pairs or pairs[-1][0] <= len(path) - 1, pairs
    assert satisfies_avoidance_condition(pairs), pairs
    return tuple(pairs)


def _rfind(steps, ch):
    for i in range(len(steps) - 1, -1, -1):
        if steps[i] == ch:
            return i
    return -1


def strip_insert(path: str, head: int, tail: int) -> str:
    """Undo one round of the strip decomposition.

    The new up step must end at the first lattice point B' after the last up
    step with x + y = tail; past the last up step x + y never decreases, so B'
    is unique. The stretch from B' to (head, 0) is raised by one unit.
    """
    _require_motzkin(path, "strip_insert")
    n = len(path)
    ys = heights(path)
    if not 1 <= tail <= head <= n - 1:
        raise PreconditionError(f"strip_insert: need 1 <= tail <= head <= {n - 1}, got ({head}, {tail})")
    if ys[head] != 0 or any(ch != "H" for ch in path[head:]):
        raise PreconditionError(f"strip_insert: {path!r} is not flat on the axis from x = {head}")
    start = path.rfind("U") + 1
    for x in range(start, head + 1):
        if x + ys[x] == tail:
            break
    else:
        raise PreconditionError(f"strip_insert: no lattice point with x + y = {tail} in {path!r}")
    if x == 0 or path[x - 1] != "H":
        raise PreconditionError(f"strip_insert: step entering ({x}, {ys[x]}) is not level in {path!r}")
    out = path[:x - 1] + "U" + path[x:head] + "D" + path[head + 1:]
    assert validate(out, PathClass.MOTZKIN), out
    return out


def phi(path: str) -> Permutation:
    """Send a Motzkin path of length n to a permutation in S_n(321, 3-bar-142)."""
    return apply_decomposition(len(path), strip_decompose(path))


def phi_inverse(p: Permutation) -> str:
    d = extract_decomposition(p)
    if not satisfies_avoidance_condition(d):
        raise PreconditionError(f"phi_inverse: {p} does not avoid 321 and 3-bar-142")
    path = "H" * len(p)
    for head, tail in d:
        path = strip_insert(path, head, tail)
    return path
