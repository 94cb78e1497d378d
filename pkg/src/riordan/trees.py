"""
Plane trees, short bushes and their coding by Riordan paths.

A plane tree is a nested tuple: a node is the tuple of its child subtrees, so
a leaf is ``()``. Trees serialize to balanced parentheses in preorder, e.g.
the root with two leaves is ``"(()())"``.

A short bush is a plane tree with no vertex of outdegree one. Reading its
edges in preorder, the leftmost child edge of a vertex is an up step, the
rightmost a down step and every middle edge a level step. This is a bijection
onto Riordan paths.

>>> bush_to_riordan(parse_tree("((()())())"))
'UUDD'
>>> format_tree(riordan_to_bush("UHD"))
'(()()())'
"""

from functools import lru_cache

from .errors import PreconditionError
from .paths import PathClass, validate

__all__ = [
    "PlaneTree", "LEAF", "format_tree", "parse_tree", "edge_count",
    "is_short_bush", "internal_vertex_count", "enumerate_short_bushes",
    "bush_to_riordan", "riordan_to_bush",
]

PlaneTree = tuple  # tuple[PlaneTree, ...]

LEAF: PlaneTree = ()


def format_tree(tree: PlaneTree) -> str:
    return "(" + "".join(format_tree(c) for c in tree) + ")"


def parse_tree(text: str) -> PlaneTree:
    stack: list[list] = []
    root = None
    for i, ch in enumerate(text):
        if root is not None:
            raise PreconditionError(f"trailing characters at index {i} in {text!r}")
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise PreconditionError(f"unbalanced ')' at index {i} in {text!r}")
            node = tuple(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise PreconditionError(f"invalid character {ch!r} at index {i} in {text!r}")
    if root is None:
        raise PreconditionError(f"incomplete tree {text!r}")
    return root


def edge_count(tree: PlaneTree) -> int:
    return sum(1 + edge_count(c) for c in tree)


def is_short_bush(tree: PlaneTree) -> bool:
    return len(tree) != 1 and all(is_short_bush(c) for c in tree)


def internal_vertex_count(tree: PlaneTree) -> int:
    if not tree:
        return 0
    return 1 + sum(internal_vertex_count(c) for c in tree)


@lru_cache(maxsize=None)
def _bushes(n: int) -> tuple[PlaneTree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    # split the n edges among at least two root children; a child owning
    # m edges in total carries a bush with m - 1 edges, which is never 1
    for sizes in _child_sizes(n):
        out.extend(_products([_bushes(m - 1) for m in sizes]))
    return tuple(sorted(out, key=format_tree))


def _child_sizes(n: int) -> list[tuple[int, ...]]:
    """Compositions of n into at least two parts, each part 1 or at least 3."""
    res = []

    def grow(prefix, left):
        if left == 0:
            if len(prefix) >= 2:
                res.append(tuple(prefix))
            return
        for m in range(1, left + 1):
            if m != 2:
                grow(prefix + [m], left - m)

    grow([], n)
    return res


def _products(choices):
    combos = [()]
    for options in choices:
        combos = [c + (o,) for c in combos for o in options]
    return combos


def enumerate_short_bushes(n: int) -> list[PlaneTree]:
    """All short bushes with n edges, sorted by their parenthesis strings."""
    if n < 0:
        raise ValueError(f"edge count must be nonnegative, got {n}")
    return list(_bushes(n))


def bush_to_riordan(bush: PlaneTree) -> str:
    if not is_short_bush(bush):
        raise PreconditionError(f"{format_tree(bush)} has a vertex of outdegree one")
    out: list[str] = []

    def visit(node):
        last = len(node) - 1
        for i, child in enumerate(node):
            out.append("U" if i == 0 else "D" if i == last else "H")
            visit(child)

    visit(bush)
    path = "".join(out)
    assert validate(path, PathClass.RIORDAN), path
    return path


def riordan_to_bush(path: str) -> PlaneTree:
    if not validate(path, PathClass.RIORDAN):
        raise PreconditionError(f"riordan_to_bush: {path!r} is not a riordan path")
    pos = 0

    def node():
        # children edges of this vertex start with an up step, if any
        nonlocal pos
        if pos == len(path) or path[pos] != "U":
            return LEAF
        pos += 1
        children = [node()]
        while path[pos] == "H":
            pos += 1
            children.append(node())
        assert path[pos] == "D", (path, pos)
        pos += 1
        children.append(node())
        return tuple(children)

    tree = node()
    assert pos == len(path), (path, pos)
    return tree
