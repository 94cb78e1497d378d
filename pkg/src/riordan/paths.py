"""
Lattice paths as step strings.

A path is a plain ``str`` over the alphabet ``U`` (up), ``H`` (straight
level), ``W`` (wavy level) and ``D`` (down). Strings are immutable, hashable
and compare cheaply, which is what the exhaustive sweeps need.

The *height* of a step is the y-coordinate of its starting point.

>>> validate("UHD", PathClass.RIORDAN), validate("HUD", PathClass.RIORDAN)
(True, False)
>>> enumerate_paths(PathClass.RIORDAN, 4)
['UUDD', 'UHHD', 'UDUD']
"""

from enum import Enum
from functools import lru_cache
from typing import Iterator

from .errors import PathSyntaxError, PreconditionError

__all__ = [
    "Step", "PathClass", "STEP_ORDER", "parse_path", "heights", "validate",
    "iter_paths", "enumerate_paths", "area", "up_height_sum",
    "axis_level_labels", "xy_cell_label",
]


class Step(str, Enum):
    UP = "U"
    LEVEL = "H"
    WAVY = "W"
    DOWN = "D"


# enumeration order; the lexicographic order of all enumerators follows it
STEP_ORDER = "UHWD"

_DELTA = {"U": 1, "H": 0, "W": 0, "D": -1}


class PathClass(str, Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    TWO_MOTZKIN = "2motzkin"
    TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS = "2motzkin-nostraight"
    RIORDAN = "riordan"


# (allowed steps at height 0, allowed steps above the axis), in STEP_ORDER
_ALLOWED = {
    PathClass.DYCK: ("U", "UD"),
    PathClass.MOTZKIN: ("UH", "UHD"),
    PathClass.TWO_MOTZKIN: ("UHW", "UHWD"),
    PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS: ("UW", "UHWD"),
    PathClass.RIORDAN: ("U", "UHD"),
}


def parse_path(text: str) -> str:
    """Check that ``text`` only uses the step alphabet and return it."""
    for i, ch in enumerate(text):
        if ch not in _DELTA:
            raise PathSyntaxError(text, i)
    return text


def heights(path: str) -> list[int]:
    """Heights of the lattice points: ``heights(p)[i]`` is the start of step i.

    The list has ``len(path) + 1`` entries.
    """
    ys = [0]
    y = 0
    for ch in path:
        y += _DELTA[ch]
        ys.append(y)
    return ys


def validate(path: str, cls: PathClass) -> bool:
    axis, above = _ALLOWED[PathClass(cls)]
    y = 0
    for ch in path:
        if ch not in (axis if y == 0 else above):
            return False
        y += _DELTA[ch]
    return y == 0


def _require(path: str, cls: PathClass, what: str) -> None:
    if not validate(path, cls):
        raise PreconditionError(f"{what}: {path!r} is not a {PathClass(cls).value} path")


@lru_cache(maxsize=None)
def _suffixes(cls: PathClass, y: int, r: int) -> tuple[str, ...]:
    """All valid completions of length r from height y, in enumeration order."""
    if y > r:
        return ()
    if r == 0:
        return ("",)
    axis, above = _ALLOWED[cls]
    out = []
    for ch in axis if y == 0 else above:
        out.extend(ch + rest for rest in _suffixes(cls, y + _DELTA[ch], r - 1))
    return tuple(out)


def _prefixes(cls: PathClass, length: int, total: int) -> Iterator[tuple[str, int]]:
    """(prefix, end height) for prefixes of ``length`` steps that can still close."""
    axis, above = _ALLOWED[cls]

    def walk(prefix, y):
        if len(prefix) == length:
            yield prefix, y
            return
        left = total - len(prefix) - 1
        for ch in axis if y == 0 else above:
            y2 = y + _DELTA[ch]
            if y2 <= left:
                yield from walk(prefix + ch, y2)

    return walk("", 0)


def iter_paths(cls: PathClass, n: int) -> Iterator[str]:
    """Lazily yield every path of class ``cls`` with n steps, lexicographically
    under U < H < W < D.

    The first half of each path comes from a depth-first walk and the second
    half from a memoized table of completions keyed by height, so the cost per
    path is a single string concatenation.
    """
    cls = PathClass(cls)
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if cls is PathClass.DYCK and n % 2:
        return
    r = min(n, 10, (n + 1) // 2)
    for prefix, y in _prefixes(cls, n - r, n):
        for rest in _suffixes(cls, y, r):
            yield prefix + rest


def enumerate_paths(cls: PathClass, n: int) -> list[str]:
    return list(iter_paths(cls, n))


def _require_motzkin_shape(path: str, what: str) -> list[int]:
    ys = heights(path)
    if min(ys) < 0 or ys[-1] != 0:
        raise PreconditionError(f"{what}: {path!r} is not a balanced nonnegative path")
    return ys


def area(path: str) -> int:
    """Area between the path and the x-axis.

    Each step contributes the trapezoid (y_start + y_end) / 2; up and down
    steps are equinumerous so the half units cancel.
    """
    ys = _require_motzkin_shape(path, "area")
    twice = sum(ys[i] + ys[i + 1] for i in range(len(path)))
    assert twice % 2 == 0, path
    return twice // 2


def up_height_sum(path: str) -> int:
    """Sum of the heights of the up steps."""
    ys = heights(path)
    return sum(ys[i] for i, ch in enumerate(path) if ch == "U")


def axis_level_labels(path: str) -> list[int]:
    """0-based indices of the straight level steps lying on the x-axis."""
    ys = _require_motzkin_shape(path, "axis_level_labels")
    return [i for i, ch in enumerate(path) if ch == "H" and ys[i] == 0]


def xy_cell_label(path: str, index: int) -> int:
    """(x+y)-label of the cell under the step at ``index``.

    For a down or level step starting at (x, y) the cell below it has its
    bottom side from (x, y-1) to (x+1, y-1), so its label is x + y - 1.
    """
    ch = path[index]
    if ch == "U":
        raise PreconditionError(f"step {index} of {path!r} is an up step and has no label")
    y = heights(path[:index])[-1]
    return index + y - 1
