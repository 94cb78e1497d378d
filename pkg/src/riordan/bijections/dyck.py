"""Dyck paths of length 2n versus 2-Motzkin paths with no straight step on the axis."""

from typing import Iterable

from ..errors import PreconditionError
from ..paths import PathClass, validate

__all__ = ["dyck_pair_encode", "dyck_pair_decode", "remove_wavy", "insert_wavy"]

_ENCODE = {"UU": "U", "UD": "W", "DU": "H", "DD": "D"}
_DECODE = {v: k for k, v in _ENCODE.items()}


def dyck_pair_encode(d: str) -> str:
    """Read a Dyck path two steps at a time: UU->U, UD->W, DU->H, DD->D."""
    if not validate(d, PathClass.DYCK):
        raise PreconditionError(f"dyck_pair_encode: {d!r} is not a dyck path")
    m = "".join(_ENCODE[d[i:i + 2]] for i in range(0, len(d), 2))
    assert validate(m, PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS), (d, m)
    return m


def dyck_pair_decode(m: str) -> str:
    if not validate(m, PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS):
        raise PreconditionError(
            f"dyck_pair_decode: {m!r} is not a 2-motzkin path free of straight axis steps")
    return "".join(_DECODE[ch] for ch in m)


def remove_wavy(m: str) -> tuple[str, tuple[int, ...]]:
    """Drop the wavy steps; return the Riordan path left over and where they were."""
    if not validate(m, PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS):
        raise PreconditionError(
            f"remove_wavy: {m!r} is not a 2-motzkin path free of straight axis steps")
    positions = tuple(i for i, ch in enumerate(m) if ch == "W")
    return m.replace("W", ""), positions


def insert_wavy(r: str, positions: Iterable[int]) -> str:
    """Place wavy steps so that they occupy exactly ``positions`` in the result."""
    if not validate(r, PathClass.RIORDAN):
        raise PreconditionError(f"insert_wavy: {r!r} is not a riordan path")
    wavy = sorted(set(positions))
    total = len(r) + len(wavy)
    if wavy and (wavy[0] < 0 or wavy[-1] >= total):
        raise PreconditionError(f"insert_wavy: positions {wavy} out of range for length {total}")
    out = []
    it = iter(r)
    marks = set(wavy)
    for i in range(total):
        out.append("W" if i in marks else next(it))
    return "".join(out)
