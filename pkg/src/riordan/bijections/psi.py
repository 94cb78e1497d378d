"""
The bijection behind (n+1) r_n = (n-1)(2 r_{n-1} + 3 r_{n-2}).

Domain, for a fixed n >= 2:

* ``UnlabelledCopy``: one of three copies of a Riordan path of length n-2;
* ``ABCLabelled``: a Riordan path of length n-2 with one step labelled a, b
  or c;
* ``NumLabelled``: a Riordan path of length n-1 with one step labelled 1 or 2.

Codomain: ``StarredPath``, a Riordan path of length n with at most one
starred step. Step indices are 0-based; the height of a step is the height
of its starting point.

>>> psi(ABCLabelled("UD", 1, "a"), 4)
StarredPath(steps='UUDD', star=0)
>>> format_starred(_)
'U*UDD'
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from ..errors import ConsistencyError, PreconditionError
from ..paths import PathClass, heights, iter_paths, validate

__all__ = [
    "UnlabelledCopy", "ABCLabelled", "NumLabelled", "PsiDomainElement",
    "StarredPath", "psi", "psi_inverse", "psi_domain", "psi_codomain",
    "format_starred", "parse_starred", "format_element", "parse_element",
    "element_to_json", "element_from_json", "starred_to_json", "starred_from_json",
]


@dataclass(frozen=True)
class UnlabelledCopy:
    copy: int  # 1, 2 or 3
    steps: str


@dataclass(frozen=True)
class ABCLabelled:
    steps: str
    index: int
    label: str  # "a", "b" or "c"


@dataclass(frozen=True)
class NumLabelled:
    steps: str
    index: int
    label: str  # "1" or "2"


PsiDomainElement = Union[UnlabelledCopy, ABCLabelled, NumLabelled]


@dataclass(frozen=True)
class StarredPath:
    steps: str
    star: Optional[int] = None


def _check_element(e: PsiDomainElement, n: int) -> None:
    if n < 2:
        raise PreconditionError(f"psi is defined for n >= 2, got n = {n}")
    if isinstance(e, UnlabelledCopy):
        length, ok = n - 2, e.copy in (1, 2, 3)
    elif isinstance(e, ABCLabelled):
        length, ok = n - 2, e.label in ("a", "b", "c") and 0 <= e.index < len(e.steps)
    elif isinstance(e, NumLabelled):
        length, ok = n - 1, e.label in ("1", "2") and 0 <= e.index < len(e.steps)
    else:
        raise PreconditionError(f"not a psi domain element: {e!r}")
    if not ok or len(e.steps) != length or not validate(e.steps, PathClass.RIORDAN):
        raise PreconditionError(f"malformed psi domain element for n = {n}: {e!r}")


def _matching_down(path: str, i: int) -> int:
    """Index of the first step after i that ends at the starting height of step i."""
    ys = heights(path)
    level = ys[i]
    for j in range(i + 1, len(path)):
        if ys[j + 1] == level:
            return j
    raise ConsistencyError(f"step {i} of {path!r} never returns to height {level}")


def _first_descent(path: str, i: int) -> int:
    """Index of the first step after i that ends below the starting height of step i."""
    ys = heights(path)
    level = ys[i] - 1
    for j in range(i + 1, len(path)):
        if ys[j + 1] == level:
            return j
    raise ConsistencyError(f"path {path!r} never drops below step {i}")


def _matching_up(path: str, j: int) -> int:
    """Index of the last step before j that starts at the ending height of step j."""
    ys = heights(path)
    level = ys[j + 1]
    for i in range(j - 1, -1, -1):
        if ys[i] == level:
            return i
    raise ConsistencyError(f"step {j} of {path!r} has no matching up step")


def psi(e: PsiDomainElement, n: int) -> StarredPath:
    _check_element(e, n)
    r = e.steps

    if isinstance(e, UnlabelledCopy):
        # (1) prepend UD, U*D or UD*
        out = StarredPath("UD" + r, (None, 0, 1)[e.copy - 1])

    elif e.label == "a":
        i = e.index
        ys = heights(r)
        if ys[i] == 0:
            # (2), step on the axis: wrap its whole excursion in a new U ... D
            m = _matching_down(r, i)
            out = StarredPath("U" + r[:m + 1] + "D" + r[m + 1:])
        else:
            # (2), raised step: new up step after the last up step from one
            # level lower, new down step just before step i; star the former
            j = max(q for q in range(i) if r[q] == "U" and ys[q] == ys[i] - 1)
            out = StarredPath(r[:j + 1] + "U" + r[j + 1:i] + "D" + r[i:], j)

    elif e.label in ("b", "c"):
        # (3) insert U*D or UD* right after step i
        i = e.index
        out = StarredPath(r[:i + 1] + "UD" + r[i + 1:], i + 1 if e.label == "b" else i + 2)

    elif e.label == "1":
        i = e.index
        ys = heights(r)
        if r[i] == "D" and ys[i] == 1:
            # (4), step returns to the axis: its excursion's opening up step
            # becomes level and a new up step is prepended
            u = _matching_up(r, i)
            out = StarredPath("U" + r[:u] + "H" + r[u + 1:])
        else:
            # (4) otherwise: starred level step right after step i
            out = StarredPath(r[:i + 1] + "H" + r[i + 1:], i + 1)

    else:  # label "2"
        i = e.index
        ch = r[i]
        if ch == "U":
            out = StarredPath(r[:i + 1] + "H" + r[i + 1:], i)
        elif ch == "D":
            out = StarredPath(r[:i] + "H" + r[i:], i + 1)
        else:
            # level step above the axis turns into an up step; the down step
            # closing it goes right before the first step that descends below
            # its height, and that step is starred
            j = _first_descent(r, i)
            out = StarredPath(r[:i] + "U" + r[i + 1:j] + "D" + r[j:], j + 1)

    if len(out.steps) != n or not validate(out.steps, PathClass.RIORDAN):
        raise ConsistencyError(f"psi({e!r}, {n}) produced {out!r}")
    return out


def psi_inverse(s: StarredPath, n: int) -> PsiDomainElement:
    """Classify a starred path by the case that produces it and undo that case."""
    p, q = s.steps, s.star
    if n < 2 or len(p) != n or not validate(p, PathClass.RIORDAN):
        raise PreconditionError(f"psi_inverse: {p!r} is not a riordan path of length {n} >= 2")
    if q is not None and not 0 <= q < n:
        raise PreconditionError(f"psi_inverse: star {q} out of range for length {n}")

    if q is None:
        if p.startswith("UD"):
            return UnlabelledCopy(1, p[2:])
        ys = heights(p)
        f = next(x for x in range(n) if ys[x + 1] == 0)  # first return
        u = next((x for x in range(f) if p[x] == "H" and ys[x] == 1), None)
        if u is None:
            # (2) on an axis step: the excursion closing at f - 1 opens at its matching up
            r = p[1:f] + p[f + 1:]
            return ABCLabelled(r, _matching_up(r, f - 2), "a")
        # (4) first branch: the first level step at height 1 was an up step
        return NumLabelled(p[1:u] + "U" + p[u + 1:], f - 1, "1")

    ch = p[q]
    if ch == "H":
        return NumLabelled(p[:q] + p[q + 1:], q - 1, "1")
    if ch == "U":
        nxt = p[q + 1]
        if nxt == "U":
            d = _matching_down(p, q + 1)
            return ABCLabelled(p[:q + 1] + p[q + 2:d] + p[d + 1:], d - 1, "a")
        if nxt == "D":
            if q == 0:
                return UnlabelledCopy(2, p[2:])
            return ABCLabelled(p[:q] + p[q + 2:], q - 1, "b")
        return NumLabelled(p[:q + 1] + p[q + 2:], q, "2")
    # starred down step
    prev = p[q - 1]
    if prev == "U":
        if q == 1:
            return UnlabelledCopy(3, p[2:])
        return ABCLabelled(p[:q - 1] + p[q + 1:], q - 2, "c")
    if prev == "H":
        return NumLabelled(p[:q - 1] + p[q:], q - 1, "2")
    u = _matching_up(p, q - 1)
    return NumLabelled(p[:u] + "H" + p[u + 1:q - 1] + p[q:], u, "2")


def psi_domain(n: int) -> Iterator[PsiDomainElement]:
    """Every domain element for n, copies first, then a/b/c, then 1/2."""
    if n < 2:
        raise PreconditionError(f"psi is defined for n >= 2, got n = {n}")
    short = list(iter_paths(PathClass.RIORDAN, n - 2))
    for c in (1, 2, 3):
        for r in short:
            yield UnlabelledCopy(c, r)
    for r in short:
        for i in range(n - 2):
            for label in "abc":
                yield ABCLabelled(r, i, label)
    for r in iter_paths(PathClass.RIORDAN, n - 1):
        for i in range(n - 1):
            for label in "12":
                yield NumLabelled(r, i, label)


def psi_codomain(n: int) -> Iterator[StarredPath]:
    for p in iter_paths(PathClass.RIORDAN, n):
        yield StarredPath(p)
        for i in range(n):
            yield StarredPath(p, i)


# text and JSON forms

def format_starred(s: StarredPath) -> str:
    if s.star is None:
        return s.steps
    return s.steps[:s.star + 1] + "*" + s.steps[s.star + 1:]


def _parse_marked(text: str, marks: str) -> tuple[str, Optional[int], Optional[str]]:
    steps, index, mark = [], None, None
    for pos, ch in enumerate(text):
        if ch in marks:
            if mark is not None or not steps:
                raise PreconditionError(f"misplaced mark {ch!r} at index {pos} in {text!r}")
            index, mark = len(steps) - 1, ch
        elif ch in "UHD":
            steps.append(ch)
        else:
            raise PreconditionError(f"invalid character {ch!r} at index {pos} in {text!r}")
    return "".join(steps), index, mark


def parse_starred(text: str) -> StarredPath:
    """Read ``"U*UDD"``: a ``*`` marks the step before it."""
    steps, index, _ = _parse_marked(text, "*")
    return StarredPath(steps, index)


def format_element(e: PsiDomainElement) -> str:
    """``"2:UD"`` for copy 2 of UD; ``"UDa"`` / ``"UH1D"`` for labelled steps."""
    if isinstance(e, UnlabelledCopy):
        return f"{e.copy}:{e.steps}"
    return e.steps[:e.index + 1] + e.label + e.steps[e.index + 1:]


def parse_element(text: str) -> PsiDomainElement:
    if ":" in text:
        copy, _, steps = text.partition(":")
        if copy not in ("1", "2", "3"):
            raise PreconditionError(f"copy must be 1, 2 or 3 in {text!r}")
        _parse_marked(steps, "")
        return UnlabelledCopy(int(copy), steps)
    steps, index, mark = _parse_marked(text, "abc12")
    if mark is None:
        raise PreconditionError(f"no label in {text!r}")
    if mark in "abc":
        return ABCLabelled(steps, index, mark)
    return NumLabelled(steps, index, mark)


def element_to_json(e: PsiDomainElement) -> dict:
    if isinstance(e, UnlabelledCopy):
        return {"kind": "copy", "copy": e.copy, "steps": e.steps}
    kind = "abc" if isinstance(e, ABCLabelled) else "num"
    return {"kind": kind, "label": e.label, "index": e.index, "steps": e.steps}


def element_from_json(obj: dict) -> PsiDomainElement:
    try:
        kind = obj["kind"]
        if kind == "copy":
            return UnlabelledCopy(int(obj["copy"]), obj["steps"])
        if kind == "abc":
            return ABCLabelled(obj["steps"], int(obj["index"]), str(obj["label"]))
        if kind == "num":
            return NumLabelled(obj["steps"], int(obj["index"]), str(obj["label"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"malformed psi domain element {obj!r}: {exc}") from None
    raise PreconditionError(f"unknown kind {kind!r}")


def starred_to_json(s: StarredPath) -> dict:
    return {"steps": s.steps, "star": s.star}


def starred_from_json(obj: dict) -> StarredPath:
    try:
        return StarredPath(obj["steps"], obj.get("star"))
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"malformed starred path {obj!r}: {exc}") from None
