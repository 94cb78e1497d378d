"""
Command-line interface.

    riordan count riordan 9 closed
    riordan enumerate riordan 4
    riordan map phi UHHDUUHHDHUUDDHHD --check
    riordan stats UHHDUUHHDHUUDDHHD
    riordan verify all 8

Exit status: 0 on success, 1 when a verification or ``--check`` fails, 2 on
usage or validation errors.
"""

import argparse
import json
import sys
from typing import Callable, Iterator

from . import sequences as seq
from .bijections import (
    dyck_pair_decode, dyck_pair_encode, phi, phi_inverse, psi, psi_inverse,
    strip_decompose,
)
from .bijections.psi import (
    ABCLabelled, UnlabelledCopy, element_from_json, element_to_json,
    format_element, format_starred, parse_element, parse_starred,
    starred_from_json, starred_to_json,
)
from .errors import PreconditionError
from .paths import (
    PathClass, area, axis_level_labels, iter_paths, parse_path, up_height_sum,
    validate,
)
from .permutations import (
    enumerate_avoiders, fixed_points, format_permutation, inversion_number,
    is_permutation, parse_permutation,
)
from .trees import (
    bush_to_riordan, enumerate_short_bushes, format_tree, parse_tree,
    riordan_to_bush,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

COUNT_ENUMERATE_LIMIT = 18

# largest n `enumerate` accepts without --force
ENUMERATE_LIMITS = {
    "dyck": 28,
    "motzkin": 16,
    "2motzkin": 13,
    "2motzkin-nostraight": 14,
    "riordan": 18,
    "bush": 16,
    "avoider": 14,
    "avoiding-derangement": 16,
}


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if fmt == "json" else text)


# count

def _count_riordan(n, method):
    if method == "enumerate":
        return sum(1 for _ in iter_paths(PathClass.RIORDAN, n))
    return {
        "closed": seq.riordan_closed,
        "recurrence": seq.riordan_recurrence,
        "from-catalan": seq.riordan_from_catalan,
    }[method](n)


def _count_catalan(n, method):
    if method == "enumerate":
        return sum(1 for _ in iter_paths(PathClass.DYCK, 2 * n))
    return {"closed": seq.catalan, "from-riordan": seq.catalan_from_riordan}[method](n)


def _count_motzkin(n, method):
    if method == "enumerate":
        return sum(1 for _ in iter_paths(PathClass.MOTZKIN, n))
    return seq.motzkin(n)


COUNT_METHODS = {
    "riordan": (_count_riordan, ("closed", "recurrence", "from-catalan", "enumerate")),
    "catalan": (_count_catalan, ("closed", "from-riordan", "enumerate")),
    "motzkin": (_count_motzkin, ("recurrence", "enumerate")),
}


def cmd_count(args) -> int:
    fn, methods = COUNT_METHODS[args.seq]
    method = args.method or methods[0]
    if method not in methods:
        raise UsageError(f"method {method!r} is not available for {args.seq}; choose from {', '.join(methods)}")
    if method == "enumerate" and args.n > COUNT_ENUMERATE_LIMIT and not args.force:
        raise UsageError(f"refusing to enumerate for n > {COUNT_ENUMERATE_LIMIT}; pass --force to override")
    value = fn(args.n, method)
    _emit({"seq": args.seq, "n": args.n, "method": method, "value": value}, args.format, str(value))
    return EXIT_OK


# enumerate

def _enumerate_objects(cls: str, n: int) -> Iterator[tuple[dict, str]]:
    if cls == "bush":
        for t in enumerate_short_bushes(n):
            s = format_tree(t)
            yield {"tree": s}, s
    elif cls in ("avoider", "avoiding-derangement"):
        for p in enumerate_avoiders(n, cls == "avoiding-derangement"):
            yield list(p), format_permutation(p)
    else:
        for path in iter_paths(PathClass(cls), n):
            yield {"steps": path, "class": cls}, path


def cmd_enumerate(args) -> int:
    if args.n > ENUMERATE_LIMITS[args.cls] and not args.force:
        raise UsageError(
            f"refusing to enumerate {args.cls} for n > {ENUMERATE_LIMITS[args.cls]}; pass --force to override")
    count = 0
    for obj, text in _enumerate_objects(args.cls, args.n):
        _emit(obj, args.format, text)
        count += 1
    print(f"count: {count}", file=sys.stderr)
    return EXIT_OK


# map

def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"invalid JSON input: {exc}") from None


def _read_path(text: str) -> str:
    if text.startswith("{"):
        obj = _load_json(text)
        if not isinstance(obj, dict) or "steps" not in obj:
            raise PreconditionError(f"expected {{\"steps\": ...}}, got {text!r}")
        text = obj["steps"]
    return parse_path(text)


def _read_tree(text: str):
    if text.startswith("{"):
        obj = _load_json(text)
        if not isinstance(obj, dict) or "tree" not in obj:
            raise PreconditionError(f"expected {{\"tree\": ...}}, got {text!r}")
        text = obj["tree"]
    return parse_tree(text)


def _read_perm(text: str):
    if text.lstrip().startswith("["):
        p = _load_json(text)
        if not isinstance(p, list) or not all(isinstance(v, int) for v in p) or not is_permutation(p):
            raise PreconditionError(f"not a permutation: {text!r}")
        return tuple(p)
    return parse_permutation(text)


def _read_element(text: str):
    if text.startswith("{"):
        return element_from_json(_load_json(text))
    return parse_element(text)


def _read_starred(text: str):
    if text.startswith("{"):
        return starred_from_json(_load_json(text))
    return parse_starred(text)


def _path_out(cls):
    return lambda p: ({"steps": p, "class": cls}, p)


def _perm_out(p):
    return list(p), format_permutation(p)


def _tree_out(t):
    s = format_tree(t)
    return {"tree": s}, s


def _default_n_element(e):
    return len(e.steps) + (2 if isinstance(e, (UnlabelledCopy, ABCLabelled)) else 1)


# name -> (reader, forward, writer, inverse used by --check)
MAPS: dict[str, tuple[Callable, Callable, Callable, Callable]] = {
    "phi": (_read_path, lambda x, n: phi(x), _perm_out, lambda y, n: phi_inverse(y)),
    "phi-inv": (_read_perm, lambda x, n: phi_inverse(x), _path_out("motzkin"), lambda y, n: phi(y)),
    "psi": (_read_element, lambda x, n: psi(x, n),
            lambda s: (starred_to_json(s), format_starred(s)), lambda y, n: psi_inverse(y, n)),
    "psi-inv": (_read_starred, lambda x, n: psi_inverse(x, n),
                lambda e: (element_to_json(e), format_element(e)), lambda y, n: psi(y, n)),
    "bush2path": (_read_tree, lambda x, n: bush_to_riordan(x), _path_out("riordan"),
                  lambda y, n: riordan_to_bush(y)),
    "path2bush": (_read_path, lambda x, n: riordan_to_bush(x), _tree_out,
                  lambda y, n: bush_to_riordan(y)),
    "dyck-encode": (_read_path, lambda x, n: dyck_pair_encode(x), _path_out("2motzkin-nostraight"),
                    lambda y, n: dyck_pair_decode(y)),
    "dyck-decode": (_read_path, lambda x, n: dyck_pair_decode(x), _path_out("dyck"),
                    lambda y, n: dyck_pair_encode(y)),
}


def cmd_map(args) -> int:
    read, forward, write, inverse = MAPS[args.bijection]
    x = read(args.input)
    n = args.n
    if n is None:
        if args.bijection == "psi":
            n = _default_n_element(x)
        elif args.bijection == "psi-inv":
            n = len(x.steps)
    y = forward(x, n)
    obj, text = write(y)
    _emit(obj, args.format, text)
    if args.check and inverse(y, n) != x:
        print(f"round trip failed: {args.input!r} -> {text!r} -> {inverse(y, n)!r}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# stats

def cmd_stats(args) -> int:
    path = _read_path(args.path)
    if not validate(path, PathClass.MOTZKIN):
        raise PreconditionError(f"{path!r} is not a motzkin path")
    params = strip_decompose(path)
    perm = phi(path)
    riordan = validate(path, PathClass.RIORDAN)
    inv = inversion_number(perm)
    rec = {
        "steps": path,
        "n": len(path),
        "riordan": riordan,
        "area": area(path),
        "up_height_sum": up_height_sum(path),
        "axis_level_labels": axis_level_labels(path),
        "strip_parameters": [list(x) for x in params],
        "phi": list(perm),
        "fixed_points": fixed_points(perm),
        "inversions": inv,
        # the area identity is only claimed for riordan paths
        "area_identity": (area(path) - up_height_sum(path) == inv) if riordan else None,
    }
    if args.format == "json":
        print(json.dumps(rec, sort_keys=True))
    else:
        ident = rec["area_identity"]
        lines = [
            f"path: {path}",
            f"n: {rec['n']}",
            f"riordan: {'yes' if riordan else 'no'}",
            f"area: {rec['area']}",
            f"up_height_sum: {rec['up_height_sum']}",
            f"axis_level_labels: {' '.join(map(str, rec['axis_level_labels']))}",
            "strip_parameters: " + " ".join(f"({h},{t})" for h, t in params),
            f"phi: {format_permutation(perm)}",
            f"fixed_points: {' '.join(map(str, rec['fixed_points']))}",
            f"inversions: {inv}",
            "area - up_height_sum = inversions: "
            + ("n/a" if ident is None else "OK" if ident else "FAILED"),
        ]
        print("\n".join(lines))
    return EXIT_OK if rec["area_identity"] is not False else EXIT_FAIL


# verify

def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, force=args.force)
    print(json.dumps(report.to_json(), sort_keys=True, indent=1))
    print(f"verify {args.suite} {args.max_n}: {'pass' if report.passed else 'FAIL'} "
          f"in {report.duration:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _global_flags(parser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--force", action="store_true", default=default(False),
                        help="lift desk-scale size guards")
    parser.add_argument("--seed", type=int, default=default(None),
                        help="accepted for compatibility; every command is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="riordan", description=__doc__.split("\n\n")[0].strip())
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print an exact sequence value")
    p.add_argument("seq", choices=sorted(COUNT_METHODS))
    p.add_argument("n", type=int)
    p.add_argument("method", nargs="?",
                   choices=("closed", "recurrence", "from-catalan", "from-riordan", "enumerate"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list objects of a class, one per line")
    p.add_argument("cls", metavar="class", choices=list(ENUMERATE_LIMITS))
    p.add_argument("n", type=int, help="size; for dyck the number of steps")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply a bijection to one object")
    p.add_argument("bijection", choices=list(MAPS))
    p.add_argument("input")
    p.add_argument("--n", type=int, default=None, help="target size for psi / psi-inv")
    p.add_argument("--check", action="store_true", help="apply the inverse and compare")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", help="statistics of a Motzkin path and its permutation")
    p.add_argument("path")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run exhaustive verification sweeps")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("max_n", type=int)
    p.set_defaults(func=cmd_verify)

    for name, sp in sub.choices.items():
        _global_flags(sp, suppress=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        parser.error("n must be nonnegative")
    try:
        return args.func(args)
    except (UsageError, PreconditionError) as exc:
        print(f"riordan {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
