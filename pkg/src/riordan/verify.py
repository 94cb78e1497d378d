"""
Exhaustive verification sweeps behind ``riordan verify``.

Each suite checks a family of identities for every n up to a bound and
records one ``Check`` per (property, n). Sweeps that enumerate objects are
capped at desk scale; ``force=True`` lifts the caps.
"""

import time
from dataclasses import dataclass, field
from itertools import permutations as all_permutations
from math import comb, factorial
from typing import Any, Callable, Optional

from . import sequences as seq
from .bijections import (
    ABCLabelled, NumLabelled, StarredPath, UnlabelledCopy, dyck_pair_decode,
    dyck_pair_encode, phi, phi_inverse, psi, psi_codomain, psi_domain,
    psi_inverse, remove_wavy, strip_decompose,
)
from .paths import PathClass, area, axis_level_labels, iter_paths, up_height_sum
from .permutations import (
    apply_decomposition, avoids_321, avoids_3bar142, enumerate_avoiders,
    extract_decomposition, fixed_points, inversion_number,
    satisfies_avoidance_condition, satisfies_derangement_condition,
)
from .trees import (
    bush_to_riordan, enumerate_short_bushes, format_tree, internal_vertex_count,
    riordan_to_bush,
)

__all__ = ["Check", "VerificationReport", "SUITES", "CAPS", "run_suite"]

# largest n each enumerating sweep visits unless forced
CAPS = {
    "counts": 14,
    "trees": 12,
    "dyck": 10,
    "wavy": 12,
    "patterns": 8,
    "equivalence": 7,
    "phi": 10,
    "psi": 12,
}


@dataclass
class Check:
    name: str
    n: int
    passed: bool
    counterexample: Any = None
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "n": self.n, "passed": self.passed}
        if self.data:
            out["data"] = self.data
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    checks: list[Check] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        # duration is left out so that reports are byte-for-byte reproducible
        checks = sorted(self.checks, key=lambda c: (c.name, c.n))
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "checks": [c.to_json() for c in checks],
        }


class _Recorder:
    def __init__(self, report: VerificationReport):
        self.report = report

    def equal(self, name, n, got, want, **data):
        ok = got == want
        self.report.checks.append(
            Check(name, n, ok, None if ok else {"got": got, "want": want}, data))

    def all(self, name, n, items, pred: Callable[[Any], bool], show=repr):
        """Record whether ``pred`` holds for every item; keep the first failure."""
        count = 0
        for item in items:
            count += 1
            if not pred(item):
                self.report.checks.append(Check(name, n, False, show(item), {"checked": count}))
                return
        self.report.checks.append(Check(name, n, True, data={"checked": count}))


def _cap(key: str, max_n: int, force: bool) -> int:
    return max_n if force else min(max_n, CAPS[key])


def _count(it) -> int:
    return sum(1 for _ in it)


def suite_counts(rec: _Recorder, max_n: int, force: bool) -> None:
    for n in range(max_n + 1):
        r = seq.riordan_recurrence(n)
        rec.equal("riordan_closed_eq_recurrence", n, seq.riordan_closed(n), r)
        rec.equal("riordan_from_catalan_eq_recurrence", n, seq.riordan_from_catalan(n), r)
        rec.equal("catalan_from_riordan_eq_catalan", n, seq.catalan_from_riordan(n), seq.catalan(n))
        if n >= 2:
            rec.equal("bush_counts_by_internal_sum", n,
                      sum(seq.bush_count_by_internal(n, k) for k in range(n + 1)), r)
        if n >= 1:
            rec.equal("labelled_forest_sum", n,
                      sum(seq.labelled_forest_count(n, k) for k in range(1, n + 1)),
                      factorial(n + 1) * r)
    for n in range(_cap("counts", max_n, force) + 1):
        rec.equal("riordan_path_count", n, _count(iter_paths(PathClass.RIORDAN, n)),
                  seq.riordan_recurrence(n))
        rec.equal("motzkin_path_count", n, _count(iter_paths(PathClass.MOTZKIN, n)),
                  seq.motzkin(n))


def suite_trees(rec: _Recorder, max_n: int, force: bool) -> None:
    for n in range(_cap("trees", max_n, force) + 1):
        bushes = enumerate_short_bushes(n)
        rec.equal("bush_count", n, len(bushes), seq.riordan_recurrence(n))
        rec.all("bush_path_round_trip", n, bushes,
                lambda b: riordan_to_bush(bush_to_riordan(b)) == b, format_tree)
        rec.equal("bush_image_is_riordan_set", n,
                  sorted(bush_to_riordan(b) for b in bushes),
                  sorted(iter_paths(PathClass.RIORDAN, n)))
        by_k: dict[int, int] = {}
        for b in bushes:
            k = internal_vertex_count(b)
            by_k[k] = by_k.get(k, 0) + 1
        rec.equal("bush_count_by_internal", n,
                  {str(k): v for k, v in sorted(by_k.items())},
                  {str(k): seq.bush_count_by_internal(n, k)
                   for k in range(n + 1) if seq.bush_count_by_internal(n, k)})


def suite_dyck(rec: _Recorder, max_n: int, force: bool) -> None:
    two_m = PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS
    for n in range(_cap("dyck", max_n, force) + 1):
        dycks = list(iter_paths(PathClass.DYCK, 2 * n))
        targets = list(iter_paths(two_m, n))
        rec.equal("dyck_count", n, len(dycks), seq.catalan(n))
        rec.equal("two_motzkin_no_straight_count", n, len(targets), seq.catalan(n))
        images = [dyck_pair_encode(d) for d in dycks]
        rec.equal("dyck_encode_bijective", n, sorted(images), sorted(targets))
        rec.all("dyck_decode_round_trip", n, targets, lambda m: dyck_pair_encode(dyck_pair_decode(m)) == m)
    for n in range(_cap("wavy", max_n, force) + 1):
        fibers: dict[str, int] = {}
        for m in iter_paths(two_m, n):
            r, _ = remove_wavy(m)
            fibers[r] = fibers.get(r, 0) + 1
        rec.all("wavy_fiber_size", n, sorted(fibers.items()),
                lambda kv: kv[1] == comb(n, len(kv[0])))
        rec.equal("wavy_fibers_sum_to_catalan", n, sum(fibers.values()),
                  sum(comb(n, k) * seq.riordan_recurrence(k) for k in range(n + 1)))


def suite_patterns(rec: _Recorder, max_n: int, force: bool) -> None:
    eq_cap = _cap("equivalence", max_n, force)
    for n in range(_cap("patterns", max_n, force) + 1):
        members, derangements = [], []
        bad_thm = bad_cor = bad_trip = None
        for p in all_permutations(range(1, n + 1)):
            member = avoids_321(p) and avoids_3bar142(p)
            der = member and not fixed_points(p)
            if member:
                members.append(p)
            if der:
                derangements.append(p)
            if n <= eq_cap:
                d = extract_decomposition(p)
                if bad_trip is None and apply_decomposition(n, d) != p:
                    bad_trip = list(p)
                if bad_thm is None and satisfies_avoidance_condition(d) != member:
                    bad_thm = list(p)
                if bad_cor is None and satisfies_derangement_condition(n, d) != der:
                    bad_cor = list(p)
        rec.equal("avoider_count", n, len(members), seq.motzkin(n))
        rec.equal("avoiding_derangement_count", n, len(derangements), seq.riordan_recurrence(n))
        rec.equal("avoider_generation_matches_filter", n,
                  [list(p) for p in enumerate_avoiders(n)], [list(p) for p in members])
        rec.equal("derangement_generation_matches_filter", n,
                  [list(p) for p in enumerate_avoiders(n, True)], [list(p) for p in derangements])
        if n <= eq_cap:
            for name, bad in (("decomposition_round_trip", bad_trip),
                              ("tail_gap_condition_iff_avoider", bad_thm),
                              ("derangement_condition_iff_avoiding_derangement", bad_cor)):
                rec.report.checks.append(Check(name, n, bad is None, bad))


def _step_count_split(path: str, d) -> bool:
    axis = axis_level_labels(path)
    n = len(path)
    lead = 0
    while lead < n and path[lead] == "H":
        lead += 1
    trail = 0
    while trail < n - lead and path[n - 1 - trail] == "H":
        trail += 1
    middle = len(axis) - lead - trail
    gaps = sum(b[1] - a[0] - 2 for a, b in zip(d, d[1:]) if a[0] + 1 < b[1])
    return d[0][1] - 1 == lead and n - 1 - d[-1][0] == trail and gaps == middle


def suite_phi(rec: _Recorder, max_n: int, force: bool) -> None:
    worked = "UHHDUUHHDHUUDDHHD"
    rec.equal("worked_path_parameters", 17, [list(x) for x in strip_decompose(worked)],
              [[3, 1], [8, 5], [12, 7], [13, 12], [16, 14]])
    rec.equal("worked_path_permutation", 17, list(phi(worked)),
              [4, 1, 2, 3, 9, 5, 13, 6, 7, 8, 10, 14, 11, 17, 12, 15, 16])
    for n in range(_cap("phi", max_n, force) + 1):
        paths = list(iter_paths(PathClass.MOTZKIN, n))
        images = {p: phi(p) for p in paths}
        rec.equal("phi_image_is_avoider_set", n, sorted(images.values()), enumerate_avoiders(n))
        rec.equal("phi_riordan_image_is_derangement_set", n,
                  sorted(images[p] for p in iter_paths(PathClass.RIORDAN, n)),
                  enumerate_avoiders(n, True))
        rec.all("phi_inverse_round_trip", n, paths, lambda p: phi_inverse(images[p]) == p)
        rec.all("fixed_points_are_axis_levels", n, paths,
                lambda p: fixed_points(images[p]) == [x + 1 for x in axis_level_labels(p)])
        rec.all("initial_final_middle_axis_levels", n,
                (p for p in paths if "U" in p),
                lambda p: _step_count_split(p, strip_decompose(p)))
        rec.all("area_minus_up_heights_is_inversions", n,
                iter_paths(PathClass.RIORDAN, n),
                lambda p: area(p) - up_height_sum(p) == inversion_number(images[p]))


# the worked examples for each case, as (element, n, image)
PSI_EXAMPLES = [
    (UnlabelledCopy(1, "UD"), 4, StarredPath("UDUD")),
    (UnlabelledCopy(2, "UD"), 4, StarredPath("UDUD", 0)),
    (UnlabelledCopy(3, "UD"), 4, StarredPath("UDUD", 1)),
    (ABCLabelled("UD", 0, "a"), 4, StarredPath("UUDD")),
    (ABCLabelled("UD", 1, "a"), 4, StarredPath("UUDD", 0)),
    (ABCLabelled("UD", 0, "b"), 4, StarredPath("UUDD", 1)),
    (ABCLabelled("UD", 1, "b"), 4, StarredPath("UDUD", 2)),
    (ABCLabelled("UD", 0, "c"), 4, StarredPath("UUDD", 2)),
    (ABCLabelled("UD", 1, "c"), 4, StarredPath("UDUD", 3)),
    (NumLabelled("UHD", 0, "1"), 4, StarredPath("UHHD", 1)),
    (NumLabelled("UHD", 1, "1"), 4, StarredPath("UHHD", 2)),
    (NumLabelled("UHD", 2, "1"), 4, StarredPath("UHHD")),
    (NumLabelled("UHD", 0, "2"), 4, StarredPath("UHHD", 0)),
    (NumLabelled("UHD", 1, "2"), 4, StarredPath("UUDD", 3)),
    (NumLabelled("UHD", 2, "2"), 4, StarredPath("UHHD", 3)),
]


def suite_psi(rec: _Recorder, max_n: int, force: bool) -> None:
    rec.all("worked_examples", 4, PSI_EXAMPLES, lambda ex: psi(ex[0], ex[1]) == ex[2])
    for n in range(2, _cap("psi", max_n, force) + 1):
        domain = list(psi_domain(n))
        codomain = list(psi_codomain(n))
        want = (n + 1) * seq.riordan_recurrence(n)
        sizes = {"domain": len(domain), "codomain": len(codomain)}
        rec.equal("cardinalities", n, [len(domain), len(codomain),
                                       (n - 1) * (2 * seq.riordan_recurrence(n - 1)
                                                  + 3 * seq.riordan_recurrence(n - 2))],
                  [want, want, want], **sizes)
        images = [psi(e, n) for e in domain]
        rec.equal("injective", n, len(set(images)), len(images))
        rec.all("inverse_after_psi", n, zip(domain, images),
                lambda pair: psi_inverse(pair[1], n) == pair[0])
        rec.all("psi_after_inverse", n, codomain, lambda s: psi(psi_inverse(s, n), n) == s)


SUITES: dict[str, Callable[[_Recorder, int, bool], None]] = {
    "counts": suite_counts,
    "trees": suite_trees,
    "dyck": suite_dyck,
    "patterns": suite_patterns,
    "phi": suite_phi,
    "psi": suite_psi,
}


def run_suite(name: str, max_n: int, force: bool = False) -> VerificationReport:
    """Run one suite, or every suite for ``name == "all"``."""
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    report = VerificationReport(name, max_n)
    rec = _Recorder(report)
    start = time.perf_counter()
    for key in (SUITES if name == "all" else [name]):
        before = len(report.checks)
        try:
            SUITES[key](rec, max_n, force)
        except Exception as exc:  # an internal assertion is a failed property, not a crash
            report.checks.append(Check("uncaught_error", max_n, False, f"{type(exc).__name__}: {exc}"))
        if name == "all":
            for c in report.checks[before:]:
                c.name = f"{key}.{c.name}"
    report.duration = time.perf_counter() - start
    return report
