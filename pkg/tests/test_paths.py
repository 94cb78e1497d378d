import pytest
from hypothesis import given, strategies as st

from riordan.errors import PathSyntaxError, PreconditionError
from riordan.paths import (
    PathClass, Step, area, axis_level_labels, enumerate_paths, heights,
    parse_path, up_height_sum, validate, xy_cell_label,
)
from riordan.sequences import catalan, motzkin, riordan_recurrence

import oracles

WORKED = "UHHDUUHHDHUUDDHHD"
ORDER = {"U": 0, "H": 1, "W": 2, "D": 3}


def test_parse_path():
    assert [Step(c) for c in parse_path("UHHD")] == [Step.UP, Step.LEVEL, Step.LEVEL, Step.DOWN]
    assert [Step(c) for c in parse_path("UWD")] == [Step.UP, Step.WAVY, Step.DOWN]
    with pytest.raises(PathSyntaxError) as info:
        parse_path("UXD")
    assert info.value.index == 1


@pytest.mark.parametrize("path, cls, ok", [
    ("UHD", PathClass.RIORDAN, True),
    ("HUD", PathClass.RIORDAN, False),
    ("UUDD", PathClass.DYCK, True),
    ("UDDU", PathClass.DYCK, False),
    ("UD", PathClass.RIORDAN, True),
    ("UHD", PathClass.DYCK, False),
    ("UWD", PathClass.MOTZKIN, False),
    ("UWD", PathClass.TWO_MOTZKIN, True),
    ("W", PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, True),
    ("H", PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, False),
    ("UU", PathClass.MOTZKIN, False),
])
def test_validate(path, cls, ok):
    assert validate(path, cls) is ok


def test_empty_path_is_in_every_class():
    for cls in PathClass:
        assert validate("", cls)
        assert enumerate_paths(cls, 0) == [""]


def test_riordan_four():
    assert sorted(enumerate_paths(PathClass.RIORDAN, 4)) == sorted(["UUDD", "UDUD", "UHHD"])
    assert enumerate_paths(PathClass.RIORDAN, 1) == []
    assert len(enumerate_paths(PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, 3)) == 5


def test_odd_dyck_length_is_empty():
    assert enumerate_paths(PathClass.DYCK, 7) == []


@pytest.mark.parametrize("cls, brute, max_n", [
    (PathClass.MOTZKIN, oracles.brute_motzkin, 9),
    (PathClass.RIORDAN, oracles.brute_riordan, 9),
    (PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, oracles.brute_two_motzkin_no_straight, 7),
    (PathClass.TWO_MOTZKIN, lambda n: oracles.brute_paths("UHWD", n), 7),
    (PathClass.DYCK, oracles.brute_dyck, 14),
])
def test_enumeration_matches_brute_force_and_order(cls, brute, max_n):
    for n in range(max_n + 1):
        got = enumerate_paths(cls, n)
        assert got == sorted(brute(n), key=lambda p: [ORDER[c] for c in p])
        assert all(validate(p, cls) for p in got)


def test_counts():
    for n in range(15):
        assert len(enumerate_paths(PathClass.RIORDAN, n)) == riordan_recurrence(n)
        assert len(enumerate_paths(PathClass.MOTZKIN, n)) == motzkin(n)
    for n in range(11):
        assert len(enumerate_paths(PathClass.DYCK, 2 * n)) == catalan(n)
        assert len(enumerate_paths(PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, n)) == catalan(n)


def test_area():
    assert area(WORKED) == 22
    assert area("UD") == 1
    assert area("") == 0
    for n in range(9):
        for p in enumerate_paths(PathClass.MOTZKIN, n):
            assert area(p) == oracles.trapezoid_area(p)
    with pytest.raises(PreconditionError):
        area("DU")


def test_up_height_sum():
    assert up_height_sum(WORKED) == 4
    assert up_height_sum("UD") == 0
    assert up_height_sum("UUDD") == 1


def test_axis_level_labels():
    assert axis_level_labels("H") == [0]
    assert axis_level_labels("UHHD") == []
    assert axis_level_labels("UDHUD") == [2]


def test_xy_cell_label():
    assert xy_cell_label(WORKED, 16) == 16
    assert xy_cell_label(WORKED, 12) == 14
    assert xy_cell_label("UHD", 1) == 1
    with pytest.raises(PreconditionError):
        xy_cell_label(WORKED, 0)


def test_heights():
    assert heights("UHD") == [0, 1, 1, 0]


motzkin_paths = st.integers(0, 10).flatmap(
    lambda n: st.sampled_from(enumerate_paths(PathClass.MOTZKIN, n)))


@given(motzkin_paths)
def test_statistics_survive_round_trip(p):
    q = parse_path("".join(Step(c).value for c in p))
    assert q == p
    assert area(q) == area(p)
    assert up_height_sum(q) == up_height_sum(p)
