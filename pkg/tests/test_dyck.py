from math import comb

import pytest

from riordan.bijections import dyck_pair_decode, dyck_pair_encode, insert_wavy, remove_wavy
from riordan.errors import PreconditionError
from riordan.paths import PathClass, enumerate_paths
from riordan.sequences import catalan, riordan_recurrence


@pytest.mark.parametrize("dyck, motz", [("UUDD", "UD"), ("UDUD", "WW"), ("UUDDUD", "UDW"), ("UD", "W")])
def test_encode_decode_examples(dyck, motz):
    assert dyck_pair_encode(dyck) == motz
    assert dyck_pair_decode(motz) == dyck


def test_preconditions():
    with pytest.raises(PreconditionError):
        dyck_pair_encode("UDD")
    with pytest.raises(PreconditionError):
        dyck_pair_decode("H")
    with pytest.raises(PreconditionError):
        insert_wavy("UD", [5])


def test_encode_is_a_bijection():
    for n in range(10):
        targets = enumerate_paths(PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, n)
        images = [dyck_pair_encode(d) for d in enumerate_paths(PathClass.DYCK, 2 * n)]
        assert sorted(images) == sorted(targets)
    for n in range(9):
        for m in enumerate_paths(PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, n):
            assert dyck_pair_encode(dyck_pair_decode(m)) == m


def test_wavy_examples():
    assert remove_wavy("WW") == ("", (0, 1))
    assert remove_wavy("UWD") == ("UD", (1,))
    assert remove_wavy("UDW") == ("UD", (2,))
    assert insert_wavy("UD", [1]) == "UWD"
    assert insert_wavy("", [0]) == "W"
    assert insert_wavy("UHD", [0, 4]) == "WUHDW"


def test_wavy_fibers():
    for n in range(13):
        fibers = {}
        for m in enumerate_paths(PathClass.TWO_MOTZKIN_NO_STRAIGHT_ON_AXIS, n):
            r, pos = remove_wavy(m)
            assert insert_wavy(r, pos) == m
            fibers[r] = fibers.get(r, 0) + 1
        for k in range(n + 1):
            for r in enumerate_paths(PathClass.RIORDAN, k):
                assert fibers.get(r, 0) == comb(n, k)
        assert sum(fibers.values()) == catalan(n)
        assert sum(comb(n, k) * riordan_recurrence(k) for k in range(n + 1)) == catalan(n)
