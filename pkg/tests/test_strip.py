import pytest
from hypothesis import given, strategies as st

from riordan.bijections import phi, phi_inverse, strip_decompose, strip_insert
from riordan.errors import PreconditionError
from riordan.paths import PathClass, area, axis_level_labels, enumerate_paths, up_height_sum
from riordan.permutations import enumerate_avoiders, fixed_points, inversion_number

WORKED = "UHHDUUHHDHUUDDHHD"
WORKED_PARAMS = ((3, 1), (8, 5), (12, 7), (13, 12), (16, 14))
WORKED_PERM = (4, 1, 2, 3, 9, 5, 13, 6, 7, 8, 10, 14, 11, 17, 12, 15, 16)


def test_strip_decompose_examples():
    assert strip_decompose(WORKED) == WORKED_PARAMS
    assert strip_decompose("HHH") == ()
    assert strip_decompose("UD") == ((1, 1),)
    with pytest.raises(PreconditionError):
        strip_decompose("UDD")


def test_phi_examples():
    assert phi(WORKED) == WORKED_PERM
    assert phi("H") == (1,)
    assert phi("UD") == (2, 1)


def test_strip_insert_steps():
    first = strip_insert("H" * 17, 3, 1)
    assert first == "UHHD" + "H" * 13
    second = strip_insert(first, 8, 5)
    assert second == "UHHDUHHHD" + "H" * 8
    assert strip_decompose(second) == ((3, 1), (8, 5))
    path = "H" * 17
    for h, t in WORKED_PARAMS:
        path = strip_insert(path, h, t)
    assert path == WORKED


def test_strip_insert_preconditions():
    with pytest.raises(PreconditionError):
        strip_insert("UDHH", 1, 1)  # not flat from x = 1
    with pytest.raises(PreconditionError):
        strip_insert("HHH", 1, 2)  # tail above head


def test_phi_inverse_examples():
    assert phi_inverse(WORKED_PERM) == WORKED
    assert phi_inverse((1, 2, 3, 4)) == "HHHH"
    p = phi_inverse((3, 1, 5, 2, 6, 4))
    assert len(p) == 6 and phi(p) == (3, 1, 5, 2, 6, 4)
    with pytest.raises(PreconditionError):
        phi_inverse((3, 2, 1))


def test_phi_is_a_bijection():
    for n in range(11):
        paths = enumerate_paths(PathClass.MOTZKIN, n)
        images = [phi(p) for p in paths]
        assert len(set(images)) == len(images)
        assert sorted(images) == enumerate_avoiders(n)
        riordan = sorted(phi(p) for p in enumerate_paths(PathClass.RIORDAN, n))
        assert riordan == enumerate_avoiders(n, True)
        for p, q in zip(paths, images):
            assert phi_inverse(q) == p


def test_fixed_points_are_axis_levels():
    for n in range(11):
        for p in enumerate_paths(PathClass.MOTZKIN, n):
            assert fixed_points(phi(p)) == [x + 1 for x in axis_level_labels(p)]


def _leading(p):
    return len(p) - len(p.lstrip("H"))


def _trailing(p):
    return len(p) - len(p.rstrip("H"))


def test_parameter_step_counts():
    for n in range(11):
        for p in enumerate_paths(PathClass.MOTZKIN, n):
            d = strip_decompose(p)
            if not d:
                continue
            axis = len(axis_level_labels(p))
            assert d[0][1] - 1 == _leading(p)
            assert n - 1 - d[-1][0] == _trailing(p)
            gaps = sum(b[1] - a[0] - 2 for a, b in zip(d, d[1:]) if a[0] + 1 < b[1])
            assert gaps == axis - _leading(p) - _trailing(p)


def test_area_minus_heights_is_inversions():
    assert area(WORKED) - up_height_sum(WORKED) == 22 - 4 == inversion_number(phi(WORKED))
    for n in range(11):
        for p in enumerate_paths(PathClass.RIORDAN, n):
            assert area(p) - up_height_sum(p) == inversion_number(phi(p))


riordan_paths = st.integers(0, 14).flatmap(
    lambda n: st.sampled_from(enumerate_paths(PathClass.RIORDAN, n) or [""]))


@given(riordan_paths)
def test_riordan_images_are_derangements(p):
    q = phi(p)
    assert fixed_points(q) == []
    assert phi_inverse(q) == p
