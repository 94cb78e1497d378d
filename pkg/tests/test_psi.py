import pytest
from hypothesis import given, strategies as st

from riordan.bijections.psi import (
    ABCLabelled, NumLabelled, StarredPath, UnlabelledCopy, element_from_json,
    element_to_json, format_element, format_starred, parse_element,
    parse_starred, psi, psi_codomain, psi_domain, psi_inverse,
    starred_from_json, starred_to_json,
)
from riordan.errors import PreconditionError
from riordan.paths import heights
from riordan.sequences import riordan_recurrence
from riordan.verify import PSI_EXAMPLES


def star(text):
    return parse_starred(text)


@pytest.mark.parametrize("element, image", [
    (UnlabelledCopy(1, "UD"), "UDUD"),
    (UnlabelledCopy(2, "UD"), "U*DUD"),
    (UnlabelledCopy(3, "UD"), "UD*UD"),
    (ABCLabelled("UD", 0, "a"), "UUDD"),
    (ABCLabelled("UD", 1, "a"), "U*UDD"),
    (ABCLabelled("UD", 0, "b"), "UU*DD"),
    (ABCLabelled("UD", 1, "b"), "UDU*D"),
    (ABCLabelled("UD", 0, "c"), "UUD*D"),
    (ABCLabelled("UD", 1, "c"), "UDUD*"),
    (NumLabelled("UHD", 0, "1"), "UH*HD"),
    (NumLabelled("UHD", 1, "1"), "UHH*D"),
    (NumLabelled("UHD", 2, "1"), "UHHD"),
    (NumLabelled("UHD", 0, "2"), "U*HHD"),
    (NumLabelled("UHD", 1, "2"), "UUDD*"),
    (NumLabelled("UHD", 2, "2"), "UHHD*"),
])
def test_worked_examples(element, image):
    assert format_starred(psi(element, 4)) == image
    assert psi_inverse(star(image), 4) == element


def test_example_table_is_consistent():
    for e, n, s in PSI_EXAMPLES:
        assert psi(e, n) == s


def test_n_equals_two():
    assert sorted(format_starred(psi(e, 2)) for e in psi_domain(2)) == ["U*D", "UD", "UD*"]


@pytest.mark.parametrize("n", range(2, 13))
def test_bijection(n):
    domain = list(psi_domain(n))
    codomain = list(psi_codomain(n))
    size = (n + 1) * riordan_recurrence(n)
    assert len(domain) == len(codomain) == size
    assert size == (n - 1) * (2 * riordan_recurrence(n - 1) + 3 * riordan_recurrence(n - 2))
    images = [psi(e, n) for e in domain]
    assert len(set(images)) == size
    assert set(images) == set(codomain)
    for e, s in zip(domain, images):
        assert psi_inverse(s, n) == e
    for s in codomain:
        assert psi(psi_inverse(s, n), n) == s


def test_case_images_cover_their_shapes():
    n = 8
    for e in psi_domain(n):
        s = psi(e, n)
        p, q = s.steps, s.star
        if isinstance(e, UnlabelledCopy):
            assert p.startswith("UD")
        elif e.label == "a":
            assert q is None or p[q:q + 2] == "UU"
        elif e.label == "b":
            assert p[q:q + 2] == "UD" and q > 0
        elif e.label == "c":
            assert p[q - 1:q + 1] == "UD" and q > 1
        elif e.label == "1":
            assert q is None or p[q] == "H"
        else:
            assert p[q:q + 2] == "UH" or p[q - 1:q + 1] in ("HD", "DD")


def _literal_case5(r, i):
    """Level step read literally: close before the very next down step."""
    j = next(x for x in range(i + 1, len(r)) if r[x] == "D")
    return StarredPath(r[:i] + "U" + r[i + 1:j] + "D" + r[j:], j + 1)


def test_literal_next_down_reading_collides():
    # placing the closing step before the first later down step, whatever its
    # height, sends two different labelled paths to the same starred path
    a = _literal_case5("UHUDD", 1)
    b = _literal_case5("UUHDD", 2)
    assert a == b == star("UUUDD*D")
    assert psi(NumLabelled("UHUDD", 1, "2"), 6) != psi(NumLabelled("UUHDD", 2, "2"), 6)


def test_case5_level_closes_at_first_descent():
    s = psi(NumLabelled("UHUDD", 1, "2"), 6)
    assert format_starred(s) == "UUUDDD*"
    ys = heights(s.steps)
    assert ys[s.star] == 1 and s.steps[s.star - 1] == "D"


def test_malformed_inputs():
    with pytest.raises(PreconditionError):
        psi(UnlabelledCopy(4, "UD"), 4)
    with pytest.raises(PreconditionError):
        psi(ABCLabelled("UD", 2, "a"), 4)
    with pytest.raises(PreconditionError):
        psi(NumLabelled("UD", 0, "1"), 4)
    with pytest.raises(PreconditionError):
        psi(UnlabelledCopy(1, ""), 1)
    with pytest.raises(PreconditionError):
        psi_inverse(StarredPath("UHD", None), 4)
    with pytest.raises(PreconditionError):
        psi_inverse(StarredPath("UDUD", 7), 4)


def test_text_forms():
    assert parse_element("UDa") == ABCLabelled("UD", 1, "a")
    assert parse_element("UH1D") == NumLabelled("UHD", 1, "1")
    assert parse_element("2:UD") == UnlabelledCopy(2, "UD")
    assert format_element(NumLabelled("UHD", 1, "1")) == "UH1D"
    assert parse_starred("U*UDD") == StarredPath("UUDD", 0)
    for bad in ["*UD", "UD**", "UaDb", "UXD"]:
        with pytest.raises(PreconditionError):
            parse_element(bad) if "*" not in bad else parse_starred(bad)


def test_json_forms():
    for e in psi_domain(5):
        assert element_from_json(element_to_json(e)) == e
    assert element_to_json(UnlabelledCopy(3, "UD")) == {"kind": "copy", "copy": 3, "steps": "UD"}
    assert element_to_json(NumLabelled("UHD", 1, "2")) == {
        "kind": "num", "label": "2", "index": 1, "steps": "UHD"}
    assert starred_to_json(StarredPath("UUDD", 0)) == {"steps": "UUDD", "star": 0}
    assert starred_from_json({"steps": "UD", "star": None}) == StarredPath("UD")
    with pytest.raises(PreconditionError):
        element_from_json({"kind": "copy"})
    with pytest.raises(PreconditionError):
        element_from_json({"kind": "xyz"})


_CODOMAINS = {n: list(psi_codomain(n)) for n in range(2, 12)}


@given(st.integers(2, 11).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(_CODOMAINS[n]))))
def test_inverse_round_trip_property(case):
    n, s = case
    assert psi(psi_inverse(s, n), n) == s
