from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from coxorbit import rootsystem as R
from coxorbit.weyl import (
    GroupElt,
    chamber_rep,
    dominant_roots,
    elt_from_perm,
    enumerate_group,
    in_chamber,
    length,
    orbit,
    perm_length,
    stabilizer_datum,
)


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "H3", "I2(5)", "F4"])
def test_longest_element_length(label):
    s = R.get(label)
    elements = enumerate_group(s)
    assert max(len(w) for _, w in elements) == len(s.positive)
    for p, word in elements[:200]:
        assert perm_length(s, p) == len(word)


@pytest.mark.parametrize("label", ["A3", "B3", "H3"])
def test_group_elements_act_like_their_permutations(label):
    s = R.get(label)
    for p, word in enumerate_group(s)[:100]:
        w = GroupElt.from_word(s, word)
        assert w == elt_from_perm(s, p)
        assert all(w.apply(s.roots[k]) == s.roots[p[k]] for k in range(len(s.roots)))
        assert length(s, w) == len(word)


def test_inverse_and_compose():
    s = R.get("H3")
    rng = random.Random(3)
    for _ in range(30):
        w = GroupElt.from_word(s, [rng.randrange(3) for _ in range(rng.randint(0, 12))])
        assert w.compose(w.inverse()) == GroupElt.identity(s)
        assert w.preserves_form(s)


def test_length_rejects_non_isometries():
    s = R.get("A2")
    with pytest.raises(ValueError):
        length(s, GroupElt(((2, 0), (0, 1))))


def test_orbit_sizes():
    s = R.get("E6")
    assert len(orbit(s, range(6), s.roots[0])) == 72
    assert orbit(s, [], s.roots[5]) == (s.roots[5],)


def test_dominant_roots():
    assert len(dominant_roots(R.get("B3"))) == 2
    assert len(dominant_roots(R.get("E8"))) == 1
    assert len(dominant_roots(R.get("H4"))) == 1
    with pytest.raises(ValueError):
        dominant_roots(R.get("A1xA1"))


vectors = st.lists(st.integers(-5, 5), min_size=4, max_size=4)
subsets = st.sets(st.integers(0, 3))


@settings(max_examples=200)
@given(vectors, subsets)
def test_chamber_rep(v, J):
    s = R.get("F4")
    rep, w = chamber_rep(s, J, tuple(v))
    assert in_chamber(s, J, rep)
    assert w.apply(tuple(v)) == rep
    assert set(w.word) <= J
    assert rep in orbit(s, J, tuple(v))


@settings(max_examples=100)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_chamber_rep_golden(v):
    s = R.get("H3")
    vv = tuple(s.zero()[0] + x for x in v)
    rep, w = chamber_rep(s, range(3), vv)
    assert in_chamber(s, range(3), rep) and w.apply(vv) == rep


def test_stabilizer_datum():
    s = R.get("B3")
    assert stabilizer_datum(s, (0, 0, 0)) == frozenset({0, 1, 2})
    # the highest root of B3 is orthogonal to alpha_1 and alpha_3
    top = max(s.roots, key=lambda r: sum(r))
    assert stabilizer_datum(s, top) == frozenset({0, 2})
    with pytest.raises(ValueError):
        stabilizer_datum(s, (-1, 0, 0))
