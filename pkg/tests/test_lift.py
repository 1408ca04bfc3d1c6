import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import lift_naive, profile_naive
from pkseq import Necklace, add_mod, discrete_derivative, lempel_lift, lift_params, lifted_strings


def N(text, k=2):
    return Necklace.from_text(text, k)


@pytest.mark.parametrize("text,k,expected", [("1", 2, (2, 1)), ("0011", 2, (1, 2)), ("12", 6, (2, 3))])
def test_lift_params_examples(text, k, expected):
    assert lift_params(N(text, k)) == expected


@pytest.mark.parametrize("text,k,members", [
    ("1", 2, ["10"]),
    ("0011", 2, ["0010", "1101"]),
    ("1", 3, ["120"]),
])
def test_lift_examples(text, k, members):
    fam = lempel_lift(N(text, k))
    assert [m.text() for m in fam] == members
    assert fam.p == len(members)


@pytest.mark.parametrize("text,k,expected", [("10", 2, "11"), ("0010", 2, "0011"), ("120", 3, "111")])
def test_derivative_examples(text, k, expected):
    assert discrete_derivative(N(text, k)) == N(expected, k)


def test_lifted_strings_examples():
    assert lifted_strings("1", 2) == [(0, 1), (1, 0)]
    assert lifted_strings((), 2) == [(0,), (1,)]
    assert lifted_strings("11", 2) == [(0, 1, 0), (1, 0, 1)]


def test_lift_matches_naive_search_exhaustively():
    for k in range(2, 5):
        for length in range(1, 9 if k < 4 else 7):
            for chars in itertools.product(range(k), repeat=length):
                fam = lempel_lift(Necklace(chars, k))
                members, d, p = lift_naive(chars, k)
                assert (fam.d, fam.p) == (d, p)
                assert [tuple(m) for m in fam] == members


@st.composite
def sources(draw):
    k = draw(st.integers(2, 6))
    chars = draw(st.lists(st.integers(0, k - 1), min_size=1, max_size=40))
    return Necklace(chars, k)


@given(sources())
def test_lift_family_invariants(b):
    fam = lempel_lift(b)
    assert fam.d * fam.p == b.k
    assert sum(len(m) for m in fam) == b.k * len(b)
    for i, m in enumerate(fam):
        assert len(m) == fam.d * len(b)
        assert np.array_equal(m.chars, add_mod(fam[0], i).chars)
        assert np.array_equal(discrete_derivative(m).chars, np.tile(b.chars, fam.d))


@given(sources())
def test_lift_occurrence_bijection(b):
    # a string occurs in b exactly as often as each of its lifted strings occurs in the lift
    k, length = b.k, len(b)
    fam = lempel_lift(b)
    for m in range(0, min(length, 6)):
        src = profile_naive(tuple(b), m)
        lifted = {}
        for member in fam:
            for w, c in profile_naive(tuple(member), m + 1).items():
                lifted[w] = lifted.get(w, 0) + c
        for w, c in src.items():
            for xi in lifted_strings(w, k):
                assert lifted.get(xi, 0) == c
        assert sum(lifted.values()) == k * length
