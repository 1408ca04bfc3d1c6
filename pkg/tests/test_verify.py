import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import is_pkl_full, min_rotation, profile_naive
from pkseq import Necklace, Tier, classify, generate_pkl, is_pkl, load_balance
from pkseq.necklace import format_chars, parse_chars
from pkseq.verify import check_horizon, profile_histogram

BALANCED_12 = "000110111001"
SHORT_LR = "10011110000"
HEAVY_ONES = "000111101011"
TERNARY_20 = "02220010121120111002"


def N(text, k=2):
    return Necklace.from_text(text, k)


def test_accepts_balanced_twelve():
    assert is_pkl(N(BALANCED_12)).accepted


def test_balanced_twelve_listed_counts():
    n = N(BALANCED_12)
    assert profile_histogram(n, 1) == {6: 2}
    assert profile_histogram(n, 2) == {3: 4}
    assert profile_histogram(n, 3) == {1: 4, 2: 4}
    assert profile_histogram(n, 4) == {0: 4, 1: 12}
    by_string = {format_chars(w, 2): c for w, c in profile_naive(tuple(n), 3).items()}
    assert {w for w, c in by_string.items() if c == 2} == {"001", "011", "100", "110"}
    fours = {format_chars(w, 2) for w in profile_naive(tuple(n), 4)}
    assert fours == {"0001", "0011", "0110", "1101", "1011", "0111",
                     "1110", "1100", "1001", "0010", "0100", "1000"}
    for m in range(5, 13):
        assert set(profile_naive(tuple(n), m).values()) == {1}


def test_rejects_heavy_ones_at_length_one():
    v = is_pkl(N(HEAVY_ONES))
    assert not v.accepted
    w = v.witness
    assert (w.m, w.string, w.count, w.allowed) == (1, (1,), 7, (6, 6))


def test_rejects_ternary_example_at_length_two():
    v = is_pkl(N(TERNARY_20, 3))
    w = v.witness
    assert not v.accepted
    assert (w.m, format_chars(w.string, 3), w.count, w.allowed) == (2, "21", 1, (2, 3))


def test_accepts_de_bruijn():
    assert is_pkl(N("0000110101111001")).accepted


def test_verdict_describe_and_dict():
    v = is_pkl(N(HEAVY_ONES))
    assert "'1' occurs 7 times" in v.describe()
    assert v.to_dict() == {"accepted": False,
                           "witness": {"m": 1, "string": "1", "count": 7, "allowed": [6, 6]}}


def test_classify_examples():
    c = classify(N(SHORT_LR))
    assert c.tier is Tier.LEMPEL_RADCHENKO
    miss = c.witnesses["GeneralizedDeBruijn"]
    assert (format_chars(miss.string, 2), miss.count) == ("101", 0)

    c = classify(N(HEAVY_ONES))
    assert c.tier is Tier.GENERALIZED_DE_BRUIJN
    assert c.witnesses["PKL"].count == 7

    c = classify(N(TERNARY_20, 3))
    assert c.tier is Tier.GENERALIZED_DE_BRUIJN
    assert format_chars(c.witnesses["PKL"].string, 3) == "21"

    c = classify(N(BALANCED_12))
    assert c.tier is Tier.PKL and c.witnesses == {}


def test_classify_none():
    c = classify(N("0000"))
    assert c.tier is Tier.NONE
    assert not (c.lempel_radchenko or c.generalized_de_bruijn or c.pkl)


@pytest.mark.parametrize("length,k,m,a,b", [(12, 2, 3, 4, 4), (12, 2, 4, 4, 12), (12, 2, 2, 4, 0)])
def test_load_balance_examples(length, k, m, a, b):
    lb = load_balance(length, k, m)
    assert (lb.a, lb.b) == (a, b)


def test_load_balance_integral_case():
    lb = load_balance(12, 2, 2)
    assert lb.floor_value == lb.ceil_value == 3


def test_load_balance_rejects_long_m():
    with pytest.raises(ValueError):
        load_balance(4, 2, 5)


@given(st.integers(1, 10**5), st.integers(2, 7), st.integers(1, 40))
def test_diophantine_identity(length, k, m):
    if m > length:
        return
    lb = load_balance(length, k, m)
    assert lb.a * lb.floor_value + lb.b * lb.ceil_value == length
    assert lb.a + lb.b == k ** m
    assert lb.a >= 0 and lb.b >= 0


def all_necklaces(k, top):
    for length in range(1, top + 1):
        for chars in itertools.product(range(k), repeat=length):
            if chars == min_rotation(chars):
                yield chars


def test_hierarchy_and_horizon_binary_exhaustive():
    tiers = set()
    for chars in all_necklaces(2, 14):
        n = Necklace(chars, 2)
        c = classify(n)
        if c.pkl:
            assert c.generalized_de_bruijn
        if c.generalized_de_bruijn:
            assert c.lempel_radchenko
        assert is_pkl(n).accepted == is_pkl_full(chars, 2), chars
        tiers.add(c.tier)
    assert tiers == set(Tier)


def test_horizon_ternary_exhaustive():
    for chars in all_necklaces(3, 8):
        assert is_pkl(Necklace(chars, 3)).accepted == is_pkl_full(chars, 3)


def test_load_balance_realized_by_balanced_necklaces():
    for k, length in [(2, 12), (2, 100), (3, 50), (4, 77), (5, 31)]:
        n = generate_pkl(k, length)
        for m in range(1, check_horizon(length, k) + 1):
            lb = load_balance(length, k, m)
            hist = profile_histogram(n, m)
            if lb.b == 0:
                assert hist == {lb.floor_value: k ** m}
            else:
                assert hist == {lb.floor_value: lb.a, lb.ceil_value: lb.b}


def test_witness_is_real():
    # every reported witness has the count it claims
    for chars in all_necklaces(3, 6):
        v = is_pkl(Necklace(chars, 3))
        if not v.accepted:
            w = v.witness
            assert profile_naive(chars, w.m).get(w.string, 0) == w.count
            lo, hi = w.allowed
            assert not lo <= w.count <= hi


def test_round_trip_text():
    assert format_chars(parse_chars(TERNARY_20, 3), 3) == TERNARY_20
