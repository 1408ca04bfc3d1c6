import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import is_pkl_full, min_rotation, profile_naive
from pkseq import JoinTrace, digits_base_k, generate_p2l, generate_pkl, generate_steps, is_pkl
from pkseq.necklace import format_chars


@pytest.mark.parametrize("length,k,digits", [
    (12, 2, (1, 1, 0, 0)),
    (8, 2, (1, 0, 0, 0)),
    (5, 3, (1, 2)),
    (1, 7, (1,)),
])
def test_digits(length, k, digits):
    exp = digits_base_k(length, k)
    assert exp.digits == digits
    assert exp.value == length


def test_digits_reject_bad_arguments():
    with pytest.raises(ValueError):
        digits_base_k(0, 2)
    with pytest.raises(ValueError):
        digits_base_k(5, 1)


@given(st.integers(1, 10**6), st.integers(2, 9))
def test_digit_lengths_follow_recursion(length, k):
    exp = digits_base_k(length, k)
    lengths = exp.lengths()
    assert lengths[-1] == length
    assert exp.digits[0] != 0
    for prev, nxt, d in zip(lengths, lengths[1:], exp.digits[1:]):
        assert nxt == k * prev + d


@pytest.mark.parametrize("k,length,expected", [
    (2, 1, "1"),
    (5, 3, "123"),
    (2, 3, "011"),
    (2, 5, "00111"),
    (2, 12, "000100111011"),
])
def test_generate_examples(k, length, expected):
    out = generate_pkl(k, length)
    assert str(out) == expected
    assert format_chars(tuple(out), k) == expected  # already canonically rotated


def test_generate_rejects_unary_alphabet():
    with pytest.raises(ValueError):
        generate_pkl(1, 4)


def test_order_four_de_bruijn():
    out = tuple(generate_pkl(2, 16))
    assert sorted(profile_naive(out, 4).values()) == [1] * 16


@pytest.mark.parametrize("k", [2, 3, 4])
def test_steps_follow_digit_recursion(k):
    length = 200
    seen = [len(n) for _, n in generate_steps(k, length)]
    assert seen == digits_base_k(length, k).lengths()


def test_small_outputs_pass_full_oracle():
    for k, top in ((2, 40), (3, 30), (4, 20), (5, 15), (6, 12)):
        for length in range(1, top + 1):
            out = tuple(generate_pkl(k, length))
            assert len(out) == length
            assert out == min_rotation(out)
            assert is_pkl_full(out, k), (k, length)


@given(st.integers(2, 8), st.integers(1, 3000))
@settings(max_examples=60, deadline=None)
def test_generator_output_is_balanced(k, length):
    assert is_pkl(generate_pkl(k, length)).accepted


def test_checked_generation_runs_clean():
    trace = JoinTrace()
    generate_pkl(3, 500, check=True, trace=trace)
    assert trace.steps and all(s.checked for s in trace.steps if s.performed)


def test_deterministic():
    assert generate_pkl(3, 777).text() == generate_pkl(3, 777).text()


def test_binary_construction():
    for length in range(1, 1001):
        out = generate_p2l(length)
        assert len(out) == length
        assert is_pkl(out).accepted, length


def test_binary_construction_small_full_oracle():
    for length in range(1, 33):
        assert is_pkl_full(tuple(generate_p2l(length)), 2)
