"""Constructing balanced necklaces of any length.

The length is written in base ``k`` as ``d_0 d_1 ... d_{D-1}``.  Starting from
the ramp ``1 2 ... d_0`` each step lifts and joins (multiplying the length by
``k``) and then lengthens a longest run of each character ``1 .. d_j`` by one,
so the intermediate lengths follow ``L_j = k * L_{j-1} + d_j``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .join import ConstructionFailure, JoinTrace, lift_and_join_array, ramp_chars
from .lift import lift_arrays
from .necklace import Necklace, ceil_log, dtype_for, extend_run_array, first_occurrence, longest_run, ramp, runs_of

__all__ = ["DigitExpansion", "digits_base_k", "generate_p2l", "generate_pkl", "generate_steps"]


@dataclass(frozen=True)
class DigitExpansion:
    k: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        total = 0
        for d in self.digits:
            total = total * self.k + d
        return total

    def lengths(self) -> list[int]:
        """Intermediate lengths ``L_0 = d_0``, ``L_j = k * L_{j-1} + d_j``."""
        out = [self.digits[0]]
        for d in self.digits[1:]:
            out.append(out[-1] * self.k + d)
        return out


def digits_base_k(length: int, k: int) -> DigitExpansion:
    """Base-``k`` digits of ``length``, most significant first."""
    if length < 1 or k < 2:
        raise ValueError(f"need length >= 1 and k >= 2, got length={length}, k={k}")
    digits = []
    while length:
        length, d = divmod(length, k)
        digits.append(d)
    return DigitExpansion(k, tuple(reversed(digits)))


def _zero_runs_ok(arr: np.ndarray, k: int) -> bool:
    # count of 0 repeated n times must be floor(len / k**n) for every n >= 1
    length = len(arr)
    starts, lengths = runs_of(arr, 0)
    longest = int(lengths.max()) if len(lengths) else 0
    constant = len(lengths) == 1 and lengths[0] == length
    for n in range(1, longest + 2):
        if constant:
            count = length if n <= length else 0
        else:
            count = int(np.maximum(lengths - n + 1, 0).sum())
        if count != length // k ** n:
            return False
    return True


def generate_steps(k: int, length: int, *, check: bool = False,
                   trace: JoinTrace | None = None) -> Iterator[tuple[int, Necklace]]:
    """Yield ``(j, necklace)`` after initialisation (``j = 0``) and after each step.

    Necklaces are in the construction's internal rotation.  With ``check=True``
    every join is checked for count conservation and every step for the
    expected number of runs of zeros.
    """
    exp = digits_base_k(length, k)
    arr = np.arange(1, exp.digits[0] + 1).astype(dtype_for(k))
    yield 0, Necklace._wrap(arr, k)
    for j, d in enumerate(exp.digits[1:], start=1):
        arr = lift_and_join_array(arr, k, check=check, trace=trace)
        for c in range(1, d + 1):
            arr = extend_run_array(arr, c)
        if check and not _zero_runs_ok(arr, k):
            raise ConstructionFailure(f"zero-run counts off after step {j} (length {len(arr)})", trace)
        yield j, Necklace._wrap(arr, k)


def generate_pkl(k: int, length: int, *, check: bool = False,
                 trace: JoinTrace | None = None) -> Necklace:
    """A balanced necklace of the given length over ``k`` letters, canonically rotated.

    >>> str(generate_pkl(2, 12))
    '000100111011'
    """
    if k < 2:
        raise ValueError(f"alphabet size must be at least 2, got {k}")
    for _, necklace in generate_steps(k, length, check=check, trace=trace):
        pass
    return necklace.canonical()


def _join_binary(lam0: np.ndarray, lam1: np.ndarray, anchor) -> np.ndarray:
    i = first_occurrence(lam0, anchor)
    j = first_occurrence(lam1, anchor)
    if i < 0 or j < 0:
        raise ConstructionFailure(f"binary join anchor {anchor} missing")
    return np.concatenate((lam0[i:], lam0[:i], lam1[j:], lam1[:j]))


def _shared_label(lam0: np.ndarray, lam1: np.ndarray, n: int):
    # first (0101.. of length n-1, x) or (x, 0101..) string present in both
    alt = ramp(0, n - 1, 2)
    for x in (0, 1):
        for label in (alt + (x,), (x,) + alt):
            if first_occurrence(lam0, label) >= 0 and first_occurrence(lam1, label) >= 0:
                return label
    return None


def generate_p2l(length: int) -> Necklace:
    """Binary-only construction, canonically rotated.

    With two letters the lift has one member (odd number of ones) or two
    complementary members, and every join uses the alternating string
    ``0101...``: of length ``N`` when ``1`` repeated ``N`` times occurs, else
    an alternating string of length ``N - 1`` extended by one character on
    either side, else the bare alternating string of length ``N - 1``.
    """
    exp = digits_base_k(length, 2)
    arr = np.ones(1, dtype=np.uint8)
    for d in exp.digits[1:]:
        n = ceil_log(len(arr), 2)
        (lam0, *rest), _, p = lift_arrays(arr, 2)
        if p == 1:
            arr = lam0
        else:
            lam1 = rest[0]
            if longest_run(arr, 1) >= n:
                arr = _join_binary(lam0, lam1, ramp(0, n, 2))
            else:
                label = _shared_label(lam0, lam1, n)
                if label is None:
                    if 0 not in ramp_chars(lam0, n - 1, 2) or 1 not in ramp_chars(lam0, n - 1, 2):
                        raise ConstructionFailure(f"no alternating anchor of length {n - 1}")
                    label = ramp(0, n - 1, 2)
                arr = _join_binary(lam0, lam1, label)
        if d:
            arr = extend_run_array(arr, 1)
    return Necklace._wrap(arr, 2).canonical()
