"""Membership tests for balanced necklaces and the two weaker classes.

A necklace of length ``L`` over ``k`` letters is *balanced* (a P-sequence) when
every length-``m`` string occurs ``floor(L / k**m)`` or ``ceil(L / k**m)``
times.  It is enough to check ``m`` up to ``M = ceil(log_k L)``: at that length
the allowed counts are 0 and 1, so all longer windows are distinct as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .necklace import Necklace, ceil_log, decode, floor_log, format_chars, iter_window_codes, window_codes

__all__ = [
    "Classification",
    "LoadBalance",
    "Tier",
    "Verdict",
    "Witness",
    "classify",
    "is_pkl",
    "load_balance",
    "profile_histogram",
]

_DENSE_LIMIT = 1 << 22


@dataclass(frozen=True)
class Witness:
    """A string whose count falls outside ``allowed`` (inclusive; ``None`` = unbounded)."""

    m: int
    string: tuple[int, ...]
    count: int
    allowed: tuple[int, int | None]

    def to_dict(self, k: int) -> dict:
        return {
            "m": self.m,
            "string": format_chars(self.string, k),
            "count": self.count,
            "allowed": list(self.allowed),
        }

    def describe(self, k: int) -> str:
        lo, hi = self.allowed
        if hi is None:
            want = f"at least {lo}"
        elif lo == hi:
            want = f"exactly {lo}"
        else:
            want = f"{lo} or {hi}" if hi == lo + 1 else f"{lo}..{hi}"
        word = format_chars(self.string, k) or "(empty)"
        return f"length {self.m}: {word!r} occurs {self.count} times, expected {want}"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    k: int
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.accepted

    def describe(self) -> str:
        return "accepted" if self.accepted else "rejected: " + self.witness.describe(self.k)

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "witness": None if self.witness is None else self.witness.to_dict(self.k),
        }


def _counts(codes: np.ndarray, size: int) -> tuple[np.ndarray, np.ndarray]:
    """(codes present, their counts), sorted by code."""
    if size <= _DENSE_LIMIT:
        dense = np.bincount(codes, minlength=size)
        present = np.flatnonzero(dense)
        return present, dense[present]
    return np.unique(codes, return_counts=True)


def _first_missing(present: np.ndarray) -> int:
    gaps = np.flatnonzero(present != np.arange(len(present)))
    return int(gaps[0]) if len(gaps) else len(present)


def _violation(present, counts, size, lo, hi) -> tuple[int, int] | None:
    """(code, count) of the reported violation at one length, if any.

    Over-represented strings are preferred since they can be pointed at in
    the necklace; among those the largest count wins, ties to the smallest
    string.  Otherwise the smallest under-represented string is reported.
    """
    over = counts > hi
    if over.any():
        idx = np.flatnonzero(over)
        best = idx[np.argmax(counts[idx])]
        return int(present[best]), int(counts[best])
    under = np.flatnonzero(counts < lo)
    missing = _first_missing(present) if len(present) < size and lo > 0 else None
    if len(under) == 0 and missing is None:
        return None
    cands = []
    if len(under):
        cands.append((int(present[under[0]]), int(counts[under[0]])))
    if missing is not None:
        cands.append((missing, 0))
    return min(cands)


def check_horizon(length: int, k: int) -> int:
    return min(length, max(1, ceil_log(length, k)))


def is_pkl(n: Necklace) -> Verdict:
    """Decide whether ``n`` is balanced at every substring length.

    >>> is_pkl(Necklace("000110111001", 2)).accepted
    True
    """
    k, length = n.k, len(n)
    for m, codes in iter_window_codes(n.chars, k, check_horizon(length, k)):
        size = k ** m
        lo, hi = length // size, -(-length // size)
        present, counts = _counts(codes, size)
        bad = _violation(present, counts, size, lo, hi)
        if bad is not None:
            code, count = bad
            return Verdict(False, k, Witness(m, decode(code, k, m), count, (lo, hi)))
    return Verdict(True, k)


class Tier(str, Enum):
    PKL = "PKL"
    GENERALIZED_DE_BRUIJN = "GeneralizedDeBruijn"
    LEMPEL_RADCHENKO = "LempelRadchenko"
    NONE = "None"


@dataclass(frozen=True)
class Classification:
    tier: Tier
    k: int
    lempel_radchenko: bool
    generalized_de_bruijn: bool
    pkl: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "tier": self.tier.value,
            "lempel_radchenko": self.lempel_radchenko,
            "generalized_de_bruijn": self.generalized_de_bruijn,
            "pkl": self.pkl,
            "witnesses": {name: w.to_dict(self.k) for name, w in self.witnesses.items()},
        }


def _repeat_witness(n: Necklace, m: int) -> Witness | None:
    present, counts = np.unique(window_codes(n.chars, n.k, m), return_counts=True)
    rep = np.flatnonzero(counts > 1)
    if len(rep) == 0:
        return None
    i = rep[np.argmax(counts[rep])]
    return Witness(m, decode(int(present[i]), n.k, m), int(counts[i]), (0, 1))


def _missing_witness(n: Necklace, m: int) -> Witness | None:
    size = n.k ** m
    present = np.unique(window_codes(n.chars, n.k, m))
    if len(present) == size:
        return None
    return Witness(m, decode(_first_missing(present), n.k, m), 0, (1, None))


def classify(n: Necklace) -> Classification:
    """Place ``n`` in the hierarchy balanced ⊂ generalized de Bruijn ⊂ Lempel-Radchenko.

    Lempel-Radchenko: every string of length ``ceil(log_k L)`` occurs at most
    once.  Generalized de Bruijn: additionally every string of length
    ``floor(log_k L)`` occurs.  Witnesses are keyed by the class they refute.
    """
    k, length = n.k, len(n)
    witnesses: dict[str, Witness] = {}
    rep = _repeat_witness(n, ceil_log(length, k))
    lr = rep is None
    if rep is not None:
        witnesses[Tier.LEMPEL_RADCHENKO.value] = rep
    miss = _missing_witness(n, floor_log(length, k))
    gdb = lr and miss is None
    if miss is not None:
        witnesses[Tier.GENERALIZED_DE_BRUIJN.value] = miss
    verdict = is_pkl(n)
    if verdict.witness is not None:
        witnesses[Tier.PKL.value] = verdict.witness
    if verdict.accepted:
        tier = Tier.PKL
    elif gdb:
        tier = Tier.GENERALIZED_DE_BRUIJN
    elif lr:
        tier = Tier.LEMPEL_RADCHENKO
    else:
        tier = Tier.NONE
    return Classification(tier, k, lr, gdb, verdict.accepted, witnesses)


@dataclass(frozen=True)
class LoadBalance:
    """``a`` strings sit at ``floor_value`` occurrences and ``b`` at ``ceil_value``."""

    m: int
    floor_value: int
    ceil_value: int
    a: int
    b: int


def load_balance(length: int, k: int, m: int) -> LoadBalance:
    """How the ``length`` windows of size ``m`` must split over the ``k**m`` strings.

    When ``length / k**m`` is an integer every string sits at that value and the
    split is reported as ``a = k**m, b = 0``.
    """
    if not 1 <= m <= length:
        raise ValueError(f"substring length {m} outside [1, {length}]")
    size = k ** m
    lo, hi = length // size, -(-length // size)
    if lo == hi:
        return LoadBalance(m, lo, hi, size, 0)
    return LoadBalance(m, lo, hi, size * hi - length, length - size * lo)


def profile_histogram(n: Necklace, m: int) -> dict[int, int]:
    """Map each occurrence count to how many length-``m`` strings have it (zeros included)."""
    size = n.k ** m
    _, counts = _counts(window_codes(n.chars, n.k, m), size)
    hist: dict[int, int] = {}
    for c in counts.tolist():
        hist[c] = hist.get(c, 0) + 1
    absent = size - len(counts)
    if absent:
        hist[0] = absent
    return dict(sorted(hist.items()))
