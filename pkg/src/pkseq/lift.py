"""Lempel's lift (the inverse D-morphism) and its discrete derivative."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .necklace import Necklace, add_mod_array, as_word, dtype_for

__all__ = ["LiftFamily", "discrete_derivative", "lempel_lift", "lift_params", "lifted_strings"]


@dataclass(frozen=True)
class LiftFamily:
    """The necklaces ``members[i] = i + integral(source^d)`` for ``i < p``."""

    members: tuple[Necklace, ...]
    d: int
    p: int
    source_length: int
    k: int

    def __len__(self) -> int:
        return self.p

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Necklace:
        return self.members[i]


def _params(total: int, k: int) -> tuple[int, int]:
    d = k // gcd(total % k, k)
    return d, k // d


def lift_params(b: Necklace) -> tuple[int, int]:
    """Return ``(d, p)``: ``d`` is the least positive integer making ``d * sum(b)``
    divisible by ``k``, and ``p = k / d``."""
    return _params(int(b.chars.sum(dtype=np.int64)), b.k)


def lift_arrays(arr: np.ndarray, k: int) -> tuple[list[np.ndarray], int, int]:
    d, p = _params(int(arr.sum(dtype=np.int64)), k)
    base = np.cumsum(np.tile(arr, d), dtype=np.int64)
    base %= k
    lam0 = base.astype(dtype_for(k))
    members = [lam0] + [add_mod_array(lam0, i, k) for i in range(1, p)]
    return members, d, p


def lempel_lift(b: Necklace) -> LiftFamily:
    """Lempel's lift of ``b``.

    ``members[0]`` is the running sum (mod ``k``) of ``b`` concatenated with
    itself ``d`` times; ``members[i]`` adds ``i`` to every character.

    >>> [m.text() for m in lempel_lift(Necklace("0011", 2))]
    ['0010', '1101']
    """
    members, d, p = lift_arrays(b.chars, b.k)
    return LiftFamily(
        members=tuple(Necklace._wrap(m, b.k) for m in members),
        d=d,
        p=p,
        source_length=len(b),
        k=b.k,
    )


def derivative_array(arr: np.ndarray, k: int) -> np.ndarray:
    diff = arr.astype(np.int64) - np.roll(arr, 1).astype(np.int64)
    diff %= k
    return diff.astype(arr.dtype)


def discrete_derivative(lam: Necklace) -> Necklace:
    """Cyclic successive differences mod ``k``.

    Character ``j`` of the result is ``lam[j] - lam[j-1]``, so for a lift
    member the result lines up with the lifted necklace repeated ``d`` times.
    """
    if len(lam) < 1:
        raise ValueError("derivative of an empty necklace")
    return Necklace._wrap(derivative_array(lam.chars, lam.k), lam.k)


def lifted_strings(w, k: int) -> list[tuple[int, ...]]:
    """The ``k`` strings ``l + (0, w[0], w[0]+w[1], ...)`` for ``l < k``, each of
    length ``len(w) + 1``."""
    word = as_word(w, k)
    prefix = [0]
    for c in word:
        prefix.append((prefix[-1] + c) % k)
    return [tuple((ell + s) % k for s in prefix) for ell in range(k)]
