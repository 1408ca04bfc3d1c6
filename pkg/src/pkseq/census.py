"""Exhaustive count of balanced necklaces of a given length.

Strings of length ``L`` over ``k`` letters are identified with the integers
``0 .. k**L - 1`` (first character most significant), so integer order is
lexicographic order and a string is the canonical member of its rotation class
exactly when no rotation is a smaller integer.  The integer range is split
into shards by a fixed-length prefix; each shard is scanned with numpy and the
per-shard counts are summed.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .necklace import ceil_log, dtype_for
from .verify import check_horizon

__all__ = ["BudgetExceeded", "CensusResult", "DEFAULT_BUDGET", "census"]

DEFAULT_BUDGET = 1 << 26
_CHUNK = 1 << 18


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CensusResult:
    k: int
    l: int
    count: int
    representatives: tuple[tuple[int, ...], ...] | None
    elapsed: float


def _digits(x: np.ndarray, k: int, length: int) -> np.ndarray:
    out = np.empty((len(x), length), dtype=dtype_for(k))
    rest = x.copy()
    for i in range(length - 1, -1, -1):
        rest, out[:, i] = np.divmod(rest, k)
    return out


def _scan(k: int, length: int, lo: int, hi: int, materialize: bool):
    """Count (and optionally list) canonical balanced strings with codes in ``[lo, hi)``."""
    top = k ** (length - 1)
    lo1, hi1 = length // k, -(-length // k)
    horizon = check_horizon(length, k)
    count = 0
    found = []
    for start in range(lo, hi, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
        dig = _digits(x, k, length)

        # single characters first: cheap and removes most strings
        keep = np.ones(len(x), dtype=bool)
        for c in range(k):
            cnt = (dig == c).sum(axis=1)
            keep &= (cnt >= lo1) & (cnt <= hi1)
        x, dig = x[keep], dig[keep]

        # canonical: every rotation is at least x
        rot = x.copy()
        keep = np.ones(len(x), dtype=bool)
        for r in range(length - 1):
            lead = dig[:, r].astype(np.int64)
            rot = (rot - lead * top) * k + lead
            keep &= x <= rot
        x, dig = x[keep], dig[keep]

        # remaining lengths, counted per row with an offset bincount
        code = dig.astype(np.int64)
        ext = np.concatenate((dig, dig), axis=1).astype(np.int64)
        rows = np.arange(len(x), dtype=np.int64)
        for m in range(2, horizon + 1):
            code = code * k + ext[:, m - 1:m - 1 + length]
            size = k ** m
            lo_m, hi_m = length // size, -(-length // size)
            flat = (rows[:, None] * size + code).ravel()
            counts = np.bincount(flat, minlength=len(rows) * size).reshape(len(rows), size)
            ok = ((counts >= lo_m) & (counts <= hi_m)).all(axis=1)
            x, code, ext = x[ok], code[ok], ext[ok]
            rows = np.arange(len(x), dtype=np.int64)
        count += len(x)
        if materialize:
            found.extend(tuple(row) for row in _digits(x, k, length).tolist())
    return count, found


def _scan_args(args):
    return _scan(*args)


def census(k: int, length: int, materialize: bool = False, *, budget: int = DEFAULT_BUDGET,
           workers: int = 1, prefix: int | None = None) -> CensusResult:
    """Number of rotation classes of length-``length`` strings that are balanced.

    The search visits all ``k**length`` strings and refuses to start when that
    exceeds ``budget``.  ``prefix`` fixes the shard prefix length (default:
    shards of about a million strings); ``workers > 1`` scans shards in
    separate processes.
    """
    if k < 2 or length < 1:
        raise ValueError(f"need k >= 2 and length >= 1, got k={k}, length={length}")
    total = k ** length
    if total > budget:
        raise BudgetExceeded(
            f"{k}**{length} = {total} candidate strings exceeds the budget of {budget}")
    if prefix is None:
        prefix = max(0, length - ceil_log(1 << 20, k))
    prefix = min(prefix, length)
    shard = k ** (length - prefix)
    jobs = [(k, length, i * shard, (i + 1) * shard, materialize) for i in range(k ** prefix)]

    t0 = time.perf_counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_args, jobs))
    else:
        parts = [_scan(*job) for job in jobs]
    count = sum(c for c, _ in parts)
    reps = None
    if materialize:
        reps = tuple(r for _, found in parts for r in found)
    return CensusResult(k, length, count, reps, time.perf_counter() - t0)
