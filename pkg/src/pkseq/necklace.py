"""Cyclic strings over the alphabet ``{0, ..., k-1}``.

A :class:`Necklace` wraps a read-only numpy array of characters together with
its alphabet size.  The array has an arbitrary but fixed starting point (its
"internal rotation"); equality and hashing ignore it and go through the
lexicographically least rotation instead.

Linear strings (substring queries, join anchors, runs, ramps) are plain tuples
of ints.  Most functions also accept lists, numpy arrays or text such as
``"0110"``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

__all__ = [
    "AlphabetError",
    "AnchorNotFound",
    "InvalidExtension",
    "Necklace",
    "add_mod",
    "canonical_rotation",
    "count_occurrences",
    "extend_longest_run",
    "find_occurrences",
    "format_chars",
    "join",
    "maximal_runs",
    "occurrence_profile",
    "parse_chars",
    "ramp",
    "run",
]


class AlphabetError(ValueError):
    """Characters outside ``[0, k)`` or operands with different alphabets."""


class AnchorNotFound(ValueError):
    """A join anchor does not occur in one of the necklaces being joined."""


class InvalidExtension(ValueError):
    """Run extension asked for character 0 or for a character that is absent."""


MAX_ALPHABET = 1 << 16


def dtype_for(k: int) -> np.dtype:
    if k <= 256:
        return np.dtype(np.uint8)
    if k <= MAX_ALPHABET:
        return np.dtype(np.uint16)
    return np.dtype(np.uint32)


# ---------------------------------------------------------------------------
# text format


def parse_chars(text: str, k: int) -> tuple[int, ...]:
    """Parse the shared sequence text format.

    For ``k <= 10`` the text is a run of decimal digits (``"000110111001"``);
    for larger alphabets it is comma separated (``"0,11,3"``).  Whitespace is
    ignored.  Raises :class:`AlphabetError` on characters outside ``[0, k)``.
    """
    text = "".join(text.split())
    if not text:
        return ()
    if k > 10 or "," in text:
        try:
            chars = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise AlphabetError(f"malformed sequence {text[:40]!r}") from exc
    else:
        if not text.isdigit():
            raise AlphabetError(f"malformed sequence {text[:40]!r}")
        chars = tuple(ord(ch) - 48 for ch in text)
    bad = [c for c in chars if not 0 <= c < k]
    if bad:
        raise AlphabetError(f"character {bad[0]} outside alphabet [0, {k})")
    return chars


def format_chars(chars: Iterable[int] | np.ndarray, k: int) -> str:
    if k <= 10:
        arr = np.asarray(chars, dtype=np.uint8) if not isinstance(chars, np.ndarray) else chars
        return (arr.astype(np.uint8) + 48).tobytes().decode("ascii")
    return ",".join(str(int(c)) for c in chars)


# ---------------------------------------------------------------------------
# array kernels shared by the other modules


def as_word(w, k: int) -> tuple[int, ...]:
    """Coerce a linear string given as text, sequence or array to a tuple."""
    if isinstance(w, str):
        return parse_chars(w, k)
    word = tuple(int(c) for c in w)
    for c in word:
        if not 0 <= c < k:
            raise AlphabetError(f"character {c} outside alphabet [0, {k})")
    return word


def ramp(start: int, length: int, k: int) -> tuple[int, ...]:
    """The string ``(start, start+1, ..., start+length-1)`` taken mod ``k``."""
    return tuple((start + t) % k for t in range(length))


def run(c: int, length: int) -> tuple[int, ...]:
    return (c,) * length


def ceil_log(n: int, k: int) -> int:
    """Smallest ``e >= 0`` with ``k**e >= n``."""
    e, power = 0, 1
    while power < n:
        power *= k
        e += 1
    return e


def floor_log(n: int, k: int) -> int:
    """Largest ``e`` with ``k**e <= n`` (``n >= 1``)."""
    e, power = 0, k
    while power <= n:
        power *= k
        e += 1
    return e


def cyclic_extend(arr: np.ndarray, extra: int) -> np.ndarray:
    # np.resize repeats the array, so this also works when extra > len(arr)
    return np.resize(arr, len(arr) + extra)


def window_codes(arr: np.ndarray, k: int, m: int) -> np.ndarray:
    """Base-``k`` codes of the ``len(arr)`` cyclic windows of length ``m``."""
    n = len(arr)
    codes = np.zeros(n, dtype=np.int64)
    if m == 0:
        return codes
    if k ** m >= 1 << 63:
        raise OverflowError(f"windows of length {m} over {k} letters overflow int64")
    ext = cyclic_extend(arr, m - 1)
    for t in range(m):
        codes *= k
        codes += ext[t:t + n]
    return codes


def iter_window_codes(arr: np.ndarray, k: int, max_m: int):
    """Yield ``(m, codes)`` for ``m = 1 .. max_m`` reusing the previous codes."""
    n = len(arr)
    if max_m < 1:
        return
    if k ** max_m >= 1 << 63:
        raise OverflowError(f"windows of length {max_m} over {k} letters overflow int64")
    ext = cyclic_extend(arr, max_m - 1)
    codes = np.zeros(n, dtype=np.int64)
    for m in range(1, max_m + 1):
        codes *= k
        codes += ext[m - 1:m - 1 + n]
        yield m, codes


def decode(code: int, k: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        code, c = divmod(int(code), k)
        out.append(c)
    return tuple(reversed(out))


def encode(word: Sequence[int], k: int) -> int:
    code = 0
    for c in word:
        code = code * k + int(c)
    return code


def occurrences(arr: np.ndarray, word: Sequence[int]) -> np.ndarray:
    """Sorted cyclic start positions of ``word`` in ``arr``.

    Candidates are filtered one character at a time, so the cost is close to
    ``len(arr)`` when the first characters are selective.
    """
    n = len(arr)
    if len(word) == 0:
        return np.arange(n, dtype=np.int64)
    pos = np.flatnonzero(arr == word[0]).astype(np.int64)
    for t in range(1, len(word)):
        if len(pos) == 0:
            break
        idx = pos + t
        idx %= n
        pos = pos[arr[idx] == word[t]]
    return pos


def first_occurrence(arr: np.ndarray, word: Sequence[int]) -> int:
    """Smallest cyclic start of ``word`` in ``arr``, or -1."""
    n = len(arr)
    if len(word) == 0:
        return 0
    # cheap path: scan a growing prefix of candidates before falling back
    cand = np.flatnonzero(arr == word[0])
    if len(cand) == 0:
        return -1
    block = 64
    lo = 0
    while lo < len(cand):
        pos = cand[lo:lo + block].astype(np.int64)
        for t in range(1, len(word)):
            if len(pos) == 0:
                break
            pos = pos[arr[(pos + t) % n] == word[t]]
        if len(pos):
            return int(pos[0])
        lo += block
        block *= 4
    return -1


def add_mod_array(arr: np.ndarray, j: int, k: int) -> np.ndarray:
    j %= k
    if j == 0:
        return arr.copy()
    out = arr.astype(np.int64) + j
    out[out >= k] -= k
    return out.astype(arr.dtype)


def _min_rotation_scan(values: list[int]) -> int:
    # two-pointer minimum-expression scan, linear time
    n = len(values)
    i, j, t = 0, 1, 0
    while i < n and j < n and t < n:
        a = values[(i + t) % n]
        b = values[(j + t) % n]
        if a == b:
            t += 1
            continue
        if a > b:
            i += t + 1
        else:
            j += t + 1
        if i == j:
            j += 1
        t = 0
    return min(i, j)


def least_rotation(arr: np.ndarray) -> int:
    """Start index of the lexicographically least rotation (smallest such index).

    Vectorised candidate filtering handles typical inputs in a few passes; if
    the candidate set refuses to shrink (highly periodic input) the linear
    two-pointer scan takes over.
    """
    n = len(arr)
    if n <= 1:
        return 0
    cand = np.flatnonzero(arr == arr.min()).astype(np.int64)
    work = 0
    budget = 4 * n + 64
    t = 1
    while len(cand) > 1 and t < n:
        work += len(cand)
        if work > budget:
            return _min_rotation_scan(arr.tolist())
        vals = arr[(cand + t) % n]
        cand = cand[vals == vals.min()]
        t += 1
    return int(cand[0])


def rotate_array(arr: np.ndarray, s: int) -> np.ndarray:
    s %= max(len(arr), 1)
    if s == 0:
        return arr.copy()
    return np.concatenate((arr[s:], arr[:s]))


def runs_of(arr: np.ndarray, c: int) -> tuple[np.ndarray, np.ndarray]:
    """Starts and lengths of the maximal cyclic runs of ``c``.

    A necklace made only of ``c`` yields the single run ``(0, len(arr))``.
    """
    n = len(arr)
    mask = arr == c
    if n == 0 or not mask.any():
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    if mask.all():
        return np.zeros(1, dtype=np.int64), np.array([n], dtype=np.int64)
    prev = np.roll(mask, 1)
    nxt = np.roll(mask, -1)
    starts = np.flatnonzero(mask & ~prev)
    ends = np.flatnonzero(mask & ~nxt)
    # a run wrapping past the end pairs the last start with the first end
    if ends[0] < starts[0]:
        ends = np.roll(ends, -1)
    lengths = (ends - starts) % n + 1
    return starts.astype(np.int64), lengths.astype(np.int64)


def longest_run(arr: np.ndarray, c: int) -> int:
    _, lengths = runs_of(arr, c)
    return int(lengths.max()) if len(lengths) else 0


def extend_run_array(arr: np.ndarray, c: int) -> np.ndarray:
    starts, lengths = runs_of(arr, c)
    if len(lengths) == 0:
        raise InvalidExtension(f"character {c} does not occur")
    best = int(np.argmax(lengths))  # first maximum = smallest start index
    end = (int(starts[best]) + int(lengths[best])) % len(arr)
    if end == 0:
        end = len(arr)
    return np.insert(arr, end, c)


def profile_counts(arr: np.ndarray, k: int, m: int) -> np.ndarray:
    """Dense occurrence counts of every length-``m`` string, indexed by code."""
    return np.bincount(window_codes(arr, k, m), minlength=k ** m)


# ---------------------------------------------------------------------------
# public types


class Necklace:
    """An immutable cyclic sequence over ``[0, k)``.

    >>> Necklace.from_text("101", 2) == Necklace.from_text("011", 2)
    True
    """

    __slots__ = ("_chars", "_k", "_canon")

    def __init__(self, chars, k: int, *, validate: bool = True):
        if k < 2:
            raise ValueError(f"alphabet size must be at least 2, got {k}")
        if isinstance(chars, str):
            chars = parse_chars(chars, k)
        arr = np.array(chars, dtype=np.int64 if validate else None, copy=True).ravel()
        if validate and len(arr) and (arr.min() < 0 or arr.max() >= k):
            raise AlphabetError(f"characters must lie in [0, {k})")
        arr = arr.astype(dtype_for(k), copy=False)
        arr.setflags(write=False)
        self._chars = arr
        self._k = k
        self._canon = None

    @classmethod
    def from_text(cls, text: str, k: int) -> Necklace:
        return cls(parse_chars(text, k), k)

    @classmethod
    def _wrap(cls, arr: np.ndarray, k: int) -> Necklace:
        # trusted constructor for arrays produced internally
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=dtype_for(k))
        arr.setflags(write=False)
        obj._chars = arr
        obj._k = k
        obj._canon = None
        return obj

    @property
    def chars(self) -> np.ndarray:
        return self._chars

    @property
    def k(self) -> int:
        return self._k

    def __len__(self) -> int:
        return len(self._chars)

    def __getitem__(self, j: int) -> int:
        return int(self._chars[j % len(self._chars)])

    def __iter__(self):
        return iter(self._chars.tolist())

    def rotate(self, s: int) -> Necklace:
        """Same necklace, internally starting at index ``s``."""
        return Necklace._wrap(rotate_array(self._chars, s), self._k)

    def canonical(self) -> Necklace:
        if self._canon is None:
            self._canon = least_rotation(self._chars)
        return self.rotate(self._canon)

    def text(self) -> str:
        """Characters in the internal rotation, in the shared text format."""
        return format_chars(self._chars, self._k)

    def __str__(self) -> str:
        return self.canonical().text()

    def __repr__(self) -> str:
        body = self.text()
        if len(body) > 60:
            body = body[:57] + "..."
        return f"Necklace({body!r}, k={self._k})"

    def _key(self) -> tuple[int, int, bytes]:
        canon = self.canonical()._chars
        return self._k, len(canon), canon.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Necklace):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


def _check_same_alphabet(*necklaces: Necklace) -> None:
    ks = {n.k for n in necklaces}
    if len(ks) > 1:
        raise AlphabetError(f"alphabet sizes differ: {sorted(ks)}")


# ---------------------------------------------------------------------------
# operations


def canonical_rotation(n: Necklace) -> tuple[int, ...]:
    """Lexicographically least rotation of ``n``."""
    return tuple(n.canonical().chars.tolist())


def find_occurrences(n: Necklace, w) -> list[int]:
    """Cyclic start positions (in ``n``'s internal rotation) where ``w`` matches."""
    word = as_word(w, n.k)
    if len(word) > len(n):
        raise ValueError(f"query of length {len(word)} exceeds necklace length {len(n)}")
    return occurrences(n.chars, word).tolist()


def count_occurrences(n: Necklace, w) -> int:
    """Number of cyclic positions at which ``w`` occurs; the empty string matches everywhere."""
    return len(find_occurrences(n, w))


def occurrence_profile(n: Necklace, m: int) -> dict[tuple[int, ...], int]:
    """Counts of every length-``m`` string present in ``n`` (absent strings omitted)."""
    if not 1 <= m <= len(n):
        raise ValueError(f"substring length {m} outside [1, {len(n)}]")
    k = n.k
    if k ** m < 1 << 62:
        codes, counts = np.unique(window_codes(n.chars, k, m), return_counts=True)
        return {decode(c, k, m): int(t) for c, t in zip(codes.tolist(), counts.tolist())}
    ext = cyclic_extend(n.chars, m - 1).tolist()
    out: dict[tuple[int, ...], int] = {}
    for i in range(len(n)):
        w = tuple(ext[i:i + m])
        out[w] = out.get(w, 0) + 1
    return out


def join(b: Necklace, g: Necklace, w, at: tuple[int, int] | None = None) -> Necklace:
    """Cycle-join ``b`` and ``g`` at the string ``w``.

    The result is the rotation of ``b`` starting at an occurrence of ``w``
    followed by the rotation of ``g`` starting at an occurrence of ``w``.  By
    default the first occurrence in each is used; ``at`` picks explicit start
    indices instead.
    """
    _check_same_alphabet(b, g)
    word = as_word(w, b.k)
    if at is None:
        i = first_occurrence(b.chars, word)
        j = first_occurrence(g.chars, word)
    else:
        i, j = at
        if not (np.array_equal(np.resize(np.roll(b.chars, -i), len(word)), word)
                and np.array_equal(np.resize(np.roll(g.chars, -j), len(word)), word)):
            i = j = -1
    if i < 0 or j < 0:
        missing = "first" if i < 0 else "second"
        raise AnchorNotFound(
            f"anchor {format_chars(word, b.k)!r} does not occur in the {missing} necklace")
    out = np.concatenate((b.chars[i:], b.chars[:i], g.chars[j:], g.chars[:j]))
    return Necklace._wrap(out, b.k)


def add_mod(n: Necklace, j: int) -> Necklace:
    """Add ``j`` to every character modulo the alphabet size."""
    return Necklace._wrap(add_mod_array(n.chars, j, n.k), n.k)


def maximal_runs(n: Necklace, c: int) -> list[tuple[int, int]]:
    """``(start, length)`` of each maximal cyclic run of ``c``, by start index."""
    if not 0 <= c < n.k:
        raise AlphabetError(f"character {c} outside alphabet [0, {n.k})")
    starts, lengths = runs_of(n.chars, c)
    return list(zip(starts.tolist(), lengths.tolist()))


def extend_longest_run(n: Necklace, c: int) -> Necklace:
    """Insert one more ``c`` at the end of a longest run of ``c``.

    Ties go to the run with the smallest start index.  ``c`` must be nonzero
    and present.
    """
    if c == 0 or not 0 < c < n.k:
        raise InvalidExtension(f"cannot extend runs of character {c}")
    return Necklace._wrap(extend_run_array(n.chars, c), n.k)
