"""Joining the members of a Lempel lift into a single balanced necklace.

:func:`lift_and_join` takes a balanced necklace of length ``L`` and returns one
of length ``k * L``.  Which joins it performs depends on the lift:

* case 1 -- the lift has a single member, which is returned as is;
* case 2 -- ``1`` repeated ``N`` times occurs in the input, so consecutive
  members share a ramp of length ``N`` and are chained together at ramps;
* case 3 -- members are joined along a depth-first traversal of the join
  graph (3a), and if that graph is disconnected the translates of the joined
  component are chained at ramps of length ``N - 1`` (3b).

Here ``N`` is the least integer with ``k**N >= L``.  For ``L = 1`` the ramps
are empty and the case 2 joins reduce to concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lift import LiftFamily, lift_arrays
from .necklace import (
    Necklace,
    add_mod_array,
    ceil_log,
    cyclic_extend,
    decode,
    first_occurrence,
    format_chars,
    longest_run,
    ramp,
    window_codes,
)

__all__ = [
    "ConstructionFailure",
    "JoinGraph",
    "JoinStep",
    "JoinTrace",
    "build_join_graph",
    "lift_and_join",
]


@dataclass
class JoinStep:
    case: str
    anchor: tuple[int, ...]
    left: str
    right: str
    checked: bool = False
    performed: bool = True


@dataclass
class JoinTrace:
    """Record of the branches taken by one or more :func:`lift_and_join` calls.

    A lift of ``p`` members always leaves ``p - 1`` steps.  When the join graph
    is disconnected, the joins inside the other components are never executed
    on their own: they come for free by adding a constant to the joined first
    component.  Those are recorded with ``performed=False`` and the anchor
    shifted by the same constant.
    """

    steps: list[JoinStep] = field(default_factory=list)
    cases: list[str] = field(default_factory=list)

    def joins(self, case: str | None = None) -> list[JoinStep]:
        if case is None:
            return list(self.steps)
        return [s for s in self.steps if s.case == case]


class ConstructionFailure(RuntimeError):
    """An existence guarantee of the construction did not hold.  Always a bug."""

    def __init__(self, message: str, trace: JoinTrace | None = None):
        super().__init__(message)
        self.trace = trace


# ---------------------------------------------------------------------------
# ramp scanning


def ramp_starts(arr: np.ndarray, n: int, k: int) -> np.ndarray:
    """Cyclic positions where a ramp ``(c, c+1, ..., c+n-1)`` of length ``n`` starts."""
    size = len(arr)
    if n <= 1:
        return np.arange(size, dtype=np.int64)
    step = np.roll(arr, -1).astype(np.int64) - arr.astype(np.int64)
    step %= k
    ones = (step == 1).astype(np.int32)
    width = n - 1
    cs = np.concatenate(([0], np.cumsum(cyclic_extend(ones, width - 1), dtype=np.int64)))
    return np.flatnonzero(cs[width:width + size] - cs[:size] == width).astype(np.int64)


def ramp_chars(arr: np.ndarray, n: int, k: int) -> set[int]:
    """First characters of the length-``n`` ramps occurring in ``arr``."""
    if n == 0:
        return set(range(k))
    return set(np.unique(arr[ramp_starts(arr, n, k)]).tolist())


def _codes_at(arr: np.ndarray, k: int, n: int, pos: np.ndarray) -> np.ndarray:
    size = len(arr)
    code = np.zeros(len(pos), dtype=np.int64)
    for t in range(n):
        code *= k
        code += arr[(pos + t) % size]
    return code


def _anchor_labels(arr: np.ndarray, k: int, n: int) -> set[int]:
    # strings (ramp of length n-1, x) and (x, ramp of length n-1), as codes
    starts = ramp_starts(arr, n - 1, k)
    pos = np.unique(np.concatenate((starts, (starts - 1) % len(arr))))
    return set(np.unique(_codes_at(arr, k, n, pos)).tolist())


# ---------------------------------------------------------------------------
# join graph


@dataclass(frozen=True)
class JoinGraph:
    """Undirected multigraph on lift members.

    ``edges`` holds ``(l, r, label)`` with ``l < r``: the length-``n`` string
    ``label`` has the form (ramp of length ``n-1``, x) or (x, ramp) and occurs
    in both ``members[l]`` and ``members[r]``.
    """

    p: int
    n: int
    k: int
    edges: tuple[tuple[int, int, tuple[int, ...]], ...]

    def neighbors(self, v: int) -> list[tuple[int, tuple[int, ...]]]:
        out = []
        for left, right, label in self.edges:
            if left == v:
                out.append((right, label))
            elif right == v:
                out.append((left, label))
        return sorted(out)

    def adjacency(self) -> list[list[tuple[int, tuple[int, ...]]]]:
        adj: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(self.p)]
        for left, right, label in self.edges:
            adj[left].append((right, label))
            adj[right].append((left, label))
        for row in adj:
            row.sort()
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.p
        comps = []
        for v in range(self.p):
            if seen[v]:
                continue
            seen[v] = True
            comp, stack = [], [v]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w, _ in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def to_dot(self) -> str:
        lines = ["graph join_graph {"]
        for v in range(self.p):
            lines.append(f'  v{v} [label="λ_{v}"];')
        for left, right, label in self.edges:
            lines.append(f'  v{left} -- v{right} [label="{format_chars(label, self.k)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _graph_from_arrays(members: list[np.ndarray], k: int, n: int) -> JoinGraph:
    labels = [_anchor_labels(m, k, n) for m in members]
    edges = []
    for left in range(len(members)):
        for right in range(left + 1, len(members)):
            for code in sorted(labels[left] & labels[right]):
                edges.append((left, right, decode(code, k, n)))
    edges.sort()
    return JoinGraph(p=len(members), n=n, k=k, edges=tuple(edges))


def build_join_graph(fam: LiftFamily, n: int) -> JoinGraph:
    """Join graph of a lift family with anchor length ``n``."""
    return _graph_from_arrays([m.chars for m in fam.members], fam.k, n)


def _dfs_tree(graph: JoinGraph, start: int) -> list[tuple[int, int, tuple[int, ...]]]:
    # tree edges in the order a recursive DFS with sorted neighbours finds them
    adj = graph.adjacency()
    visited = {start}
    tree = []
    stack = [(start, iter(adj[start]))]
    while stack:
        v, it = stack[-1]
        for w, label in it:
            if w not in visited:
                visited.add(w)
                tree.append((v, w, label))
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
    return tree


# ---------------------------------------------------------------------------
# joining


def _join(left: np.ndarray, right: np.ndarray, anchor: tuple[int, ...]) -> np.ndarray:
    i = first_occurrence(left, anchor)
    j = first_occurrence(right, anchor)
    if i < 0 or j < 0:
        return None
    return np.concatenate((left[i:], left[:i], right[j:], right[:j]))


def _check_join(parts, out, k, anchor_len, case, trace) -> None:
    """Occurrence counts up to ``anchor_len + 1`` must be the sums over ``parts``;
    after a ramp join between translates, strings of length ``anchor_len + 2``
    must still occur at most once."""
    shortest = min(len(p) for p in parts)
    for m in range(1, min(anchor_len + 1, shortest) + 1):
        before = np.sort(np.concatenate([window_codes(p, k, m) for p in parts]))
        after = np.sort(window_codes(out, k, m))
        if not np.array_equal(before, after):
            raise ConstructionFailure(
                f"case {case} join at anchor of length {anchor_len} changed "
                f"length-{m} occurrence counts", trace)
    m = anchor_len + 2
    if case == "3b" and m <= len(out):
        codes = window_codes(out, k, m)
        if len(np.unique(codes)) != len(codes):
            raise ConstructionFailure(
                f"case 3b join left a repeated length-{m} string", trace)


class _Joiner:
    def __init__(self, k: int, check: bool, trace: JoinTrace | None):
        self.k = k
        self.check = check
        self.trace = trace
        self.steps: list[JoinStep] = []

    def __call__(self, left, right, anchor, case, names) -> np.ndarray:
        out = _join(left, right, anchor)
        if out is None:
            raise ConstructionFailure(
                f"case {case}: anchor {format_chars(anchor, self.k)!r} missing "
                f"from {names[0] if first_occurrence(left, anchor) < 0 else names[1]}",
                self.trace)
        if self.check:
            _check_join((left, right), out, self.k, len(anchor), case, self.trace)
        step = JoinStep(case, tuple(anchor), names[0], names[1], self.check)
        self.steps.append(step)
        if self.trace is not None:
            self.trace.steps.append(step)
        return out


def lift_and_join_array(a: np.ndarray, k: int, *, check: bool = False,
                        trace: JoinTrace | None = None) -> np.ndarray:
    members, _, p = lift_arrays(a, k)
    size = len(a)
    n = ceil_log(size, k)
    note = trace.cases.append if trace is not None else (lambda _: None)

    if p == 1:
        note("1")
        return members[0]
    joiner = _Joiner(k, check, trace)

    if longest_run(a, 1) >= n:
        note("2")
        r0 = ramp_chars(members[0], n, k)
        shared = sorted(c for c in r0 if (c - 1) % k in r0)
        if not shared:
            raise ConstructionFailure(f"case 2: no ramp of length {n} shared by λ_0 and λ_1", trace)
        start = shared[0]
        sigma = members[0]
        for j in range(1, p):
            anchor = ramp(start + j - 1, n, k)
            sigma = joiner(sigma, members[j], anchor, "2", ("sigma", f"lambda_{j}"))
        return sigma

    graph = _graph_from_arrays(members, k, n)
    tree = _dfs_tree(graph, 0)
    size_c = len(tree) + 1
    case = "3a" if size_c == p else "3b"
    note(case)
    sigma = members[0]
    for _, w, label in tree:
        sigma = joiner(sigma, members[w], label, case, ("sigma", f"lambda_{w}"))
    if size_c == p:
        return sigma

    if p % size_c:
        raise ConstructionFailure(
            f"case 3b: component of size {size_c} does not tile {p} members", trace)
    r = ramp_chars(sigma, n - 1, k)
    shared = sorted(c for c in r if (c - 1) % k in r)
    if not shared:
        raise ConstructionFailure(
            f"case 3b: no ramp of length {n - 1} shared by sigma and sigma + 1", trace)
    start = shared[0]
    if trace is not None:
        for j in range(1, p // size_c):
            for _, w, label in tree:
                trace.steps.append(JoinStep(
                    "3b", tuple((c + j) % k for c in label), f"sigma+{j}",
                    f"lambda_{(w + j) % p}", False, performed=False))
    zeta = sigma
    for j in range(1, p // size_c):
        anchor = ramp(start + j - 1, n - 1, k)
        zeta = joiner(zeta, add_mod_array(sigma, j, k), anchor, "3b", ("zeta", f"sigma+{j}"))
    return zeta


def lift_and_join(a: Necklace, *, check: bool = False, trace: JoinTrace | None = None) -> Necklace:
    """Lift a balanced necklace of length ``L`` and join the lift into one of length ``k * L``.

    With ``check=True`` the input is verified first and every join is checked
    for occurrence-count conservation; violations raise
    :class:`ConstructionFailure`.  Branches and joins are appended to
    ``trace`` when one is given.
    """
    if check:
        from .verify import is_pkl

        verdict = is_pkl(a)
        if not verdict.accepted:
            raise ValueError(f"input is not balanced: {verdict.describe()}")
    out = lift_and_join_array(a.chars, a.k, check=check, trace=trace)
    return Necklace._wrap(out, a.k)
