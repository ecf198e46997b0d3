"""Patterns, space-time occurrences, and disjoint-occurrence counting.

A pattern is a swap sequence that is an initial segment of some sorting
network (equivalently: every swap acts on a not-yet-inverted adjacent pair).
It occurs in a network at a window [i,j] x [a,b] when the window's swaps are
exactly the pattern shifted by a-1 and the two flanking positions a-1, b+1
are swap-free over [i,j].

The occurrence count R is the maximum number of pairwise disjoint windows.
Windows are treated as axis-aligned rectangles: two windows are disjoint when
their time intervals or their position intervals are disjoint, so overlapping
in time at disjoint positions is allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .edelman_greene import SortingNetwork

DISJOINT_EXACT_CAP = 64


class DisjointCountCapError(ValueError):
    """Too many windows for exact counting; use count_disjoint_greedy."""


@dataclass(frozen=True)
class Pattern:
    """A reduced-word prefix; its size is one more than its maximal element."""

    swaps: tuple[int, ...]

    def __init__(self, swaps: Iterable[int]):
        swaps = tuple(int(s) for s in swaps)
        if not is_pattern(swaps):
            raise ValueError(f"not a pattern (not a reduced-word prefix): {swaps}")
        object.__setattr__(self, "swaps", swaps)

    @property
    def size(self) -> int:
        return max(self.swaps) + 1

    def __len__(self) -> int:
        return len(self.swaps)


@dataclass(frozen=True)
class Window:
    """A space-time rectangle: times [start, end], positions [low, high]."""

    start: int
    end: int
    low: int
    high: int

    def __post_init__(self):
        if not (1 <= self.start <= self.end and 1 <= self.low <= self.high):
            raise ValueError(f"malformed window {self}")

    def disjoint(self, other: "Window") -> bool:
        time_overlap = self.start <= other.end and other.start <= self.end
        pos_overlap = self.low <= other.high and other.low <= self.high
        return not (time_overlap and pos_overlap)

    def to_json(self) -> dict:
        return {"time": [self.start, self.end], "position": [self.low, self.high]}


def is_pattern(seq: Sequence[int]) -> bool:
    """True iff the sequence is a nonempty initial segment of some network."""
    try:
        seq = tuple(int(s) for s in seq)
    except (TypeError, ValueError):
        return False
    if not seq or any(s < 1 for s in seq):
        return False
    width = max(seq) + 1
    occupants = list(range(width))
    for s in seq:
        if occupants[s - 1] > occupants[s]:
            return False  # the pair is already inverted
        occupants[s - 1], occupants[s] = occupants[s], occupants[s - 1]
    return True


def occurs_at(network: SortingNetwork, pattern: Pattern, window: Window) -> bool:
    """Check one window against the occurrence definition."""
    total = len(network.swaps)
    if window.end > total or window.high > network.n - 1:
        raise ValueError(f"window {window} out of bounds for size-{network.n} network")
    a, b = window.low, window.high
    inside = []
    for k in range(window.start, window.end + 1):
        s = network.swaps[k - 1]
        if s == a - 1 or s == b + 1:
            return False
        if a <= s <= b:
            inside.append(s)
    expected = [g + a - 1 for g in pattern.swaps]
    return inside == expected


def find_occurrences(
    network: SortingNetwork, pattern: Pattern, widths: str = "canonical"
) -> list[Window]:
    """All minimal occurrence windows of the pattern.

    ``widths="canonical"`` scans windows of width size-1 (positions b-a =
    size-2) only; every wider occurrence shrinks to one of these, so the
    canonical scan already supports exact disjoint counting.  ``widths="all"``
    also reports minimal-time windows at every wider width.

    Time intervals are minimal: each reported window runs from its first to
    its last matched swap, so [i, j+1] is never reported when [i, j] already
    carries the same content.
    """
    if widths not in ("canonical", "all"):
        raise ValueError(f"unknown width policy {widths!r}")
    n = network.n
    length = len(pattern.swaps)
    out: list[Window] = []
    min_width = pattern.size - 1
    max_width = min_width if widths == "canonical" else n - 1
    for width in range(min_width, max_width + 1):
        # bucket each swap into the few positions whose window it touches:
        # s is an event for position a exactly when a-1 <= s <= a+width
        buckets: dict[int, list[tuple[int, int]]] = {
            a: [] for a in range(1, n - width + 1)
        }
        for k, s in enumerate(network.swaps, 1):
            for a in range(max(1, s - width), min(n - width, s + 1) + 1):
                buckets[a].append((k, s))
        for a, events in buckets.items():
            b = a + width - 1
            expected = tuple(g + a - 1 for g in pattern.swaps)
            for m in range(len(events) - length + 1):
                run = events[m : m + length]
                if all(s == e for (_, s), e in zip(run, expected)):
                    out.append(Window(run[0][0], run[-1][0], a, b))
    out.sort(key=lambda w: (w.low, w.start, w.end, w.high))
    return out


def count_disjoint_greedy(occurrences: Sequence[Window]) -> int:
    """Size of the disjoint subfamily picked by the (end, high) sweep.

    Windows are visited by increasing (end, high) and accepted whenever
    disjoint from everything accepted so far; always a lower bound for the
    exact count.
    """
    if not occurrences:
        return 0
    top = max(w.high for w in occurrences)
    last_end = [0] * (top + 1)  # per position: largest accepted end time
    count = 0
    for w in sorted(occurrences, key=lambda w: (w.end, w.high, w.start, w.low)):
        if max(last_end[w.low : w.high + 1]) < w.start:
            count += 1
            for p in range(w.low, w.high + 1):
                last_end[p] = w.end
    return count


def count_disjoint_exact(
    occurrences: Sequence[Window], cap: int = DISJOINT_EXACT_CAP
) -> int:
    """Exact maximum number of pairwise disjoint windows (branch and bound).

    Keeps only inclusion-minimal windows (any packing can swap a window for a
    minimal one nested inside it), builds the overlap graph, and searches
    most-constrained-first with a greedy clique-cover bound.
    """
    windows = _inclusion_minimal(occurrences)
    if len(windows) > cap:
        raise DisjointCountCapError(
            f"{len(windows)} windows exceed the exact cap {cap}; "
            "use count_disjoint_greedy for a lower bound"
        )
    k = len(windows)
    if k == 0:
        return 0
    conflicts = [set() for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if not windows[i].disjoint(windows[j]):
                conflicts[i].add(j)
                conflicts[j].add(i)

    best = 0

    def clique_cover_bound(alive: set[int]) -> int:
        rest = set(alive)
        cliques = 0
        while rest:
            seed = max(rest, key=lambda v: len(conflicts[v] & rest))
            clique = {seed}
            for v in sorted(rest - {seed}, key=lambda v: -len(conflicts[v] & rest)):
                if all(v in conflicts[u] for u in clique):
                    clique.add(v)
            rest -= clique
            cliques += 1
        return cliques

    def search(alive: set[int], chosen: int):
        nonlocal best
        if not alive:
            best = max(best, chosen)
            return
        if chosen + clique_cover_bound(alive) <= best:
            return
        v = max(alive, key=lambda u: len(conflicts[u] & alive))
        search(alive - conflicts[v] - {v}, chosen + 1)
        search(alive - {v}, chosen)

    search(set(range(k)), 0)
    return best


def _inclusion_minimal(occurrences: Sequence[Window]) -> list[Window]:
    windows = sorted(
        set(occurrences), key=lambda w: (w.end - w.start, w.high - w.low)
    )
    kept: list[Window] = []
    for w in windows:
        if not any(
            k.start >= w.start and k.end <= w.end and k.low >= w.low and k.high <= w.high
            for k in kept
            if k != w
        ):
            kept.append(w)
    return kept
