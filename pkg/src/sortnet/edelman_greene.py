"""The bijection between staircase standard tableaux and sorting networks.

Forward direction: repeatedly read off the column of the maximal entry and
slide the freed box toward the top-left along the greedy larger-neighbor path
(out-of-diagram and vacated boxes both count as 0, which makes the comparison
uniform and lets a 0-0 tie terminate the path).

Inverse direction: the recording tableau of Coxeter-Knuth insertion applied to
the reversed swap sequence.  The forward step map is not injective on
intermediate skew states, so the inverse cannot be recovered by undoing slides
one step at a time; the insertion description is exact and is locked down by
the exhaustive and sampled round-trip suites.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels
from .tableaux import SkewFilling, StandardTableau


@dataclass(frozen=True)
class SortingNetwork:
    """A sequence of C(n,2) adjacent swaps composing to the reverse permutation."""

    n: int
    swaps: tuple[int, ...]

    def __init__(self, n: int, swaps: Iterable[int]):
        swaps = tuple(int(s) for s in swaps)
        if not validate_network(swaps, n):
            raise ValueError(f"not a sorting network of size {n}: {swaps}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "swaps", swaps)

    def __len__(self) -> int:
        return len(self.swaps)

    def to_json(self) -> dict:
        return {"n": self.n, "swaps": list(self.swaps)}

    @staticmethod
    def from_json(data: Mapping) -> "SortingNetwork":
        return SortingNetwork(data["n"], data["swaps"])


def validate_network(swaps: Sequence[int], n: int) -> bool:
    """True iff the swap sequence has length C(n,2), stays in range, and
    composes to the reverse permutation."""
    if n < 1 or len(swaps) != n * (n - 1) // 2:
        return False
    occupants = list(range(1, n + 1))
    for s in swaps:
        if not 1 <= s <= n - 1:
            return False
        occupants[s - 1], occupants[s] = occupants[s], occupants[s - 1]
    return occupants == list(range(n, 0, -1))


def _require_staircase(tableau: StandardTableau) -> int:
    rows = tableau.shape.rows
    n = len(rows) + 1
    if rows != tuple(range(n - 1, 0, -1)):
        raise ValueError(f"expected a staircase shape, got {rows}")
    return n


def eg_forward(tableau: StandardTableau) -> SortingNetwork:
    """Map a staircase standard tableau to its sorting network."""
    n = _require_staircase(tableau)
    if n == 1:
        return SortingNetwork(1, ())
    total = n * (n - 1) // 2
    grid = np.zeros((n - 1, n - 1), np.int64)
    pos_row = np.zeros(total + 1, np.int64)
    pos_col = np.zeros(total + 1, np.int64)
    for (i, j), v in tableau.as_mapping().items():
        grid[i - 1, j - 1] = v
        pos_row[v] = i - 1
        pos_col[v] = j - 1
    swaps = np.zeros(total, np.int64)
    err = _kernels.eg_forward_kernel(grid, pos_row, pos_col, n, swaps)
    if err == _kernels.ERR_OFF_BORDER:
        raise RuntimeError("maximal entry left the border anti-diagonal")
    return SortingNetwork(n, swaps.tolist())


def eg_forward_states(tableau: StandardTableau) -> Iterator[tuple[int, SkewFilling]]:
    """Reference forward pass yielding (emitted swap, state after the slide).

    Pure-Python mirror of the compiled kernel, for inspection and tests.
    """
    n = _require_staircase(tableau)
    total = n * (n - 1) // 2
    grid = [list(row) for row in tableau.entries]
    pos = {v: box for box, v in tableau.as_mapping().items()}

    def value(i: int, j: int) -> int:
        if i < 1 or j < 1 or i + j > n:
            return 0
        return grid[i - 1][j - 1]

    for t in range(1, total + 1):
        i, j = pos[total - t + 1]
        assert i + j == n, "maximal entry must sit on the border"
        emitted = j
        while True:
            up = value(i - 1, j)
            left = value(i, j - 1)
            if up == 0 and left == 0:
                grid[i - 1][j - 1] = 0
                break
            if up > left:
                grid[i - 1][j - 1] = up
                pos[up] = (i, j)
                i -= 1
            else:
                grid[i - 1][j - 1] = left
                pos[left] = (i, j)
                j -= 1
        yield emitted, SkewFilling(tuple(tuple(row) for row in grid))


def _ck_insert(word: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Coxeter-Knuth insertion; returns the insertion and recording tableaux."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for time, letter in enumerate(word, 1):
        x = letter
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([time])
                break
            row = p_rows[r]
            idx = -1
            for k, y in enumerate(row):
                if y > x:
                    idx = k
                    break
            if idx == -1:
                row.append(x)
                q_rows[r].append(time)
                break
            y = row[idx]
            if y == x + 1 and x in row:
                x = y  # both x and x+1 present: row unchanged, bump x+1
            else:
                row[idx] = x
                x = y
            r += 1
    return p_rows, q_rows


def eg_inverse(network: SortingNetwork) -> StandardTableau:
    """The unique staircase tableau mapping to ``network`` under eg_forward."""
    n = network.n
    if n == 1:
        return StandardTableau(())
    p_rows, q_rows = _ck_insert(tuple(reversed(network.swaps)))
    for i, row in enumerate(p_rows, 1):
        if row != list(range(i, i + len(row))):
            raise ValueError(f"swap sequence is not a sorting network: {network.swaps}")
    return StandardTableau(tuple(tuple(r) for r in q_rows))


# --- wiring diagrams ---------------------------------------------------------

_SVG_SCALE = 24
_SVG_MARGIN = 30
_WIRE_COLORS = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


def render_wiring_diagram(network: SortingNetwork) -> bytes:
    """Render the network as an SVG wiring diagram.

    One polyline per wire; the swap at time k draws a cross at grid point
    (k, s_k); the y axis increases upward as in the usual pictures.
    """
    n = network.n
    total = len(network.swaps)

    def xpix(x: float) -> float:
        return _SVG_MARGIN + x * _SVG_SCALE

    def ypix(y: float) -> float:
        return _SVG_MARGIN + (n - y) * _SVG_SCALE  # flip: larger position higher

    # wire w occupies a position at each time; record its polyline vertices
    position_of = list(range(n + 1))  # wire -> position, 1-based
    wire_at = list(range(n + 1))  # position -> wire
    points: list[list[tuple[float, float]]] = [[] for _ in range(n + 1)]
    for w in range(1, n + 1):
        points[w].append((0.0, float(w)))
    for k, s in enumerate(network.swaps, 1):
        lo, hi = wire_at[s], wire_at[s + 1]
        for w, src, dst in ((lo, s, s + 1), (hi, s + 1, s)):
            points[w].append((k - 0.5, float(src)))
            points[w].append((k + 0.5, float(dst)))
        wire_at[s], wire_at[s + 1] = hi, lo
        position_of[lo], position_of[hi] = s + 1, s
    for w in range(1, n + 1):
        points[w].append((total + 1.0, float(position_of[w])))

    width = xpix(total + 1) + _SVG_MARGIN
    height = ypix(1) + _SVG_MARGIN
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for w in range(1, n + 1):
        pts = " ".join(f"{xpix(x):.1f},{ypix(y):.1f}" for x, y in points[w])
        color = _WIRE_COLORS[(w - 1) % len(_WIRE_COLORS)]
        lines.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        x0, y0 = points[w][0]
        lines.append(
            f'<text x="{xpix(x0) - 18:.1f}" y="{ypix(y0) + 4:.1f}" '
            f'font-size="12" font-family="sans-serif">{w}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines).encode("utf-8")


def network_to_json_str(network: SortingNetwork) -> str:
    return json.dumps(network.to_json())
