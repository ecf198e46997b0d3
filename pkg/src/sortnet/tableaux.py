"""Young diagrams and standard Young tableaux with exact hook-length combinatorics.

Diagrams are stored as weakly decreasing row-length tuples.  Boxes are 1-based
``(row, col)`` pairs.  Probabilities come in two backends: exact rationals
(:class:`fractions.Fraction`, the test oracle) and 64-bit floats computed from
the same hook-ratio products (the fast path).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

Box = tuple[int, int]

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class YoungDiagram:
    """A Young diagram given by its weakly decreasing row lengths."""

    rows: tuple[int, ...]

    def __init__(self, rows: Iterable[int]):
        rows = tuple(int(r) for r in rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"row lengths must be positive, got {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing, got {rows}")
        object.__setattr__(self, "rows", rows)

    @staticmethod
    def staircase(n: int) -> "YoungDiagram":
        """The staircase shape (n-1, n-2, ..., 1)."""
        if n < 1:
            raise ValueError("staircase size must be >= 1")
        return YoungDiagram(range(n - 1, 0, -1))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, box: Box) -> bool:
        i, j = box
        return 1 <= i <= len(self.rows) and 1 <= j <= self.rows[i - 1]

    def boxes(self) -> Iterator[Box]:
        """All boxes in row-major order."""
        for i, r in enumerate(self.rows, 1):
            for j in range(1, r + 1):
                yield (i, j)

    def transpose(self) -> "YoungDiagram":
        if not self.rows:
            return self
        cols = [sum(1 for r in self.rows if r >= j) for j in range(1, self.rows[0] + 1)]
        return YoungDiagram(cols)

    def column_lengths(self) -> tuple[int, ...]:
        return self.transpose().rows if self.rows else ()

    def to_json(self) -> dict:
        return {"rows": list(self.rows)}

    @staticmethod
    def from_json(data: Mapping) -> "YoungDiagram":
        return YoungDiagram(data["rows"])


def hook_length(diagram: YoungDiagram, box: Box) -> int:
    """Number of boxes in the hook of ``box``: itself, its arm and its leg."""
    if box not in diagram:
        raise ValueError(f"box {box} not in diagram {diagram.rows}")
    i, j = box
    cols = diagram.column_lengths()
    return diagram.rows[i - 1] - j + cols[j - 1] - i + 1


def dimension(diagram: YoungDiagram) -> int:
    """Number of standard tableaux of this shape (exact hook-length quotient)."""
    cols = diagram.column_lengths()
    prod = 1
    for i, r in enumerate(diagram.rows, 1):
        for j in range(1, r + 1):
            prod *= r - j + cols[j - 1] - i + 1
    return factorial(diagram.size) // prod


def corners(diagram: YoungDiagram) -> list[Box]:
    """Boxes whose removal leaves a Young diagram, in row-major order."""
    rows = diagram.rows
    out = []
    for i in range(1, len(rows) + 1):
        if i == len(rows) or rows[i] < rows[i - 1]:
            out.append((i, rows[i - 1]))
    return out


def cohook(diagram: YoungDiagram, box: Box) -> list[Box]:
    """Boxes strictly above in the same column, then strictly left in the same row."""
    if box not in diagram:
        raise ValueError(f"box {box} not in diagram {diagram.rows}")
    i, j = box
    return [(ip, j) for ip in range(1, i)] + [(i, jp) for jp in range(1, j)]


def _corner_weight_exact(diagram: YoungDiagram, cols: tuple[int, ...], box: Box) -> Fraction:
    i, j = box
    rows = diagram.rows
    p = Fraction(1, diagram.size)
    for ip in range(1, i):
        h = rows[ip - 1] - j + cols[j - 1] - ip + 1
        p *= Fraction(h, h - 1)
    for jp in range(1, j):
        h = rows[i - 1] - jp + cols[jp - 1] - i + 1
        p *= Fraction(h, h - 1)
    return p


def _corner_weight_float(diagram: YoungDiagram, cols: tuple[int, ...], box: Box) -> float:
    i, j = box
    rows = diagram.rows
    p = 1.0 / diagram.size
    for ip in range(1, i):
        h = rows[ip - 1] - j + cols[j - 1] - ip + 1
        p *= h / (h - 1.0)
    for jp in range(1, j):
        h = rows[i - 1] - jp + cols[jp - 1] - i + 1
        p *= h / (h - 1.0)
    return p


def corner_removal_distribution(
    diagram: YoungDiagram, exact: bool = False
) -> list[tuple[Box, Fraction | float]]:
    """Law of the largest entry's box in a uniform standard tableau.

    For each corner x the probability is ``(1/|λ|) * prod h(z)/(h(z)-1)`` over
    the co-hook of x.  Row-major corner order.  With ``exact=True`` the
    probabilities are Fractions summing to exactly 1.
    """
    if diagram.size == 0:
        raise ValueError("empty diagram has no corner distribution")
    cols = diagram.column_lengths()
    weight = _corner_weight_exact if exact else _corner_weight_float
    return [(box, weight(diagram, cols, box)) for box in corners(diagram)]


def corner_probability_ratio(diagram: YoungDiagram, x: Box, y: Box) -> float:
    """P(largest entry at x) / P(largest entry at y), both corners."""
    cs = corners(diagram)
    if x not in cs:
        raise ValueError(f"{x} is not a corner of {diagram.rows}")
    if y not in cs:
        raise ValueError(f"{y} is not a corner of {diagram.rows}")
    cols = diagram.column_lengths()
    return _corner_weight_float(diagram, cols, x) / _corner_weight_float(diagram, cols, y)


def subdiagram(diagram: YoungDiagram, corner: Box) -> YoungDiagram:
    """The translated diagram of boxes weakly south-east of ``corner``."""
    if corner not in diagram:
        raise ValueError(f"box {corner} not in diagram {diagram.rows}")
    i, j = corner
    rows = [r - j + 1 for r in diagram.rows[i - 1 :] if r >= j]
    return YoungDiagram(rows)


@dataclass(frozen=True)
class StandardTableau:
    """A bijective filling with 1..|λ|, increasing along rows and columns."""

    entries: tuple[tuple[int, ...], ...]
    shape: YoungDiagram = field(init=False, compare=False)

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        shape = YoungDiagram(len(r) for r in rows)
        values = [v for row in rows for v in row]
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError("entries must be exactly 1..|shape|")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must increase strictly")
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                if rows[i - 1][j] >= rows[i][j]:
                    raise ValueError("columns must increase strictly")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "shape", shape)

    @property
    def size(self) -> int:
        return self.shape.size

    def entry(self, box: Box) -> int:
        i, j = box
        return self.entries[i - 1][j - 1]

    def position(self, value: int) -> Box:
        """Box holding ``value`` (the inverse map)."""
        for i, row in enumerate(self.entries, 1):
            for j, v in enumerate(row, 1):
                if v == value:
                    return (i, j)
        raise ValueError(f"entry {value} not in tableau")

    def as_mapping(self) -> dict[Box, int]:
        return {(i, j): v for i, row in enumerate(self.entries, 1) for j, v in enumerate(row, 1)}

    def transpose(self) -> "StandardTableau":
        cols = self.shape.column_lengths()
        return StandardTableau(
            tuple(self.entries[i][j] for i in range(cols[j])) for j in range(len(cols))
        )

    def to_json(self) -> dict:
        return {"shape": list(self.shape.rows), "entries": [list(r) for r in self.entries]}

    @staticmethod
    def from_json(data: Mapping) -> "StandardTableau":
        tab = StandardTableau(data["entries"])
        if "shape" in data and tuple(data["shape"]) != tab.shape.rows:
            raise ValueError("shape field does not match entry rows")
        return tab

    @staticmethod
    def from_mapping(entries: Mapping[Box, int]) -> "StandardTableau":
        if not entries:
            return StandardTableau(())
        nrows = max(i for i, _ in entries)
        rows = []
        for i in range(1, nrows + 1):
            width = max((j for (r, j) in entries if r == i), default=0)
            rows.append(tuple(entries[(i, j)] for j in range(1, width + 1)))
        return StandardTableau(rows)

    def __str__(self) -> str:
        width = len(str(self.size))
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.entries)


@dataclass(frozen=True)
class SkewFilling:
    """A tableau with a top-left-justified empty region, encoded as entry 0.

    Nonzero entries increase along rows and columns; the zero region, when
    nonempty, is itself a Young diagram nested in the shape.  These are the
    intermediate states of the sliding algorithm.
    """

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        YoungDiagram(len(r) for r in rows)  # validates the shape
        zero_rows = []
        for row in rows:
            nz = [v for v in row if v != 0]
            k = len(row) - len(nz)
            if row[:k] != (0,) * k:
                raise ValueError("zeros must form a prefix of each row")
            zero_rows.append(k)
            if any(a >= b for a, b in zip(nz, nz[1:])):
                raise ValueError("nonzero entries must increase along rows")
        if any(a < b for a, b in zip(zero_rows, zero_rows[1:])):
            raise ValueError("the empty region must be a Young diagram")
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                above, here = rows[i - 1][j], rows[i][j]
                if above != 0 and here != 0 and above >= here:
                    raise ValueError("nonzero entries must increase down columns")
                if above != 0 and here == 0:
                    raise ValueError("the empty region must be top-left justified")
        object.__setattr__(self, "entries", rows)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(len(r) for r in self.entries)

    def empty_region(self) -> tuple[int, ...]:
        out = []
        for row in self.entries:
            k = sum(1 for v in row if v == 0)
            if k:
                out.append(k)
        return tuple(out)

    def as_mapping(self) -> dict[Box, int]:
        """Nonzero entries only."""
        return {
            (i, j): v
            for i, row in enumerate(self.entries, 1)
            for j, v in enumerate(row, 1)
            if v != 0
        }


def subtableau(tableau: StandardTableau, corner: Box) -> dict[Box, int]:
    """Restriction of the tableau to the subdiagram anchored at ``corner``.

    Boxes keep their original coordinates and entries keep their values.
    """
    if corner not in tableau.shape:
        raise ValueError(f"box {corner} not in shape {tableau.shape.rows}")
    i, j = corner
    return {
        (r, c): v for (r, c), v in tableau.as_mapping().items() if r >= i and c >= j
    }


Filling = StandardTableau | SkewFilling | Mapping[Box, int]


def _as_mapping(filling: Filling) -> Mapping[Box, int]:
    if isinstance(filling, (StandardTableau, SkewFilling)):
        return filling.as_mapping()
    return filling


def identically_ordered(first: Filling, second: Filling) -> bool:
    """True iff the supports are translates and entries induce the same order.

    Mismatched supports (no translation maps one onto the other) yield False
    rather than an error, so callers can scan many candidate windows.
    """
    s = _as_mapping(first)
    t = _as_mapping(second)
    if len(s) != len(t):
        return False
    if not s:
        return True
    sb = sorted(s)
    tb = sorted(t)
    di = tb[0][0] - sb[0][0]
    dj = tb[0][1] - sb[0][1]
    if any((i + di, j + dj) != b for (i, j), b in zip(sb, tb)):
        return False
    sv = [s[b] for b in sb]
    tv = [t[b] for b in tb]
    return _dense_ranks(sv) == _dense_ranks(tv)


def _dense_ranks(values: Sequence[int]) -> list[int]:
    lookup = {v: r for r, v in enumerate(sorted(set(values)))}
    return [lookup[v] for v in values]


def enumerate_syt(
    diagram: YoungDiagram, cap: int = ENUMERATION_CAP
) -> Iterator[StandardTableau]:
    """Yield every standard tableau of the given shape exactly once.

    Exhaustive oracle; refuses shapes above ``cap`` boxes.
    """
    if diagram.size > cap:
        raise ValueError(
            f"shape has {diagram.size} boxes, above the enumeration cap {cap}"
        )
    rows = diagram.rows
    if not rows:
        yield StandardTableau(())
        return
    grid = [[0] * r for r in rows]

    def fill(entry: int, frontier: list[int]) -> Iterator[StandardTableau]:
        if entry > diagram.size:
            yield StandardTableau(tuple(tuple(r) for r in grid))
            return
        for i in range(len(rows)):
            j = frontier[i]
            if j >= rows[i]:
                continue
            if i > 0 and frontier[i - 1] <= j:
                continue
            grid[i][j] = entry
            frontier[i] += 1
            yield from fill(entry + 1, frontier)
            frontier[i] -= 1

    yield from fill(1, [0] * len(rows))


def diagram_to_json_str(diagram: YoungDiagram) -> str:
    return json.dumps(diagram.to_json())


def tableau_to_json_str(tableau: StandardTableau) -> str:
    return json.dumps(tableau.to_json())
