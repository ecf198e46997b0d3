"""Experiment drivers reproducing the three main theorems at desk scale.

Each driver samples uniformly random tableaux or networks at several sizes
and reports the measured counts.  The headline constants of the theorems are
existential, so the drivers report scaling trends, never specific constants.

Reports are a pure function of (parameters, seed, artifact version); the
wall-clock entry lives under ``meta`` and is excluded from that contract.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .edelman_greene import eg_forward
from .geometry import SortingNetwork, certify_nonrealizable, goodman_pollack_pattern
from .patterns import Pattern, count_disjoint_greedy, find_occurrences
from .sampling import SeededRng, sample_random_network, sample_uniform_syt
from .tableaux import (
    StandardTableau,
    YoungDiagram,
    enumerate_syt,
    identically_ordered,
    subtableau,
)


@dataclass(frozen=True)
class DiagonalMotifLayout:
    """Disjoint staircase-k subdiagrams packed along the border diagonal.

    ``count`` = floor((n-1) / (2k-2)) subdiagrams are placed snugly against
    the anti-diagonal of staircase(n), occupying consecutive column blocks of
    width k-1 starting right after column floor(n/4).
    """

    k: int
    n: int
    count: int = field(init=False)
    anchors: tuple[tuple[int, int], ...] = field(init=False)

    def __post_init__(self):
        k, n = self.k, self.n
        if k < 2:
            raise ValueError("motif size must be at least 2")
        if n < 4 * (k - 1):
            raise ValueError(f"ambient size {n} too small for motif size {k}")
        m = (n - 1) // (2 * k - 2)
        offset = n // 4
        anchors = []
        for a in range(m):
            j = offset + 1 + a * (k - 1)
            i = n - j - k + 2
            if i < 1:
                raise ValueError(f"ambient size {n} too small for motif size {k}")
            anchors.append((i, j))
        object.__setattr__(self, "count", m)
        object.__setattr__(self, "anchors", tuple(anchors))

    @property
    def columns_used(self) -> int:
        return self.count * (self.k - 1)

    def boxes(self, anchor: tuple[int, int]) -> list[tuple[int, int]]:
        i0, j0 = anchor
        return [
            (i0 + r, j0 + c)
            for r in range(self.k - 1)
            for c in range(self.k - 1 - r)
        ]


def _stats(raw: Sequence[float]) -> dict:
    mean = sum(raw) / len(raw)
    var = sum((x - mean) ** 2 for x in raw) / (len(raw) - 1) if len(raw) > 1 else 0.0
    return {
        "mean": mean,
        "sd": math.sqrt(var),
        "min": min(raw),
        "max": max(raw),
    }


@dataclass
class ExperimentReport:
    experiment: str
    params: dict
    per_n: list[dict]
    meta: dict

    def to_json(self) -> dict:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "per_n": self.per_n,
            "meta": self.meta,
        }

    def to_json_str(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json(), indent=indent, sort_keys=True)

    @staticmethod
    def from_json(data: dict) -> "ExperimentReport":
        return ExperimentReport(
            data["experiment"], data["params"], data["per_n"], data["meta"]
        )

    def to_csv_str(self) -> str:
        """Lossless CSV: a header comment carries everything but the table."""
        head = {
            "experiment": self.experiment,
            "params": self.params,
            "meta": self.meta,
        }
        buf = io.StringIO()
        buf.write("# " + json.dumps(head, sort_keys=True) + "\n")
        columns = sorted({key for row in self.per_n for key in row})
        writer = csv.DictWriter(buf, fieldnames=columns)
        writer.writeheader()
        for row in self.per_n:
            flat = {
                k: json.dumps(v) if isinstance(v, (list, dict)) else v
                for k, v in row.items()
            }
            writer.writerow(flat)
        return buf.getvalue()

    @staticmethod
    def from_csv_str(text: str) -> "ExperimentReport":
        lines = text.splitlines()
        head = json.loads(lines[0].lstrip("# "))
        reader = csv.DictReader(io.StringIO("\n".join(lines[1:])))
        per_n = []
        for row in reader:
            parsed = {}
            for k, v in row.items():
                if v is None or v == "":
                    continue
                try:
                    parsed[k] = json.loads(v)
                except json.JSONDecodeError:
                    parsed[k] = v
            per_n.append(parsed)
        return ExperimentReport(head["experiment"], head["params"], per_n, head["meta"])


def _finish(experiment: str, params: dict, per_n: list[dict], t0: float) -> ExperimentReport:
    meta = {"version": __version__, "wall_clock_seconds": round(time.time() - t0, 3)}
    return ExperimentReport(experiment, params, per_n, meta)


def experiment_theorem1(
    pattern: Pattern,
    n_values: Sequence[int],
    samples: int,
    seed: int,
    prefix_factor: float = 4.0,
) -> ExperimentReport:
    """Greedy disjoint-occurrence counts of a pattern in uniform networks.

    Per network: the greedy disjoint count over all canonical-width
    occurrences (reported as count and count/n^2), and the same count
    restricted to windows inside the time prefix [1, ceil(prefix_factor*n)]
    (reported as count/n).  Greedy is a valid lower bound and the theorem is
    a lower bound, so no exact packing is attempted at scale.
    """
    t0 = time.time()
    if min(n_values) < pattern.size:
        raise ValueError("pattern size exceeds the smallest network size")
    base = SeededRng(seed)
    per_n = []
    stream = 0
    for n in n_values:
        counts, prefix_counts = [], []
        horizon = math.ceil(prefix_factor * n)
        for _ in range(samples):
            network = sample_random_network(n, base.substream(stream))
            stream += 1
            occs = find_occurrences(network, pattern)
            counts.append(count_disjoint_greedy(occs))
            prefix_counts.append(
                count_disjoint_greedy([w for w in occs if w.end <= horizon])
            )
        row = {"n": n, "raw": counts, **_stats(counts)}
        row["mean_over_n2"] = row["mean"] / (n * n)
        row["prefix_raw"] = prefix_counts
        row["prefix_mean"] = sum(prefix_counts) / samples
        row["prefix_mean_over_n"] = row["prefix_mean"] / n
        per_n.append(row)
    params = {
        "pattern": list(pattern.swaps),
        "n_values": list(n_values),
        "samples": samples,
        "seed": seed,
        "prefix_factor": prefix_factor,
    }
    return _finish("t1", params, per_n, t0)


def experiment_theorem2(
    motif: StandardTableau,
    n_values: Sequence[int],
    samples: int,
    seed: int,
    entry_cutoff: float | None = None,
) -> ExperimentReport:
    """Count diagonal motif copies in uniform staircase tableaux.

    For each sampled tableau, count how many of the layout's subdiagrams
    carry a subtableau identically ordered with the motif.  The distribution
    of (N - minimum entry) over qualifying copies is recorded; if
    ``entry_cutoff`` c is given, copies additionally need every entry greater
    than N - c*n to qualify.
    """
    t0 = time.time()
    k = len(motif.shape.rows) + 1
    if motif.shape.rows != tuple(range(k - 1, 0, -1)):
        raise ValueError("motif must have staircase shape")
    base = SeededRng(seed)
    per_n = []
    stream = 0
    for n in n_values:
        layout = DiagonalMotifLayout(k, n)
        total_boxes = n * (n - 1) // 2
        threshold = None if entry_cutoff is None else total_boxes - entry_cutoff * n
        counts = []
        min_entry_gaps = []
        for _ in range(samples):
            tableau = sample_uniform_syt(
                YoungDiagram.staircase(n), base.substream(stream)
            )
            stream += 1
            hits = 0
            for anchor in layout.anchors:
                sub = subtableau(tableau, anchor)
                if not identically_ordered(sub, motif):
                    continue
                smallest = min(sub.values())
                if threshold is not None and smallest <= threshold:
                    continue
                hits += 1
                min_entry_gaps.append(total_boxes - smallest)
            counts.append(hits)
        row = {"n": n, "anchors": layout.count, "raw": counts, **_stats(counts)}
        row["min_entry_gaps"] = sorted(min_entry_gaps)
        per_n.append(row)
    params = {
        "motif": motif.to_json(),
        "n_values": list(n_values),
        "samples": samples,
        "seed": seed,
        "entry_cutoff": entry_cutoff,
    }
    return _finish("t2", params, per_n, t0)


def experiment_theorem3(
    n_values: Sequence[int],
    samples: int,
    seed: int,
    pattern: SortingNetwork | None = None,
) -> ExperimentReport:
    """Fraction of uniform networks carrying a non-realizability certificate."""
    t0 = time.time()
    gp = pattern if pattern is not None else goodman_pollack_pattern()
    base = SeededRng(seed)
    per_n = []
    stream = 0
    for n in n_values:
        hits = 0
        for _ in range(samples):
            network = sample_random_network(n, base.substream(stream))
            stream += 1
            if certify_nonrealizable(network, gp) is not None:
                hits += 1
        fraction = hits / samples
        sigma = math.sqrt(fraction * (1 - fraction) / samples)
        per_n.append(
            {
                "n": n,
                "samples": samples,
                "certified": hits,
                "fraction": fraction,
                "sigma": sigma,
                "ci95": [max(0.0, fraction - 1.96 * sigma), min(1.0, fraction + 1.96 * sigma)],
            }
        )
    params = {
        "n_values": list(n_values),
        "samples": samples,
        "seed": seed,
        "pattern": list(gp.swaps),
    }
    return _finish("t3", params, per_n, t0)


def experiment_stationarity(n: int) -> ExperimentReport:
    """Exhaustive check that swap-position frequencies match at every time.

    Enumerates every network of size n (n <= 5) through the bijection and
    compares the integer frequency vector of s_t across all times t; the
    contract is exact equality between times 1 and 2, and the full table is
    reported as a stronger diagnostic.
    """
    t0 = time.time()
    if n < 2 or n > 5:
        raise ValueError("exhaustive stationarity check needs 2 <= n <= 5")
    total = n * (n - 1) // 2
    freq = [[0] * (n - 1) for _ in range(total)]
    count = 0
    for tableau in enumerate_syt(YoungDiagram.staircase(n), cap=12):
        network = eg_forward(tableau)
        count += 1
        for t, s in enumerate(network.swaps):
            freq[t][s - 1] += 1
    all_equal = all(freq[t] == freq[0] for t in range(total))
    per_n = [
        {
            "n": n,
            "networks": count,
            "frequencies": freq,
            "first_two_equal": freq[0] == freq[1] if total > 1 else True,
            "all_times_equal": all_equal,
        }
    ]
    return _finish("stationarity", {"n": n}, per_n, t0)


def canonical_motif(k: int) -> StandardTableau:
    """The row-reading staircase tableau of size k (rows filled in order)."""
    rows = []
    value = 0
    for r in range(k - 1, 0, -1):
        rows.append(tuple(range(value + 1, value + r + 1)))
        value += r
    return StandardTableau(rows)
