"""Realizable sorting networks from rotating point configurations.

A labeled planar point set in general position yields a sorting network: as
the plane rotates by angles 0 to pi, each pair's connecting line becomes
vertical exactly once, swapping two adjacent labels in the left-to-right
order.  Networks obtained this way are geometrically realizable.

``certify_nonrealizable`` searches for an occurrence of a known
non-realizable size-5 network (the Goodman-Pollack pattern, shipped as
``data/gp5.json``) at a time interval starting at 1; such an occurrence
certifies that the whole network is not realizable, because the restriction
of a realizing configuration to the window's labels would realize the
pattern.  Absence of a witness is reported as inconclusive, never as
"realizable".
"""

from __future__ import annotations

import importlib.resources
import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .edelman_greene import SortingNetwork, validate_network
from .patterns import Window
from .sampling import SeededRng

DEFAULT_EPS = 1e-9
RESAMPLE_BUDGET = 1000


class GeneralPositionError(ValueError):
    """A configuration violates a general-position condition."""

    def __init__(self, violations: list[tuple]):
        self.violations = violations
        super().__init__(
            "general position violated: "
            + "; ".join(f"{kind} {who} ({value:.3g})" for kind, who, value in violations[:5])
            + ("" if len(violations) <= 5 else f" and {len(violations) - 5} more")
        )


@dataclass(frozen=True)
class PointConfiguration:
    """Planar points labeled 1..n by increasing x-coordinate."""

    points: tuple[tuple[float, float], ...]

    def __init__(self, points: Iterable[Iterable[float]]):
        pts = tuple(tuple(float(c) for c in p) for p in points)
        if any(len(p) != 2 for p in pts):
            raise ValueError("each point needs exactly two coordinates")
        if len(pts) < 2:
            raise ValueError("need at least two points")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @property
    def n(self) -> int:
        return len(self.points)

    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.float64)

    def to_json(self) -> dict:
        return {"points": [list(p) for p in self.points]}

    @staticmethod
    def from_json(data: Mapping) -> "PointConfiguration":
        return PointConfiguration(data["points"])


def _pair_angles(pts: np.ndarray) -> dict[tuple[int, int], float]:
    """Rotation angle in (0, pi) at which each labeled pair becomes vertical."""
    n = len(pts)
    out = {}
    for p in range(n):
        for q in range(p + 1, n):
            dx = pts[q, 0] - pts[p, 0]
            dy = pts[q, 1] - pts[p, 1]
            theta = math.atan2(dy, dx)
            out[(p + 1, q + 1)] = (math.pi / 2 - theta) % math.pi
    return out


def validate_general_position(
    config: PointConfiguration, eps: float = DEFAULT_EPS
) -> tuple[bool, list[tuple]]:
    """Check the three general-position conditions; report the violations.

    Conditions: no pair vertical at the start (pair angle at least eps away
    from 0 and pi), no two pairs parallel (angle separation >= eps, checked
    between angle-sorted neighbors), and no collinear triple (normalized
    triangle area >= eps, vectorized over all triples).
    """
    pts = config.array()
    violations: list[tuple] = []
    angles = _pair_angles(pts)
    for pair, phi in angles.items():
        margin = min(phi, math.pi - phi)
        if margin < eps:
            violations.append(("vertical-pair", pair, margin))
    by_angle = sorted(angles.items(), key=lambda item: item[1])
    for (e, phi), (f, psi) in zip(by_angle, by_angle[1:]):
        if psi - phi < eps:
            violations.append(("parallel-pairs", (e, f), psi - phi))
    n = len(pts)
    ii, jj, kk = _triple_indices(n)
    u = pts[jj] - pts[ii]
    v = pts[kk] - pts[ii]
    cross = np.abs(u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0])
    denom = np.hypot(u[:, 0], u[:, 1]) * np.hypot(v[:, 0], v[:, 1])
    areas = np.where(denom > 0, cross / np.where(denom > 0, denom, 1.0), 0.0)
    for idx in np.nonzero(areas < eps)[0]:
        violations.append(
            ("collinear", (int(ii[idx]) + 1, int(jj[idx]) + 1, int(kk[idx]) + 1),
             float(areas[idx]))
        )
    return (not violations, violations)


_TRIPLE_CACHE: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _triple_indices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if n not in _TRIPLE_CACHE:
        triples = list(itertools.combinations(range(n), 3))
        arr = np.array(triples, dtype=np.int64).reshape(-1, 3)
        _TRIPLE_CACHE[n] = (arr[:, 0], arr[:, 1], arr[:, 2])
    return _TRIPLE_CACHE[n]


def realize_network(
    config: PointConfiguration, eps: float = DEFAULT_EPS
) -> SortingNetwork:
    """Sweep the rotation angles and read off the realized sorting network.

    Rejects configurations violating general position, naming the offending
    pairs or triple.  Every swap is asserted to act on an adjacent pair of
    the running permutation.
    """
    ok, violations = validate_general_position(config, eps)
    if not ok:
        raise GeneralPositionError(violations)
    n = config.n
    angles = _pair_angles(config.array())
    events = sorted(angles.items(), key=lambda item: item[1])
    position = list(range(n + 1))  # label -> position, 1-based
    swaps = []
    for (p, q), _phi in events:
        sp, sq = position[p], position[q]
        if abs(sp - sq) != 1:
            raise GeneralPositionError(
                [("non-adjacent-swap", (p, q), float(abs(sp - sq)))]
            )
        swaps.append(min(sp, sq))
        position[p], position[q] = sq, sp
    return SortingNetwork(n, swaps)


def sample_random_configuration(
    n: int,
    rng: SeededRng,
    eps: float = DEFAULT_EPS,
    budget: int = RESAMPLE_BUDGET,
) -> PointConfiguration:
    """I.i.d. uniform points in the unit square, resampled into general position."""
    if n < 2:
        raise ValueError("need at least two points")
    gen = rng.generator()
    for _ in range(budget):
        config = PointConfiguration(gen.random((n, 2)))
        if validate_general_position(config, eps)[0]:
            return config
    raise RuntimeError(f"no general-position sample within {budget} attempts")


# --- vectorized mass realization (oracle machinery) ---------------------------


def batch_realize(points: np.ndarray, margin: float = 1e-9) -> np.ndarray:
    """Realize many configurations at once; degenerate rows come back as -1.

    points: (batch, n, 2).  Returns (batch, C(n,2)) swap positions.  For each
    pair the critical angle is phi = pi/2 - atan2(dy, dx); the swap position
    is one plus the number of other points strictly left at that angle.  Rows
    whose angle gaps or rank margins fall below ``margin`` are marked
    degenerate rather than risking a misordered sweep.
    """
    pts = np.asarray(points, dtype=np.float64)
    batch, n, _ = pts.shape
    order = np.argsort(pts[:, :, 0], axis=1)
    pts = np.take_along_axis(pts, order[:, :, None], axis=1)
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    ii = np.array([p for p, _ in pairs])
    jj = np.array([q for _, q in pairs])
    d = pts[:, jj, :] - pts[:, ii, :]
    phi = np.pi / 2 - np.arctan2(d[:, :, 1], d[:, :, 0])  # in (0, pi): dx > 0
    cos, sin = np.cos(phi), np.sin(phi)
    proj = pts[:, None, :, 0] * cos[:, :, None] - pts[:, None, :, 1] * sin[:, :, None]
    pair_proj = np.take_along_axis(
        proj, np.broadcast_to(ii[None, :, None], (batch, len(pairs), 1)), axis=2
    )[:, :, 0]
    diff = proj - pair_proj[:, :, None]
    below = (diff < -margin).sum(axis=2)
    swaps = below + 1
    # rank margin: every non-pair point must be clearly off the critical line
    others = np.abs(diff)
    mask = np.ones((batch, len(pairs), n), dtype=bool)
    mask[:, np.arange(len(pairs)), ii] = False
    mask[:, np.arange(len(pairs)), jj] = False
    rank_margin = np.where(mask, others, np.inf).min(axis=(1, 2))
    order_phi = np.argsort(phi, axis=1)
    result = np.take_along_axis(swaps, order_phi, axis=1)
    sorted_phi = np.take_along_axis(phi, order_phi, axis=1)
    gap = np.diff(sorted_phi, axis=1).min(axis=1)
    edge = np.minimum(sorted_phi[:, 0], np.pi - sorted_phi[:, -1])
    bad = (gap < margin) | (edge < margin) | (rank_margin < margin)
    result[bad] = -1
    return result


def rotate_sweep_start(network: SortingNetwork) -> SortingNetwork:
    """The network realized by the same configuration rotated past its first event.

    Sweeping a half-turn past an event replays it at the mirrored position,
    so realizable networks are closed under this shift.
    """
    s = network.swaps
    return SortingNetwork(network.n, s[1:] + (network.n - s[0],))


# --- the non-realizable pattern and its certificate ---------------------------


def goodman_pollack_pattern() -> SortingNetwork:
    """The shipped non-realizable size-5 network."""
    data = json.loads(
        importlib.resources.files("sortnet").joinpath("data/gp5.json").read_text()
    )
    return SortingNetwork(data["n"], data["swaps"])


def load_pattern_file(path) -> SortingNetwork:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return SortingNetwork(data["n"], data["swaps"])


def certify_nonrealizable(
    network: SortingNetwork,
    pattern: SortingNetwork | None = None,
    widths: str = "canonical",
) -> Window | None:
    """Search for the pattern at a time interval starting at 1.

    Returns the witness window if found: the network is then certifiably not
    realizable.  ``None`` means inconclusive.  ``widths="all"`` also scans
    windows wider than the canonical size-1 width (redundant in principle,
    since a wider occurrence always shrinks to a canonical one, but kept for
    cross-checking at a documented extra cost of a factor of n).
    """
    if widths not in ("canonical", "all"):
        raise ValueError(f"unknown width policy {widths!r}")
    gp = pattern if pattern is not None else goodman_pollack_pattern()
    k = gp.n
    n = network.n
    if n < k:
        return None
    expected_len = len(gp.swaps)
    min_width = k - 1
    max_width = min_width if widths == "canonical" else n - 1
    best: Window | None = None
    for width in range(min_width, max_width + 1):
        # one pass over the swaps, advancing a match counter per position;
        # -1 marks positions whose prefix already failed
        matched = [0] * (n - width + 1)  # index = position a - 1
        alive = n - width
        for t, s in enumerate(network.swaps, 1):
            if best is not None and t >= best.end:
                break
            if alive == 0:
                break
            for a in range(max(1, s - width), min(n - width, s + 1) + 1):
                m = matched[a - 1]
                if m < 0:
                    continue
                if s == a - 1 or s == a + width:
                    matched[a - 1] = -1
                    alive -= 1
                elif s == gp.swaps[m] + a - 1:
                    matched[a - 1] = m + 1
                    if m + 1 == expected_len:
                        window = Window(1, t, a, a + width - 1)
                        if best is None or (window.end, window.low) < (best.end, best.low):
                            best = window
                        matched[a - 1] = -1
                        alive -= 1
                else:
                    matched[a - 1] = -1
                    alive -= 1
    return best


# --- cross-check oracle for the shipped pattern --------------------------------


@dataclass(frozen=True)
class GpCheckResult:
    passed: bool
    pattern_valid: bool
    realized_hits: int
    samples: int
    distinct_realized: int

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict}: pattern valid={self.pattern_valid}, realized "
            f"{self.realized_hits} times in {self.samples} random 5-point "
            f"configurations ({self.distinct_realized} distinct networks seen)"
        )


def gp_check(
    samples: int = 1_000_000,
    seed: int = 0,
    pattern: SortingNetwork | None = None,
    batch: int = 100_000,
) -> GpCheckResult:
    """Validate the shipped pattern: a real size-5 network, never realized.

    Realizes ``samples`` uniform 5-point configurations in bulk and counts
    how often the pattern shows up (it must not, ever).
    """
    gp = pattern if pattern is not None else goodman_pollack_pattern()
    valid = gp.n == 5 and validate_network(gp.swaps, 5)
    gen = SeededRng(seed).generator()
    hits = 0
    seen: set[tuple[int, ...]] = set()
    target = tuple(gp.swaps)
    done = 0
    while done < samples:
        b = min(batch, samples - done)
        nets = batch_realize(gen.random((b, 5, 2)))
        for row in nets:
            if row[0] < 0:
                continue
            t = tuple(int(x) for x in row)
            seen.add(t)
            if t == target:
                hits += 1
        done += b
    return GpCheckResult(
        passed=valid and hits == 0,
        pattern_valid=valid,
        realized_hits=hits,
        samples=samples,
        distinct_realized=len(seen),
    )


def derive_nonrealizable_networks(
    samples_per_round: int = 200_000, rounds: int = 10, seed: int = 2024
) -> list[tuple[int, ...]]:
    """Recompute the never-realized size-5 networks from scratch.

    Enumerates all 768 size-5 networks, realizes large batches from several
    point distributions, closes the realized set under the sweep-start
    rotation, and returns the sorted complement.  This is the procedure that
    produced the shipped ``gp5.json``.
    """
    from .tableaux import YoungDiagram, enumerate_syt
    from .edelman_greene import eg_forward

    all_nets = {
        eg_forward(t).swaps for t in enumerate_syt(YoungDiagram.staircase(5))
    }
    gen = SeededRng(seed).generator()
    realized: set[tuple[int, ...]] = set()

    def feed(pts: np.ndarray):
        for row in batch_realize(pts):
            if row[0] > 0:
                realized.add(tuple(int(x) for x in row))

    for _ in range(rounds):
        b = samples_per_round
        feed(gen.random((b, 5, 2)))
        feed(gen.normal(size=(b, 5, 2)))
        stretched = gen.random((b, 5, 2))
        stretched[:, :, 0] *= gen.uniform(0.02, 50.0, size=(b, 1))
        feed(stretched)
        ang = gen.uniform(0, 2 * np.pi, size=(b, 5))
        rad = 1.0 + 0.05 * gen.normal(size=(b, 5))
        feed(np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=-1))
    # close under the rotation symmetry
    frontier = list(realized)
    while frontier:
        w = frontier.pop()
        shifted = w[1:] + (5 - w[0],)
        if shifted not in realized:
            realized.add(shifted)
            frontier.append(shifted)
    if not realized <= all_nets:
        raise RuntimeError("batch realizer produced a non-network; margins too loose")
    return sorted(all_nets - realized)
