"""Uniform random standard tableaux via the shrinking-diagram Markov chain.

Each step removes a corner of the current diagram, drawn from the exact
largest-entry law, and assigns the entries |λ|, |λ|-1, ..., 1 in removal
order.  The resulting tableau is exactly uniform.

Randomness comes from Philox (a counter-based generator): the stream keyed by
``(seed, stream)`` is platform-independent and substreams are free, so batches
are reproducible regardless of worker scheduling.  Each chain step consumes
exactly one uniform variate, by inverse CDF over the corners in row-major
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .edelman_greene import SortingNetwork, eg_forward
from .tableaux import (
    Box,
    StandardTableau,
    YoungDiagram,
    corner_removal_distribution,
)


@dataclass(frozen=True)
class SeededRng:
    """A (seed, stream) pair naming one Philox substream."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        mask = (1 << 64) - 1
        key = np.array([self.seed & mask, self.stream & mask], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def substream(self, index: int) -> "SeededRng":
        return SeededRng(self.seed, self.stream + index)


class ChainDriftError(RuntimeError):
    """Float corner probabilities stopped summing to 1 within 1e-9."""


def _run_chain(
    diagram: YoungDiagram, uniforms: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rows = np.asarray(diagram.rows, np.int64)
    cols = np.asarray(diagram.column_lengths(), np.int64)
    steps = len(uniforms)
    out_row = np.zeros(steps, np.int64)
    out_col = np.zeros(steps, np.int64)
    out_prob = np.zeros(steps, np.float64)
    err = _kernels.chain_kernel(rows, cols, uniforms, out_row, out_col, out_prob)
    if err == _kernels.ERR_DRIFT:
        raise ChainDriftError(
            "corner probabilities drifted beyond 1e-9; diagram too large or corrupt"
        )
    if err == _kernels.ERR_EXHAUSTED:
        raise ValueError("more chain steps requested than boxes available")
    return out_row, out_col, out_prob


@dataclass
class ShrinkingChain:
    """The decreasing-diagram chain underlying uniform tableau sampling.

    Tracks the current diagram, the step count, and the removal history.
    ``advance`` runs a batch of steps; ``step_distribution`` exposes the exact
    or float law of the next removal.
    """

    current: YoungDiagram
    step: int = 0
    history: list[Box] | None = None

    def __post_init__(self):
        if self.history is None:
            self.history = []

    def step_distribution(self, exact: bool = False):
        return corner_removal_distribution(self.current, exact=exact)

    def advance(self, rng: SeededRng, steps: int | None = None) -> list[Box]:
        """Remove ``steps`` corners (default: all), returning the removed boxes."""
        remaining = self.current.size
        if steps is None:
            steps = remaining
        if steps > remaining:
            raise ValueError(f"cannot remove {steps} boxes from {remaining}")
        uniforms = rng.generator().random(steps)
        out_row, out_col, _ = _run_chain(self.current, uniforms)
        removed = [(int(r), int(c)) for r, c in zip(out_row, out_col)]
        rows = list(self.current.rows)
        for r, _ in removed:
            rows[r - 1] -= 1
        self.current = YoungDiagram([r for r in rows if r > 0])
        self.step += steps
        self.history.extend(removed)
        return removed


def chain_log_probability(diagram: YoungDiagram, removals: list[Box]) -> Fraction:
    """Exact probability of a full removal sequence, as a Fraction.

    Multiplies the exact per-step corner laws along the given removal order;
    for a removal order coming from a standard tableau this equals
    1/dimension(shape).
    """
    prob = Fraction(1)
    rows = list(diagram.rows)
    for box in removals:
        current = YoungDiagram([r for r in rows if r > 0])
        dist = dict(corner_removal_distribution(current, exact=True))
        if box not in dist:
            raise ValueError(f"{box} is not a corner at this step")
        prob *= dist[box]
        rows[box[0] - 1] -= 1
    return prob


def sample_uniform_syt(diagram: YoungDiagram, rng: SeededRng) -> StandardTableau:
    """Draw a uniformly random standard tableau of the given shape."""
    size = diagram.size
    if size == 0:
        raise ValueError("cannot sample a tableau of the empty shape")
    uniforms = rng.generator().random(size)
    out_row, out_col, _ = _run_chain(diagram, uniforms)
    grid = [[0] * r for r in diagram.rows]
    for t in range(size):
        grid[out_row[t] - 1][out_col[t] - 1] = size - t
    return StandardTableau(tuple(tuple(r) for r in grid))


def sample_chain_probabilities(diagram: YoungDiagram, rng: SeededRng) -> np.ndarray:
    """Per-step chosen-corner probabilities of one sampled chain (float path)."""
    size = diagram.size
    uniforms = rng.generator().random(size)
    _, _, out_prob = _run_chain(diagram, uniforms)
    return out_prob


def sample_random_network(n: int, rng: SeededRng) -> SortingNetwork:
    """Draw a uniformly random sorting network of size n."""
    if n < 2:
        raise ValueError("network size must be at least 2")
    return eg_forward(sample_uniform_syt(YoungDiagram.staircase(n), rng))


def sample_batch(diagram: YoungDiagram, count: int, seed: int) -> list[StandardTableau]:
    """Deterministic batch: sample i uses substream i of the seed."""
    if count < 1:
        raise ValueError("count must be >= 1")
    base = SeededRng(seed)
    return [sample_uniform_syt(diagram, base.substream(i)) for i in range(count)]


def sample_network_batch(n: int, count: int, seed: int) -> list[SortingNetwork]:
    """Deterministic batch of uniform networks, one substream per sample."""
    if count < 1:
        raise ValueError("count must be >= 1")
    base = SeededRng(seed)
    return [sample_random_network(n, base.substream(i)) for i in range(count)]


def random_subdiagram(
    diagram: YoungDiagram, rng: SeededRng, steps: int | None = None
) -> YoungDiagram:
    """A random sub-diagram: run the chain a number of steps and keep the rest.

    With ``steps=None`` a uniform number of removals in [0, |λ|) is drawn
    first.  Useful for property tests over diagrams nested in a staircase.
    """
    gen = rng.generator()
    size = diagram.size
    if steps is None:
        steps = int(gen.integers(0, size))
    if steps == 0:
        return diagram
    uniforms = gen.random(steps)
    out_row, _, _ = _run_chain(diagram, uniforms)
    rows = list(diagram.rows)
    for r in out_row:
        rows[r - 1] -= 1
    return YoungDiagram([r for r in rows if r > 0])
