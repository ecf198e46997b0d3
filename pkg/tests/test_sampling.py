from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from scipy import stats

from sortnet import (
    SeededRng,
    ShrinkingChain,
    StandardTableau,
    YoungDiagram,
    chain_log_probability,
    corner_removal_distribution,
    corners,
    dimension,
    enumerate_syt,
    sample_batch,
    sample_network_batch,
    sample_random_network,
    sample_uniform_syt,
)
from sortnet.sampling import random_subdiagram, sample_chain_probabilities


def test_single_box_any_seed():
    shape = YoungDiagram([1])
    expected = StandardTableau([[1]])
    for seed in (0, 1, 99):
        assert sample_uniform_syt(shape, SeededRng(seed)) == expected
    with pytest.raises(ValueError):
        sample_uniform_syt(YoungDiagram([]), SeededRng(0))


def test_two_cell_frequencies():
    shape = YoungDiagram([2, 1])
    counts = Counter(
        sample_uniform_syt(shape, SeededRng(11, i)).entries for i in range(10_000)
    )
    assert len(counts) == 2
    for count in counts.values():
        assert abs(count / 10_000 - 0.5) < 0.02


def test_staircase4_chi_square():
    shape = YoungDiagram.staircase(4)
    counts = Counter(
        sample_uniform_syt(shape, SeededRng(4, i)).entries for i in range(16_000)
    )
    assert len(counts) == 16
    chisq = sum((c - 1000.0) ** 2 / 1000.0 for c in counts.values())
    assert chisq < stats.chi2.ppf(0.999, 15)


def test_deterministic_given_seed():
    shape = YoungDiagram.staircase(8)
    a = sample_uniform_syt(shape, SeededRng(123, 5))
    b = sample_uniform_syt(shape, SeededRng(123, 5))
    assert a == b
    c = sample_uniform_syt(shape, SeededRng(123, 6))
    assert a != c  # overwhelmingly likely for 28 boxes


def test_chain_probability_of_fixed_tableau_is_inverse_dimension(small_shapes):
    """Multiplying exact step laws along any tableau's removal order gives 1/dim."""
    for shape in small_shapes:
        if shape.size > 6:
            continue
        for tableau in enumerate_syt(shape):
            removals = [tableau.position(m) for m in range(shape.size, 0, -1)]
            assert chain_log_probability(shape, removals) == Fraction(
                1, dimension(shape)
            )


def test_kernel_step_probabilities_match_exact_law():
    """The float chain's per-step chosen probabilities agree with the exact law."""
    for rows in [(3, 2, 1), (4, 4, 2), (5, 3, 3, 1), (6, 4, 2, 2, 1)]:
        shape = YoungDiagram(rows)
        probs = sample_chain_probabilities(shape, SeededRng(17))
        tableau = sample_uniform_syt(shape, SeededRng(17))
        removals = [tableau.position(m) for m in range(shape.size, 0, -1)]
        current = list(shape.rows)
        for step, box in enumerate(removals):
            live = YoungDiagram([r for r in current if r > 0])
            exact = dict(corner_removal_distribution(live, exact=True))[box]
            assert abs(probs[step] - float(exact)) < 1e-12
            current[box[0] - 1] -= 1


def test_sampled_product_equals_inverse_dimension():
    shape = YoungDiagram([4, 3, 1])
    target = 1.0 / dimension(shape)
    for i in range(200):
        probs = sample_chain_probabilities(shape, SeededRng(3, i))
        assert np.prod(probs) == pytest.approx(target, rel=1e-9)


def test_shrinking_chain_invariants():
    shape = YoungDiagram.staircase(6)
    chain = ShrinkingChain(shape)
    removed = chain.advance(SeededRng(8), steps=5)
    assert len(removed) == 5 and chain.step == 5
    assert chain.current.size == shape.size - 5
    # each removed box was a corner of the diagram it left
    rows = list(shape.rows)
    for box in removed:
        live = YoungDiagram([r for r in rows if r > 0])
        assert box in corners(live)
        rows[box[0] - 1] -= 1
    chain.advance(SeededRng(9))
    assert chain.current.size == 0
    assert len(chain.history) == shape.size


def test_batch_determinism_and_substreams():
    shape = YoungDiagram.staircase(5)
    batch1 = sample_batch(shape, 8, seed=42)
    batch2 = sample_batch(shape, 8, seed=42)
    assert batch1 == batch2
    assert batch1[0] == sample_uniform_syt(shape, SeededRng(42, 0))
    assert batch1[3] == sample_uniform_syt(shape, SeededRng(42, 3))
    with pytest.raises(ValueError):
        sample_batch(shape, 0, seed=1)


def test_disjoint_seeds_uncorrelated_first_corner():
    """First removals under different seeds behave like independent draws."""
    shape = YoungDiagram([2, 1])
    first = [
        sample_uniform_syt(shape, SeededRng(seed)).position(3)[0]
        for seed in range(4000)
    ]
    freq = Counter(first)
    # P(row 1) = 1/2; a 3-sigma binomial window around 2000
    sigma = (4000 * 0.25) ** 0.5
    assert abs(freq[1] - 2000) < 3 * sigma


def test_network_sampling():
    assert sample_random_network(2, SeededRng(0)).swaps == (1,)
    counts = Counter(sample_random_network(3, SeededRng(1, i)).swaps for i in range(4000))
    assert set(counts) == {(1, 2, 1), (2, 1, 2)}
    for count in counts.values():
        assert abs(count / 4000 - 0.5) < 0.03
    with pytest.raises(ValueError):
        sample_random_network(1, SeededRng(0))


def test_network_batch_uniform_n4():
    nets = sample_network_batch(4, 16_000, seed=2)
    counts = Counter(net.swaps for net in nets)
    assert len(counts) == 16
    chisq = sum((c - 1000.0) ** 2 / 1000.0 for c in counts.values())
    assert chisq < stats.chi2.ppf(0.999, 15)


def test_large_staircase_sampling_is_fast_and_valid():
    shape = YoungDiagram.staircase(200)
    tableau = sample_uniform_syt(shape, SeededRng(31))
    assert tableau.shape == shape  # construction re-validates all invariants


def test_random_subdiagram_nested():
    staircase = YoungDiagram.staircase(12)
    for i in range(50):
        sub = random_subdiagram(staircase, SeededRng(6, i))
        padded = sub.rows + (0,) * (len(staircase.rows) - len(sub.rows))
        assert all(a <= b for a, b in zip(padded, staircase.rows))
