import numpy as np
import pytest

from sortnet import (
    GeneralPositionError,
    PointConfiguration,
    SeededRng,
    SortingNetwork,
    Window,
    YoungDiagram,
    batch_realize,
    certify_nonrealizable,
    eg_forward,
    enumerate_syt,
    goodman_pollack_pattern,
    gp_check,
    realize_network,
    rotate_sweep_start,
    sample_random_configuration,
    validate_general_position,
    validate_network,
)


def test_realize_triangle():
    config = PointConfiguration([(0, 0), (1, 1), (2, 0)])
    assert realize_network(config).swaps == (1, 2, 1)


def test_realize_two_points():
    for pts in ([(0, 0), (1, 0.3)], [(0, 1), (5, -2)]):
        assert realize_network(PointConfiguration(pts)).swaps == (1,)


def test_realize_rejects_collinear():
    with pytest.raises(GeneralPositionError) as info:
        realize_network(PointConfiguration([(0, 0), (1, 0), (2, 0)]))
    kinds = {v[0] for v in info.value.violations}
    assert "collinear" in kinds


def test_validate_general_position():
    ok, violations = validate_general_position(
        PointConfiguration([(0, 0), (1, 1), (2, 0)])
    )
    assert ok and not violations
    ok, violations = validate_general_position(
        PointConfiguration([(0, 0), (1, 0), (2, 0)])
    )
    assert not ok
    assert any(v[0] == "collinear" for v in violations)
    # shared vertical line
    ok, violations = validate_general_position(
        PointConfiguration([(0, 0), (0, 1), (1, 0.5)])
    )
    assert not ok
    assert any(v[0] == "vertical-pair" for v in violations)
    # parallel pairs
    ok, violations = validate_general_position(
        PointConfiguration([(0, 0), (1, 0.21), (0, 1), (1, 1.21)])
    )
    assert not ok
    assert any(v[0] == "parallel-pairs" for v in violations)


def test_sample_random_configuration_deterministic_and_valid():
    a = sample_random_configuration(6, SeededRng(3))
    b = sample_random_configuration(6, SeededRng(3))
    assert a == b
    assert validate_general_position(a)[0]
    with pytest.raises(ValueError):
        sample_random_configuration(1, SeededRng(0))


def test_realized_networks_always_validate():
    for i in range(300):
        n = 3 + (i % 8)
        config = sample_random_configuration(n, SeededRng(100, i))
        net = realize_network(config)
        assert validate_network(net.swaps, n)


def test_batch_realize_matches_sequential():
    gen = SeededRng(55).generator()
    pts = gen.random((400, 5, 2))
    batch = batch_realize(pts)
    for row, raw in zip(batch, pts):
        if row[0] < 0:
            continue
        net = realize_network(PointConfiguration(raw.tolist()))
        assert tuple(int(x) for x in row) == net.swaps


def test_rotation_past_first_event_shifts_network():
    """Rotating the configuration just past its first sweep event realizes
    exactly the shifted network (s2..sN, n-s1)."""
    from sortnet.geometry import _pair_angles

    hits = 0
    for i in range(60):
        n = 4 + (i % 5)
        config = sample_random_configuration(n, SeededRng(500, i))
        net = realize_network(config)
        angles = sorted(_pair_angles(config.array()).values())
        alpha = (angles[0] + angles[1]) / 2  # between first and second event
        c, s = np.cos(alpha), np.sin(alpha)
        pts = config.array() @ np.array([[c, -s], [s, c]]).T
        rotated = PointConfiguration(pts.tolist())
        if not validate_general_position(rotated)[0]:
            continue
        assert realize_network(rotated) == rotate_sweep_start(net)
        hits += 1
    assert hits >= 50


def test_rotational_coherence_small_rotation():
    """A small generic rotation only reorders events across the angle cut."""
    config = sample_random_configuration(6, SeededRng(7))
    net = realize_network(config)
    theta = 1e-4
    c, s = np.cos(theta), np.sin(theta)
    pts = config.array() @ np.array([[c, s], [-s, c]]).T
    rotated = realize_network(PointConfiguration(pts.tolist()))
    # same multiset of swap positions per pair: both are valid networks on the
    # same point set, and with such a tiny rotation no event order changes
    assert rotated.swaps == net.swaps


# --- the non-realizable pattern -------------------------------------------------


def test_gp_pattern_is_a_valid_size5_network():
    gp = goodman_pollack_pattern()
    assert gp.n == 5
    assert validate_network(gp.swaps, 5)
    nets = {eg_forward(t).swaps for t in enumerate_syt(YoungDiagram.staircase(5))}
    assert gp.swaps in nets


def test_certificate_on_pattern_itself():
    gp = goodman_pollack_pattern()
    witness = certify_nonrealizable(gp, gp)
    assert witness == Window(1, 10, 1, 4)


def test_certificate_small_networks_none():
    gp = goodman_pollack_pattern()
    assert certify_nonrealizable(SortingNetwork(3, (1, 2, 1)), gp) is None
    assert certify_nonrealizable(SortingNetwork(4, (1, 3, 2, 1, 3, 2)), gp) is None


def test_certificate_sound_on_realized_networks():
    gp = goodman_pollack_pattern()
    for i in range(200):
        n = 5 + (i % 16)
        config = sample_random_configuration(n, SeededRng(900, i))
        net = realize_network(config)
        assert certify_nonrealizable(net, gp) is None


def test_certificate_finds_embedded_pattern():
    """A network whose prefix embeds the pattern at positions [a, a+3] is flagged."""
    gp = goodman_pollack_pattern()
    n = 7
    a = 2
    prefix = [s + a - 1 for s in gp.swaps]
    occupants = list(range(1, n + 1))
    swaps = []
    for s in prefix:
        occupants[s - 1], occupants[s] = occupants[s], occupants[s - 1]
        swaps.append(s)
    while any(occupants[i] < occupants[i + 1] for i in range(n - 1)):
        for i in range(n - 1):
            if occupants[i] < occupants[i + 1]:
                occupants[i], occupants[i + 1] = occupants[i + 1], occupants[i]
                swaps.append(i + 1)
                break
    net = SortingNetwork(n, swaps)
    witness = certify_nonrealizable(net, gp)
    assert witness is not None
    assert witness.start == 1 and (witness.low, witness.high) == (a, a + 3)
    wide = certify_nonrealizable(net, gp, widths="all")
    assert wide is not None


def test_gp_check_smoke():
    result = gp_check(samples=50_000, seed=13)
    assert result.passed
    assert result.pattern_valid
    assert result.realized_hits == 0
    assert result.distinct_realized > 500


def test_gp_check_detects_realizable_impostor():
    config = sample_random_configuration(5, SeededRng(77))
    impostor = realize_network(config)
    result = gp_check(samples=60_000, seed=14, pattern=impostor)
    assert not result.passed
    assert result.realized_hits > 0


def test_point_configuration_json_round_trip():
    config = PointConfiguration([(0.5, 0.25), (0.1, 0.9), (0.7, 0.3)])
    again = PointConfiguration.from_json(config.to_json())
    assert again == config
    # labels follow increasing x
    assert config.points[0][0] <= config.points[1][0] <= config.points[2][0]
