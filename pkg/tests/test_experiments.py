import json

import pytest

from sortnet import (
    DiagonalMotifLayout,
    ExperimentReport,
    Pattern,
    StandardTableau,
    YoungDiagram,
    canonical_motif,
    experiment_stationarity,
    experiment_theorem1,
    experiment_theorem2,
    experiment_theorem3,
)


def test_layout_example_arithmetic():
    layout = DiagonalMotifLayout(3, 24)
    assert layout.count == 5  # floor(23 / 4)
    assert layout.columns_used == 10
    assert layout.anchors[0][1] == 24 // 4 + 1


def test_layout_structural_disjoint_and_inside():
    for n in (16, 33, 100, 250, 500):
        for k in (2, 3, 4, 5, 6):
            if n < 4 * (k - 1):
                continue
            layout = DiagonalMotifLayout(k, n)
            staircase = YoungDiagram.staircase(n)
            seen = set()
            for anchor in layout.anchors:
                boxes = layout.boxes(anchor)
                assert len(boxes) == k * (k - 1) // 2
                for box in boxes:
                    assert box in staircase
                    assert box not in seen
                    seen.add(box)


def test_layout_rejects_too_small():
    with pytest.raises(ValueError):
        DiagonalMotifLayout(5, 12)
    with pytest.raises(ValueError):
        DiagonalMotifLayout(1, 100)


def test_layout_boxes_match_subdiagram_shape():
    layout = DiagonalMotifLayout(4, 40)
    from sortnet import subdiagram

    staircase = YoungDiagram.staircase(40)
    for anchor in layout.anchors:
        assert subdiagram(staircase, anchor).rows == (3, 2, 1)


def test_canonical_motif():
    assert canonical_motif(3) == StandardTableau([[1, 2], [3]])
    assert canonical_motif(2) == StandardTableau([[1]])


def test_stationarity_small():
    report = experiment_stationarity(3)
    row = report.per_n[0]
    assert row["networks"] == 2
    assert row["frequencies"][0] == [1, 1]
    assert row["first_two_equal"] and row["all_times_equal"]
    report = experiment_stationarity(4)
    assert report.per_n[0]["all_times_equal"]
    report = experiment_stationarity(2)
    assert report.per_n[0]["first_two_equal"]
    with pytest.raises(ValueError):
        experiment_stationarity(6)


def test_theorem1_report_structure_and_determinism():
    pattern = Pattern((1, 2))
    a = experiment_theorem1(pattern, [10, 14], samples=12, seed=5)
    b = experiment_theorem1(pattern, [10, 14], samples=12, seed=5)
    a_data, b_data = a.to_json(), b.to_json()
    a_data["meta"].pop("wall_clock_seconds")
    b_data["meta"].pop("wall_clock_seconds")
    assert a_data == b_data
    row = a.per_n[0]
    assert row["n"] == 10 and len(row["raw"]) == 12
    assert row["mean"] == pytest.approx(sum(row["raw"]) / 12)
    assert all(c >= 0 for c in row["raw"])
    assert row["prefix_mean_over_n"] == pytest.approx(row["prefix_mean"] / 10)


def test_theorem1_size2_pattern_counts_positive():
    report = experiment_theorem1(Pattern((1,)), [10], samples=10, seed=9)
    row = report.per_n[0]
    assert row["mean"] > 0
    assert max(row["raw"]) <= 10 * 9 // 2


def test_theorem1_rejects_oversized_pattern():
    with pytest.raises(ValueError):
        experiment_theorem1(Pattern((1, 2, 1)), [2], samples=2, seed=0)


def test_theorem2_k2_counts_all_anchors():
    """The one-box motif is identically ordered with everything."""
    motif = canonical_motif(2)
    report = experiment_theorem2(motif, [12], samples=6, seed=1)
    row = report.per_n[0]
    layout = DiagonalMotifLayout(2, 12)
    assert all(c == layout.count for c in row["raw"])


def test_theorem2_records_entry_gaps_and_cutoff():
    motif = canonical_motif(3)
    free = experiment_theorem2(motif, [20], samples=20, seed=3)
    assert free.per_n[0]["min_entry_gaps"] == sorted(free.per_n[0]["min_entry_gaps"])
    tight = experiment_theorem2(motif, [20], samples=20, seed=3, entry_cutoff=0.1)
    assert tight.per_n[0]["mean"] <= free.per_n[0]["mean"]
    total = 20 * 19 // 2
    threshold = total - 0.1 * 20
    assert all(gap < 0.1 * 20 for gap in tight.per_n[0]["min_entry_gaps"])
    assert threshold > 0


def test_theorem2_rejects_non_staircase_motif():
    with pytest.raises(ValueError):
        experiment_theorem2(StandardTableau([[1, 2], [3, 4]]), [20], 2, 0)


def test_theorem3_report():
    report = experiment_theorem3([8, 12], samples=8, seed=2)
    for row in report.per_n:
        assert 0 <= row["fraction"] <= 1
        assert row["certified"] == round(row["fraction"] * row["samples"])
        lo, hi = row["ci95"]
        assert 0 <= lo <= hi <= 1


def test_report_json_round_trip():
    report = experiment_theorem1(Pattern((1, 2)), [10], samples=4, seed=8)
    blob = report.to_json_str()
    again = ExperimentReport.from_json(json.loads(blob))
    assert again.to_json() == report.to_json()


def test_report_csv_round_trip():
    report = experiment_theorem3([8], samples=4, seed=3)
    text = report.to_csv_str()
    again = ExperimentReport.from_csv_str(text)
    assert again.to_json() == report.to_json()
    report2 = experiment_theorem1(Pattern((1, 2)), [10, 12], samples=3, seed=1)
    assert ExperimentReport.from_csv_str(report2.to_csv_str()).to_json() == report2.to_json()
