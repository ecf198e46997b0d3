import itertools

import pytest

from sortnet import YoungDiagram


def partitions_upto(max_boxes):
    """Every nonempty partition with at most max_boxes boxes."""

    def parts(n, largest):
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in parts(n - k, k):
                yield (k,) + rest

    for n in range(1, max_boxes + 1):
        yield from parts(n, n)


@pytest.fixture(scope="session")
def small_shapes():
    return [YoungDiagram(rows) for rows in partitions_upto(8)]
