import pytest

from flipdist.triangulation import Instance, greedy_triangulate


@pytest.fixture
def square():
    """Unit square, two triangulations differing by one diagonal flip."""
    return Instance([(0, 0), (1, 0), (1, 1), (0, 1)], [[0, 1, 2, 3]])


@pytest.fixture
def dart():
    """Non-convex quadrilateral with a reflex corner at vertex 1.

    Its single interior edge (1, 3) sits in a non-convex quadrilateral and
    is therefore not flippable.
    """
    return Instance([(0, 0), (2, 1), (4, 0), (2, 4)], [[0, 1, 2, 3]])


@pytest.fixture
def pentagon():
    return Instance(
        [(0, 0), (4, 0), (6, 3), (3, 6), (-1, 3)], [[0, 1, 2, 3, 4]]
    )


@pytest.fixture
def hexagon():
    return Instance(
        [(0, 0), (4, 0), (6, 3), (4, 6), (0, 6), (-2, 3)],
        [[0, 1, 2, 3, 4, 5]],
    )


@pytest.fixture
def holed():
    """Square with a small triangular hole: n=7, n_b=7, h=1."""
    return Instance(
        [(0, 0), (10, 0), (10, 10), (0, 10), (4, 4), (6, 4), (5, 6)],
        [[0, 1, 2, 3], [4, 5, 6]],
    )


@pytest.fixture
def square_pair(square):
    t1 = greedy_triangulate(square)
    other = (square.border_edges | {(1, 3)})
    from flipdist.triangulation import Triangulation

    return t1, Triangulation(square, other)
