import pytest

from flipdist.errors import EdgeNotInTriangulation, NotFlippable
from flipdist.triangulation import (
    Instance,
    Triangulation,
    faces,
    flip,
    greedy_triangulate,
    interior_edge_count,
    quadrilateral_of,
    validate,
)


def test_interior_edge_count_formula():
    assert interior_edge_count(4, 4, 0) == 1
    assert interior_edge_count(5, 5, 0) == 2
    assert interior_edge_count(8, 8, 0) == 5
    # square with one triangular hole: 7 triangles, 7 interior edges
    assert interior_edge_count(7, 7, 1) == 7


def test_instance_validate_good(square, dart, pentagon, hexagon, holed):
    for inst in (square, dart, pentagon, hexagon, holed):
        assert inst.validate() == []


def test_instance_validate_bad():
    dup = Instance([(0, 0), (1, 0), (0, 0)], [[0, 1, 2]])
    assert any("duplicate" in v for v in dup.validate())

    short = Instance([(0, 0), (1, 0)], [[0, 1]])
    assert any("fewer than 3" in v for v in short.validate())

    bowtie = Instance(
        [(0, 0), (2, 2), (2, 0), (0, 2)], [[0, 1, 2, 3]]
    )
    assert any("not simple" in v for v in bowtie.validate())

    outside = Instance(
        [(0, 0), (4, 0), (4, 4), (0, 4), (9, 9)], [[0, 1, 2, 3]]
    )
    assert any("outside" in v for v in outside.validate())

    on_edge = Instance(
        [(0, 0), (4, 0), (4, 4), (0, 4), (2, 0)], [[0, 1, 2, 3]]
    )
    assert any("interior of border edge" in v for v in on_edge.validate())


def test_instance_counts(holed):
    assert holed.n == 7
    assert holed.n_b == 7
    assert holed.h == 1
    assert len(holed.border_edges) == 7
    assert not holed.is_pinched


def test_pinched_detection():
    # Hole sharing a vertex with the outer polygon.
    inst = Instance(
        [(0, 0), (10, 0), (10, 10), (0, 10), (5, 2), (6, 4)],
        [[0, 1, 2, 3], [0, 4, 5]],
    )
    assert inst.is_pinched


def test_greedy_square(square):
    t = greedy_triangulate(square)
    assert t.edges == square.border_edges | {(0, 2)}
    assert validate(t) == []
    assert len(t.interior_edges()) == 1


def test_greedy_pentagon_two_priorities(pentagon):
    t1 = greedy_triangulate(pentagon)
    t2 = greedy_triangulate(pentagon, priority=lambda e: (-e[0], -e[1]))
    assert validate(t1) == []
    assert validate(t2) == []
    assert len(t1.interior_edges()) == 2
    assert len(t2.interior_edges()) == 2
    assert t1.edges != t2.edges


def test_greedy_holed(holed):
    t = greedy_triangulate(holed)
    assert validate(t) == []
    assert len(t.interior_edges()) == interior_edge_count(7, 7, 1)


def test_validate_rejects_both_diagonals(square):
    t = Triangulation(square, square.border_edges | {(0, 2), (1, 3)})
    bad = validate(t)
    assert any("cross" in v for v in bad)


def test_validate_rejects_missing_border(square):
    t = Triangulation(square, {(0, 2), (0, 1), (1, 2), (2, 3)})
    bad = validate(t)
    assert any("missing border edge" in v for v in bad)


def test_validate_rejects_non_maximal(pentagon):
    t = Triangulation(pentagon, pentagon.border_edges | {(0, 2)})
    bad = validate(t)
    assert any("not maximal" in v for v in bad)


def test_faces_square(square):
    t = greedy_triangulate(square)
    fs = faces(t)
    assert len(fs) == 2
    assert {f.vertices for f in fs} == {(0, 1, 2), (0, 2, 3)}
    # ccw orientation of each face
    from flipdist.geometry import orient

    for f in fs:
        a, b, c = (square.points[v] for v in f.vertices)
        assert orient(a, b, c) == 1


def test_faces_euler(square, pentagon, hexagon, holed):
    for inst in (square, pentagon, hexagon, holed):
        t = greedy_triangulate(inst)
        n = inst.n
        e = len(t.edges)
        f = len(faces(t))
        assert n - e + f == 1 - inst.h


def test_quadrilateral_square(square):
    t = greedy_triangulate(square)
    q = quadrilateral_of(t, (0, 2))
    assert q is not None
    assert q.diagonal == (0, 2)
    assert q.opposite == (1, 3)
    assert q.strictly_convex
    assert q.vertices == (0, 1, 2, 3) or q.vertices == (2, 3, 0, 1)


def test_quadrilateral_border_edge(square):
    t = greedy_triangulate(square)
    assert quadrilateral_of(t, (0, 1)) is None
    with pytest.raises(EdgeNotInTriangulation):
        quadrilateral_of(t, (1, 3))


def test_flip_square(square):
    t = greedy_triangulate(square)
    t2 = flip(t, (0, 2))
    assert t2.edges == square.border_edges | {(1, 3)}
    assert validate(t2) == []
    assert flip(t2, (1, 3)).edges == t.edges  # involution


def test_flip_preserves_counts(hexagon):
    t = greedy_triangulate(hexagon)
    e = t.interior_edges()[0]
    t2 = flip(t, e)
    assert len(t2.edges) == len(t.edges)
    assert t2.edges & hexagon.border_edges == hexagon.border_edges


def test_flip_border_edge_raises(square):
    t = greedy_triangulate(square)
    with pytest.raises(NotFlippable):
        flip(t, (0, 1))


def test_dart_not_flippable(dart):
    t = greedy_triangulate(dart)
    assert t.edges == dart.border_edges | {(1, 3)}
    assert validate(t) == []
    q = quadrilateral_of(t, (1, 3))
    assert q is not None and not q.strictly_convex
    with pytest.raises(NotFlippable):
        flip(t, (1, 3))


def test_edge_count_invariant(square, pentagon, hexagon, dart, holed):
    for inst in (square, pentagon, hexagon, dart, holed):
        t = greedy_triangulate(inst)
        expected = interior_edge_count(inst.n, inst.n_b, inst.h)
        assert len(t.edges) == expected + inst.n_b
