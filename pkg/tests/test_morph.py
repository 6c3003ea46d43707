import pytest

from flipdist.crossings import count_pair
from flipdist.errors import AlreadyEqual, InstanceMismatch
from flipdist.morph import (
    FlipSequence,
    find_reducing_flip,
    intersection_upper_bound,
    morph,
)
from flipdist.generate import GenSpec, generate_pair
from flipdist.triangulation import greedy_triangulate, validate


def test_intersection_upper_bound():
    assert intersection_upper_bound(4, 4, 0) == 1
    assert intersection_upper_bound(8, 8, 0) == 25
    assert intersection_upper_bound(7, 7, 1) == 49


def test_square_morph_one_step(square_pair):
    t1, t2 = square_pair
    seq = morph(t1, t2)
    assert len(seq.steps) == 1
    step = seq.steps[0]
    assert step.removed == (0, 2)
    assert step.added == (1, 3)
    assert step.before == 1
    assert step.after == 0
    assert seq.replay().edges == t2.edges


def test_morph_equal_is_empty(pentagon):
    t = greedy_triangulate(pentagon)
    seq = morph(t, t)
    assert seq.steps == ()
    assert seq.replay().edges == t.edges


def test_find_reducing_flip_square(square_pair):
    t1, t2 = square_pair
    e, new_total = find_reducing_flip(t1, t2)
    assert e == (0, 2)
    assert new_total == 0


def test_find_reducing_flip_equal_raises(square_pair):
    t1, _ = square_pair
    with pytest.raises(AlreadyEqual):
        find_reducing_flip(t1, t1)


def test_morph_instance_mismatch(square, pentagon):
    with pytest.raises(InstanceMismatch):
        morph(greedy_triangulate(square), greedy_triangulate(pentagon))


def test_morph_strictly_decreasing(hexagon):
    t1 = greedy_triangulate(hexagon)
    t2 = greedy_triangulate(hexagon, priority=lambda e: (-e[0], -e[1]))
    seq = morph(t1, t2)
    totals = [s.before for s in seq.steps] + [seq.steps[-1].after]
    assert totals[0] == count_pair(t1, t2).total
    assert totals[-1] == 0
    assert all(a > b for a, b in zip(totals, totals[1:]))
    assert seq.replay().edges == t2.edges


def test_morph_length_bounded_by_crossings(hexagon, pentagon, holed):
    for inst in (hexagon, pentagon, holed):
        t1 = greedy_triangulate(inst)
        t2 = greedy_triangulate(inst, priority=lambda e: (-e[0], -e[1]))
        seq = morph(t1, t2)
        assert len(seq.steps) <= count_pair(t1, t2).total
        assert len(seq.steps) <= intersection_upper_bound(
            inst.n, inst.n_b, inst.h
        )


def test_morph_intermediate_states_valid():
    t1, t2 = generate_pair(GenSpec(seed=11, n_points=9), 42)
    seq = morph(t1, t2)
    current = t1
    for step in seq.steps:
        from flipdist.triangulation import flip

        current = flip(current, step.removed)
        assert validate(current) == []
        assert count_pair(current, t2).total == step.after
    assert current.edges == t2.edges


def test_morph_on_holed_instance():
    t1, t2 = generate_pair(
        GenSpec(seed=5, n_points=10, shape="with_holes", holes=2), 17
    )
    seq = morph(t1, t2)
    assert seq.replay().edges == t2.edges
    if seq.steps:
        assert seq.steps[-1].after == 0


def test_sequence_is_frozen(square_pair):
    t1, t2 = square_pair
    seq = morph(t1, t2)
    assert isinstance(seq, FlipSequence)
    with pytest.raises(Exception):
        seq.steps = ()
