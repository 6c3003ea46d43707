"""Constructive flip morph: strictly decrease crossings until the target."""

from __future__ import annotations

from dataclasses import dataclass

from .crossings import count_pair, count_segment
from .errors import AlreadyEqual, InstanceMismatch, LemmaViolation
from .triangulation import (
    Edge,
    Triangulation,
    flip,
    interior_edge_count,
    quadrilateral_of,
)


def intersection_upper_bound(n: int, n_b: int, h: int) -> int:
    """Worst-case crossing total: every interior edge crossing every other."""
    return interior_edge_count(n, n_b, h) ** 2


@dataclass(frozen=True)
class FlipStep:
    removed: Edge
    added: Edge
    before: int
    after: int


@dataclass(frozen=True)
class FlipSequence:
    """A witness that the flip distance is at most the crossing total."""

    start: Triangulation
    target: Triangulation
    steps: tuple[FlipStep, ...]

    def replay(self) -> Triangulation:
        t = self.start
        for step in self.steps:
            t = flip(t, step.removed)
        return t


def find_reducing_flip(
    t: Triangulation, target: Triangulation
) -> tuple[Edge, int]:
    """A maximally-crossing edge whose flip strictly reduces the total.

    Scans the maximal edges in canonical order and returns the first whose
    replacement diagonal crosses the target fewer times than the edge does,
    together with the resulting total.  Every maximal edge must sit in a
    strictly convex quadrilateral, and at least one must qualify; either
    failure raises LemmaViolation.
    """
    if t.instance != target.instance:
        raise InstanceMismatch("triangulations have different instances")
    if t.edges == target.edges:
        raise AlreadyEqual("triangulations are already equal")
    report = count_pair(t, target)
    for e in report.max_edges:
        quad = quadrilateral_of(t, e)
        if quad is None or not quad.strictly_convex:
            raise LemmaViolation(
                f"maximal edge {e} has no strictly convex quadrilateral"
            )
        replacement = quad.opposite
        seg = (
            t.instance.points[replacement[0]],
            t.instance.points[replacement[1]],
        )
        new_count = count_segment(seg, target)
        if new_count < report.per_edge[e]:
            return e, report.total - report.per_edge[e] + new_count
    raise LemmaViolation(
        f"no maximal edge of {sorted(report.max_edges)} reduces crossings"
    )


def morph(t1: Triangulation, t2: Triangulation) -> FlipSequence:
    """A flip sequence from t1 to t2 of length at most their crossing total.

    Each step flips a maximal edge chosen by :func:`find_reducing_flip`, so
    the per-step totals strictly decrease to zero.
    """
    if t1.instance != t2.instance:
        raise InstanceMismatch("triangulations have different instances")
    steps: list[FlipStep] = []
    current = t1
    total = count_pair(current, t2).total
    while current.edges != t2.edges:
        e, new_total = find_reducing_flip(current, t2)
        quad = quadrilateral_of(current, e)
        assert quad is not None
        current = flip(current, e)
        steps.append(
            FlipStep(removed=e, added=quad.opposite, before=total, after=new_total)
        )
        total = new_total
    return FlipSequence(start=t1, target=t2, steps=tuple(steps))
