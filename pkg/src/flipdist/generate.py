"""Seeded random instances and triangulation pairs for tests and audits."""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass

from . import geometry
from .errors import InfeasibleSpec
from .triangulation import Instance, Triangulation, greedy_triangulate

SHAPES = ("convex_gon", "random_simple_border", "with_holes")

_COORD_RANGE = 10**6
_MAX_ATTEMPTS = 200


@dataclass(frozen=True)
class GenSpec:
    """Deterministic recipe for one instance: same spec, same bytes."""

    seed: int
    n_points: int
    shape: str = "convex_gon"
    holes: int = 0
    interior_points: int = 0

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise InfeasibleSpec(f"unknown shape '{self.shape}'")
        if self.shape == "with_holes" and self.holes < 1:
            raise InfeasibleSpec("with_holes requires holes >= 1")
        if self.shape != "with_holes" and self.holes:
            raise InfeasibleSpec(f"shape '{self.shape}' does not take holes")


def _no_three_collinear(points: list[geometry.Point]) -> bool:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if geometry.orient(points[i], points[j], points[k]) == 0:
                    return False
    return True


def _convex_ring(rng: random.Random, n: int) -> list[geometry.Point] | None:
    """n integer points in strictly convex position, ccw."""
    radius = _COORD_RANGE
    offsets = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(n))
    points = [
        (round(radius * math.cos(a)), round(radius * math.sin(a)))
        for a in offsets
    ]
    if len(set(points)) != n:
        return None
    for i in range(n):
        if (
            geometry.orient(
                points[i], points[(i + 1) % n], points[(i + 2) % n]
            )
            != 1
        ):
            return None
    return points


def _star_order(points: list[geometry.Point]) -> list[int] | None:
    """Indices ordered by exact angle around the centroid (star polygon)."""
    n = len(points)
    cx = sum(p[0] for p in points)
    cy = sum(p[1] for p in points)
    scaled = [(p[0] * n - cx, p[1] * n - cy) for p in points]

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(i, j):
        u, v = scaled[i], scaled[j]
        hu, hv = half(u), half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        cross = u[0] * v[1] - u[1] * v[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    order = sorted(range(n), key=functools.cmp_to_key(cmp))
    for a, b in zip(order, order[1:]):
        if cmp(a, b) == 0:
            return None  # equal angles: ordering ambiguous, retry
    return order


def _sample_interior(
    rng: random.Random,
    count: int,
    points: list[geometry.Point],
    border: list[list[int]],
) -> list[geometry.Point] | None:
    coords = [[points[v] for v in poly] for poly in border]
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    added: list[geometry.Point] = []
    for _ in range(count):
        for _ in range(_MAX_ATTEMPTS):
            p = (
                rng.randint(min(xs), max(xs)),
                rng.randint(min(ys), max(ys)),
            )
            universe = points + added
            if p in universe:
                continue
            if geometry.point_in_region(p, coords) != geometry.INSIDE:
                continue
            if any(
                geometry.orient(universe[i], universe[j], p) == 0
                for i in range(len(universe))
                for j in range(i + 1, len(universe))
            ):
                continue
            added.append(p)
            break
        else:
            return None
    return added


def _gen_convex(spec: GenSpec, rng: random.Random) -> Instance | None:
    n_border = spec.n_points - spec.interior_points
    if n_border < 3:
        return None
    ring = _convex_ring(rng, n_border)
    if ring is None:
        return None
    border = [list(range(n_border))]
    interior = _sample_interior(rng, spec.interior_points, ring, border)
    if interior is None:
        return None
    return Instance(ring + interior, border)


def _gen_star(spec: GenSpec, rng: random.Random) -> Instance | None:
    n_border = spec.n_points - spec.interior_points
    if n_border < 3:
        return None
    points: list[geometry.Point] = []
    while len(points) < n_border:
        p = (
            rng.randint(-_COORD_RANGE, _COORD_RANGE),
            rng.randint(-_COORD_RANGE, _COORD_RANGE),
        )
        if p not in points:
            points.append(p)
    if not _no_three_collinear(points):
        return None
    order = _star_order(points)
    if order is None:
        return None
    border = [order]
    interior = _sample_interior(rng, spec.interior_points, points, border)
    if interior is None:
        return None
    inst = Instance(points + interior, border)
    if inst.validate():
        return None
    return inst


def _gen_with_holes(spec: GenSpec, rng: random.Random) -> Instance | None:
    n_outer = spec.n_points - 3 * spec.holes - spec.interior_points
    if n_outer < 3:
        return None
    outer = _convex_ring(rng, n_outer)
    if outer is None:
        return None
    points = list(outer)
    border: list[list[int]] = [list(range(n_outer))]
    # Hole triangles on a small scale, placed at jittered spots near the
    # middle so they stay well inside the outer ring.
    size = _COORD_RANGE // 20
    for k in range(spec.holes):
        for _ in range(_MAX_ATTEMPTS):
            cx = rng.randint(-_COORD_RANGE // 3, _COORD_RANGE // 3)
            cy = rng.randint(-_COORD_RANGE // 3, _COORD_RANGE // 3)
            tri = [
                (cx + rng.randint(-size, size), cy + rng.randint(-size, size))
                for _ in range(3)
            ]
            if geometry.orient(*tri) == 0 or len(set(tri)) != 3:
                continue
            base = len(points)
            candidate_points = points + tri
            candidate_border = border + [[base, base + 1, base + 2]]
            inst = Instance(candidate_points, candidate_border)
            if inst.validate():
                continue
            if not _no_three_collinear(candidate_points):
                continue
            points, border = candidate_points, candidate_border
            break
        else:
            return None
    interior = _sample_interior(rng, spec.interior_points, points, border)
    if interior is None:
        return None
    inst = Instance(points + interior, border)
    if inst.validate():
        return None
    return inst


def generate_instance(spec: GenSpec) -> Instance:
    """A valid instance drawn deterministically from the spec's seed."""
    minimum = 3 + (3 * spec.holes if spec.shape == "with_holes" else 0)
    if spec.n_points - spec.interior_points < minimum:
        raise InfeasibleSpec(
            f"{spec.shape} with {spec.holes} holes needs at least "
            f"{minimum} border points"
        )
    rng = random.Random(spec.seed)
    builders = {
        "convex_gon": _gen_convex,
        "random_simple_border": _gen_star,
        "with_holes": _gen_with_holes,
    }
    build = builders[spec.shape]
    for _ in range(_MAX_ATTEMPTS):
        inst = build(spec, rng)
        if inst is not None and not inst.validate():
            return inst
    raise InfeasibleSpec(f"could not realize {spec} after {_MAX_ATTEMPTS} attempts")


def _random_priority(inst: Instance, seed: int):
    rng = random.Random(seed)
    pairs = list(inst.admissible_pairs())
    ranks = {e: rng.random() for e in pairs}
    return lambda e: ranks.get(e, 2.0)


def generate_pair(
    spec: GenSpec, seed2: int
) -> tuple[Triangulation, Triangulation]:
    """Two triangulations of the same generated instance.

    Both come from greedy construction under different seeded random
    priorities, so the pair may coincide (equality iff zero crossings).
    """
    inst = generate_instance(spec)
    t1 = greedy_triangulate(inst, priority=_random_priority(inst, spec.seed))
    t2 = greedy_triangulate(inst, priority=_random_priority(inst, seed2))
    return t1, t2
