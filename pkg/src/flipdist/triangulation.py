"""Constrained triangulations: construction, validation, faces, flips."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import geometry
from .errors import (
    EdgeNotInTriangulation,
    InstanceInvalid,
    NotATriangulation,
    NotFlippable,
)
from .geometry import INSIDE, Point, Segment

Edge = tuple[int, int]


def canonical_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def interior_edge_count(n: int, n_b: int, h: int) -> int:
    """Number of interior edges of any triangulation with these parameters.

    Derived from Euler's relation for a triangulated region with h holes
    (n - e + f = 1 - h) together with the face/edge incidence count
    3f = 2*e_int + n_b, which gives e_int = 3n - 2*n_b - 3 + 3h.
    """
    return 3 * n - 2 * n_b - 3 + 3 * h


class Instance:
    """A point set with border constraints: an outer polygon plus holes.

    ``points`` defines vertex ids by position.  ``border[0]`` is the outer
    polygon, the rest are holes; each polygon is a list of vertex ids.
    """

    def __init__(
        self,
        points: Sequence[Point],
        border: Sequence[Sequence[int]],
    ):
        self.points: tuple[Point, ...] = tuple(
            (int(x), int(y)) for x, y in points
        )
        self.border: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(v) for v in poly) for poly in border
        )
        self.n = len(self.points)
        self.n_b = sum(len(poly) for poly in self.border)
        self.h = len(self.border) - 1
        edges = set()
        for poly in self.border:
            for k in range(len(poly)):
                edges.add(canonical_edge(poly[k], poly[(k + 1) % len(poly)]))
        self.border_edges: frozenset[Edge] = frozenset(edges)
        self._admissible: Optional[tuple[Edge, ...]] = None

    def __eq__(self, other):
        return (
            isinstance(other, Instance)
            and self.points == other.points
            and self.border == other.border
        )

    def __hash__(self):
        return hash((self.points, self.border))

    def __repr__(self):
        return f"Instance(n={self.n}, n_b={self.n_b}, h={self.h})"

    def border_coords(self) -> list[list[Point]]:
        return [[self.points[v] for v in poly] for poly in self.border]

    def segment(self, e: Edge) -> Segment:
        return (self.points[e[0]], self.points[e[1]])

    @property
    def is_pinched(self) -> bool:
        """True when two border polygons share a vertex."""
        seen: set[int] = set()
        for poly in self.border:
            for v in set(poly):
                if v in seen:
                    return True
            seen.update(poly)
        return False

    def validate(self) -> list[str]:
        """All violated instance invariants, empty when valid."""
        out: list[str] = []
        if len(set(self.points)) != self.n:
            out.append("duplicate points")
        if not self.border:
            out.append("no outer border polygon")
            return out
        coords = self.border_coords()
        for b, poly in enumerate(self.border):
            if len(poly) < 3:
                out.append(f"border[{b}] has fewer than 3 vertices")
                continue
            if any(v < 0 or v >= self.n for v in poly):
                out.append(f"border[{b}] has out-of-range vertex ids")
                continue
            if len(set(poly)) != len(poly):
                out.append(f"border[{b}] repeats a vertex")
            segs = list(geometry.segments_of_polygon(coords[b]))
            for i in range(len(segs)):
                for j in range(i + 1, len(segs)):
                    if geometry.properly_intersect(segs[i], segs[j]):
                        out.append(f"border[{b}] is not simple")
        if out:
            return out
        # Polygons must not overlap: no crossings, no shared edges.
        for b1 in range(len(self.border)):
            for b2 in range(b1 + 1, len(self.border)):
                for s1 in geometry.segments_of_polygon(coords[b1]):
                    for s2 in geometry.segments_of_polygon(coords[b2]):
                        if geometry.properly_intersect(s1, s2):
                            out.append(
                                f"border[{b1}] and border[{b2}] cross"
                            )
        for b, poly in enumerate(self.border):
            n = len(poly)
            poly_edges = {
                canonical_edge(poly[k], poly[(k + 1) % n]) for k in range(n)
            }
            for b2 in range(b + 1, len(self.border)):
                n2 = len(self.border[b2])
                other = {
                    canonical_edge(
                        self.border[b2][k], self.border[b2][(k + 1) % n2]
                    )
                    for k in range(n2)
                }
                if poly_edges & other:
                    out.append(f"border[{b}] and border[{b2}] share an edge")
        # Point containment rules.
        outer = [coords[0]]
        for i, p in enumerate(self.points):
            where = geometry.point_in_region(p, outer)
            if where == geometry.OUTSIDE:
                out.append(f"point {i} lies strictly outside the outer border")
        for b in range(1, len(self.border)):
            hole = coords[b]
            for i, p in enumerate(self.points):
                if i in self.border[b]:
                    continue
                if geometry._ray_crossing_parity(p, hole) and not any(
                    geometry.point_on_closed_segment(p, s)
                    for s in geometry.segments_of_polygon(hole)
                ):
                    out.append(f"point {i} lies strictly inside hole {b}")
            for v in self.border[b]:
                if geometry.point_in_region(self.points[v], outer) == geometry.OUTSIDE:
                    out.append(f"hole {b} vertex {v} is outside the outer border")
        for e in sorted(self.border_edges):
            seg = self.segment(e)
            for i, p in enumerate(self.points):
                if i not in e and geometry.point_on_open_segment(p, seg):
                    out.append(
                        f"point {i} lies on the interior of border edge {e}"
                    )
        return out

    def require_valid(self) -> None:
        violations = self.validate()
        if violations:
            raise InstanceInvalid("; ".join(violations))

    def admissible_pairs(self) -> tuple[Edge, ...]:
        """All vertex pairs whose open segment can be a triangulation edge.

        A pair qualifies when no vertex lies in its open interior, it does
        not properly cross a border edge, and its midpoint is inside the
        region (border edges qualify by definition).
        """
        if self._admissible is not None:
            return self._admissible
        coords = self.border_coords()
        border_segs = [
            s for poly in coords for s in geometry.segments_of_polygon(poly)
        ]
        pairs: list[Edge] = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                e = (i, j)
                seg = self.segment(e)
                if any(
                    geometry.point_on_open_segment(self.points[k], seg)
                    for k in range(self.n)
                    if k != i and k != j
                ):
                    continue
                if e in self.border_edges:
                    pairs.append(e)
                    continue
                if any(
                    geometry.properly_intersect(seg, bs) for bs in border_segs
                ):
                    continue
                if geometry.midpoint_in_region(seg, coords) != INSIDE:
                    continue
                pairs.append(e)
        self._admissible = tuple(pairs)
        return self._admissible


@dataclass(frozen=True)
class Face:
    """A bounded triangular face, vertices in counter-clockwise order."""

    vertices: tuple[int, int, int]

    def edges(self) -> tuple[Edge, Edge, Edge]:
        a, b, c = self.vertices
        return (canonical_edge(a, b), canonical_edge(b, c), canonical_edge(c, a))


@dataclass(frozen=True)
class Quadrilateral:
    """Two adjacent triangles abc, acd sharing the diagonal ac.

    ``vertices`` lists a, b, c, d in counter-clockwise boundary order, so
    the diagonal is (a, c) and the flip replacement is (b, d).
    """

    diagonal: Edge
    opposite: Edge
    strictly_convex: bool
    vertices: tuple[int, int, int, int]


class Triangulation:
    """An immutable maximal edge set over an instance.

    Equality and hashing are on the edge set, matching set-equality of
    triangulations.  Face structure is derived on demand and cached.
    """

    def __init__(self, instance: Instance, edges: Iterable[Edge]):
        self.instance = instance
        self.edges: frozenset[Edge] = frozenset(
            canonical_edge(*e) for e in edges
        )
        self._faces: Optional[tuple[Face, ...]] = None
        self._edge_faces: Optional[dict[Edge, list[Face]]] = None
        self._interior_sorted: Optional[tuple[Edge, ...]] = None
        self._interior_array = None

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.instance == other.instance
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return f"Triangulation({len(self.edges)} edges over {self.instance!r})"

    def key(self) -> tuple[Edge, ...]:
        """Canonical identity: the sorted edge list."""
        return tuple(sorted(self.edges))

    def segment(self, e: Edge) -> Segment:
        return self.instance.segment(e)

    def interior_edges(self) -> tuple[Edge, ...]:
        if self._interior_sorted is None:
            self._interior_sorted = tuple(
                sorted(self.edges - self.instance.border_edges)
            )
        return self._interior_sorted

    def interior_array(self):
        """Interior-edge coordinates packed for the batch kernels."""
        if self._interior_array is None:
            from . import kernels

            self._interior_array = kernels.segments_array(
                [self.segment(e) for e in self.interior_edges()]
            )
        return self._interior_array


def _angular_cmp(origin: Point, points: Sequence[Point]):
    """Exact comparator ordering neighbour vertices ccw around origin."""

    def half(p: Point) -> int:
        dx, dy = p[0] - origin[0], p[1] - origin[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(u: int, v: int) -> int:
        pu, pv = points[u], points[v]
        hu, hv = half(pu), half(pv)
        if hu != hv:
            return -1 if hu < hv else 1
        cross = (pu[0] - origin[0]) * (pv[1] - origin[1]) - (
            pu[1] - origin[1]
        ) * (pv[0] - origin[0])
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return functools.cmp_to_key(cmp)


def faces(t: Triangulation) -> tuple[Face, ...]:
    """All bounded triangular faces inside the region, each ccw.

    Traces the rotation system: around each vertex, neighbours are sorted by
    exact angle; following predecessor links walks every face with its
    interior on the left.  Cycles with positive signed area are the interior
    faces.  The outer cycle comes out clockwise (negative area) and is
    dropped; each hole interior is a bounded face too, traced ccw, and is
    recognized by its boundary polygon and dropped as well.
    """
    if t._faces is not None:
        return t._faces
    pts = t.instance.points
    hole_signatures = [
        (frozenset(poly), frozenset(
            canonical_edge(poly[k], poly[(k + 1) % len(poly)])
            for k in range(len(poly))
        ))
        for poly in t.instance.border[1:]
    ]
    adj: dict[int, list[int]] = {}
    for a, b in t.edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    order: dict[int, list[int]] = {}
    pos: dict[tuple[int, int], int] = {}
    for v, nbrs in adj.items():
        nbrs.sort(key=_angular_cmp(pts[v], pts))
        order[v] = nbrs
        for idx, u in enumerate(nbrs):
            pos[(v, u)] = idx
    result: list[Face] = []
    seen: set[tuple[int, int]] = set()
    for a, b in sorted(t.edges):
        for start in ((a, b), (b, a)):
            if start in seen:
                continue
            cycle = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                cycle.append(cur[0])
                u, v = cur
                nbrs = order[v]
                cur = (v, nbrs[(pos[(v, u)] - 1) % len(nbrs)])
            area2 = 0
            for i in range(len(cycle)):
                p = pts[cycle[i]]
                q = pts[cycle[(i + 1) % len(cycle)]]
                area2 += p[0] * q[1] - q[0] * p[1]
            if area2 <= 0:
                continue  # outer face
            cycle_edges = frozenset(
                canonical_edge(cycle[i], cycle[(i + 1) % len(cycle)])
                for i in range(len(cycle))
            )
            if (frozenset(cycle), cycle_edges) in hole_signatures:
                continue  # the untriangulated interior of a hole
            if len(cycle) != 3:
                raise NotATriangulation(
                    f"bounded face {cycle} has {len(cycle)} vertices"
                )
            result.append(Face(tuple(cycle)))
    result.sort(key=lambda f: tuple(sorted(f.vertices)))
    t._faces = tuple(result)
    return t._faces


def _edge_face_map(t: Triangulation) -> dict[Edge, list[Face]]:
    if t._edge_faces is None:
        mapping: dict[Edge, list[Face]] = {}
        for f in faces(t):
            for e in f.edges():
                mapping.setdefault(e, []).append(f)
        t._edge_faces = mapping
    return t._edge_faces


def quadrilateral_of(t: Triangulation, e: Edge) -> Optional[Quadrilateral]:
    """The quadrilateral with e as diagonal, or None for a border edge."""
    e = canonical_edge(*e)
    if e not in t.edges:
        raise EdgeNotInTriangulation(f"edge {e} not in triangulation")
    incident = _edge_face_map(t).get(e, [])
    if len(incident) < 2:
        return None
    a, c = e
    pts = t.instance.points
    others = [next(v for v in f.vertices if v not in e) for f in incident]
    x, y = others
    if geometry.orient(pts[a], pts[c], pts[x]) < 0:
        b, d = x, y
    else:
        b, d = y, x
    quad = (a, b, c, d)  # ccw boundary order
    ring = [pts[v] for v in quad]
    strictly_convex = all(
        geometry.orient(ring[i], ring[(i + 1) % 4], ring[(i + 2) % 4]) == 1
        for i in range(4)
    )
    return Quadrilateral(
        diagonal=e,
        opposite=canonical_edge(b, d),
        strictly_convex=strictly_convex,
        vertices=quad,
    )


def flip(t: Triangulation, e: Edge) -> Triangulation:
    """Replace diagonal e with the opposite diagonal of its quadrilateral."""
    e = canonical_edge(*e)
    quad = quadrilateral_of(t, e)
    if quad is None:
        raise NotFlippable(f"edge {e} is a border edge")
    if not quad.strictly_convex:
        raise NotFlippable(f"quadrilateral of {e} is not strictly convex")
    return Triangulation(t.instance, (t.edges - {e}) | {quad.opposite})


def greedy_triangulate(
    inst: Instance,
    priority: Optional[Callable[[Edge], object]] = None,
) -> Triangulation:
    """Build a triangulation by inserting admissible pairs in priority order.

    Border edges are inserted first; every further candidate is accepted iff
    it crosses no accepted edge.  The default priority is lexicographic on
    (min id, max id), which makes the output deterministic.
    """
    inst.require_valid()
    candidates = list(inst.admissible_pairs())
    candidates.sort(key=priority if priority is not None else lambda e: e)
    accepted: list[Edge] = list(inst.border_edges)
    accepted_segs: list[Segment] = [inst.segment(e) for e in accepted]
    chosen = set(accepted)
    for e in candidates:
        if e in chosen:
            continue
        seg = inst.segment(e)
        if any(geometry.properly_intersect(seg, s) for s in accepted_segs):
            continue
        chosen.add(e)
        accepted_segs.append(seg)
    return Triangulation(inst, chosen)


def validate(t: Triangulation) -> list[str]:
    """Every violated triangulation invariant; empty means valid."""
    inst = t.instance
    out: list[str] = []
    for e in sorted(inst.border_edges - t.edges):
        out.append(f"missing border edge {e}")
    edges = sorted(t.edges)
    for e in edges:
        if e[0] < 0 or e[1] >= inst.n or e[0] == e[1]:
            out.append(f"invalid edge {e}")
            return out
    segs = {e: inst.segment(e) for e in edges}
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if geometry.properly_intersect(segs[edges[i]], segs[edges[j]]):
                out.append(f"edges {edges[i]} and {edges[j]} cross")
    for e in edges:
        for k in range(inst.n):
            if k not in e and geometry.point_on_open_segment(
                inst.points[k], segs[e]
            ):
                out.append(f"vertex {k} lies inside edge {e}")
    coords = inst.border_coords()
    for e in edges:
        if e in inst.border_edges:
            continue
        if geometry.midpoint_in_region(segs[e], coords) != INSIDE:
            out.append(f"edge {e} leaves the region")
    admissible = set(inst.admissible_pairs())
    for cand in sorted(admissible - t.edges):
        cseg = inst.segment(cand)
        if not any(
            geometry.properly_intersect(cseg, segs[e]) for e in edges
        ):
            out.append(f"not maximal: edge {cand} could be added")
    expected = interior_edge_count(inst.n, inst.n_b, inst.h)
    actual = len(t.edges - inst.border_edges)
    if not out and actual != expected:
        out.append(
            f"interior edge count {actual} != expected {expected}"
        )
    return out
