"""Exact planar predicates and generators for the point configurations.

All coordinates are Python ints bounded by ``COORD_LIMIT``; every predicate
is the sign of an integer determinant, so verdicts are exact.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import (
    CoordinateOutOfRange,
    DegeneratePointSet,
    HypothesisViolated,
    IdenticalEdge,
    SizeOutOfRange,
)

COORD_LIMIT = 2**20
MAX_CONVEX_N = 64
MAX_CLUSTER_K = 8


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


@dataclass(frozen=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        for c in (self.x, self.y):
            if not isinstance(c, int) or isinstance(c, bool):
                raise CoordinateOutOfRange(f"coordinate {c!r} is not an integer")
            if abs(c) > COORD_LIMIT:
                raise CoordinateOutOfRange(f"|{c}| exceeds {COORD_LIMIT}")


def cross(p: Point, q: Point, r: Point) -> int:
    """Twice the signed area of triangle pqr (positive for a left turn)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    d = cross(p, q, r)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


@dataclass(frozen=True)
class PointSet:
    """Labeled points in general position.

    Vertex labels are 1-based: vertex ``v`` sits at ``points[v - 1]``.
    With ``convex=True`` the listed order is certified to be the
    clockwise boundary order of a strictly convex polygon.
    """

    points: tuple[Point, ...]
    convex: bool = False

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point) else Point(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise DegeneratePointSet("points are not distinct")
        if self.convex:
            # strict right turns for every boundary edge imply general position
            bad = _convexity_witness(pts)
            if bad is not None:
                raise DegeneratePointSet(f"not clockwise convex: {bad}")
        else:
            for a, b, c in itertools.combinations(range(len(pts)), 3):
                if cross(pts[a], pts[b], pts[c]) == 0:
                    raise DegeneratePointSet(
                        f"vertices {a + 1}, {b + 1}, {c + 1} are collinear"
                    )

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def point(self, v: int) -> Point:
        return self.points[v - 1]

    def without(self, v: int) -> PointSet:
        """Drop vertex ``v``; later labels shift down by one."""
        pts = self.points[: v - 1] + self.points[v:]
        return PointSet(pts, convex=self.convex)


def _convexity_witness(pts: Sequence[Point]):
    n = len(pts)
    if n < 3:
        return None
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            if cross(p, q, pts[j]) >= 0:
                return (i + 1, (i + 1) % n + 1, j + 1)
    return None


def is_convex_clockwise(points: Iterable[Point]) -> bool:
    return _convexity_witness(list(points)) is None


def segments_cross(e1, e2, ps: PointSet) -> bool:
    """True iff the open segments of two edges (vertex-label pairs) meet."""
    a, b = e1
    c, d = e2
    if {a, b} == {c, d}:
        raise IdenticalEdge(f"edge {tuple(e1)} compared with itself")
    if len({a, b, c, d}) < 4:
        return False
    p, q, r, s = ps.point(a), ps.point(b), ps.point(c), ps.point(d)
    # general position: all four orientations are nonzero
    return (cross(p, q, r) > 0) != (cross(p, q, s) > 0) and (
        cross(r, s, p) > 0
    ) != (cross(r, s, q) > 0)


def convex_crossing(n: int, e1, e2) -> bool:
    """Chord crossing on ``n`` points in convex position, by label interleaving."""
    a, b = sorted(e1)
    c, d = sorted(e2)
    for v in (a, b, c, d):
        if not 1 <= v <= n:
            raise SizeOutOfRange(f"vertex {v} outside 1..{n}")
    if (a, b) == (c, d):
        raise IdenticalEdge(f"edge {(a, b)} compared with itself")
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _by_angle(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _primitive_directions(m: int) -> list[tuple[int, int]]:
    # m shortest primitive vectors in the open upper half plane (plus +x axis)
    out = []
    radius = 1
    while len(out) < m:
        cands = []
        for x in range(-radius, radius + 1):
            for y in range(0, radius + 1):
                if _half((x, y)) == 0 and math.gcd(x, y) == 1:
                    cands.append((x * x + y * y, x, y))
        cands.sort()
        out = [(x, y) for _, x, y in cands[:m]]
        radius *= 2
    return out


def gen_convex(n: int) -> PointSet:
    """Integer points in strictly convex position, labeled clockwise.

    Edge vectors are distinct primitive directions sorted by angle, so the
    boundary is a lattice polygon with no three collinear vertices. Odd ``n``
    drops one vertex of the ``n + 1`` polygon.
    """
    if not 1 <= n <= MAX_CONVEX_N:
        raise SizeOutOfRange(f"n={n} outside 1..{MAX_CONVEX_N}")
    if n == 1:
        return PointSet((Point(0, 0),), convex=True)
    m = n + (n % 2)
    half = _primitive_directions(m // 2)
    vecs = sorted(half + [(-x, -y) for x, y in half], key=functools.cmp_to_key(_by_angle))
    verts = [(0, 0)]
    for x, y in vecs[:-1]:
        px, py = verts[-1]
        verts.append((px + x, py + y))
    verts.reverse()
    verts = verts[:n]
    mx = min(x for x, _ in verts)
    my = min(y for _, y in verts)
    return PointSet(tuple(Point(x - mx, y - my) for x, y in verts), convex=True)


@dataclass(frozen=True)
class ClusteredPointSet:
    """Four clusters A1..A4 of equal size k, each a tuple of vertex labels.

    Construction checks that every point of A4 lies strictly inside every
    triangle with one corner from each of A1, A2, A3.
    """

    base: PointSet
    clusters: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cl = tuple(tuple(c) for c in self.clusters)
        object.__setattr__(self, "clusters", cl)
        if len(cl) != 4 or len({len(c) for c in cl}) != 1:
            raise DegeneratePointSet("need four clusters of equal size")
        labels = sorted(v for c in cl for v in c)
        if labels != list(range(1, self.base.n + 1)):
            raise DegeneratePointSet("clusters must partition the vertex labels")
        bad = containment_violation(self.base, cl)
        if bad is not None:
            raise HypothesisViolated(f"vertex {bad[3]} not inside triangle {bad[:3]}")

    @property
    def k(self) -> int:
        return len(self.clusters[0])


def strictly_inside(p: Point, a: Point, b: Point, c: Point) -> bool:
    s1, s2, s3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)


def containment_violation(ps: PointSet, clusters):
    """First (a1, a2, a3, a4) label tuple breaking containment, or None."""
    a1, a2, a3, a4 = clusters
    for u, v, w in itertools.product(a1, a2, a3):
        pu, pv, pw = ps.point(u), ps.point(v), ps.point(w)
        for x in a4:
            if not strictly_inside(ps.point(x), pu, pv, pw):
                return (u, v, w, x)
    return None


def gen_four_cluster(
    k: int,
    side: int = 3 * 2**16,
    radius: int | None = None,
    seed: int = 0,
    max_shrinks: int = 12,
) -> ClusteredPointSet:
    """Four tight clusters: three near the corners of a big triangle, one near its centroid.

    ``side`` must be divisible by 3 so the centroid is a lattice point. On a
    failed containment check the radius is halved and the draw repeated.
    """
    if not 1 <= k <= MAX_CLUSTER_K:
        raise SizeOutOfRange(f"k={k} outside 1..{MAX_CLUSTER_K}")
    if side % 3:
        raise SizeOutOfRange("side must be divisible by 3")
    centers = [(0, 0), (2 * side, 0), (side, 2 * side), (side, 2 * side // 3)]
    r = side // 64 if radius is None else radius
    rng = random.Random(seed)
    for _ in range(max_shrinks + 1):
        if r < k:
            break
        try:
            ps = _draw_clusters(centers, k, r, rng)
        except DegeneratePointSet:
            r //= 2
            continue
        clusters = tuple(tuple(range(c * k + 1, c * k + k + 1)) for c in range(4))
        if containment_violation(ps, clusters) is None:
            return ClusteredPointSet(ps, clusters)
        r //= 2
    raise HypothesisViolated(f"no admissible four-cluster layout for k={k}")


def _draw_clusters(centers, k, r, rng, attempts=50) -> PointSet:
    for _ in range(attempts):
        pts = []
        for cx, cy in centers:
            chosen = set()
            while len(chosen) < k:
                dx, dy = rng.randint(-r, r), rng.randint(-r, r)
                if dx * dx + dy * dy <= r * r:
                    chosen.add((cx + dx, cy + dy))
            pts.extend(Point(x, y) for x, y in sorted(chosen))
        try:
            return PointSet(tuple(pts))
        except DegeneratePointSet:
            continue
    raise DegeneratePointSet("could not draw clusters in general position")
