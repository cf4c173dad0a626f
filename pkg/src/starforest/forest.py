"""Stars, star-forests, coverings, and the structural verifiers.

Vertices are labeled 1..n. Forests inside a covering are addressed by their
0-based position in ``Covering.forests``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

import networkx as nx

from .exceptions import (
    GeometryMissing,
    IncompleteCovering,
    NotTwoCenters,
    StarForestViolation,
)
from .geometry import PointSet, convex_crossing, segments_cross

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def all_edges(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class Star:
    """A center with a (possibly empty) set of leaves."""

    center: int
    leaves: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "leaves", frozenset(self.leaves))
        if self.center in self.leaves:
            raise ValueError(f"center {self.center} listed as its own leaf")

    @property
    def vertices(self) -> frozenset[int]:
        return self.leaves | {self.center}

    @property
    def edges(self) -> list[Edge]:
        return [edge(self.center, v) for v in sorted(self.leaves)]


@dataclass(frozen=True)
class StarForest:
    stars: tuple[Star, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "stars", tuple(self.stars))

    @property
    def edges(self) -> list[Edge]:
        return [e for s in self.stars for e in s.edges]

    @property
    def vertices(self) -> set[int]:
        return {v for s in self.stars for v in s.vertices}

    def center_of(self, e: Edge) -> int | None:
        u, v = e
        for s in self.stars:
            if s.center == u and v in s.leaves:
                return u
            if s.center == v and u in s.leaves:
                return v
        return None

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> StarForest:
        """Canonical listing of an edge set whose components are stars.

        The center of a single-edge star is its lower endpoint.
        """
        g = nx.Graph()
        g.add_edges_from(edges)
        stars = []
        for comp in nx.connected_components(g):
            sub = g.subgraph(comp)
            if sub.number_of_edges() != len(comp) - 1:
                raise StarForestViolation(f"component {sorted(comp)} is not a star")
            center = min(comp) if len(comp) == 2 else max(comp, key=sub.degree)
            if sub.degree(center) != len(comp) - 1:
                raise StarForestViolation(f"component {sorted(comp)} is not a star")
            stars.append(Star(center, frozenset(comp - {center})))
        return cls(tuple(sorted(stars, key=lambda s: s.center)))


def component_count(f: StarForest) -> int:
    return len(f.stars)


@dataclass(frozen=True)
class Covering:
    n: int
    forests: tuple[StarForest, ...]
    geometry: PointSet | None = None

    def __post_init__(self):
        object.__setattr__(self, "forests", tuple(self.forests))
        if self.geometry is not None and self.geometry.n != self.n:
            raise ValueError(f"geometry has {self.geometry.n} points, covering n={self.n}")

    def __len__(self):
        return len(self.forests)

    def multiplicity(self) -> Counter:
        return Counter(e for f in self.forests for e in f.edges)

    def with_geometry(self, ps: PointSet | None) -> Covering:
        return Covering(self.n, self.forests, ps)


class Violation(NamedTuple):
    kind: str
    detail: object


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind, detail):
        self.violations.append(Violation(kind, detail))

    def extend(self, other: ValidationReport, prefix=None):
        for v in other.violations:
            detail = v.detail if prefix is None else (prefix, v.detail)
            self.violations.append(Violation(v.kind, detail))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(f"{v.kind}: {v.detail}" for v in self.violations)


def verify_star_forest(f: StarForest, n: int | None = None) -> ValidationReport:
    rep = ValidationReport()
    owners = defaultdict(list)
    for i, s in enumerate(f.stars):
        for v in s.vertices:
            owners[v].append(i)
    for v in sorted(owners):
        if len(owners[v]) > 1:
            rep.add("overlap", {"vertex": v, "stars": owners[v]})
        if v < 1 or (n is not None and v > n):
            rep.add("out-of-range", {"vertex": v})
    return rep


def crossing_pairs(edges: list[Edge], ps: PointSet) -> list[tuple[Edge, Edge]]:
    if ps.convex:
        def crosses(a, b):
            return convex_crossing(ps.n, a, b)
    else:
        def crosses(a, b):
            return segments_cross(a, b, ps)
    return [(a, b) for a, b in combinations(edges, 2) if a != b and crosses(a, b)]


def verify_plane(f: StarForest, ps: PointSet | None) -> ValidationReport:
    if ps is None:
        raise GeometryMissing("planarity needs a point set")
    rep = ValidationReport()
    edges = f.edges
    bad = {v for e in edges for v in e if not 1 <= v <= ps.n}
    for v in sorted(bad):
        rep.add("out-of-range", {"vertex": v})
    if bad:
        return rep
    for a, b in crossing_pairs(edges, ps):
        rep.add("crossing", {"edges": [list(a), list(b)]})
    return rep


def _structural(c: Covering) -> ValidationReport:
    rep = ValidationReport()
    for i, f in enumerate(c.forests):
        rep.extend(verify_star_forest(f, c.n), prefix={"forest": i})
        if c.geometry is not None:
            rep.extend(verify_plane(f, c.geometry), prefix={"forest": i})
    return rep


def verify_covering(c: Covering) -> ValidationReport:
    rep = _structural(c)
    mult = c.multiplicity()
    for e in all_edges(c.n):
        if mult[e] == 0:
            rep.add("missing-edge", {"edge": list(e)})
    return rep


def verify_decomposition(c: Covering) -> ValidationReport:
    rep = verify_covering(c)
    for e, m in sorted(c.multiplicity().items()):
        if m > 1:
            rep.add("multi-covered", {"edge": list(e), "count": m})
    return rep


def project_to_decomposition(c: Covering) -> Covering:
    """Keep every edge only in the lowest-index forest that contains it."""
    mult = c.multiplicity()
    missing = [e for e in all_edges(c.n) if mult[e] == 0]
    if missing:
        raise IncompleteCovering(f"{len(missing)} edge(s) uncovered, e.g. {missing[0]}")
    seen = set()
    out = []
    for f in c.forests:
        stars = []
        for s in f.stars:
            keep = frozenset(v for v in s.leaves if edge(s.center, v) not in seen)
            if keep or not s.leaves:
                stars.append(Star(s.center, keep))
        seen.update(f.edges)
        out.append(StarForest(tuple(stars)))
    return Covering(c.n, tuple(out), c.geometry)


def center_graph(c: Covering) -> list[Edge]:
    """One edge per forest joining the centers of its two stars (multi-edges kept)."""
    out = []
    for i, f in enumerate(c.forests):
        if len(f.stars) != 2:
            raise NotTwoCenters(i, len(f.stars))
        out.append(edge(f.stars[0].center, f.stars[1].center))
    return out


def center_graph_components(c: Covering) -> list[tuple[frozenset[int], int]]:
    """Components of the center graph as (vertex set, edge count), isolated vertices included."""
    g = nx.MultiGraph()
    g.add_nodes_from(range(1, c.n + 1))
    g.add_edges_from(center_graph(c))
    return [
        (frozenset(comp), g.subgraph(comp).number_of_edges())
        for comp in nx.connected_components(g)
    ]
