"""JSON interchange for point sets, coverings, certificates and search results.

Serialization is canonical (sorted keys, fixed indentation, trailing
newline) so that re-parsing and re-dumping reproduces the same bytes.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .forest import Covering, Star, StarForest
from .geometry import ClusteredPointSet, Point, PointSet
from .recolor import DescentCertificate, DescentLevel
from .search import SearchResult


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def pointset_to_dict(ps: PointSet | ClusteredPointSet) -> dict:
    clusters = None
    if isinstance(ps, ClusteredPointSet):
        clusters = [list(c) for c in ps.clusters]
        ps = ps.base
    return {
        "n": ps.n,
        "points": [[p.x, p.y] for p in ps.points],
        "convex": ps.convex,
        "clusters": clusters,
    }


def pointset_from_dict(d: dict) -> PointSet | ClusteredPointSet:
    ps = PointSet(tuple(Point(x, y) for x, y in d["points"]), convex=bool(d.get("convex")))
    if ps.n != d.get("n", ps.n):
        raise ValueError(f"point count {ps.n} does not match n={d['n']}")
    if d.get("clusters"):
        return ClusteredPointSet(ps, tuple(tuple(c) for c in d["clusters"]))
    return ps


def covering_to_dict(c: Covering, clusters=None) -> dict:
    geometry = None
    if c.geometry is not None:
        geometry = pointset_to_dict(c.geometry)
        if clusters is not None:
            geometry["clusters"] = [list(x) for x in clusters]
    return {
        "n": c.n,
        "forests": [
            {"stars": [{"center": s.center, "leaves": sorted(s.leaves)} for s in f.stars]}
            for f in c.forests
        ],
        "geometry": geometry,
    }


def covering_from_dict(d: dict) -> Covering:
    geometry = None
    if d.get("geometry") is not None:
        geometry = pointset_from_dict(d["geometry"])
        if isinstance(geometry, ClusteredPointSet):
            geometry = geometry.base
    forests = tuple(
        StarForest(tuple(Star(s["center"], frozenset(s["leaves"])) for s in f["stars"]))
        for f in d["forests"]
    )
    return Covering(d["n"], forests, geometry)


def certificate_to_dict(cert: DescentCertificate) -> dict:
    return {
        "initial_n": cert.initial_n,
        "initial_forest_count": cert.initial_forest_count,
        "levels": [
            {"n": lv.n, "forest": lv.forest, "center": lv.center, "deleted": lv.deleted}
            for lv in cert.levels
        ],
        "trace": cert.trace,
    }


def certificate_from_dict(d: dict) -> DescentCertificate:
    levels = [DescentLevel(**lv) for lv in d["levels"]]
    return DescentCertificate(levels, d["initial_forest_count"], d["initial_n"], d.get("trace", []))


def search_result_to_dict(r: SearchResult) -> dict:
    return {
        "problem": r.problem,
        "n": r.n,
        "k": r.k,
        "optimum": r.optimum,
        "exhausted": r.exhausted,
        "nodes_visited": r.nodes_visited,
        "mode": r.mode,
        "witness": None if r.witness is None else covering_to_dict(r.witness),
    }


def search_result_from_dict(d: dict) -> SearchResult:
    witness = None if d.get("witness") is None else covering_from_dict(d["witness"])
    return SearchResult(
        d["optimum"], witness, d["exhausted"], d["nodes_visited"], d["mode"],
        d.get("problem", ""), d.get("n", 0), d.get("k"),
    )


def read_json(path) -> dict:
    if str(path) == "-":
        return json.load(sys.stdin)
    return json.loads(Path(path).read_text())


def write_text(text: str, path=None):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
