"""Exact backtracking search for minimum star-forest decompositions of K_n.

Edges are colored one at a time in lexicographic order. A color class must
stay a star-forest (and, for geometric instances, crossing-free; for
abstract ones, have at most ``k`` stars). ``mode="pruned"`` additionally
lets an edge open a new class only if all lower classes are open, which
removes color-permutation symmetry. ``mode="reference"`` applies validity
checks only and serves as the oracle for the pruned mode.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from itertools import combinations

from .exceptions import InvalidInput, NodeLimitExceeded, TooLarge
from .forest import Covering, StarForest
from .geometry import PointSet, convex_crossing

MAX_N = 8
MODES = ("pruned", "reference")


@dataclass
class SearchResult:
    optimum: int
    witness: Covering | None
    exhausted: bool
    nodes_visited: int
    mode: str
    problem: str = ""
    n: int = 0
    k: int | None = None


def node_limit_from_env() -> int | None:
    raw = os.environ.get("STARFOREST_NODE_LIMIT")
    return int(raw) if raw else None


class _Search:
    def __init__(self, n, t, geometry=None, k=None, mode="pruned", node_limit=None):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        self.n, self.t, self.k, self.mode = n, t, k, mode
        self.geometry = geometry
        self.edges = list(combinations(range(1, n + 1), 2))
        m = len(self.edges)
        self.cross = [0] * m
        if geometry is not None:
            for i, j in combinations(range(m), 2):
                if convex_crossing(n, self.edges[i], self.edges[j]):
                    self.cross[i] |= 1 << j
                    self.cross[j] |= 1 << i
        self.node_limit = node_limit if node_limit is not None else node_limit_from_env()
        self.nodes = 0
        self.deg = [[0] * (n + 1) for _ in range(t)]
        self.nbr = [[0] * (n + 1) for _ in range(t)]
        self.mask = [0] * t
        self.comps = [0] * t
        self.color = [-1] * m

    def run(self) -> bool:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * len(self.edges) + 100))
        try:
            return self._run()
        finally:
            sys.setrecursionlimit(limit)

    def _run(self) -> bool:
        m, t = len(self.edges), self.t
        us = [u for u, _ in self.edges]
        vs = [v for _, v in self.edges]
        cross, mask, comps = self.cross, self.mask, self.comps
        deg, nbr, color = self.deg, self.nbr, self.color
        cap = self.k if self.k is not None else m + 1
        node_limit = self.node_limit if self.node_limit is not None else float("inf")
        reference = self.mode == "reference"

        def extend(e, opened):
            self.nodes += 1
            if self.nodes > node_limit:
                raise NodeLimitExceeded(node_limit)
            if e == m:
                return True
            u, v, bit, xmask = us[e], vs[e], 1 << e, cross[e]
            for c in range(t if reference else min(opened + 1, t)):
                if xmask & mask[c]:
                    continue
                dg, nb = deg[c], nbr[c]
                du, dv = dg[u], dg[v]
                if du and dv:
                    continue
                if du or dv:
                    # the occupied end must be a center or half of a lone edge
                    x = u if du else v
                    if dg[x] == 1 and dg[nb[x]] > 1:
                        continue
                    new = 0
                else:
                    if comps[c] >= cap:
                        continue
                    new = 1
                dg[u] = du + 1
                dg[v] = dv + 1
                nb[u] += v
                nb[v] += u
                mask[c] |= bit
                comps[c] += new
                color[e] = c
                if extend(e + 1, opened if c < opened else c + 1):
                    return True
                dg[u] = du
                dg[v] = dv
                nb[u] -= v
                nb[v] -= u
                mask[c] ^= bit
                comps[c] -= new
            color[e] = -1
            return False

        return extend(0, 0)

    def witness(self) -> Covering:
        classes = [[] for _ in range(self.t)]
        for e, c in zip(self.edges, self.color):
            classes[c].append(e)
        forests = tuple(StarForest.from_edges(cl) for cl in classes if cl)
        return Covering(self.n, forests, self.geometry)


def _check_size(n):
    if n > MAX_N:
        raise TooLarge(f"n={n} exceeds the exhaustive-search cap {MAX_N}")
    if n < 1:
        raise InvalidInput("n must be positive")


def _plane_search(ps: PointSet, t, mode, node_limit):
    if not ps.convex:
        raise InvalidInput("plane search expects a convex point set")
    _check_size(ps.n)
    return _Search(ps.n, t, ps, None, mode, node_limit)


def decide_plane_decomposition(
    ps: PointSet, t: int, mode: str = "pruned", node_limit: int | None = None
) -> Covering | None:
    """A decomposition of convex K_n into at most t plane star-forests, or None."""
    s = _plane_search(ps, t, mode, node_limit)
    return s.witness() if s.run() else None


def decide_k_star_forest_decomposition(
    n: int, k: int, t: int, mode: str = "pruned", node_limit: int | None = None
) -> Covering | None:
    """A decomposition of abstract K_n into at most t k-star-forests, or None."""
    _check_size(n)
    if k < 1:
        raise InvalidInput("k must be positive")
    s = _Search(n, t, None, k, mode, node_limit)
    return s.witness() if s.run() else None


def _minimize(make, n, mode, node_limit, problem, k=None) -> SearchResult:
    if node_limit is None:
        node_limit = node_limit_from_env()
    if n <= 1:
        return SearchResult(0, Covering(n, ()), True, 0, mode, problem, n, k)
    nodes = 0
    t = 1
    while True:
        s = make(t, node_limit if node_limit is None else node_limit - nodes)
        try:
            found = s.run()
        except NodeLimitExceeded:
            raise NodeLimitExceeded(node_limit) from None
        nodes += s.nodes
        if found:
            return SearchResult(t, s.witness(), True, nodes, mode, problem, n, k)
        t += 1


def min_plane_star_forests(
    ps: PointSet, mode: str = "pruned", node_limit: int | None = None
) -> SearchResult:
    """Least t admitting a plane star-forest decomposition; every smaller t is exhausted."""

    def make(t, limit):
        return _plane_search(ps, t, mode, limit)

    return _minimize(make, ps.n, mode, node_limit, "plane")


def min_k_star_forests(
    n: int, k: int, mode: str = "pruned", node_limit: int | None = None
) -> SearchResult:
    """Least t admitting a decomposition of K_n into k-star-forests."""
    _check_size(n)

    def make(t, limit):
        return _Search(n, t, None, k, mode, limit)

    return _minimize(make, n, mode, node_limit, "kstar", k)
