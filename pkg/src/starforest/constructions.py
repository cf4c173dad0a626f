"""Explicit coverings of K_n by (plane) star-forests."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import BadParameters, PlanarityFailure, SizeTooSmall
from .forest import Covering, Star, StarForest, crossing_pairs
from .geometry import ClusteredPointSet, PointSet


def _star(center, leaves) -> Star:
    return Star(center, frozenset(leaves) - {center})


def _forest(*stars: Star) -> StarForest:
    return StarForest(tuple(stars))


def star_decomposition(n: int, geometry: PointSet | None = None) -> Covering:
    """K_n as n - 1 stars: forest i is centered at vertex i with leaves i+1..n."""
    if n < 1:
        raise SizeTooSmall("n must be at least 1")
    forests = [_forest(_star(i, range(i + 1, n + 1))) for i in range(1, n)]
    return Covering(n, tuple(forests), geometry)


@dataclass(frozen=True)
class Partition4:
    """Near-equal blocks V1..V4 with surjections V2->V1, V4->V3, V3->V1."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def contiguous(cls, n: int) -> Partition4:
        q, r = divmod(n, 4)
        sizes = [q + (1 if i >= 4 - r else 0) for i in range(4)]
        blocks, start = [], 1
        for s in sizes:
            blocks.append(tuple(range(start, start + s)))
            start += s
        return cls(tuple(blocks))

    @staticmethod
    def surjection(src, dst) -> dict[int, int]:
        # j-th element of src to the j-th of dst, wrapping; onto since |src| >= |dst|
        return {u: dst[j % len(dst)] for j, u in enumerate(src)}


def two_star_forest_cover(n: int) -> Covering:
    """Cover K_n (n >= 4) with ceil(3n/4) forests of at most two stars each."""
    if n < 4:
        raise SizeTooSmall(f"n={n}; the construction needs n >= 4")
    v1, v2, v3, v4 = Partition4.contiguous(n).blocks
    f = Partition4.surjection(v2, v1)
    g = Partition4.surjection(v4, v3)
    h = Partition4.surjection(v3, v1)
    forests = []
    for u in v2:
        forests.append(_forest(_star(u, v2 + v3), _star(f[u], v1 + v4)))
    for w in v4:
        forests.append(_forest(_star(g[w], v3 + v1), _star(w, v4 + v2)))
    for x in v3:
        forests.append(_forest(_star(h[x], v2), _star(x, v4)))
    assert len(forests) == math.ceil(3 * n / 4)
    return Covering(n, tuple(forests))


def four_cluster_forests(cps: ClusteredPointSet) -> Covering:
    """The 3k plane star-forests on a four-cluster point set of size 4k.

    Planarity is checked on the actual coordinates; a crossing raises
    ``PlanarityFailure`` naming the forest and the offending edge pair.
    """
    a1, a2, a3, a4 = cps.clusters
    pairings = [(a1, a1 + a2, a3, a3 + a4), (a2, a2 + a3, a4, a4 + a1), (a1, a1 + a3, a2, a2 + a4)]
    forests = []
    for first, first_to, second, second_to in pairings:
        for i in range(cps.k):
            forests.append(_forest(_star(first[i], first_to), _star(second[i], second_to)))
    cov = Covering(cps.base.n, tuple(forests), cps.base)
    for idx, forest in enumerate(cov.forests):
        bad = crossing_pairs(forest.edges, cps.base)
        if bad:
            raise PlanarityFailure(idx, *bad[0])
    return cov


def k_star_forest_cover(n: int, k: int) -> Covering:
    """Cover K_n (n even) with n/2 + ceil(n/(2k)) forests of at most k stars."""
    if n % 2 or k < 2 or n < 2 * k:
        raise BadParameters(f"need even n >= 2k >= 4, got n={n}, k={k}")
    t = n // 2

    def v(i):
        return (i - 1) % n + 1

    forests = []
    for i in range(1, t + 1):
        forests.append(
            _forest(
                _star(v(i), [v(j) for j in range(i + 1, i + t)]),
                _star(v(i + t), [v(j + t) for j in range(i + 1, i + t)]),
            )
        )
    matching = [_star(i, [i + t]) for i in range(1, t + 1)]
    for start in range(0, t, k):
        forests.append(_forest(*matching[start:start + k]))
    return Covering(n, tuple(forests))
