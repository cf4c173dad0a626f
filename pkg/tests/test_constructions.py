import math

import networkx as nx
import pytest

from starforest import (
    Partition4,
    component_count,
    four_cluster_forests,
    gen_convex,
    gen_four_cluster,
    k_star_forest_cover,
    star_decomposition,
    two_star_forest_cover,
    verify_covering,
    verify_decomposition,
    verify_plane,
)
from starforest.exceptions import BadParameters, PlanarityFailure, SizeTooSmall
from starforest.geometry import ClusteredPointSet, Point, PointSet


def covers_complete_graph(c):
    g = nx.Graph()
    g.add_nodes_from(range(1, c.n + 1))
    for f in c.forests:
        g.add_edges_from(f.edges)
    return nx.utils.edges_equal(g.edges, nx.complete_graph(range(1, c.n + 1)).edges)


def test_star_decomposition_small():
    c = star_decomposition(2)
    assert len(c) == 1 and c.forests[0].edges == [(1, 2)]
    c = star_decomposition(4)
    assert [len(f.stars[0].leaves) for f in c.forests] == [3, 2, 1]
    assert verify_decomposition(c).ok
    assert len(star_decomposition(1)) == 0


@pytest.mark.parametrize("n", [8, 17, 40, 64])
def test_star_decomposition_plane_on_convex(n):
    c = star_decomposition(n, gen_convex(n))
    assert len(c) == n - 1
    assert all(verify_plane(f, c.geometry).ok for f in c.forests)
    assert verify_decomposition(c).ok


@pytest.mark.parametrize("n", range(4, 33))
def test_partition4_shape(n):
    blocks = Partition4.contiguous(n).blocks
    sizes = [len(b) for b in blocks]
    assert sizes == sorted(sizes)
    assert n // 4 <= sizes[0] and sizes[-1] <= math.ceil(n / 4)
    assert sorted(v for b in blocks for v in b) == list(range(1, n + 1))
    f = Partition4.surjection(blocks[1], blocks[0])
    assert set(f.values()) == set(blocks[0])


@pytest.mark.parametrize("n, count", [(4, 3), (5, 4), (8, 6)])
def test_two_star_counts(n, count):
    c = two_star_forest_cover(n)
    assert len(c) == count
    assert verify_covering(c).ok


def test_two_star_family_one_shape():
    n = 8
    v1, v2, v3, v4 = Partition4.contiguous(n).blocks
    f = Partition4.surjection(v2, v1)
    c = two_star_forest_cover(n)
    for u, forest in zip(v2, c.forests):
        by_center = {s.center: s.leaves for s in forest.stars}
        assert by_center[u] == set(v2 + v3) - {u}
        assert by_center[f[u]] == set(v1 + v4) - {f[u]}


@pytest.mark.parametrize("n", range(4, 65))
def test_two_star_cover_invariants(n):
    c = two_star_forest_cover(n)
    assert len(c) == math.ceil(3 * n / 4)
    assert all(component_count(f) <= 2 for f in c.forests)
    assert verify_covering(c).ok
    assert covers_complete_graph(c)


def test_two_star_too_small():
    with pytest.raises(SizeTooSmall):
        two_star_forest_cover(3)


@pytest.mark.parametrize("k", range(1, 9))
def test_four_cluster_forests(k):
    cps = gen_four_cluster(k)
    c = four_cluster_forests(cps)
    assert len(c) == 3 * k
    assert all(verify_plane(f, cps.base).ok for f in c.forests)
    assert verify_covering(c).ok
    assert covers_complete_graph(c)
    assert all(component_count(f) == 2 for f in c.forests)


def test_four_cluster_family_pairing():
    cps = gen_four_cluster(2)
    a1, a2, a3, a4 = cps.clusters
    c = four_cluster_forests(cps)
    first = {s.center: s.leaves for s in c.forests[0].stars}
    assert first[a1[0]] == set(a1 + a2) - {a1[0]}
    assert first[a3[0]] == set(a3 + a4) - {a3[0]}


def test_four_cluster_planarity_failure_is_reported():
    # the containment hypothesis rules crossings out, so bypass validation to
    # reach the defensive check: A4 sits outside the A1-A2-A3 triangle here
    pts = (Point(0, 0), Point(3, 1), Point(100, 0), Point(97, 1),
           Point(50, 100), Point(51, 96), Point(50, -40), Point(52, -37))
    cps = object.__new__(ClusteredPointSet)
    object.__setattr__(cps, "base", PointSet(pts))
    object.__setattr__(cps, "clusters", ((1, 2), (3, 4), (5, 6), (7, 8)))
    with pytest.raises(PlanarityFailure) as err:
        four_cluster_forests(cps)
    assert err.value.forest_index >= 0


@pytest.mark.parametrize("n, k, count", [(8, 2, 6), (12, 3, 8), (6, 3, 4)])
def test_k_star_counts(n, k, count):
    c = k_star_forest_cover(n, k)
    assert len(c) == count
    assert verify_covering(c).ok


def test_k_star_first_family_shape():
    n, k = 8, 2
    t = n // 2
    c = k_star_forest_cover(n, k)
    for i in range(1, t + 1):
        stars = {s.center: s.leaves for s in c.forests[i - 1].stars}
        assert stars[i] == {(j - 1) % n + 1 for j in range(i + 1, i + t)}
        assert stars[i + t] == {(j + t - 1) % n + 1 for j in range(i + 1, i + t)}
    matching = [e for f in c.forests[t:] for e in f.edges]
    assert sorted(matching) == [(i, i + t) for i in range(1, t + 1)]


def test_k_star_conjecture_bound_matches_at_12_3():
    assert len(k_star_forest_cover(12, 3)) == math.ceil((3 + 1) * 12 / (2 * 3))


@pytest.mark.parametrize("n, k", [(7, 2), (6, 1), (6, 4), (2, 1)])
def test_k_star_bad_parameters(n, k):
    with pytest.raises(BadParameters):
        k_star_forest_cover(n, k)
