"""Seeded random plane coverings of convex K_n for stress testing.

Start from the star decomposition and apply random moves, keeping a move
only if the result still verifies as a covering by plane star-forests.
"""

from __future__ import annotations

import random

from .constructions import star_decomposition
from .exceptions import StarForestError
from .forest import Covering, Star, StarForest, verify_covering
from .geometry import gen_convex
from .recolor import move_star

MOVES = ("move-star", "flip-center", "duplicate-edge", "drop-copy")


def _replace(c: Covering, idx: int, f: StarForest) -> Covering:
    forests = list(c.forests)
    forests[idx] = f
    return Covering(c.n, tuple(forests), c.geometry)


def _flip_center(c, rng):
    cands = [(i, s) for i, f in enumerate(c.forests) for s in f.stars if len(s.leaves) == 1]
    if not cands:
        return None
    i, s = rng.choice(cands)
    (leaf,) = s.leaves
    stars = [Star(leaf, frozenset({s.center})) if t == s else t for t in c.forests[i].stars]
    return _replace(c, i, StarForest(tuple(stars)))


def _duplicate_edge(c, rng):
    src = [i for i, f in enumerate(c.forests) if f.edges]
    if not src:
        return None
    e = rng.choice(c.forests[rng.choice(src)].edges)
    dst = rng.randrange(len(c.forests))
    f = c.forests[dst]
    if e in f.edges:
        return None
    touched = {x for g in f.edges for x in g}
    # listed single-vertex stars on either endpoint get absorbed
    stars = [s for s in f.stars if s.leaves or s.center not in e]
    hit = [x for x in e if x in touched]
    if not hit:
        center = rng.choice(e)
        stars.append(Star(center, frozenset(set(e) - {center})))
    elif len(hit) == 1:
        (x,) = hit
        (y,) = set(e) - {x}
        hub = [s for s in stars if s.center == x and s.leaves]
        if not hub:
            return None
        stars = [Star(s.center, s.leaves | {y}) if s is hub[0] else s for s in stars]
    else:
        return None
    return _replace(c, dst, StarForest(tuple(stars)))


def _drop_copy(c, rng):
    mult = c.multiplicity()
    multi = sorted(e for e, m in mult.items() if m > 1)
    if not multi:
        return None
    e = rng.choice(multi)
    holders = [i for i, f in enumerate(c.forests) if e in f.edges]
    i = rng.choice(holders)
    stars = []
    for s in c.forests[i].stars:
        if e in s.edges:
            s = Star(s.center, s.leaves - set(e))
            if not s.leaves:
                continue
        stars.append(s)
    return _replace(c, i, StarForest(tuple(stars)))


def _move(c, rng):
    src = [i for i, f in enumerate(c.forests) if f.stars]
    if not src or len(c.forests) < 2:
        return None
    i = rng.choice(src)
    star = rng.choice(c.forests[i].stars)
    j = rng.choice([x for x in range(len(c.forests)) if x != i])
    return move_star(c, i, j, star)


def random_covering(n: int, seed: int, moves: int = 60, extra_forests: int = 0) -> Covering:
    """A valid covering of convex K_n by n - 1 + ``extra_forests`` plane star-forests."""
    rng = random.Random(seed)
    base = star_decomposition(n, gen_convex(n))
    c = Covering(n, base.forests + (StarForest(),) * extra_forests, base.geometry)
    ops = {"move-star": _move, "flip-center": _flip_center,
           "duplicate-edge": _duplicate_edge, "drop-copy": _drop_copy}
    for _ in range(moves):
        try:
            cand = ops[rng.choice(MOVES)](c, rng)
        except StarForestError:
            continue
        if cand is not None and verify_covering(cand).ok:
            c = cand
    return c
