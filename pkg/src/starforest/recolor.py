"""Supported-edge recoloring on convex coverings, and the spanning-star descent.

A representation ``(a, k)`` names the chord from ``P_a`` to ``P_{a+k}`` with
labels taken cyclically in 1..n. It is *supported* when one forest holds the
chord together with the whole fan of shorter chords from ``P_a`` toward
``P_{a+k}`` (condition i) or into ``P_{a+k}`` from the vertices in between
(condition ii).

The engine works on a private mutable copy of the covering and appends one
record per mutation to a trace list. With ``check=True`` (the default) every
completed move is followed by a full re-verification and a support
monotonicity check; any failure raises ``ProofInvariantViolation``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .exceptions import (
    BadSpan,
    CrossingIntroduced,
    GeometryMissing,
    InvalidInput,
    NoSpanningStar,
    NotAComponent,
    ProofInvariantViolation,
    StarForestViolation,
)
from .forest import (
    Covering,
    Edge,
    Star,
    StarForest,
    crossing_pairs,
    edge,
    verify_covering,
    verify_star_forest,
)
from .geometry import PointSet


class EdgeRep(NamedTuple):
    a: int
    k: int

    def endpoints(self, n: int) -> tuple[int, int]:
        return self.a, cyc(n, self.a + self.k)

    def complement(self, n: int) -> EdgeRep:
        return EdgeRep(cyc(n, self.a + self.k), n - self.k)


def cyc(n: int, x: int) -> int:
    return (x - 1) % n + 1


class _Forest:
    """Edge -> center map plus explicitly listed single-vertex stars."""

    __slots__ = ("center", "singles")

    def __init__(self, center=None, singles=None):
        self.center: dict[Edge, int] = dict(center or {})
        self.singles: set[int] = set(singles or ())

    @classmethod
    def from_star_forest(cls, f: StarForest) -> _Forest:
        out = cls()
        for s in f.stars:
            if not s.leaves:
                out.singles.add(s.center)
            for v in s.leaves:
                out.center[edge(s.center, v)] = s.center
        return out

    def has(self, u, v) -> bool:
        return edge(u, v) in self.center

    def incident(self, v) -> list[Edge]:
        return [e for e in self.center if v in e]

    def touched(self) -> set[int]:
        return {v for e in self.center for v in e}

    def to_star_forest(self) -> StarForest:
        leaves: dict[int, set[int]] = {}
        for (u, v), c in self.center.items():
            leaves.setdefault(c, set()).add(v if c == u else u)
        stars = [Star(c, frozenset(ls)) for c, ls in leaves.items()]
        stars += [Star(v) for v in self.singles]
        return StarForest(tuple(sorted(stars, key=lambda s: (s.center, len(s.leaves)))))


def _supported_in(forests, n, a, k) -> bool:
    b = cyc(n, a + k)
    for f in forests:
        if not f.has(a, b):
            continue
        if all(f.has(a, cyc(n, a + j)) for j in range(1, k)):
            return True
        if all(f.has(cyc(n, a + j), b) for j in range(1, k)):
            return True
    return False


def _check_span(n, k):
    if not 1 < k < n:
        raise BadSpan(f"span {k} outside 2..{n - 1}")


@dataclass
class RecolorState:
    """Mutable working copy of a convex covering.

    ``focus``, ``i`` and ``l`` mirror the representation being processed,
    the forest holding its chord, and the current largest missing fan index.
    """

    n: int
    forests: list[_Forest]
    geometry: PointSet
    trace: list[dict] = field(default_factory=list)
    check: bool = True
    focus: EdgeRep | None = None
    i: int | None = None
    l: int | None = None

    @classmethod
    def from_covering(cls, c: Covering, trace=None, check=True) -> RecolorState:
        if c.geometry is None:
            raise GeometryMissing("recoloring needs convex geometry")
        if not c.geometry.convex:
            raise InvalidInput("recoloring is defined for convex point sets only")
        if check:
            rep = verify_covering(c)
            if not rep.ok:
                raise InvalidInput(f"not a valid plane covering: {rep}")
        return cls(
            c.n,
            [_Forest.from_star_forest(f) for f in c.forests],
            c.geometry,
            trace if trace is not None else [],
            check,
        )

    def to_covering(self) -> Covering:
        return Covering(self.n, tuple(f.to_star_forest() for f in self.forests), self.geometry)

    def supported(self, a, k) -> bool:
        return _supported_in(self.forests, self.n, a, k)

    def supported_set(self, max_span=None) -> set[EdgeRep]:
        top = self.n - 1 if max_span is None else max_span
        return {
            EdgeRep(a, k)
            for k in range(2, top + 1)
            for a in range(1, self.n + 1)
            if self.supported(a, k)
        }

    def log(self, op, **fields):
        rec = {"op": op}
        if self.focus is not None:
            rec["focus"] = list(self.focus)
        rec.update(fields)
        self.trace.append(rec)

    def erase_singletons(self, idx):
        f = self.forests[idx]
        for v in sorted(f.singles & f.touched()):
            f.singles.discard(v)
            self.log("erase-singleton", forest=idx, vertex=v)

    def checkpoint(self, step, before: set[EdgeRep] | None):
        if not self.check:
            return
        rep = verify_covering(self.to_covering())
        if not rep.ok:
            raise ProofInvariantViolation(step, str(rep))
        if before is not None:
            lost = before - self.supported_set()
            if lost:
                raise ProofInvariantViolation(step, f"support lost for {sorted(lost)}")


def is_supported(c: Covering, rep) -> bool:
    a, k = rep
    _check_span(c.n, k)
    forests = [_Forest.from_star_forest(f) for f in c.forests]
    return _supported_in(forests, c.n, cyc(c.n, a), k)


def supported_reps(c: Covering) -> set[EdgeRep]:
    forests = [_Forest.from_star_forest(f) for f in c.forests]
    return {
        EdgeRep(a, k)
        for k in range(2, c.n)
        for a in range(1, c.n + 1)
        if _supported_in(forests, c.n, a, k)
    }


def move_star(c: Covering, src: int, dst: int, star: Star) -> Covering:
    """Move a whole component of forest ``src`` into forest ``dst``.

    Shared edges keep the center already stored in ``dst``; listed
    single-vertex stars of ``dst`` touched by the moved star are absorbed.
    """
    if c.geometry is None:
        raise GeometryMissing("moving stars needs geometry for the crossing check")
    source = c.forests[src]
    match = [s for s in source.stars if s.vertices == star.vertices and s.edges == star.edges]
    if not match:
        raise NotAComponent(f"{star} is not a component of forest {src}")
    target = c.forests[dst]
    bad = [
        (a, b)
        for a, b in crossing_pairs(sorted(set(star.edges) | set(target.edges)), c.geometry)
        if (a in star.edges) != (b in star.edges)
    ]
    if bad:
        raise CrossingIntroduced(f"moving {star} into forest {dst} crosses {bad[0]}")
    fs = _Forest.from_star_forest(source)
    ft = _Forest.from_star_forest(target)
    if not star.leaves:
        fs.singles.discard(star.center)
        if star.center not in ft.touched():
            ft.singles.add(star.center)
    for e in star.edges:
        del fs.center[e]
        ft.center.setdefault(e, star.center)
    ft.singles -= ft.touched()
    moved = ft.to_star_forest()
    rep = verify_star_forest(moved, c.n)
    if not rep.ok:
        raise StarForestViolation(f"forest {dst} after move: {rep}")
    forests = list(c.forests)
    forests[src] = fs.to_star_forest()
    forests[dst] = moved
    return Covering(c.n, tuple(forests), c.geometry)


def _locate(state: RecolorState, a: int, k: int):
    """Forest index holding the focus chord and the frame labels P_1..P_{k+1}."""
    n = state.n
    b = cyc(n, a + k)
    holders = [i for i, f in enumerate(state.forests) if f.has(a, b)]
    if not holders:
        raise ProofInvariantViolation("locate", f"chord {(a, b)} is uncovered")
    for i in holders:
        if state.forests[i].center[edge(a, b)] == a:
            return i, [cyc(n, a + m) for m in range(k + 1)]
    # center at the far end: process the mirror image
    return holders[0], [cyc(n, a + k - m) for m in range(k + 1)]


def _make_supported(state: RecolorState, a: int, k: int):
    n = state.n
    _check_span(n, k)
    a = cyc(n, a)
    state.focus, state.i, state.l = EdgeRep(a, k), None, None
    if state.supported(a, k):
        return
    if state.check:
        missing = [
            (b, s) for s in range(2, k) for b in range(1, n + 1) if not state.supported(b, s)
        ]
        if missing:
            raise ProofInvariantViolation(
                "precondition", f"shorter representations unsupported: {missing[:5]}"
            )
    before = state.supported_set() if state.check else None
    i, lab = _locate(state, a, k)
    state.i = i
    fi = state.forests[i]
    p1 = lab[0]
    seen_l = []
    while True:
        # lab[m - 1] is P_m in the frame
        missing = [m for m in range(2, k + 1) if not fi.has(p1, lab[m - 1])]
        if not missing:
            break
        l = max(missing)
        if seen_l and l >= seen_l[-1]:
            raise ProofInvariantViolation("progress", f"l did not decrease: {seen_l + [l]}")
        seen_l.append(l)
        state.l = l
        pl = lab[l - 1]
        if l == 2:
            fi.center[edge(p1, pl)] = p1
            state.log("case1-step1", forest_from=None, forest_to=i, l=l, retained=True,
                      edges=[list(edge(p1, pl))])
            state.erase_singletons(i)
            state.checkpoint("case1-step1", before)
            continue
        inner = lab[1:l - 1]
        j = case = None
        for idx, f in enumerate(state.forests):
            if idx == i or not f.has(p1, pl):
                continue
            if all(f.has(p1, q) for q in inner):
                j, case = idx, 1
                break
            if all(f.has(q, pl) for q in inner):
                j, case = idx, 2
                break
        if j is None:
            raise ProofInvariantViolation(
                "induction", f"chord {edge(p1, pl)} has no supporting forest"
            )
        fj = state.forests[j]
        if case == 1:
            fan = [edge(p1, q) for q in lab[1:l]]
            for e in fan:
                del fj.center[e]
                fi.center.setdefault(e, p1)
            state.log("case1-step1", forest_from=j, forest_to=i, l=l,
                      edges=[list(e) for e in fan])
            span = set(lab[1:l])
            blue = [e for e in fi.center if e[0] in span and e[1] in span]
            for e in blue:
                fj.center[e] = fi.center.pop(e)
            state.log("case1-step2", forest_from=i, forest_to=j, l=l,
                      edges=[list(e) for e in sorted(blue)])
            state.erase_singletons(i)
            state.erase_singletons(j)
            state.checkpoint("case1-step2", before)
        else:
            dropped = [e for e in fi.incident(pl)]
            for e in dropped:
                if not fj.has(*e):
                    raise ProofInvariantViolation(
                        "case2-step1", f"edge {e} at P_l is not in forest {j}"
                    )
                del fi.center[e]
            fi.center[edge(p1, pl)] = p1
            state.log("case2-step1", forest_from=i, forest_to=i, partner=j, l=l,
                      added=list(edge(p1, pl)), removed=[list(e) for e in sorted(dropped)])
            state.erase_singletons(i)
            state.checkpoint("case2-step1", before)
    if not state.supported(a, k):
        raise ProofInvariantViolation("postcondition", f"{(a, k)} still unsupported")
    if len(seen_l) >= k:
        raise ProofInvariantViolation("progress", f"{len(seen_l)} iterations for span {k}")


def _make_all(state: RecolorState, k: int):
    for span in range(2, k + 1):
        for a in range(1, state.n + 1):
            _make_supported(state, a, span)
    state.focus = state.i = state.l = None
    if state.check:
        gaps = [
            (a, s) for s in range(2, k + 1) for a in range(1, state.n + 1)
            if not state.supported(a, s)
        ]
        if gaps:
            raise ProofInvariantViolation("make-all", f"unsupported after sweep: {gaps[:5]}")


def make_supported(c: Covering, rep, trace: list | None = None, check: bool = True) -> Covering:
    """Recolor so that ``rep`` becomes supported, keeping every existing support.

    All representations of smaller span must already be supported.
    """
    state = RecolorState.from_covering(c, trace, check)
    _make_supported(state, *rep)
    return state.to_covering()


def make_all_supported_up_to(
    c: Covering, k: int, trace: list | None = None, check: bool = True
) -> Covering:
    """Support every representation of span 2..k, shortest spans first."""
    state = RecolorState.from_covering(c, trace, check)
    if k >= 2:
        _check_span(c.n, k)
    _make_all(state, k)
    return state.to_covering()


def _extract(forests, n) -> tuple[int, int]:
    if n == 2:
        for i, f in enumerate(forests):
            if f.has(1, 2):
                return i, f.center[(1, 2)]
        raise NoSpanningStar("edge (1, 2) is uncovered")
    if n < 2:
        raise NoSpanningStar("fewer than two vertices")
    for i, f in enumerate(forests):
        if not f.has(1, n):
            continue
        if all(f.has(1, v) for v in range(2, n)):
            return i, 1
        if all(f.has(v, n) for v in range(2, n)):
            return i, n
    raise NoSpanningStar(f"no forest supports ({1}, {n - 1})")


def extract_spanning_star(c: Covering) -> tuple[int, int]:
    """(forest index, center) of a forest that is one star on all n vertices."""
    return _extract([_Forest.from_star_forest(f) for f in c.forests], c.n)


@dataclass(frozen=True)
class DescentLevel:
    n: int
    forest: int     # index in the initial covering
    center: int     # label at this level
    deleted: int    # label in the initial covering


@dataclass
class DescentCertificate:
    levels: list[DescentLevel]
    initial_forest_count: int
    initial_n: int
    trace: list[dict] = field(default_factory=list)

    @property
    def remaining_forests(self) -> int:
        return self.initial_forest_count - len(self.levels)


def _delete_vertex(state: RecolorState, forest_idx: int, v: int):
    del state.forests[forest_idx]

    def shift(x):
        return x - 1 if x > v else x

    for i, f in enumerate(state.forests):
        center = {}
        for (p, q), c in f.center.items():
            if v in (p, q):
                continue
            center[(shift(p), shift(q))] = shift(c)
        f.center = center
        f.singles = {shift(x) for x in f.singles if x != v}
    state.geometry = state.geometry.without(v)
    state.n -= 1


def theorem1_descent(c: Covering, check: bool = True) -> DescentCertificate:
    """Repeatedly support everything, peel off a spanning star, delete its center.

    Each level consumes one forest and one vertex, so a valid covering of
    convex K_n by t forests yields n - 1 levels and needs t >= n - 1.
    """
    if c.geometry is None or not c.geometry.convex:
        raise InvalidInput("descent needs a covering with convex geometry")
    if not check:
        rep = verify_covering(c)
        if not rep.ok:
            raise InvalidInput(f"not a valid plane covering: {rep}")
    trace: list[dict] = []
    state = RecolorState.from_covering(c, trace, check)
    labels = list(range(1, c.n + 1))
    forest_ids = list(range(len(c.forests)))
    levels = []
    while state.n >= 2:
        if not state.forests:
            raise ProofInvariantViolation(
                "descent", f"no forests left but K_{state.n} still has edges"
            )
        if state.n >= 3:
            _make_all(state, state.n - 1)
        i, center = _extract(state.forests, state.n)
        state.focus = None
        state.log("extract", forest=i, center=center, n=state.n)
        levels.append(DescentLevel(state.n, forest_ids[i], center, labels[center - 1]))
        _delete_vertex(state, i, center)
        state.log("delete-vertex", vertex=center, original=labels[center - 1], forest=i)
        del forest_ids[i]
        del labels[center - 1]
        state.checkpoint("delete-vertex", None)
    return DescentCertificate(levels, len(c.forests), c.n, trace)
