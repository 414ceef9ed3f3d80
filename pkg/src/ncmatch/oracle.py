"""Brute-force enumeration of non-crossing matchings on exact point sets.

This is the ground-truth engine: it never uses the counting recursions it is
meant to check.  All geometry is resolved up front into exact boolean tables
(segment crossings, which edges block a point's vertical rays); the
enumeration itself is a backtracking sweep over the points in x-order using
only bitmask tests, so exactness costs nothing inside the hot loop.

Matching kinds:

* ``ALL``       every non-crossing partial matching;
* ``PERFECT``   every point matched;
* ``DOWN_FREE`` free points must see downward to infinity past all edges
  (``UP_FREE`` is the mirror notion);
* ``RHO_DOWN_FREE`` matchings that may also carry *runners*: marked
  unmatched points, each visible from above, while every remaining free
  point must be visible from below.  Runners stand for half-edges that a
  later construction step will join across a cut.

Sets are x-sorted with pairwise distinct x-coordinates and no collinear
triple, so a vertical ray never meets an edge endpoint and every test is a
strict comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .geometry import DoubleSet, PointSet, orientation


class MatchKind(enum.Enum):
    ALL = "all"
    PERFECT = "perfect"
    DOWN_FREE = "down-free"
    UP_FREE = "up-free"
    RHO_DOWN_FREE = "rho-down-free"


#: enumeration refuses sets larger than this, per kind (exponential work)
DEFAULT_CAPS = {
    MatchKind.ALL: 18,
    MatchKind.PERFECT: 18,
    MatchKind.DOWN_FREE: 18,
    MatchKind.UP_FREE: 18,
    MatchKind.RHO_DOWN_FREE: 16,
}


class SizeCapError(ValueError):
    """Raised instead of starting an enumeration that would run away."""


@dataclass(frozen=True)
class Matching:
    """Edges (index pairs, i < j) plus runner marks over one point set."""

    edges: frozenset[tuple[int, int]]
    runners: frozenset[int] = frozenset()

    def matched_points(self) -> frozenset[int]:
        return frozenset(i for e in self.edges for i in e)

    def free_points(self, n: int) -> tuple[int, ...]:
        used = self.matched_points() | self.runners
        return tuple(i for i in range(n) if i not in used)


@dataclass(frozen=True)
class MatchingCensus:
    """Exact counts, broken down by free-point count and by runner count."""

    total: int
    by_free: dict[int, int]
    by_runners: dict[int, int]
    by_free_and_runners: dict[tuple[int, int], int]

    def runner_vector(self) -> list[int]:
        top = max(self.by_runners) if self.by_runners else 0
        return [self.by_runners.get(i, 0) for i in range(top + 1)]


# ---------------------------------------------------------------------------
# exact geometric tables
# ---------------------------------------------------------------------------


def _segments_cross(p: Sequence, a: int, b: int, c: int, d: int) -> bool:
    """Proper crossing of segments ab and cd (no shared endpoints given)."""
    o1 = orientation(p[a], p[b], p[c])
    o2 = orientation(p[a], p[b], p[d])
    if o1 is o2:
        return False
    o3 = orientation(p[c], p[d], p[a])
    o4 = orientation(p[c], p[d], p[b])
    return o3 is not o4


class _Tables:
    """Per-point-set boolean tables as bitmasks over edge ids."""

    __slots__ = ("n", "pairs", "eid", "cross", "below", "above", "cand")

    def __init__(self, ps: PointSet):
        pts = ps.points
        n = len(pts)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        eid = {pair: k for k, pair in enumerate(pairs)}
        m = len(pairs)
        cross = [0] * m
        for x in range(m):
            i, j = pairs[x]
            for y in range(x + 1, m):
                c, d = pairs[y]
                if len({i, j, c, d}) < 4:
                    continue
                if _segments_cross(pts, i, j, c, d):
                    cross[x] |= 1 << y
                    cross[y] |= 1 << x
        below = [0] * n  # edges that block the downward ray of point p
        above = [0] * n  # edges that block the upward ray
        for p in range(n):
            px, py = pts[p]
            for k, (i, j) in enumerate(pairs):
                if not (i < p < j):
                    continue
                ax, ay = pts[i]
                bx, by = pts[j]
                y_at = ay + (by - ay) * (px - ax) / (bx - ax)
                if y_at < py:
                    below[p] |= 1 << k
                else:
                    above[p] |= 1 << k
        self.n = n
        self.pairs = pairs
        self.eid = eid
        self.cross = cross
        self.below = below
        self.above = above
        self.cand = [[eid[(i, j)] for j in range(i + 1, n)] for i in range(n)]


_TABLE_CACHE: dict[tuple, _Tables] = {}


def _tables(ps: PointSet) -> _Tables:
    key = ps.points
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = _Tables(ps)
        if len(_TABLE_CACHE) > 64:
            _TABLE_CACHE.clear()
        _TABLE_CACHE[key] = tab
    return tab


def _check_cap(ps: PointSet, kind: MatchKind, cap: Optional[int]) -> None:
    limit = cap if cap is not None else DEFAULT_CAPS[kind]
    if len(ps) > limit:
        raise SizeCapError(
            f"{len(ps)} points exceeds the {kind.value} enumeration cap {limit}"
        )


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def census(ps: PointSet, kind: MatchKind, cap: Optional[int] = None) -> MatchingCensus:
    """Count all matchings of the requested kind, exactly."""
    _check_cap(ps, kind, cap)
    tab = _tables(ps)
    n = tab.n
    pairs, cross, cand = tab.pairs, tab.cross, tab.cand
    allow_runner = kind is MatchKind.RHO_DOWN_FREE
    allow_free = kind is not MatchKind.PERFECT
    if kind in (MatchKind.DOWN_FREE, MatchKind.RHO_DOWN_FREE):
        free_block = tab.below
    elif kind is MatchKind.UP_FREE:
        free_block = tab.above
    else:
        free_block = [0] * n
    runner_block = tab.above

    tally: dict[tuple[int, int], int] = {}

    def walk(i: int, used: int, edges: int, free: int, runners: int) -> None:
        while i < n and (used >> i) & 1:
            i += 1
        if i == n:
            key = (free, runners)
            tally[key] = tally.get(key, 0) + 1
            return
        if allow_free and not (free_block[i] & edges):
            walk(i + 1, used, edges, free + 1, runners)
        if allow_runner and not (runner_block[i] & edges):
            walk(i + 1, used, edges, free, runners + 1)
        ubit = 1 << i
        for e in cand[i]:
            j = pairs[e][1]
            if (used >> j) & 1:
                continue
            if cross[e] & edges:
                continue
            walk(i + 1, used | ubit | (1 << j), edges | (1 << e), free, runners)

    walk(0, 0, 0, 0, 0)
    by_free: dict[int, int] = {}
    by_runners: dict[int, int] = {}
    total = 0
    for (f, r), cnt in tally.items():
        total += cnt
        by_free[f] = by_free.get(f, 0) + cnt
        by_runners[r] = by_runners.get(r, 0) + cnt
    return MatchingCensus(total, by_free, by_runners, tally)


def census_runners(ps: PointSet, cap: Optional[int] = None) -> list[int]:
    """Down-free rho-matching counts indexed by runner count.

    Entry 0 equals ``census(ps, DOWN_FREE).total``; the empty set gives [1].
    """
    if len(ps) == 0:
        return [1]
    return census(ps, MatchKind.RHO_DOWN_FREE, cap).runner_vector()


def census_corner_split(
    ps: PointSet, cap: Optional[int] = None
) -> tuple[list[int], list[int]]:
    """Down-free rho-matchings split by a runner on the rightmost point.

    Returns (with_mark, without_mark): with_mark[i] counts matchings whose
    rightmost point carries a runner with i runners elsewhere;
    without_mark[i] counts matchings with i runners, none on that point.
    """
    _check_cap(ps, MatchKind.RHO_DOWN_FREE, cap)
    tab = _tables(ps)
    n = tab.n
    pairs, cross, cand = tab.pairs, tab.cross, tab.cand
    free_block, runner_block = tab.below, tab.above
    last = n - 1
    marked: dict[int, int] = {}
    unmarked: dict[int, int] = {}

    def walk(i: int, used: int, edges: int, runners: int, mark: bool) -> None:
        while i < n and (used >> i) & 1:
            i += 1
        if i == n:
            tally = marked if mark else unmarked
            tally[runners] = tally.get(runners, 0) + 1
            return
        if not (free_block[i] & edges):
            walk(i + 1, used, edges, runners, mark)
        if not (runner_block[i] & edges):
            if i == last:
                walk(i + 1, used, edges, runners, True)
            else:
                walk(i + 1, used, edges, runners + 1, mark)
        ubit = 1 << i
        for e in cand[i]:
            j = pairs[e][1]
            if (used >> j) & 1 or (cross[e] & edges):
                continue
            walk(i + 1, used | ubit | (1 << j), edges | (1 << e), runners, mark)

    walk(0, 0, 0, 0, False)
    dense = lambda d: [d.get(i, 0) for i in range(max(d, default=0) + 1)]
    return dense(marked), dense(unmarked)


def matchings(
    ps: PointSet, kind: MatchKind, cap: Optional[int] = None
) -> Iterator[Matching]:
    """Yield every matching of the requested kind (for sampling in tests)."""
    _check_cap(ps, kind, cap)
    tab = _tables(ps)
    n = tab.n
    pairs, cross, cand = tab.pairs, tab.cross, tab.cand
    allow_runner = kind is MatchKind.RHO_DOWN_FREE
    allow_free = kind is not MatchKind.PERFECT
    if kind in (MatchKind.DOWN_FREE, MatchKind.RHO_DOWN_FREE):
        free_block = tab.below
    elif kind is MatchKind.UP_FREE:
        free_block = tab.above
    else:
        free_block = [0] * n
    runner_block = tab.above

    def walk(i: int, used: int, edges: int, acc: list, runners: list):
        while i < n and (used >> i) & 1:
            i += 1
        if i == n:
            yield Matching(frozenset(acc), frozenset(runners))
            return
        if allow_free and not (free_block[i] & edges):
            yield from walk(i + 1, used, edges, acc, runners)
        if allow_runner and not (runner_block[i] & edges):
            yield from walk(i + 1, used, edges, acc, runners + [i])
        ubit = 1 << i
        for e in cand[i]:
            j = pairs[e][1]
            if (used >> j) & 1 or (cross[e] & edges):
                continue
            yield from walk(i + 1, used | ubit | (1 << j), edges | (1 << e), acc + [pairs[e]], runners)

    yield from walk(0, 0, 0, [], [])


# ---------------------------------------------------------------------------
# matching predicates (exact, table-backed)
# ---------------------------------------------------------------------------


def _edge_mask(tab: _Tables, edges) -> int:
    mask = 0
    for i, j in edges:
        if i == j:
            raise ValueError("degenerate edge")
        mask |= 1 << tab.eid[(min(i, j), max(i, j))]
    return mask


def is_noncrossing(ps: PointSet, m: Matching) -> bool:
    tab = _tables(ps)
    ids = sorted(tab.eid[(min(i, j), max(i, j))] for i, j in m.edges)
    seen = 0
    for e in ids:
        if tab.cross[e] & seen:
            return False
        seen |= 1 << e
    touched = [i for e in m.edges for i in e]
    return len(touched) == len(set(touched))


def is_down_free(ps: PointSet, m: Matching) -> bool:
    """Every free point sees straight down past all edges (runners exempt)."""
    tab = _tables(ps)
    mask = _edge_mask(tab, m.edges)
    return all(not (tab.below[p] & mask) for p in m.free_points(len(ps)))


def is_up_free(ps: PointSet, m: Matching) -> bool:
    tab = _tables(ps)
    mask = _edge_mask(tab, m.edges)
    return all(not (tab.above[p] & mask) for p in m.free_points(len(ps)))


def is_rho_down_free(ps: PointSet, m: Matching) -> bool:
    """Runners visible from above, remaining free points visible from below."""
    tab = _tables(ps)
    mask = _edge_mask(tab, m.edges)
    if any(tab.above[p] & mask for p in m.runners):
        return False
    return all(not (tab.below[p] & mask) for p in m.free_points(len(ps)))


# ---------------------------------------------------------------------------
# completion to perfect matchings (the unique-extension mechanism)
# ---------------------------------------------------------------------------


def count_perfect_extensions(
    ps: PointSet,
    fixed: Matching,
    cap: Optional[int] = None,
    allowed: Optional[set[tuple[int, int]]] = None,
) -> int:
    """Number of perfect matchings of `ps` containing all edges of `fixed`.

    When `allowed` is given, only those (i, j) pairs may be added on top of
    the fixed edges.
    """
    _check_cap(ps, MatchKind.PERFECT, cap)
    if fixed.runners:
        raise ValueError("perfect extensions are defined for runner-free matchings")
    tab = _tables(ps)
    if not is_noncrossing(ps, fixed):
        return 0
    n = tab.n
    pairs, cross, cand = tab.pairs, tab.cross, tab.cand
    edges0 = _edge_mask(tab, fixed.edges)
    used0 = 0
    for i in fixed.matched_points():
        used0 |= 1 << i
    if allowed is None:
        ok_edge = [True] * len(pairs)
    else:
        norm = {(min(i, j), max(i, j)) for i, j in allowed}
        ok_edge = [pair in norm for pair in pairs]

    count = 0

    def walk(i: int, used: int, edges: int) -> None:
        nonlocal count
        while i < n and (used >> i) & 1:
            i += 1
        if i == n:
            count += 1
            return
        ubit = 1 << i
        for e in cand[i]:
            j = pairs[e][1]
            if not ok_edge[e] or (used >> j) & 1 or (cross[e] & edges):
                continue
            walk(i + 1, used | ubit | (1 << j), edges | (1 << e))

    walk(0, used0, edges0)
    return count


def count_cross_completions(
    double: DoubleSet, fixed: Matching, cap: Optional[int] = None
) -> int:
    """Perfect matchings of the double set extending `fixed` by cross edges only.

    This is the completion count of the unique-extension principle: the fixed
    edges are the within-half matchings, and every added edge must join the
    upper half to the lower half.
    """
    upper = set(double.upper)
    lower = set(double.lower)
    crossing = {
        (min(u, l), max(u, l)) for u in upper for l in lower
    }
    return count_perfect_extensions(double.points, fixed, cap, allowed=crossing)


def complete_to_perfect(
    double: DoubleSet, m_upper: Matching, m_lower: Matching
) -> Optional[Matching]:
    """Unique perfect completion of a down-free/up-free pair on a double set.

    `m_upper` and `m_lower` use indices of the combined set and must be
    runner-free with equally many free points (unequal counts raise, which is
    distinct from the legitimate "not completable" None).  When the upper
    matching is down-free and the lower one up-free, the i-th free upper
    point is joined to the i-th free lower point, left to right; the result
    is verified non-crossing.  Any other situation returns None.
    """
    if m_upper.runners or m_lower.runners:
        raise ValueError("completion is defined for runner-free matchings")
    ups = double.upper_set()
    lows = double.lower_set()
    up_map = {g: l for l, g in enumerate(double.upper)}
    low_map = {g: l for l, g in enumerate(double.lower)}

    def localize(m: Matching, mapping) -> Matching:
        edges = []
        for i, j in m.edges:
            if i not in mapping or j not in mapping:
                raise ValueError("edge leaves its half of the double set")
            a, b = mapping[i], mapping[j]
            edges.append((min(a, b), max(a, b)))
        return Matching(frozenset(edges))

    mu = localize(m_upper, up_map)
    ml = localize(m_lower, low_map)
    free_u = [double.upper[i] for i in mu.free_points(len(ups))]
    free_l = [double.lower[i] for i in ml.free_points(len(lows))]
    if len(free_u) != len(free_l):
        raise ValueError(
            f"free-point counts differ: {len(free_u)} upper vs {len(free_l)} lower"
        )
    if not (is_down_free(ups, mu) and is_up_free(lows, ml)):
        return None
    joined = set(m_upper.edges) | set(m_lower.edges)
    for g_up, g_low in zip(free_u, free_l):
        joined.add((min(g_up, g_low), max(g_up, g_low)))
    result = Matching(frozenset(joined))
    if not is_noncrossing(double.points, result):
        return None
    return result
