"""Balanced-line statistics in the plane and j-facet / k-set machinery in 3-space.

Counts are exact integers computed over exact coordinates.  The k-set counts
are obtained twice, by exhaustive separating-plane enumeration and through
the facet-count identities, and the two routes act as each other's oracle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import InputError

WHITE = "white"
BLACK = "black"


@dataclass(frozen=True)
class ColoredPointSet2D:
    """Planar points colored white/black, no 3 collinear."""

    points: tuple[tuple, ...]
    colors: tuple[str, ...]

    def __post_init__(self):
        if len(self.points) != len(self.colors):
            raise InputError("one color per point required")
        if any(c not in (WHITE, BLACK) for c in self.colors):
            raise InputError("colors must be white or black")

    @property
    def n_white(self):
        return sum(1 for c in self.colors if c == WHITE)

    @property
    def n_black(self):
        return sum(1 for c in self.colors if c == BLACK)


def cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _require_no3_collinear(pts):
    for a, b, c in combinations(range(len(pts)), 3):
        if cross2(pts[a], pts[b], pts[c]) == 0:
            raise InputError("three collinear points")


def side3(a, b, c, x):
    """Sign of the orientation determinant of (b-a, c-a, x-a)."""
    u = (b[0] - a[0], b[1] - a[1], b[2] - a[2])
    v = (c[0] - a[0], c[1] - a[1], c[2] - a[2])
    w = (x[0] - a[0], x[1] - a[1], x[2] - a[2])
    d = (u[0] * (v[1] * w[2] - v[2] * w[1])
         - u[1] * (v[0] * w[2] - v[2] * w[0])
         + u[2] * (v[0] * w[1] - v[1] * w[0]))
    return (d > 0) - (d < 0)


def balanced_lines(r: ColoredPointSet2D) -> list[tuple[int, int]]:
    """White-black point pairs whose line balances colors on both open sides.

    Only defined for evenly colored even-size sets.
    """
    pts = r.points
    n = len(pts)
    if n % 2 != 0 or r.n_white != r.n_black:
        raise InputError("balanced lines need an even, evenly colored set")
    _require_no3_collinear(pts)
    whites = [i for i, c in enumerate(r.colors) if c == WHITE]
    blacks = [i for i, c in enumerate(r.colors) if c == BLACK]
    out = []
    for i in whites:
        for j in blacks:
            wl = bl = wr = br = 0
            for x in range(n):
                if x == i or x == j:
                    continue
                s = cross2(pts[i], pts[j], pts[x])
                if s > 0:
                    if r.colors[x] == WHITE:
                        wl += 1
                    else:
                        bl += 1
                else:
                    if r.colors[x] == WHITE:
                        wr += 1
                    else:
                        br += 1
            if wl == bl and wr == br:
                out.append((i, j))
    return sorted(out)


def almost_balanced_directed_lines(r: ColoredPointSet2D) -> list[tuple[int, int]]:
    """Directed white-black lines whose positive (left) open side balances
    colors; each qualifying direction of a pair is reported as (tail, head)."""
    pts = r.points
    n = len(pts)
    if r.n_white - r.n_black not in (0, 1):
        raise InputError("need ceil(r/2) white and floor(r/2) black points")
    _require_no3_collinear(pts)
    out = []
    for i, j in combinations(range(n), 2):
        if r.colors[i] == r.colors[j]:
            continue
        for a, b in ((i, j), (j, i)):
            wl = bl = 0
            for x in range(n):
                if x == a or x == b:
                    continue
                if cross2(pts[a], pts[b], pts[x]) > 0:
                    if r.colors[x] == WHITE:
                        wl += 1
                    else:
                        bl += 1
            if wl == bl:
                out.append((a, b))
    return sorted(out)


def j_facets(points: Sequence[Sequence]) -> list[int]:
    """E_j for j = 0..s-3: oriented planes through 3 points with exactly j
    points strictly on the positive side.  Both orientations of every triple
    are counted, so sum(E) == 2 * C(s, 3)."""
    s = len(points)
    if s < 4:
        raise InputError("need at least 4 points")
    e = [0] * (s - 2)
    for a, b, c in combinations(range(s), 3):
        pos = 0
        for x in range(s):
            if x in (a, b, c):
                continue
            sg = side3(points[a], points[b], points[c], points[x])
            if sg == 0:
                raise InputError("four coplanar points")
            if sg > 0:
                pos += 1
        e[pos] += 1
        e[s - 3 - pos] += 1
    return e


def separable_partitions(points: Sequence[Sequence]) -> set[frozenset]:
    """Every 2-coloring of the set realizable by a plane through no point.

    Candidate planes pass through each 3-subset and are tilted symbolically
    to both sides with all eight sign assignments for the touched triple;
    general position makes this sweep complete.  Each partition is reported
    as its side containing index 0.
    """
    s = len(points)
    parts: set[frozenset] = set()
    if s < 2:
        return parts
    if s < 4:
        raise InputError("need at least 4 points for plane separations")
    everything = frozenset(range(s))
    for a, b, c in combinations(range(s), 3):
        rest = [x for x in range(s) if x not in (a, b, c)]
        base = {}
        for x in rest:
            sg = side3(points[a], points[b], points[c], points[x])
            if sg == 0:
                raise InputError("four coplanar points")
            base[x] = sg
        for eps in (1, -1):
            fixed_plus = [x for x in rest if base[x] * eps > 0]
            for sigma in product((1, -1), repeat=3):
                plus = set(fixed_plus)
                for t, idx in enumerate((a, b, c)):
                    if sigma[t] == 1:
                        plus.add(idx)
                if not plus or len(plus) == s:
                    continue
                side = frozenset(plus) if 0 in plus else everything - frozenset(plus)
                parts.add(side)
    return parts


def separable_subsets(points: Sequence[Sequence]) -> set[frozenset]:
    """All k-sets for every k: both sides of every separable partition."""
    s = len(points)
    everything = frozenset(range(s))
    subsets: set[frozenset] = set()
    for side in separable_partitions(points):
        subsets.add(side)
        subsets.add(everything - side)
    return subsets


def k_sets_direct(points: Sequence[Sequence]) -> list[int]:
    """e_k for k = 1..s-1 by exhaustive separation enumeration."""
    s = len(points)
    e = [0] * (s + 1)
    for t in separable_subsets(points):
        e[len(t)] += 1
    return e[1:s]


def k_sets_from_facets(e_facets: Sequence[int]) -> list:
    """e_k for k = 1..s-1 through the facet-count identities.

    Computed in exact arithmetic so an identity violated by an odd facet sum
    shows up as a fractional value instead of being silently floored.
    """
    s = len(e_facets) + 2
    out = [Fraction(0)] * (s - 1)
    out[0] = Fraction(e_facets[0], 2) + 2
    out[s - 2] = Fraction(e_facets[s - 3], 2) + 2
    for k in range(2, s - 1):
        out[k - 1] = Fraction(e_facets[k - 1] + e_facets[k - 2], 2) + 2
    return out


@dataclass(frozen=True)
class FacetStats:
    """E_j (j = 0..s-3) and e_k (k = 1..s-1) for one 3D point set."""

    s: int
    E: tuple[int, ...]
    e: tuple[int, ...]


def facet_stats(points: Sequence[Sequence]) -> FacetStats:
    return FacetStats(len(points), tuple(j_facets(points)), tuple(k_sets_direct(points)))


@dataclass(frozen=True)
class IdentityRow:
    k: int
    direct: int
    from_facets: int

    @property
    def ok(self) -> bool:
        return self.direct == self.from_facets


def andrzejak_check(points: Sequence[Sequence]) -> list[IdentityRow]:
    """Both routes to every e_k: the direct enumerator against the facet
    identities e_1 = E_0/2+2, e_{s-1} = E_{s-3}/2+2, e_k = (E_{k-1}+E_{k-2})/2+2."""
    s = len(points)
    if s < 4:
        raise InputError("need at least 4 points")
    direct = k_sets_direct(points)
    derived = k_sets_from_facets(j_facets(points))
    return [IdentityRow(k, direct[k - 1], derived[k - 1]) for k in range(1, s)]


def halving_stats(points: Sequence[Sequence]) -> int:
    """Halving-triangle count for odd sets; almost-halving j-facet count for
    even sets.  Both are bounded below by floor(s/2)^2."""
    s = len(points)
    e = j_facets(points)
    if s % 2 == 1:
        # each halving plane appears under both orientations
        return e[(s - 3) // 2] // 2
    return e[(s - 4) // 2] + e[(s - 2) // 2]


def halving_bound(s: int) -> int:
    return (s // 2) ** 2


def leq_facet_count(points: Sequence[Sequence], j: int) -> int:
    """Number of (<=j)-facets; meaningful for j < s/4 where the 4*C(j+3,3)
    lower bound applies."""
    s = len(points)
    if j < 0 or j >= s / 4:
        raise InputError("j must satisfy 0 <= j < s/4")
    e = j_facets(points)
    return sum(e[: j + 1])


def leq_facet_bound(j: int) -> int:
    return 4 * math.comb(j + 3, 3)


def leq_k_set_count(points: Sequence[Sequence], k: int) -> int:
    s = len(points)
    if not 1 <= k <= s - 1:
        raise InputError("k out of range")
    e = k_sets_direct(points)
    return sum(e[:k])


def majority_k_set_count(points: Sequence[Sequence]) -> int:
    """Number of k-sets with min(k, s-k) >= ceil((s-1)/2): the near-halving
    separable subsets."""
    s = len(points)
    thresh = -(-(s - 1) // 2)  # ceil((s-1)/2)
    total = 0
    for t in separable_subsets(points):
        k = len(t)
        if min(k, s - k) >= thresh:
            total += 1
    return total


def gen_random_3d(s: int, seed: int, bound: int = 1000) -> list[tuple[int, int, int]]:
    """Seeded integer points in general position (no 4 coplanar)."""
    rng = random.Random(seed)
    pts: list[tuple[int, int, int]] = []
    attempts = 0
    while len(pts) < s:
        cand = (rng.randrange(-bound, bound + 1), rng.randrange(-bound, bound + 1),
                rng.randrange(-bound, bound + 1))
        ok = True
        for a, b, c in combinations(range(len(pts)), 3):
            if side3(pts[a], pts[b], pts[c], cand) == 0:
                ok = False
                break
        if ok and len(pts) >= 2:
            for a, b in combinations(range(len(pts)), 2):
                u = tuple(pts[b][i] - pts[a][i] for i in range(3))
                v = tuple(cand[i] - pts[a][i] for i in range(3))
                if (u[1] * v[2] - u[2] * v[1] == 0 and u[2] * v[0] - u[0] * v[2] == 0
                        and u[0] * v[1] - u[1] * v[0] == 0):
                    ok = False
                    break
        if ok and len(pts) >= 1 and cand in pts:
            ok = False
        if ok:
            pts.append(cand)
        else:
            attempts += 1
            if attempts > 1000:
                raise InputError("exceeded redraw cap for 3D point set")
    return pts


def gen_random_colored_2d(r: int, seed: int, bound: int = 1000) -> ColoredPointSet2D:
    """Seeded planar set, no 3 collinear, first ceil(r/2) points white."""
    rng = random.Random(seed)
    pts: list[tuple[int, int]] = []
    attempts = 0
    while len(pts) < r:
        cand = (rng.randrange(-bound, bound + 1), rng.randrange(-bound, bound + 1))
        ok = cand not in pts
        if ok:
            for a, b in combinations(range(len(pts)), 2):
                if cross2(pts[a], pts[b], cand) == 0:
                    ok = False
                    break
        if ok:
            pts.append(cand)
        else:
            attempts += 1
            if attempts > 1000:
                raise InputError("exceeded redraw cap for colored set")
    n_white = (r + 1) // 2
    colors = tuple(WHITE if i < n_white else BLACK for i in range(r))
    return ColoredPointSet2D(tuple(pts), colors)
