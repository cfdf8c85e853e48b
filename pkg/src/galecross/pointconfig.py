"""Labelled point configurations in Q^d: predicates, generators, (de)serialization.

A configuration is an ordered, labelled sequence of exact rational points.
Generators cover every experimental regime the crossing-witness pipelines
need: moment-curve (cyclic) drawings, seeded random integer drawings,
drawings with a planted interior vertex, and perturbed segment sums.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import InputError, InvariantError
from .exactmath import (
    Vec,
    det_int,
    fvec,
    nonneg_feasible,
)

MAX_REDRAWS = 1000


@dataclass(frozen=True)
class PointConfiguration:
    """Ordered sequence of points in Q^dim with distinct labels."""

    dim: int
    points: tuple[Vec, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("dimension must be positive")
        pts = tuple(fvec(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if any(len(p) != self.dim for p in pts):
            raise InputError("point dimension mismatch")
        labels = self.labels or tuple(f"v{i + 1}" for i in range(len(pts)))
        if len(labels) != len(pts) or len(set(labels)) != len(labels):
            raise InputError("labels must be distinct, one per point")
        object.__setattr__(self, "labels", tuple(labels))

    def __len__(self):
        return len(self.points)

    def lifted_matrix(self) -> tuple[Vec, ...]:
        """The (d+1) x m matrix whose column i is (point_i, 1)."""
        rows = [tuple(p[j] for p in self.points) for j in range(self.dim)]
        rows.append(tuple(Fraction(1) for _ in self.points))
        return tuple(rows)

    def subconfig(self, indices: Sequence[int]) -> "PointConfiguration":
        idx = list(indices)
        return PointConfiguration(
            self.dim,
            tuple(self.points[i] for i in idx),
            tuple(self.labels[i] for i in idx),
        )


def _lifted_int_rows(points: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Lifted rows (x, 1) with the whole set rescaled to integers.

    Scaling every coordinate by the global lcm of denominators is an
    invertible linear map, so affine (in)dependence is preserved and the
    determinant tests below run on fast machine integers.
    """
    denom = 1
    for p in points:
        for x in p:
            denom = math.lcm(denom, Fraction(x).denominator)
    return [[int(x * denom) for x in p] + [denom] for p in points]


def _affinely_independent(lifted_rows: Sequence[Sequence[int]]) -> bool:
    return det_int([list(r) for r in lifted_rows]) != 0


def is_general_position(p: PointConfiguration) -> bool:
    """True iff every (d+1)-subset of points is affinely independent."""
    d = p.dim
    if len(p) < d + 1:
        raise InputError("need at least d+1 points")
    lifted = _lifted_int_rows(p.points)
    for sub in combinations(range(len(p)), d + 1):
        if not _affinely_independent([lifted[i] for i in sub]):
            return False
    return True


def point_in_hull(points: Sequence[Vec], x: Sequence[Fraction]) -> Optional[Vec]:
    """Convex-combination coefficients expressing x over ``points``, or None.

    Solved as exact non-negative feasibility; by Caratheodory the returned
    basic solution is supported on at most d+1 points, so a positive answer
    always comes with a small certificate.
    """
    if not points:
        return None
    d = len(points[0])
    a = [[p[j] for p in points] for j in range(d)]
    a.append([Fraction(1)] * len(points))
    b = list(x) + [Fraction(1)]
    return nonneg_feasible(a, b)


def is_convex_position(p: PointConfiguration) -> bool:
    """True iff no point lies in the convex hull of the others."""
    if len(p) < p.dim + 2:
        raise InputError("need at least d+2 points")
    for i in range(len(p)):
        others = [q for j, q in enumerate(p.points) if j != i]
        if point_in_hull(others, p.points[i]) is not None:
            return False
    return True


def is_face(p: PointConfiguration, indices: Sequence[int]) -> bool:
    """True iff the given vertices span a face of the convex hull.

    Searches exactly for a hyperplane containing the chosen vertices with
    every other vertex strictly on one side (strictness normalised to a unit
    margin, which scaling makes equivalent).
    """
    chosen = sorted(set(indices))
    if not chosen or any(not 0 <= i < len(p) for i in chosen):
        raise InputError("face test needs valid vertex indices")
    if len(chosen) == len(p):
        raise InputError("face test needs a proper subset")
    d = p.dim
    others = [i for i in range(len(p)) if i not in chosen]
    # variables: w+ (d) | w- (d) | c+ | c- | slack per other vertex
    ncols = 2 * d + 2 + len(others)
    rows = []
    rhs = []
    for t in chosen:
        pt = p.points[t]
        rows.append(list(pt) + [-x for x in pt] + [Fraction(-1), Fraction(1)]
                    + [Fraction(0)] * len(others))
        rhs.append(Fraction(0))
    for pos, j in enumerate(others):
        pt = p.points[j]
        row = list(pt) + [-x for x in pt] + [Fraction(-1), Fraction(1)] + [Fraction(0)] * len(others)
        row[2 * d + 2 + pos] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(-1))
    assert all(len(r) == ncols for r in rows)
    return nonneg_feasible(rows, rhs) is not None


def all_subsets_are_faces(p: PointConfiguration, k: int) -> bool:
    """True iff every k-subset of vertices spans a face (subsets of faces of
    a simplex are faces, so lower sizes are implied)."""
    if k < 1:
        return True
    return all(is_face(p, sub) for sub in combinations(range(len(p)), k))


def neighborliness_direct(p: PointConfiguration) -> int:
    """Largest t with every <=t-subset a face, by exact face tests.

    A polytope with more than d+1 vertices is at most floor(d/2)-neighborly,
    so the search stops there.
    """
    if not is_convex_position(p):
        raise InputError("source not in convex position")
    cap = p.dim // 2 if len(p) > p.dim + 1 else p.dim
    t = 1  # convex position already certifies 1-neighborliness
    while t < cap and all_subsets_are_faces(p, t + 1):
        t += 1
    return t


def gen_moment_curve(d: int, ts: Sequence) -> PointConfiguration:
    """Points (t, t^2, ..., t^d) for each parameter t; always in general
    position (Vandermonde)."""
    params = [Fraction(t) for t in ts]
    if len(set(params)) != len(params):
        raise InputError("moment-curve parameters must be distinct")
    pts = tuple(tuple(t ** k for k in range(1, d + 1)) for t in params)
    return PointConfiguration(d, pts)


def gen_random(d: int, n: int, seed: int, bound: int = 1000) -> PointConfiguration:
    """n seeded random integer points in [-bound, bound]^d in general position.

    Points are drawn one at a time; a draw that creates an affinely dependent
    (d+1)-subset is rejected and redrawn from the same stream, so the output
    is a deterministic function of (d, n, seed, bound).
    """
    if n < d + 2:
        raise InputError("need n >= d+2")
    if bound < 1:
        raise InputError("bound must be positive")
    rng = random.Random(seed)
    pts: list[list[int]] = []
    redraws = 0
    while len(pts) < n:
        cand = [rng.randrange(-bound, bound + 1) for _ in range(d)]
        lifted = [p + [1] for p in pts] + [cand + [1]]
        ok = True
        if len(lifted) >= d + 1:
            head = lifted[:-1]
            for sub in combinations(range(len(head)), d):
                if not _affinely_independent([head[i] for i in sub] + [lifted[-1]]):
                    ok = False
                    break
        if ok:
            pts.append(cand)
        else:
            redraws += 1
            if redraws > MAX_REDRAWS:
                raise InputError("exceeded redraw cap while forcing general position")
    return PointConfiguration(d, tuple(tuple(Fraction(x) for x in p) for p in pts))


def plant_interior(p: PointConfiguration, target_index: int,
                   weights: Sequence, support: Optional[Sequence[int]] = None) -> PointConfiguration:
    """Replace one point by a strict convex combination of d+1 others.

    ``weights`` are d+1 strictly positive rationals summing to 1, applied to
    the points at ``support`` (default: the first d+1 indices other than the
    target).  If the combination point breaks general position it is nudged by
    shrinking seeded rational steps, re-certifying hull membership each time,
    so the result is guaranteed to fail is_convex_position while passing
    is_general_position.
    """
    d = p.dim
    if not 0 <= target_index < len(p):
        raise InputError("target_index out of range")
    if not is_general_position(p):
        raise InputError("input must be in general position")
    w = [Fraction(x) for x in weights]
    if len(w) != d + 1:
        raise InputError("need exactly d+1 weights")
    if any(x <= 0 for x in w):
        raise InputError("weights must be strictly positive")
    if sum(w) != 1:
        raise InputError("weights must sum to 1")
    if support is None:
        support = [i for i in range(len(p)) if i != target_index][: d + 1]
    support = list(support)
    if len(support) != d + 1 or target_index in support or len(set(support)) != d + 1:
        raise InputError("support must be d+1 indices distinct from the target")

    base = [p.points[i] for i in support]
    combo = tuple(sum((w[k] * base[k][j] for k in range(d + 1)), Fraction(0))
                  for j in range(d))

    rng = random.Random(911 + target_index)
    step = Fraction(1, 64)
    cand = combo
    for _ in range(MAX_REDRAWS):
        pts = list(p.points)
        pts[target_index] = cand
        trial = PointConfiguration(d, tuple(pts), p.labels)
        if is_general_position(trial) and point_in_hull(base, cand) is not None:
            if is_convex_position(trial):
                raise InvariantError("planted point ended up on the hull")
            return trial
        offset = tuple(Fraction(rng.randrange(-9, 10)) * step for _ in range(d))
        cand = tuple(c + o for c, o in zip(combo, offset))
        step /= 2
    raise InputError("could not restore general position after planting")


def gen_planted(d: int, n: int, seed: int, bound: int = 1000) -> PointConfiguration:
    """Seeded random drawing with the last vertex planted inside the hull of
    the first d+1, hence never in convex position."""
    base = gen_random(d, n, seed, bound)
    w = [Fraction(1, d + 1)] * (d + 1)
    return plant_interior(base, n - 1, w, support=list(range(d + 1)))


def gen_segment_sum(d: int, seed: int = 0) -> PointConfiguration:
    """Perturbed direct sum of d segments (a generic cross-polytope):
    2d vertices in R^d, listed as the antipodal pair along each axis.

    Every antipodal segment passes through the interior of the hull, so those
    pairs are stably not edges: the vertex set is 1-neighborly but not
    2-neighborly, and a small seeded integer perturbation makes it generic.
    Certification stays with the caller, which re-checks the predicates
    exactly.
    """
    if d < 2:
        raise InputError("segment-sum construction needs d >= 2")
    scale = 1000
    rng = random.Random(seed)
    for attempt in range(50):
        pts = []
        radius = max(1, 50 >> attempt)
        for i in range(d):
            for sign in (1, -1):
                coords = [0] * d
                coords[i] = sign * scale
                coords = [c + rng.randrange(-radius, radius + 1) for c in coords]
                pts.append(tuple(Fraction(c) for c in coords))
        cfg = PointConfiguration(d, tuple(pts))
        if is_general_position(cfg) and is_convex_position(cfg):
            return cfg
    raise InputError("failed to generate a generic segment sum")


def _frac_to_str(x: Fraction) -> str:
    return str(x)


def _frac_from_str(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {s!r}") from exc


def save_config(p: PointConfiguration) -> str:
    """Canonical JSON document: rationals in lowest terms as "p/q" or "p"."""
    doc = {
        "dimension": p.dim,
        "labels": list(p.labels),
        "points": [[_frac_to_str(x) for x in pt] for pt in p.points],
    }
    return json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n"


def load_config(text) -> PointConfiguration:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed configuration document: {exc}") from exc
    for key in ("dimension", "labels", "points"):
        if key not in doc:
            raise InputError(f"configuration document missing {key!r}")
    d = doc["dimension"]
    if not isinstance(d, int) or d < 1:
        raise InputError("dimension must be a positive integer")
    pts = []
    for row in doc["points"]:
        if len(row) != d:
            raise InputError("point with wrong dimension in document")
        pts.append(tuple(_frac_from_str(str(x)) for x in row))
    return PointConfiguration(d, tuple(pts), tuple(doc["labels"]))


