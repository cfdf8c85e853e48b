"""Gale transforms, affine Gale diagrams and linear-separation enumeration.

The dual dictionary implemented here: vertex subsets of a configuration
correspond to sign patterns of its Gale vectors, crossings correspond to
linear separations, convex position to the absence of singleton separations,
and neighborliness to the minimum separation side size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import InputError, InvariantError, UnsupportedError
from .exactmath import (
    Vec,
    dot,
    fvec,
    is_zero_vec,
    nullspace_basis,
    rank,
    solve_linear,
    vec_add,
    vec_neg,
    vec_scale,
)
from .pointconfig import PointConfiguration
from .simplexcross import CrossingPair

WHITE = "white"
BLACK = "black"

MAX_DUAL_DIM = 4


@dataclass(frozen=True)
class GaleTransform:
    """Dual vector sequence of a point configuration: one vector in
    Q^(m-d-1) per source point, built from the canonical null-space basis."""

    source: PointConfiguration
    vectors: tuple[Vec, ...]

    @property
    def dual_dim(self) -> int:
        return len(self.source) - self.source.dim - 1


@dataclass(frozen=True)
class AffineGaleDiagram:
    """Central projection of Gale vectors onto an affine hyperplane.

    ``points`` live in Q^(k-1) (hyperplane coordinates after dropping
    ``drop_axis``); a point is white when its vector projects along its own
    direction, black when along the opposite one.
    """

    points: tuple[Vec, ...]
    colors: tuple[str, ...]
    normal: Vec
    drop_axis: int


@dataclass(frozen=True)
class LinearSeparation:
    """Strict two-sided partition of Gale vectors by a linear hyperplane,
    carrying a verified witness normal.  Canonical orientation puts the
    lowest index on the positive side."""

    positive: frozenset[int]
    negative: frozenset[int]
    normal: Vec

    def sides(self) -> tuple[int, int]:
        return (len(self.positive), len(self.negative))

    def min_side(self) -> int:
        return min(len(self.positive), len(self.negative))


def gale_transform(p: PointConfiguration) -> GaleTransform:
    """Canonical Gale transform from the reduced-echelon null-space basis."""
    m, d = len(p), p.dim
    if m <= d + 1:
        raise InputError("need more than d+1 points for a Gale transform")
    lifted = p.lifted_matrix()
    if rank(lifted) != d + 1:
        raise InputError("affine hull of the configuration is degenerate")
    basis = nullspace_basis(lifted)
    k = m - d - 1
    if len(basis) != k:
        raise InvariantError("null space dimension mismatch")
    vectors = tuple(tuple(basis[r][i] for r in range(k)) for i in range(m))
    total = [Fraction(0)] * k
    for v in vectors:
        total = [a + b for a, b in zip(total, v)]
    if any(x != 0 for x in total):
        raise InvariantError("Gale vectors do not sum to zero")
    return GaleTransform(p, vectors)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def enumerate_separations(vectors_or_transform) -> list[LinearSeparation]:
    """All combinatorially distinct strict linear separations of the vectors.

    Candidate hyperplanes are spanned by (k-1)-subsets of the vectors and
    tilted symbolically to both sides; every cell of the central arrangement
    contains an extreme ray on exactly k-1 of the vector hyperplanes, so this
    sweep is complete.  Each separation is returned once in canonical
    orientation with an exactly verified witness normal.
    """
    if isinstance(vectors_or_transform, GaleTransform):
        vectors = vectors_or_transform.vectors
    else:
        vectors = tuple(fvec(v) for v in vectors_or_transform)
    m = len(vectors)
    if m == 0:
        return []
    k = len(vectors[0])
    if k < 1 or k > MAX_DUAL_DIM:
        raise UnsupportedError(f"dual dimension {k} outside supported range 1..{MAX_DUAL_DIM}")
    if any(is_zero_vec(v) for v in vectors):
        raise InputError("zero vector: source not in general position")

    found: dict[frozenset, LinearSeparation] = {}

    def store(signs: Sequence[int], witness: Vec):
        if signs[0] < 0:
            signs = [-s for s in signs]
            witness = vec_neg(witness)
        pos = frozenset(i for i, s in enumerate(signs) if s > 0)
        if pos in found:
            return
        neg = frozenset(range(m)) - pos
        check = [_sign(dot(witness, g)) for g in vectors]
        for i in range(m):
            if check[i] == 0 or (check[i] > 0) != (i in pos):
                raise InvariantError("separation witness failed verification")
        found[pos] = LinearSeparation(pos, neg, witness)

    if k == 1:
        signs = [_sign(v[0]) for v in vectors]
        if all(s > 0 for s in signs) or all(s < 0 for s in signs):
            return []
        store(signs, (Fraction(1),))
        return sorted(found.values(), key=lambda s: tuple(sorted(s.positive)))

    for subset in combinations(range(m), k - 1):
        rows = [vectors[i] for i in subset]
        line = nullspace_basis(rows, k)
        if len(line) != 1:
            raise InputError("dependent vector subset: source not in general position")
        u = line[0]
        base = [dot(u, g) for g in vectors]
        if any(base[j] == 0 for j in range(m) if j not in subset):
            raise InputError("extra vector on candidate hyperplane: not in general position")
        # dual directions: z_i hits 1 on subset vector i, 0 on the others
        duals = []
        for t in range(k - 1):
            rhs = [Fraction(1) if r == t else Fraction(0) for r in range(k - 1)]
            z = solve_linear(rows, rhs)
            if z is None:
                raise InvariantError("dual direction solve failed")
            duals.append(z)
        dual_dots = [[dot(z, g) for g in vectors] for z in duals]

        for eps in (1, -1):
            for sigma in product((1, -1), repeat=k - 1):
                signs = [0] * m
                for j in range(m):
                    if j not in subset:
                        signs[j] = _sign(base[j]) * eps
                for t, i in enumerate(subset):
                    signs[i] = sigma[t]
                if all(s > 0 for s in signs) or all(s < 0 for s in signs):
                    continue
                # canonical positive side = the side containing index 0
                pos_key = frozenset(i for i, s in enumerate(signs) if s == signs[0])
                if pos_key in found:
                    continue
                z = tuple(sum((Fraction(sigma[t]) * duals[t][c] for t in range(k - 1)), Fraction(0))
                          for c in range(k))
                delta = None
                for j in range(m):
                    if j in subset:
                        continue
                    zg = sum((sigma[t] * dual_dots[t][j] for t in range(k - 1)), Fraction(0))
                    if zg != 0:
                        cap = abs(base[j]) / (2 * abs(zg))
                        if delta is None or cap < delta:
                            delta = cap
                if delta is None:
                    delta = Fraction(1)
                w = vec_add(vec_scale(u, eps), vec_scale(z, delta))
                store(signs, w)

    return sorted(found.values(), key=lambda s: tuple(sorted(s.positive)))


def proper_separations(g: GaleTransform) -> list[LinearSeparation]:
    """Separations whose sides have sizes floor(m/2) and ceil(m/2)."""
    m = len(g.vectors)
    want = {m // 2, (m + 1) // 2}
    return [s for s in enumerate_separations(g) if set(s.sides()) == want]


def affine_diagram(g: GaleTransform, normal_hint: Optional[Sequence] = None) -> AffineGaleDiagram:
    """Project the Gale vectors onto the hyperplane <w, x> = 1.

    The normal ``w`` must avoid orthogonality with every vector; when no hint
    is given a deterministic search over small-integer vectors finds one.
    Vector i lands at g_i / <w, g_i>, colored white when the projection keeps
    its direction (<w, g_i> > 0) and black otherwise.
    """
    vectors = g.vectors
    if any(is_zero_vec(v) for v in vectors):
        raise InputError("zero Gale vector: source not in general position")
    k = g.dual_dim
    if normal_hint is not None:
        w = fvec(normal_hint)
        if len(w) != k:
            raise InputError("normal hint has wrong dimension")
        if any(dot(w, v) == 0 for v in vectors):
            raise InputError("normal hint orthogonal to a Gale vector")
    else:
        w = _search_projection_normal(vectors, k)
    drop = next(i for i, x in enumerate(w) if x != 0)
    pts = []
    colors = []
    for v in vectors:
        scale = dot(w, v)
        q = tuple(x / scale for x in v)
        pts.append(tuple(q[i] for i in range(k) if i != drop))
        colors.append(WHITE if scale > 0 else BLACK)
    return AffineGaleDiagram(tuple(pts), tuple(colors), w, drop)


def _search_projection_normal(vectors: Sequence[Vec], k: int) -> Vec:
    for radius in range(1, 64):
        for cand in product(range(-radius, radius + 1), repeat=k):
            if max(abs(c) for c in cand) != radius:
                continue
            w = fvec(cand)
            if all(dot(w, v) != 0 for v in vectors):
                return w
    raise InvariantError("no projection normal found")


def diagram_partition_to_vector_sides(colors: Sequence[str], plus_side: frozenset[int],
                                      m: int) -> tuple[frozenset[int], frozenset[int]]:
    """Translate an affine partition of diagram points into the corresponding
    linear separation of the underlying vectors: whites keep their side,
    blacks swap (their projection reversed the direction)."""
    pos = set()
    for i in range(m):
        on_plus = i in plus_side
        if colors[i] == WHITE:
            if on_plus:
                pos.add(i)
        else:
            if not on_plus:
                pos.add(i)
    return frozenset(pos), frozenset(range(m)) - frozenset(pos)


def separation_to_crossing(g: GaleTransform, s: LinearSeparation) -> CrossingPair:
    """The crossing pair dual to a separation: positive-side vertices against
    negative-side vertices, with the common relative-interior point computed
    from the witness normal."""
    vectors = g.vectors
    m = len(vectors)
    if s.positive | s.negative != frozenset(range(m)) or s.positive & s.negative:
        raise InputError("separation does not partition the vector indices")
    lam = [dot(s.normal, v) for v in vectors]
    for i in range(m):
        good = lam[i] > 0 if i in s.positive else lam[i] < 0
        if not good:
            raise InputError("separation normal does not certify the partition")
    total = sum((lam[i] for i in s.positive), Fraction(0))
    d = g.source.dim
    point = tuple(
        sum((lam[i] / total * g.source.points[i][j] for i in s.positive), Fraction(0))
        for j in range(d)
    )
    left, right = sorted(s.positive), sorted(s.negative)
    if min(left) > min(right):
        left, right = right, left
    return CrossingPair(frozenset(left), frozenset(right), point)


def is_face_gale(g: GaleTransform, indices) -> bool:
    """Face test in the dual: the chosen vertices span a face iff the origin
    is a strictly positive combination of the remaining Gale vectors."""
    chosen = set(indices)
    m = len(g.vectors)
    if not chosen or any(not 0 <= i < m for i in chosen):
        raise InputError("face test needs valid vertex indices")
    rest = [g.vectors[i] for i in range(m) if i not in chosen]
    if not rest:
        raise InputError("face test needs a proper subset")
    k = g.dual_dim
    rows = [[v[r] for v in rest] for r in range(k)]
    rows.append([Fraction(1)] * len(rest))
    rhs = [Fraction(0)] * k + [Fraction(1)]
    from .exactmath import strict_feasible

    return strict_feasible(rows, rhs) is not None


def neighborly_at_least_gale(g: GaleTransform, t: int) -> bool:
    """True iff every t-subset of vertices spans a face, tested in the dual.

    Unlike separation enumeration this works at any dual dimension, so it is
    the certification route for full 2d-vertex drawings.
    """
    if t < 1:
        return True
    m = len(g.vectors)
    return all(is_face_gale(g, sub) for sub in combinations(range(m), t))


def is_convex_position_gale(g: GaleTransform) -> bool:
    """Convex position in the dual: no separation leaves a single vector on
    one side (such a side is exactly a non-vertex certificate)."""
    return all(s.min_side() > 1 for s in enumerate_separations(g))


def neighborliness_gale(g: GaleTransform) -> int:
    """Largest t such that every separation side keeps at least t+1 vectors."""
    seps = enumerate_separations(g)
    min_side = min((s.min_side() for s in seps), default=len(g.vectors))
    if min_side <= 1:
        raise InputError("source not in convex position")
    return min_side - 1
