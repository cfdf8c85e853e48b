"""Witness-generating pipelines for the four crossing-count lower bounds.

Each pipeline consumes a drawing of the complete d-uniform hypergraph on 2d
vertices (a 2d-point general-position configuration), walks the dual
construction for its regime, and emits a deduplicated set of crossing pairs
of (d-1)-simplices, every one re-validated by the direct geometric oracle.
The guaranteed lower bound is the product of the regime's exact base count
(balanced-line or k-set census) and its vertex-completion binomial; when the
binomial degenerates to zero at small d the report says so explicitly
instead of passing vacuously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import InputError, InvariantError
from .exactmath import dot, nonneg_feasible, nullspace_basis, solve_linear, vec_neg
from .gale import (
    BLACK,
    WHITE,
    GaleTransform,
    LinearSeparation,
    affine_diagram,
    diagram_partition_to_vector_sides,
    enumerate_separations,
    gale_transform,
    is_face_gale,
    neighborly_at_least_gale,
    separation_to_crossing,
)
from .kfacets import (
    ColoredPointSet2D,
    cross2,
    almost_balanced_directed_lines,
    majority_k_set_count,
    separable_partitions,
)
from .pointconfig import (
    PointConfiguration,
    is_convex_position,
    is_general_position,
    point_in_hull,
)
from .simplexcross import CrossingPair, crossing_coefficients, extend_crossing, simplices_cross


@dataclass
class WitnessReport:
    """Validated crossing pairs of one pipeline run plus its audit trail."""

    regime: str
    dimension: int
    parameters: dict
    pairs: tuple[CrossingPair, ...]
    guaranteed_lower_bound: int
    base_separations: int
    degenerate_extension: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self, labels=None):
        def names(indices):
            if labels is None:
                return sorted(indices)
            return [labels[i] for i in sorted(indices)]

        return {
            "regime": self.regime,
            "dimension": self.dimension,
            "parameters": self.parameters,
            "guaranteed_lower_bound": self.guaranteed_lower_bound,
            "base_separations": self.base_separations,
            "degenerate_extension": self.degenerate_extension,
            "pair_count": len(self.pairs),
            "pairs": [[names(p.left), names(p.right)] for p in self.pairs],
            "notes": list(self.notes),
        }


def _require_drawing(p: PointConfiguration, d_min: int):
    d = p.dim
    if d < d_min:
        raise InputError(f"pipeline needs dimension at least {d_min}")
    if len(p) != 2 * d:
        raise InputError("a drawing of the complete hypergraph needs exactly 2d vertices")
    if not is_general_position(p):
        raise InputError("vertices must be in general position")


def _dedupe(pairs):
    seen = {}
    for pair in pairs:
        seen.setdefault(pair.key(), pair)
    return tuple(seen[k] for k in sorted(seen))


def _extend_to_hyperedges(p: PointConfiguration, base_pairs):
    """All (d-1)-simplex completions of every base pair over the unused
    vertices; every completion is re-verified by the extension step."""
    d = p.dim
    out = []
    for pair in base_pairs:
        used = pair.left | pair.right
        rest = sorted(set(range(len(p))) - used)
        need_left = d - len(pair.left)
        need_right = d - len(pair.right)
        if need_left < 0 or need_right < 0:
            continue  # side already exceeds a hyperedge; no completion exists
        if need_left + need_right != len(rest):
            raise InvariantError("completion accounting is off")
        for add in combinations(rest, need_left):
            to_right = [i for i in rest if i not in add]
            out.append(extend_crossing(p, pair, add, to_right))
    return out


def _localize(pair: CrossingPair, global_of_local) -> CrossingPair:
    return CrossingPair(
        frozenset(global_of_local[i] for i in pair.left),
        frozenset(global_of_local[i] for i in pair.right),
        pair.witness,
    )


def _separation_lookup(seps):
    table = {}
    for s in seps:
        table[s.positive] = s
        table[s.negative] = s
    return table


def main_witnesses(p: PointConfiguration) -> WitnessReport:
    """General-position regime: proper separation of the first d+4 vertices,
    almost balanced directed lines of the planar diagram, one rotation per
    line, then all vertex completions."""
    d = p.dim
    _require_drawing(p, 6)
    m = d + 4
    vp = p.subconfig(range(m))
    g = gale_transform(vp)
    seps = enumerate_separations(g)
    proper = [s for s in seps if set(s.sides()) == {m // 2, (m + 1) // 2}]
    if not proper:
        raise InvariantError("no proper separation; the bisection guarantee failed")
    s0 = proper[0]
    normal = s0.normal
    if len(s0.positive) < len(s0.negative):
        normal = vec_neg(normal)  # majority color is white by convention
    diag = affine_diagram(g, normal)
    colored = ColoredPointSet2D(diag.points, diag.colors)
    lines = almost_balanced_directed_lines(colored)
    if len(lines) < m // 2:
        raise InvariantError("almost balanced directed line count below floor((d+4)/2)")

    lookup = _separation_lookup(seps)
    notes = [f"almost_balanced_directed_lines={len(lines)}"]
    chosen: dict[frozenset, LinearSeparation] = {}
    for a, b in lines:
        plus = {a}
        for x in range(m):
            if x in (a, b):
                continue
            if cross2(diag.points[a], diag.points[b], diag.points[x]) > 0:
                plus.add(x)
        # counter-clockwise rotation around the midpoint sends the tail point
        # to the positive side and the head point to the negative side
        pos, neg = diagram_partition_to_vector_sides(diag.colors, frozenset(plus), m)
        if min(len(pos), len(neg)) < (d + 2) // 2:
            raise InvariantError("rotated partition too thin")
        sep = lookup.get(pos)
        if sep is None:
            raise InvariantError("rotated partition is not a realizable separation")
        chosen.setdefault(sep.positive, sep)
    if len(chosen) < len(lines):
        notes.append(f"distinct_rotated_separations={len(chosen)} < lines={len(lines)}")

    base_pairs = [separation_to_crossing(g, s) for s in chosen.values()]
    pairs = _dedupe(_extend_to_hyperedges(p, base_pairs))
    bound = (m // 2) * math.comb(d - 4, d - (d + 2) // 2)
    return WitnessReport(
        regime="main",
        dimension=d,
        parameters={"d": d},
        pairs=pairs,
        guaranteed_lower_bound=bound,
        base_separations=len(chosen),
        notes=tuple(notes),
    )


def _find_interior_vertex(p: PointConfiguration, hint=None):
    """First vertex inside the hull of the others, with the support of its
    basic convex-combination certificate (at most d+1 points)."""
    candidates = [hint] if hint is not None else range(len(p))
    for i in candidates:
        others = [j for j in range(len(p)) if j != i]
        coeffs = point_in_hull([p.points[j] for j in others], p.points[i])
        if coeffs is not None:
            support = [others[t] for t, c in enumerate(coeffs) if c > 0]
            return i, support
    if hint is not None:
        raise InputError("hinted vertex is not inside the hull of the others")
    raise InputError("no interior vertex: configuration is in convex position")


def _majority_candidates(diag, white_locals, black_locals, thresh, seps):
    """Map every near-halving separable split of the white diagram points to
    the realizable full separations extending it (black points may land on
    either side), preserving enumeration order."""
    w_pts = [diag.points[i] for i in white_locals]
    parts = sorted(separable_partitions(w_pts), key=sorted)
    s_w = len(white_locals)
    lookup = _separation_lookup(seps)
    majority_parts = [t for t in parts if min(len(t), s_w - len(t)) >= thresh]
    realized: dict[frozenset, LinearSeparation] = {}
    per_part = []
    for t in majority_parts:
        t_local = frozenset(white_locals[i] for i in t)
        hits = 0
        for blacks_with_t in _subsets(black_locals):
            pos_candidate = t_local | blacks_with_t
            sep = lookup.get(pos_candidate)
            if sep is not None:
                hits += 1
                realized.setdefault(sep.positive, sep)
        if hits == 0:
            raise InvariantError("separable white split admits no full separation")
        per_part.append(hits)
    return majority_parts, realized, per_part


def _subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        for sub in combinations(items, r):
            yield frozenset(sub)


def nonconvex_witnesses(p: PointConfiguration, interior_index=None) -> WitnessReport:
    """Non-convex regime: a planted vertex plus its hull support fix a
    (d+5)-vertex subconfiguration whose diagram has a single black point; the
    near-halving k-sets of the white cloud drive the crossing census."""
    d = p.dim
    _require_drawing(p, 7)
    if is_convex_position(p):
        raise InputError("nonconvex pipeline needs a non-convex-position drawing")
    i0, support = _find_interior_vertex(p, interior_index)
    chosen = sorted(set([i0] + support))
    for j in range(len(p)):
        if len(chosen) >= d + 5:
            break
        if j not in chosen:
            chosen.append(j)
    chosen = sorted(chosen[: d + 5])
    vp = p.subconfig(chosen)
    local_i0 = chosen.index(i0)

    g = gale_transform(vp)
    seps = enumerate_separations(g)
    singleton = None
    for s in seps:
        if s.positive == frozenset({local_i0}) or s.negative == frozenset({local_i0}):
            singleton = s
            break
    if singleton is None:
        raise InvariantError("interior vertex has no singleton separation")
    h = singleton.normal
    if singleton.negative == frozenset({local_i0}):
        h = vec_neg(h)
    diag = affine_diagram(g, vec_neg(h))  # interior vertex projects black
    white_locals = [i for i, c in enumerate(diag.colors) if c == WHITE]
    black_locals = [i for i, c in enumerate(diag.colors) if c == BLACK]
    if black_locals != [local_i0]:
        raise InvariantError("expected exactly one black diagram point")

    s_w = d + 4
    thresh = -(-(s_w - 1) // 2)
    majority_parts, realized, per_part = _majority_candidates(
        diag, white_locals, black_locals, thresh, seps)
    for s in realized.values():
        if s.min_side() < thresh:
            raise InvariantError("majority separation thinner than the threshold")

    w_pts = [diag.points[i] for i in white_locals]
    majority_count = majority_k_set_count(w_pts)
    notes = [
        f"majority_k_sets={majority_count}",
        f"majority_partitions={len(majority_parts)}",
        f"forced_partitions={sum(1 for h in per_part if h == 1)}",
    ]

    base_pairs = [_localize(separation_to_crossing(g, s), chosen) for s in realized.values()]
    pairs = _dedupe(_extend_to_hyperedges(p, base_pairs))
    factor = math.comb(d - 5, d - (-(-(d + 3) // 2)))
    bound = majority_count * factor
    return WitnessReport(
        regime="nonconvex",
        dimension=d,
        parameters={"d": d, "interior_vertex": i0},
        pairs=pairs,
        guaranteed_lower_bound=bound,
        base_separations=len(realized),
        notes=tuple(notes),
    )


def _halfspace_certificate(vectors, subset):
    """Exact test for a normal keeping ``subset`` strictly positive and every
    other vector on the closed negative side (margin-1 normalisation)."""
    m = len(vectors)
    k = len(vectors[0])
    others = [j for j in range(m) if j not in subset]
    # variables: w+ | w- | slack per subset member | slack per other
    rows = []
    rhs = []
    for t, i in enumerate(sorted(subset)):
        row = list(vectors[i]) + [-x for x in vectors[i]] + [Fraction(0)] * (len(subset) + len(others))
        row[2 * k + t] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(1))
    for t, j in enumerate(others):
        row = list(vectors[j]) + [-x for x in vectors[j]] + [Fraction(0)] * (len(subset) + len(others))
        row[2 * k + len(subset) + t] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(0))
    return nonneg_feasible(rows, rhs) is not None


def _rotation_endpoint(g_full: GaleTransform, nonface: tuple, d: int):
    """Discrete realization of the hyperplane rotation: a set of d-2 Gale
    vectors whose span admits a normal with the non-face side strictly
    positive and everything else strictly negative."""
    vectors = g_full.vectors
    m = len(vectors)
    others = [j for j in range(m) if j not in nonface]
    for z in combinations(others, d - 2):
        rows = [vectors[i] for i in z]
        line = nullspace_basis(rows, d - 1)
        if len(line) != 1:
            raise InvariantError("rotation span degenerate: general position violated")
        n0 = line[0]
        dots = [dot(n0, v) for v in vectors]
        rest = [j for j in others if j not in z]
        if any(dots[j] == 0 for j in nonface + tuple(rest)):
            raise InvariantError("vector on rotation hyperplane outside the chosen set")
        sa = {(x > 0) for x in (dots[i] for i in nonface)}
        sr = {(x > 0) for x in (dots[j] for j in rest)}
        if len(sa) == 1 and len(sr) == 1 and sa != sr:
            return z, (n0 if dots[nonface[0]] > 0 else vec_neg(n0))
    return None


def t_neighborly_witnesses(p: PointConfiguration, t: int) -> WitnessReport:
    """Regime of t-neighborly but not (t+1)-neighborly convex drawings.

    A non-face of size t+1 is rotated onto d-2 Gale vectors to produce the
    base crossing, three spare vertices fix a (d+5)-vertex subpolytope, and
    the near-halving k-sets of its white diagram points fan out as in the
    nonconvex regime.
    """
    d = p.dim
    _require_drawing(p, 7)
    if t < 1:
        raise InputError("t must be at least 1")
    if not is_convex_position(p):
        raise InputError("t-neighborly pipeline needs a convex drawing")
    g_full = gale_transform(p)
    if not neighborly_at_least_gale(g_full, t):
        raise InputError(f"drawing is not {t}-neighborly")
    nonfaces = [a for a in combinations(range(2 * d), t + 1)
                if not is_face_gale(g_full, a)]
    if not nonfaces:
        raise InputError(f"drawing is already {t + 1}-neighborly")
    endpoint = None
    used_nonface = None
    for a in nonfaces:
        if not _halfspace_certificate(g_full.vectors, frozenset(a)):
            continue
        endpoint = _rotation_endpoint(g_full, a, d)
        if endpoint is not None:
            used_nonface = a
            break
    if endpoint is None:
        raise InvariantError("no rotation endpoint found for any non-face")
    z, _normal = endpoint
    b0 = sorted(used_nonface)
    c0 = sorted(set(range(2 * d)) - set(used_nonface) - set(z))
    base = simplices_cross(p, b0, c0)
    if base is None:
        raise InvariantError("rotated partition does not give a crossing")
    # grow the big side by three spare vertices; the separation proof behind
    # the extension lemma covers supersets beyond d vertices, so this is
    # checked directly rather than through the hyperedge-sized helper
    add3 = sorted(z)[:3]
    c1 = sorted(set(c0) | set(add3))

    chosen = sorted(set(b0) | set(c1))
    vp = p.subconfig(chosen)
    g = gale_transform(vp)
    seps = enumerate_separations(g)

    cert = crossing_coefficients(p, b0, c1)
    if cert is None:
        raise InvariantError("lost the base crossing certificate")
    lam, mu = cert
    coeff = [lam[i] if i in lam else -mu[i] for i in chosen]
    w = solve_linear([g.vectors[i] for i in range(4)], coeff[:4])
    if w is None or any(dot(w, g.vectors[i]) != coeff[i] for i in range(len(chosen))):
        raise InvariantError("separation normal reconstruction failed")
    diag = affine_diagram(g, vec_neg(w))  # non-face side projects black
    black_locals = [i for i, c in enumerate(diag.colors) if c == BLACK]
    white_locals = [i for i, c in enumerate(diag.colors) if c == WHITE]
    if sorted(chosen[i] for i in black_locals) != b0:
        raise InvariantError("black points do not match the non-face side")

    s_w = d + 4 - t
    thresh = -(-(s_w - 1) // 2)
    majority_parts, realized, per_part = _majority_candidates(
        diag, white_locals, black_locals, thresh, seps)
    w_pts = [diag.points[i] for i in white_locals]
    majority_count = majority_k_set_count(w_pts)
    notes = [
        f"non_face={tuple(b0)}",
        f"majority_k_sets={majority_count}",
        f"majority_partitions={len(majority_parts)}",
        f"forced_partitions={sum(1 for h in per_part if h == 1)}",
    ]

    base_pairs = [_localize(separation_to_crossing(g, s), chosen) for s in realized.values()]
    pairs = _dedupe(_extend_to_hyperedges(p, base_pairs))
    factor = math.comb(d - 5, d - (-(-(d + 3 - t) // 2)))
    bound = majority_count * factor
    return WitnessReport(
        regime="t_neighborly",
        dimension=d,
        parameters={"d": d, "t": t},
        pairs=pairs,
        guaranteed_lower_bound=bound,
        base_separations=len(realized),
        notes=tuple(notes),
    )


def highly_neighborly_witnesses(p: PointConfiguration, t_prime: int) -> WitnessReport:
    """Regime of (floor(d/2) - t')-neighborly convex drawings: every small
    separable subset of the (color-blind) diagram yields a separation that
    neighborliness forces to be thick on both sides."""
    d = p.dim
    _require_drawing(p, 6)
    if t_prime < 0:
        raise InputError("t' must be non-negative")
    nb = d // 2 - t_prime
    if nb < 1:
        raise InputError("floor(d/2) - t' must be at least 1")
    if not is_convex_position(p):
        raise InputError("highly-neighborly pipeline needs a convex drawing")
    if not neighborly_at_least_gale(gale_transform(p), nb):
        raise InputError(f"drawing is not {nb}-neighborly")

    chosen = list(range(d + 5))
    vp = p.subconfig(chosen)
    g = gale_transform(vp)
    diag = affine_diagram(g)
    seps = enumerate_separations(g)
    lookup = _separation_lookup(seps)

    m = d + 5
    cap = -(-m // 4)
    small_sides = []
    for part in sorted(separable_partitions(diag.points), key=sorted):
        for side in (part, frozenset(range(m)) - part):
            if 1 <= len(side) <= cap:
                small_sides.append(side)
    count = len(small_sides)

    realized: dict[frozenset, LinearSeparation] = {}
    for side in small_sides:
        pos, neg = diagram_partition_to_vector_sides(diag.colors, side, m)
        sep = lookup.get(pos)
        if sep is None:
            raise InvariantError("small separable side not realizable as a separation")
        if sep.min_side() < nb + 1:
            raise InvariantError("neighborliness guarantee violated by a separation")
        realized.setdefault(sep.positive, sep)
    if len(realized) != count:
        raise InvariantError("small-side separations collided unexpectedly")

    base_pairs = [_localize(separation_to_crossing(g, s), chosen) for s in realized.values()]
    factor = math.comb(d - 5, d - nb - 1) if d >= 5 else 0
    notes = [f"leq_{cap}_sets={count}"]

    if factor == 0:
        for pair in base_pairs:
            if simplices_cross(p, sorted(pair.left), sorted(pair.right)) is None:
                raise InvariantError("base pair failed direct validation")
        notes.append("degenerate extension binomial: bound check skipped, "
                     "reporting unextended witnesses")
        return WitnessReport(
            regime="highly_neighborly",
            dimension=d,
            parameters={"d": d, "t_prime": t_prime},
            pairs=_dedupe(base_pairs),
            guaranteed_lower_bound=0,
            base_separations=len(realized),
            degenerate_extension=True,
            notes=tuple(notes),
        )

    pairs = _dedupe(_extend_to_hyperedges(p, base_pairs))
    bound = count * factor
    return WitnessReport(
        regime="highly_neighborly",
        dimension=d,
        parameters={"d": d, "t_prime": t_prime},
        pairs=pairs,
        guaranteed_lower_bound=bound,
        base_separations=len(realized),
        notes=tuple(notes),
    )


def verify_report(p: PointConfiguration, report: WitnessReport) -> bool:
    """Re-validate a report against the direct oracle: every pair crosses,
    pairs are pairwise distinct, and the count meets the bound (unless the
    degenerate-extension flag says the bound was not claimed)."""
    seen = set()
    for pair in report.pairs:
        key = pair.key()
        if key in seen:
            return False
        seen.add(key)
        if simplices_cross(p, sorted(pair.left), sorted(pair.right), want_witness=False) is None:
            return False
    if not report.degenerate_extension and len(report.pairs) < report.guaranteed_lower_bound:
        return False
    return True
