"""Direct crossing tests for vertex-disjoint simplices.

This module is the geometric ground truth the dual (Gale) route is checked
against: every predicate reduces to an exact strict-feasibility solve on the
barycentric intersection system, never to sign heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import InputError, InvariantError
from .exactmath import Vec, nullspace_basis, strict_feasible
from .pointconfig import PointConfiguration


@dataclass(frozen=True)
class CrossingPair:
    """Vertex-disjoint index sets whose simplices share a relative-interior
    point; canonical form has min(left) < min(right)."""

    left: frozenset[int]
    right: frozenset[int]
    witness: Optional[Vec] = None

    def __post_init__(self):
        if self.left & self.right:
            raise InputError("crossing pair sides must be disjoint")

    def key(self) -> tuple:
        a, b = sorted(self.left), sorted(self.right)
        if a > b:
            a, b = b, a
        return (tuple(a), tuple(b))


def _canonical(left, right, witness):
    a, b = frozenset(left), frozenset(right)
    if min(a) > min(b):
        a, b = b, a
    return CrossingPair(a, b, witness)


def _intersection_solution(p: PointConfiguration, b: Sequence[int], c: Sequence[int]):
    """Strictly positive barycentric solution of conv(b) meet conv(c), or None."""
    bs, cs = sorted(set(b)), sorted(set(c))
    if len(bs) != len(b) or len(cs) != len(c):
        raise InputError("repeated index inside a side")
    if set(bs) & set(cs):
        raise InputError("sides share a vertex")
    if not bs or not cs:
        raise InputError("sides must be non-empty")
    for i in bs + cs:
        if not 0 <= i < len(p):
            raise InputError("vertex index out of range")
    d = p.dim
    a = []
    for j in range(d):
        a.append([p.points[i][j] for i in bs] + [-p.points[i][j] for i in cs])
    a.append([Fraction(1)] * len(bs) + [Fraction(0)] * len(cs))
    a.append([Fraction(0)] * len(bs) + [Fraction(1)] * len(cs))
    rhs = [Fraction(0)] * d + [Fraction(1), Fraction(1)]
    return bs, cs, strict_feasible(a, rhs)


def simplices_cross(p: PointConfiguration, b: Sequence[int], c: Sequence[int],
                    want_witness: bool = True) -> Optional[CrossingPair]:
    """Exact test whether conv(b) and conv(c) share a relative-interior point.

    Solves sum(lambda_i p_i) = sum(mu_j p_j), sum(lambda) = sum(mu) = 1 with
    all coefficients strictly positive; the returned witness is the common
    point itself.  Symmetric in (b, c).
    """
    bs, cs, sol = _intersection_solution(p, b, c)
    if sol is None:
        return None
    if not want_witness:
        return _canonical(bs, cs, None)
    point = tuple(
        sum((sol[t] * p.points[i][j] for t, i in enumerate(bs)), Fraction(0))
        for j in range(p.dim)
    )
    return _canonical(bs, cs, point)


def crossing_coefficients(p: PointConfiguration, b: Sequence[int], c: Sequence[int]):
    """Barycentric certificate of a crossing: ({index: lambda}, {index: mu})
    with both maps strictly positive and each summing to 1, or None."""
    bs, cs, sol = _intersection_solution(p, b, c)
    if sol is None:
        return None
    lam = {i: sol[t] for t, i in enumerate(bs)}
    mu = {i: sol[len(bs) + t] for t, i in enumerate(cs)}
    return lam, mu


def radon_partition(p: PointConfiguration) -> tuple[frozenset[int], frozenset[int]]:
    """The unique crossing split of d+2 general-position points.

    Read off the sign pattern of the one-dimensional Gale transform (the
    null vector of the lifted matrix); returned with the lowest index first.
    """
    d = p.dim
    if len(p) != d + 2:
        raise InputError("Radon partition needs exactly d+2 points")
    basis = nullspace_basis(p.lifted_matrix())
    if len(basis) != 1:
        raise InputError("degenerate configuration")
    v = basis[0]
    if any(x == 0 for x in v):
        raise InputError("configuration not in general position")
    pos = frozenset(i for i, x in enumerate(v) if x > 0)
    neg = frozenset(range(d + 2)) - pos
    if not pos or not neg:
        raise InvariantError("one-sided Radon vector")
    return (pos, neg) if min(pos) < min(neg) else (neg, pos)


def extend_crossing(p: PointConfiguration, base: CrossingPair,
                    add_left: Sequence[int], add_right: Sequence[int]) -> CrossingPair:
    """Grow a crossing pair by disjoint vertex sets (the extension lemma).

    The lemma guarantees the extended pair still crosses whenever the base
    sides together hold at least d+2 points and the extended sides stay
    within d vertices; the implementation recomputes the witness anyway and
    treats a failure as an arithmetic bug, not a caller error.
    """
    al, ar = frozenset(add_left), frozenset(add_right)
    groups = [base.left, base.right, al, ar]
    for x, y in combinations(range(4), 2):
        if groups[x] & groups[y]:
            raise InputError("extension sets must be pairwise disjoint")
    d = p.dim
    if len(base.left) + len(base.right) < d + 2:
        raise InputError("base pair too small for the extension lemma")
    new_left = base.left | al
    new_right = base.right | ar
    if len(new_left) > d or len(new_right) > d:
        raise InputError("extended side exceeds d vertices")
    out = simplices_cross(p, sorted(new_left), sorted(new_right))
    if out is None:
        raise InvariantError("extension lemma violated: extended pair does not cross")
    return out


def count_all_crossings(p: PointConfiguration, u: int, v: int,
                        emit_pairs: bool = False):
    """Exact count of unordered crossing (u-simplex, v-simplex) pairs.

    Enumerates every disjoint pair of index sets of sizes u+1 and v+1; when
    u == v each unordered pair is visited once.  Witness retention is
    optional because pair lists get large.
    """
    if u < 1 or v < 1:
        raise InputError("simplex dimensions must be at least 1")
    m = len(p)
    if u + v + 2 > m:
        raise InputError("not enough vertices for the requested sizes")
    count = 0
    pairs = [] if emit_pairs else None
    for b in combinations(range(m), u + 1):
        rest = [i for i in range(m) if i not in b]
        for c in combinations(rest, v + 1):
            if u == v and b[0] > c[0]:
                continue
            hit = simplices_cross(p, b, c, want_witness=emit_pairs)
            if hit is not None:
                count += 1
                if emit_pairs:
                    pairs.append(hit)
    return count, pairs
