import random
from fractions import Fraction
from itertools import combinations

import pytest

from galecross.errors import InputError
from galecross.pointconfig import PointConfiguration, gen_moment_curve, gen_random
from galecross.simplexcross import (
    CrossingPair,
    count_all_crossings,
    extend_crossing,
    radon_partition,
    simplices_cross,
)

F = Fraction

SQUARE = PointConfiguration(2, ((0, 0), (1, 0), (0, 1), (1, 1)))
TRI_CENTROID = PointConfiguration(2, ((0, 0), (6, 0), (0, 6), (2, 2)))

# Exact crossing counts of moment-curve drawings, computed once by this
# module's brute-force enumeration and frozen as regression constants.
K63_MOMENT_CROSSINGS = 3
K84_MOMENT_CROSSINGS = 13


def test_square_diagonals_cross():
    pair = simplices_cross(SQUARE, [0, 3], [1, 2])
    assert pair is not None
    assert pair.witness == (F(1, 2), F(1, 2))


def test_square_sides_do_not_cross():
    assert simplices_cross(SQUARE, [0, 1], [2, 3]) is None


def test_triangle_pierced_by_segment():
    cfg = PointConfiguration(3, (
        (0, 0, 0), (4, 0, 0), (0, 4, 0),   # triangle in the z=0 plane
        (1, 1, -2), (1, 1, 3),             # segment through its interior
    ))
    pair = simplices_cross(cfg, [0, 1, 2], [3, 4])
    assert pair is not None
    assert pair.witness[2] == 0


def test_cross_symmetry():
    a = simplices_cross(SQUARE, [0, 3], [1, 2])
    b = simplices_cross(SQUARE, [1, 2], [0, 3])
    assert a == b


def test_overlapping_sides_rejected():
    with pytest.raises(InputError):
        simplices_cross(SQUARE, [0, 1], [1, 2])


def test_radon_square():
    assert radon_partition(SQUARE) == (frozenset({0, 3}), frozenset({1, 2}))


def test_radon_triangle_centroid():
    pos, neg = radon_partition(TRI_CENTROID)
    assert {pos, neg} == {frozenset({3}), frozenset({0, 1, 2})}


def test_radon_moment_curve_alternates():
    cfg = gen_moment_curve(3, range(5))
    pos, neg = radon_partition(cfg)
    assert {pos, neg} == {frozenset({0, 2, 4}), frozenset({1, 3})}


def test_radon_uniqueness_exhaustive():
    # exactly one split of d+2 points crosses, and it is the Radon partition
    for d, seed in ((2, 0), (3, 1), (4, 2)):
        cfg = gen_random(d, d + 2, seed=seed, bound=40)
        expected = radon_partition(cfg)
        crossing = []
        idx = range(d + 2)
        for size in range(1, (d + 2) // 2 + 1):
            for left in combinations(idx, size):
                right = tuple(i for i in idx if i not in left)
                if len(left) == len(right) and left[0] != 0:
                    continue
                if simplices_cross(cfg, left, right) is not None:
                    pos, neg = frozenset(left), frozenset(right)
                    crossing.append((pos, neg) if min(pos) < min(neg) else (neg, pos))
        assert crossing == [expected]


def test_extend_crossing_keeps_crossing():
    # segment/triangle crossing from the first 5 moment points, extended by
    # one vertex on the segment side
    cfg = gen_moment_curve(3, range(7))
    pos, neg = radon_partition(cfg.subconfig(range(5)))
    segment = pos if len(pos) == 2 else neg
    triangle = neg if segment is pos else pos
    base = simplices_cross(cfg, sorted(triangle), sorted(segment))
    assert base is not None
    add = ([5], []) if 5 not in base.left and len(base.left) == 2 else ([], [5])
    bigger = extend_crossing(cfg, base, *add)
    assert len(bigger.left) + len(bigger.right) == 6


def test_extend_crossing_empty_is_identity():
    base = simplices_cross(SQUARE, [0, 3], [1, 2])
    again = extend_crossing(SQUARE, base, [], [])
    assert again.key() == base.key()


def test_extend_crossing_size_guard():
    base = simplices_cross(SQUARE, [0, 3], [1, 2])
    with pytest.raises(InputError):
        extend_crossing(SQUARE, base, [1], [])  # overlaps the right side
    cfg = gen_moment_curve(2, range(5))
    b = simplices_cross(cfg, [0, 2], [1, 3])
    assert b is not None
    with pytest.raises(InputError):
        extend_crossing(cfg, b, [4], [])  # side would exceed d = 2


def test_extension_lemma_property():
    # random base pair with |B|+|C| >= d+2, random legal extension: crossing
    rng = random.Random(77)
    hits = 0
    seed = 0
    while hits < 12:
        seed += 1
        d = rng.choice((3, 4))
        n = 2 * d
        cfg = gen_random(d, n, seed=100 + seed, bound=35)
        pos, neg = radon_partition(cfg.subconfig(range(d + 2)))
        if max(len(pos), len(neg)) > d:
            continue  # lemma hypotheses need both sides within d vertices
        base = simplices_cross(cfg, sorted(pos), sorted(neg))
        assert base is not None
        free = [i for i in range(n) if i not in pos | neg]
        rng.shuffle(free)
        room_l = d - len(base.left)
        room_r = d - len(base.right)
        take_l = rng.randrange(0, min(room_l, len(free)) + 1)
        take_r = rng.randrange(0, max(0, min(room_r, len(free) - take_l)) + 1)
        ext = extend_crossing(cfg, base, free[:take_l], free[take_l:take_l + take_r])
        assert simplices_cross(cfg, sorted(ext.left), sorted(ext.right)) is not None
        hits += 1


def test_count_square():
    assert count_all_crossings(SQUARE, 1, 1)[0] == 1


def test_count_triangle_centroid():
    assert count_all_crossings(TRI_CENTROID, 1, 1)[0] == 0


def test_count_k63_regression():
    cfg = gen_moment_curve(3, range(6))
    count, pairs = count_all_crossings(cfg, 2, 2, emit_pairs=True)
    assert count == K63_MOMENT_CROSSINGS
    assert len(pairs) == count
    assert all(p.witness is not None for p in pairs)


def test_count_k84_regression():
    cfg = gen_moment_curve(4, range(8))
    count, _ = count_all_crossings(cfg, 3, 3)
    assert count == K84_MOMENT_CROSSINGS


def test_canonical_pair_ordering():
    pair = CrossingPair(frozenset({5, 6}), frozenset({1, 2}))
    assert pair.key() == ((1, 2), (5, 6))
