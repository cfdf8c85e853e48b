from fractions import Fraction
from itertools import combinations

import pytest

from galecross.errors import InputError, UnsupportedError
from galecross.exactmath import dot, fmat, fvec, nonneg_feasible, rank
from galecross.gale import (
    BLACK,
    WHITE,
    affine_diagram,
    enumerate_separations,
    gale_transform,
    is_convex_position_gale,
    neighborliness_gale,
    proper_separations,
    separation_to_crossing,
)
from galecross.pointconfig import (
    PointConfiguration,
    gen_moment_curve,
    gen_random,
    is_convex_position,
)
from galecross.simplexcross import count_all_crossings, simplices_cross

F = Fraction

SQUARE = PointConfiguration(2, ((0, 0), (1, 0), (0, 1), (1, 1)))
PENTAGON = PointConfiguration(2, ((0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)))


def separation_exists_lp(vectors, pos):
    """Independent oracle: strict separation realizable iff the margin system
    sigma_i <w, g_i> >= 1 admits a solution (free w split into w+ - w-)."""
    m = len(vectors)
    k = len(vectors[0])
    rows = []
    for i in range(m):
        sigma = 1 if i in pos else -1
        row = [sigma * x for x in vectors[i]] + [-sigma * x for x in vectors[i]]
        rows.append(row + [0] * m)
    for i in range(m):
        rows[i][2 * k + i] = -1
    return nonneg_feasible(fmat(rows), fvec([1] * m)) is not None


def test_square_gale_vectors():
    g = gale_transform(SQUARE)
    t = g.vectors[0][0]
    assert t != 0
    assert tuple(v[0] / t for v in g.vectors) == (F(1), F(-1), F(-1), F(1))


def test_moment_curve_fourth_difference():
    # m = d+2 on the moment curve: the null vector is the 4th finite
    # difference stencil, which annihilates cubics
    g = gale_transform(gen_moment_curve(3, range(5)))
    t = g.vectors[0][0]
    norm = tuple(v[0] / t for v in g.vectors)
    assert norm == (F(1), F(-4), F(6), F(-4), F(1))


def test_gale_invariants_random():
    for seed in range(4):
        cfg = gen_random(3, 7, seed=seed, bound=40)
        g = gale_transform(cfg)
        k = g.dual_dim
        total = [sum((v[r] for v in g.vectors), F(0)) for r in range(k)]
        assert all(x == 0 for x in total)
        for j in range(cfg.dim):
            coord = [sum((v[r] * cfg.points[i][j] for i, v in enumerate(g.vectors)), F(0))
                     for r in range(k)]
            assert all(x == 0 for x in coord)
        assert all(any(x != 0 for x in v) for v in g.vectors)


def test_gale_subsets_span():
    # general position source: every (m-d-1)-subset of Gale vectors spans
    for seed in (0, 1):
        cfg = gen_random(2, 6, seed=seed, bound=30)
        g = gale_transform(cfg)
        k = g.dual_dim
        for sub in combinations(range(len(cfg)), k):
            assert rank([g.vectors[i] for i in sub]) == k


def test_degenerate_hull_rejected():
    flat = PointConfiguration(2, ((0, 0), (1, 1), (2, 2), (3, 3)))
    with pytest.raises(InputError):
        gale_transform(flat)


def test_square_single_separation():
    g = gale_transform(SQUARE)
    seps = enumerate_separations(g)
    assert len(seps) == 1
    s = seps[0]
    assert {tuple(sorted(s.positive)), tuple(sorted(s.negative))} == {(0, 3), (1, 2)}


def test_pentagon_separations():
    assert is_convex_position(PENTAGON)
    g = gale_transform(PENTAGON)
    seps = enumerate_separations(g)
    assert len(seps) == 5
    assert all(set(s.sides()) == {2, 3} for s in seps)


def test_separations_match_lp_oracle():
    # every achievable partition is enumerated and vice versa, at dual
    # dimensions 3 and 4
    for d, m, seed in ((3, 7, 3), (3, 7, 4), (4, 9, 0)):
        cfg = gen_random(d, m, seed=seed, bound=25)
        g = gale_transform(cfg)
        got = {frozenset((tuple(sorted(s.positive)), tuple(sorted(s.negative)))) for s in enumerate_separations(g)}
        m = len(cfg)
        expect = set()
        for size in range(1, m // 2 + 1):
            for pos in combinations(range(m), size):
                posf = frozenset(pos)
                rest = frozenset(range(m)) - posf
                if size == m - size and 0 not in pos:
                    continue
                if separation_exists_lp(g.vectors, posf):
                    expect.add(frozenset((tuple(sorted(posf)), tuple(sorted(rest)))))
        assert got == expect


def test_separation_witnesses_verify():
    cfg = gen_random(4, 8, seed=9, bound=30)
    g = gale_transform(cfg)
    for s in enumerate_separations(g):
        for i in range(len(cfg)):
            val = dot(s.normal, g.vectors[i])
            assert val != 0
            assert (val > 0) == (i in s.positive)


def test_unsupported_dual_dimension():
    cfg = gen_random(2, 9, seed=0, bound=50)  # dual dim 6
    g = gale_transform(cfg)
    with pytest.raises(UnsupportedError):
        enumerate_separations(g)


def test_separation_to_crossing_square():
    g = gale_transform(SQUARE)
    s = enumerate_separations(g)[0]
    pair = separation_to_crossing(g, s)
    assert pair.key() == ((0, 3), (1, 2))
    assert pair.witness == (F(1, 2), F(1, 2))
    assert simplices_cross(SQUARE, sorted(pair.left), sorted(pair.right)) is not None


def test_separation_crossing_moment_triangle_segment():
    cfg = gen_moment_curve(3, range(5))
    g = gale_transform(cfg)
    seps = enumerate_separations(g)
    assert len(seps) == 1
    pair = separation_to_crossing(g, seps[0])
    assert pair.key() == ((0, 2, 4), (1, 3))
    direct = simplices_cross(cfg, [0, 2, 4], [1, 3])
    assert direct is not None


def test_bijection_counts_small():
    # separation census equals the direct crossing census at every split
    for d, m, seed in ((3, 6, 0), (3, 7, 1), (4, 7, 2)):
        cfg = gen_random(d, m, seed=seed, bound=30)
        g = gale_transform(cfg)
        seps = enumerate_separations(g)
        for u in range(1, m - 3):
            v = m - 2 - u
            if v < 1 or (u > v):
                continue
            dual = sum(1 for s in seps if set(s.sides()) == {u + 1, v + 1})
            direct, _ = count_all_crossings(cfg, u, v)
            assert dual == direct


def test_affine_diagram_square():
    g = gale_transform(SQUARE)
    diag = affine_diagram(g, normal_hint=(1,))
    assert diag.points == ((), (), (), ())
    assert diag.colors == (WHITE, BLACK, BLACK, WHITE)


def test_affine_diagram_color_flip():
    cfg = gen_random(3, 7, seed=5, bound=25)
    g = gale_transform(cfg)
    d1 = affine_diagram(g)
    d2 = affine_diagram(g, normal_hint=tuple(-x for x in d1.normal))
    swap = {WHITE: BLACK, BLACK: WHITE}
    assert d2.colors == tuple(swap[c] for c in d1.colors)


def test_color_flip_preserves_derived_separations():
    # negating the projection normal swaps colors but every partition of the
    # diagram still maps to the same vector separation, so all counts match
    from galecross.gale import diagram_partition_to_vector_sides
    from galecross.kfacets import separable_partitions

    cfg = gen_random(4, 9, seed=8, bound=40)  # diagram in Q^3
    g = gale_transform(cfg)
    d1 = affine_diagram(g)
    d2 = affine_diagram(g, normal_hint=tuple(-x for x in d1.normal))
    assert d2.points == tuple(tuple(-x for x in q) for q in d1.points)
    parts1 = separable_partitions(d1.points)
    assert parts1 == separable_partitions(d2.points)
    m = len(cfg)
    for part in parts1:
        s1 = frozenset(diagram_partition_to_vector_sides(d1.colors, part, m)[0])
        s2 = frozenset(diagram_partition_to_vector_sides(d2.colors, part, m)[0])
        assert s2 in (s1, frozenset(range(m)) - s1)


def test_affine_diagram_shape():
    cfg = gen_random(4, 8, seed=6, bound=25)  # m = d+4 -> diagram in Q^2
    g = gale_transform(cfg)
    diag = affine_diagram(g)
    assert len(diag.points) == 8
    assert all(len(q) == 2 for q in diag.points)


def test_convexity_gale_agrees():
    convex = gen_moment_curve(3, range(7))
    g = gale_transform(convex)
    assert is_convex_position_gale(g)
    assert is_convex_position(convex)

    from galecross.pointconfig import gen_planted

    planted = gen_planted(3, 7, seed=11, bound=40)
    gp = gale_transform(planted)
    assert not is_convex_position_gale(gp)
    assert not is_convex_position(planted)

    tri = PointConfiguration(2, ((0, 0), (3, 0), (0, 3), (1, 1)))
    assert not is_convex_position_gale(gale_transform(tri))

    assert is_convex_position_gale(gale_transform(SQUARE))


def test_neighborliness_square():
    assert neighborliness_gale(gale_transform(SQUARE)) == 1


def test_neighborliness_cyclic():
    cfg = gen_moment_curve(4, range(8))
    assert neighborliness_gale(gale_transform(cfg)) == 2


def test_neighborliness_rejects_nonconvex():
    tri = PointConfiguration(2, ((0, 0), (3, 0), (0, 3), (1, 1)))
    with pytest.raises(InputError):
        neighborliness_gale(gale_transform(tri))


def test_proper_separation_exists():
    cfg = gen_random(4, 8, seed=12, bound=30)
    g = gale_transform(cfg)
    props = proper_separations(g)
    assert props
    assert all(set(s.sides()) == {4} for s in props)
