from fractions import Fraction

import pytest

from galecross.errors import InputError
from galecross.pointconfig import (
    PointConfiguration,
    gen_moment_curve,
    gen_planted,
    gen_random,
    gen_segment_sum,
    is_convex_position,
    is_face,
    is_general_position,
    load_config,
    neighborliness_direct,
    plant_interior,
    point_in_hull,
    save_config,
)

F = Fraction

SQUARE = PointConfiguration(2, ((0, 0), (1, 0), (0, 1), (1, 1)))


def test_general_position_square():
    assert is_general_position(SQUARE)


def test_general_position_collinear():
    cfg = PointConfiguration(2, ((0, 0), (1, 1), (2, 2), (0, 1)))
    assert not is_general_position(cfg)


def test_moment_curve_values():
    cfg = gen_moment_curve(2, (0, 1, 2))
    assert cfg.points == ((F(0), F(0)), (F(1), F(1)), (F(2), F(4)))
    cfg3 = gen_moment_curve(3, (1,))
    assert cfg3.points[0] == (F(1), F(1), F(1))


def test_moment_curve_general_position():
    # Vandermonde: nonzero for any distinct parameters, checked up to d = 8
    for d in range(2, 9):
        cfg = gen_moment_curve(d, range(d + 6))
        assert is_general_position(cfg)


def test_moment_curve_duplicate_params():
    with pytest.raises(InputError):
        gen_moment_curve(2, (1, 1, 2))


def test_moment_curve_convex_position():
    # cyclic polytopes are convex; checked via the hull-membership oracle
    cfg = gen_moment_curve(4, range(8))
    assert is_convex_position(cfg)


def test_convex_position_square_and_centroid():
    assert is_convex_position(SQUARE)
    tri = PointConfiguration(2, ((0, 0), (3, 0), (0, 3), (1, 1)))
    assert not is_convex_position(tri)


def test_gen_random_deterministic():
    a = gen_random(2, 4, seed=7, bound=100)
    b = gen_random(2, 4, seed=7, bound=100)
    assert a == b
    c = gen_random(2, 4, seed=8, bound=100)
    assert a != c


def test_gen_random_general_position():
    for seed in range(5):
        cfg = gen_random(3, 8, seed=seed, bound=50)
        assert is_general_position(cfg)


def test_gen_random_gale_dimension():
    cfg = gen_random(3, 9, seed=1, bound=1000)
    # m - d - 1 = 5 dual coordinates per vector
    from galecross.gale import gale_transform

    g = gale_transform(cfg)
    assert len(g.vectors) == 9
    assert all(len(v) == 5 for v in g.vectors)


def test_plant_interior_centroid():
    tri = PointConfiguration(2, ((0, 0), (6, 0), (0, 6), (5, 5)))
    out = plant_interior(tri, 3, (F(1, 3), F(1, 3), F(1, 3)))
    assert out.points[3] == (F(2), F(2))
    assert not is_convex_position(out)
    assert is_general_position(out)


def test_plant_interior_bad_weights():
    tri = PointConfiguration(2, ((0, 0), (6, 0), (0, 6), (5, 5)))
    with pytest.raises(InputError):
        plant_interior(tri, 3, (F(1, 2), F(1, 2), F(0)))
    with pytest.raises(InputError):
        plant_interior(tri, 3, (F(1, 2), F(1, 4), F(1, 3)))


def test_gen_planted_not_convex():
    cfg = gen_planted(3, 8, seed=3, bound=60)
    assert is_general_position(cfg)
    assert not is_convex_position(cfg)


def test_point_in_hull_certificate():
    coeffs = point_in_hull([(F(0), F(0)), (F(2), F(0)), (F(0), F(2))], (F(1, 2), F(1, 2)))
    assert coeffs is not None
    assert sum(coeffs) == 1
    assert point_in_hull([(F(0), F(0)), (F(1), F(0))], (F(5), F(5))) is None


def test_save_load_round_trip():
    cfg = gen_random(3, 6, seed=2, bound=9)
    text = save_config(cfg)
    again = load_config(text)
    assert again == cfg
    assert save_config(again) == text


def test_save_canonicalizes_rationals():
    cfg = load_config('{"dimension":1,"labels":["a","b"],"points":[["2/4"],["3"]]}')
    assert '"1/2"' in save_config(cfg)


def test_load_wrong_dimension_point():
    with pytest.raises(InputError):
        load_config('{"dimension":2,"labels":["a"],"points":[["1"]]}')


def test_load_malformed():
    with pytest.raises(InputError):
        load_config("not json at all")


def test_segment_sum_is_generic_and_convex():
    cfg = gen_segment_sum(4, seed=0)
    assert len(cfg) == 8
    assert is_general_position(cfg)
    assert is_convex_position(cfg)


def test_segment_sum_antipodal_pairs_not_edges():
    cfg = gen_segment_sum(4, seed=0)
    assert not is_face(cfg, [0, 1])        # antipodal pair along axis 0
    assert neighborliness_direct(cfg) == 1


def test_face_tests_square():
    assert is_face(SQUARE, [0])
    assert is_face(SQUARE, [0, 1])         # a side
    assert not is_face(SQUARE, [0, 3])     # a diagonal
    assert neighborliness_direct(SQUARE) == 1


def test_neighborliness_direct_cyclic():
    cfg = gen_moment_curve(4, range(8))
    assert neighborliness_direct(cfg) == 2
