import math

import pytest

from galecross.errors import InputError
from galecross.pointconfig import (
    gen_moment_curve,
    gen_planted,
    gen_random,
    gen_segment_sum,
)
from galecross.simplexcross import CrossingPair, count_all_crossings, simplices_cross
from galecross.witness import (
    WitnessReport,
    highly_neighborly_witnesses,
    main_witnesses,
    nonconvex_witnesses,
    t_neighborly_witnesses,
    verify_report,
)


def test_main_moment_d6():
    cfg = gen_moment_curve(6, range(12))
    rep = main_witnesses(cfg)
    assert rep.guaranteed_lower_bound == 5 * math.comb(2, 2) == 5
    assert len(rep.pairs) >= 5
    assert verify_report(cfg, rep)


def test_main_random_d6_and_subset_relation():
    cfg = gen_random(6, 12, seed=42, bound=500)
    rep = main_witnesses(cfg)
    assert verify_report(cfg, rep)
    assert all(len(pair.left) == len(pair.right) == 6 for pair in rep.pairs)


def test_main_every_pair_crosses_directly():
    cfg = gen_random(6, 12, seed=7, bound=300)
    rep = main_witnesses(cfg)
    for pair in rep.pairs:
        assert simplices_cross(cfg, sorted(pair.left), sorted(pair.right)) is not None


def test_main_determinism():
    cfg = gen_random(6, 12, seed=9, bound=300)
    a = main_witnesses(cfg)
    b = main_witnesses(cfg)
    assert [p.key() for p in a.pairs] == [p.key() for p in b.pairs]
    assert a.guaranteed_lower_bound == b.guaranteed_lower_bound


def test_main_rejects_small_dimension():
    cfg = gen_random(4, 8, seed=1, bound=100)
    with pytest.raises(InputError):
        main_witnesses(cfg)


def test_nonconvex_planted_d7():
    cfg = gen_planted(7, 14, seed=3, bound=400)
    rep = nonconvex_witnesses(cfg)
    assert rep.guaranteed_lower_bound > 0
    assert len(rep.pairs) >= rep.guaranteed_lower_bound
    assert verify_report(cfg, rep)
    # extension factor is C(2,2) = 1 at d = 7
    assert rep.guaranteed_lower_bound % 1 == 0


def test_nonconvex_rejects_convex_input():
    cfg = gen_moment_curve(7, range(14))
    with pytest.raises(InputError):
        nonconvex_witnesses(cfg)


def test_t_neighborly_segment_sum_d7():
    cfg = gen_segment_sum(7, seed=0)
    rep = t_neighborly_witnesses(cfg, 1)
    assert len(rep.pairs) >= rep.guaranteed_lower_bound > 0
    assert verify_report(cfg, rep)


def test_t_neighborly_rejects_wrong_t():
    cfg = gen_moment_curve(7, range(14))  # cyclic: 3-neighborly, 2-subsets all faces
    with pytest.raises(InputError):
        t_neighborly_witnesses(cfg, 1)


def test_highly_neighborly_d8():
    cfg = gen_moment_curve(8, range(16))
    rep = highly_neighborly_witnesses(cfg, 0)
    assert not rep.degenerate_extension
    assert rep.guaranteed_lower_bound == rep.base_separations  # factor C(3,3) = 1
    assert len(rep.pairs) >= rep.guaranteed_lower_bound
    assert verify_report(cfg, rep)


def test_highly_neighborly_degenerate_d6():
    cfg = gen_moment_curve(6, range(12))
    rep = highly_neighborly_witnesses(cfg, 0)
    assert rep.degenerate_extension
    assert rep.guaranteed_lower_bound == 0
    assert any("degenerate" in note for note in rep.notes)
    assert verify_report(cfg, rep)


def test_highly_neighborly_rejects_nonconvex():
    cfg = gen_planted(6, 12, seed=5, bound=200)
    with pytest.raises(InputError):
        highly_neighborly_witnesses(cfg, 0)


def test_verify_report_rejects_duplicates():
    cfg = gen_moment_curve(6, range(12))
    rep = main_witnesses(cfg)
    doctored = WitnessReport(
        regime=rep.regime, dimension=rep.dimension, parameters=rep.parameters,
        pairs=rep.pairs + (rep.pairs[0],),
        guaranteed_lower_bound=rep.guaranteed_lower_bound,
        base_separations=rep.base_separations,
    )
    assert not verify_report(cfg, doctored)


def test_verify_report_rejects_non_crossing():
    cfg = gen_moment_curve(6, range(12))
    rep = main_witnesses(cfg)
    fake = None
    from itertools import combinations

    for left in combinations(range(12), 6):
        right = tuple(i for i in range(12) if i not in left)
        if simplices_cross(cfg, left, right) is None:
            fake = CrossingPair(frozenset(left), frozenset(right))
            break
    assert fake is not None
    doctored = WitnessReport(
        regime=rep.regime, dimension=rep.dimension, parameters=rep.parameters,
        pairs=rep.pairs[:-1] + (fake,),
        guaranteed_lower_bound=rep.guaranteed_lower_bound,
        base_separations=rep.base_separations,
    )
    assert not verify_report(cfg, doctored)


def test_witness_counts_below_total():
    cfg = gen_moment_curve(6, range(12))
    rep = main_witnesses(cfg)
    total, _ = count_all_crossings(cfg, 5, 5)
    assert len(rep.pairs) <= total


def test_report_serialization_round():
    cfg = gen_moment_curve(6, range(12))
    rep = main_witnesses(cfg)
    doc = rep.to_dict(cfg.labels)
    assert doc["pair_count"] == len(rep.pairs)
    assert doc["regime"] == "main"
    assert all(len(entry) == 2 for entry in doc["pairs"])
