"""Order bound, dicyclic characterization, and split lifts."""

import pytest

from metacyclic import (bound_check, dicyclic_bound_data_set, dicyclic_exists,
                        derive_factors, factors_via_split, format_cyclic,
                        lift_to_split, parse_cyclic, parse_meta,
                        validate_meta_literal, validate_meta_oracle)

import properties
from goldens import DICYCLIC_EXAMPLES, LIFT_EXAMPLES


def test_bound_genus_2():
    report = bound_check(2)
    assert report.bound_holds
    assert report.max_nonsplit_order == 8
    assert [p.label() for p in report.attained_by] == ["M(2,4,2,-1)"]
    assert report.dicyclic_witness is not None
    assert report.dicyclic_witness_report.valid
    assert report.over_bound_groups_checked > 0


def test_bound_genus_3_no_dicyclic_witness():
    report = bound_check(3)
    assert report.bound_holds
    assert report.dicyclic_witness is None


def test_dicyclic_bound_data_set():
    for g in (2, 4, 6):
        ds = dicyclic_bound_data_set(g)
        assert ds.u * ds.n == 4 * g
        assert int(ds.genus()) == g
        assert validate_meta_literal(ds).valid
        assert validate_meta_oracle(ds).valid
        assert not ds.group().is_split
    with pytest.raises(ValueError):
        dicyclic_bound_data_set(5)


def test_dicyclic_examples():
    for text, exists, clause in DICYCLIC_EXAMPLES:
        report = dicyclic_exists(parse_cyclic(text))
        assert report.exists == exists, text
        assert report.clause == clause, text
        if exists:
            assert report.witness_report.valid
            assert report.witness_df_matches
            assert not report.witness.group().is_split
        else:
            assert report.reason


def test_dicyclic_on_derived_factors():
    # the normal-subgroup factor of any valid dicyclic data set must admit a
    # dicyclic extension by construction
    from metacyclic import derive_DF
    for params in properties.dicyclic_params(24):
        for genus in range(2, 7):
            for ds in properties.valid_pool(params, genus, cap=10):
                report = dicyclic_exists(derive_DF(ds))
                assert report.exists, (params.label(), genus, str(ds))


def test_lift_examples_match_captions():
    for text, lift_genus, target, dg, df in LIFT_EXAMPLES:
        res = lift_to_split(parse_meta(text))
        assert res is not None, text
        assert res.genus == lift_genus
        assert res.target.label() == target
        assert res.target.r == res.target.n
        assert validate_meta_oracle(res.lifted)
        assert int(res.lifted.genus()) == lift_genus
        factors = derive_factors(res.lifted)
        assert format_cyclic(factors.DG) == dg, text
        assert format_cyclic(factors.DF) == df, text


def test_lift_rejects_split_input():
    with pytest.raises(ValueError):
        lift_to_split(parse_meta(
            "((11·10,11,2),0;[(1,2),(1,11),2],[(1,5),(7,11),5],"
            "[(3,10),(0,1),10])"))


def test_factors_via_split():
    assert factors_via_split(parse_meta(LIFT_EXAMPLES[0][0]))


def test_all_dicyclic_candidates_lift_small_scope():
    checked = properties.check_dicyclic_lifts(5, reps_only=False)
    assert checked > 0


def test_free_factor_orbit_genus_zero_implies_split_small_scope():
    hits = properties.check_free_factor_implies_split(16, 5)
    assert hits > 0
