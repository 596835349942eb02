"""Derivation of the cyclic factors D_F, D_G, and the quotient factor."""

import pytest

from metacyclic import (DerivationError, derive_DF, derive_DG, derive_DGbar,
                        derive_factors, fixed_point_count, format_cyclic,
                        parse_cyclic, parse_meta, validate_cyclic)

from goldens import (G10_ROWS, G11_ROWS, SPLIT_INSTANCE, SPLIT_INSTANCE_DF,
                     SPLIT_INSTANCE_DGBAR)


def test_golden_factors_exact():
    for label, text, dg, df in G10_ROWS + G11_ROWS:
        ds = parse_meta(text)
        assert format_cyclic(derive_DG(ds)) == dg, (label, text)
        assert format_cyclic(derive_DF(ds)) == df, (label, text)


def test_derive_factors_bundle():
    ds = parse_meta(G10_ROWS[0][1])
    factors = derive_factors(ds)
    assert factors.DF == derive_DF(ds)
    assert factors.DG == derive_DG(ds)
    assert factors.DGbar == derive_DGbar(ds)


def test_derived_factors_recover_parent_genus():
    for _, text, _, _ in G10_ROWS + G11_ROWS:
        ds = parse_meta(text)
        for factor in (derive_DF(ds), derive_DG(ds)):
            rep = validate_cyclic(factor)
            assert rep.valid and rep.genus == ds.genus(), (text, str(factor))


def test_split_instance_factors():
    ds = parse_meta(SPLIT_INSTANCE)
    factors = derive_factors(ds)
    assert factors.DF.is_free
    assert format_cyclic(factors.DF) == SPLIT_INSTANCE_DF
    assert factors.DGbar.canonical() == \
        parse_cyclic(SPLIT_INSTANCE_DGBAR).canonical()
    # the quotient factor lives on the orbit surface: same g0, degree u
    assert factors.DGbar.n == ds.u and factors.DGbar.g0 == ds.g0


def test_fixed_point_counts_sum_to_cone_counts():
    # Summed over rotation classes, the fixed points of the generator F are
    # exactly the cone points of maximal order in the derived factor D_F.
    from math import gcd

    ds = parse_meta(G10_ROWS[9][1])  # dicyclic of order 40 at genus 10
    H = ds.group()
    df = derive_DF(ds)
    fixed = sum(fixed_point_count(ds, H.F, v)
                for v in range(1, ds.n) if gcd(v, ds.n) == 1)
    assert fixed == sum(1 for _, ni in df.cones if ni == df.n) == 2


def test_derivation_requires_valid_input():
    bad = parse_meta("((2·4,2,-1),0;[(1,4),(0,1),4])")
    with pytest.raises(DerivationError):
        derive_factors(bad)
