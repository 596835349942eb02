"""Text and JSON notation: round trips, input variants, error reporting."""

import pytest

from metacyclic import (ParseError, cyclic_from_json, cyclic_to_json,
                        format_cyclic, format_meta, meta_from_json,
                        meta_to_json, parse_any, parse_cyclic, parse_meta)

from goldens import G10_ROWS, G11_ROWS, SPLIT_INSTANCE


ALL_ROWS = G10_ROWS + G11_ROWS


def test_meta_text_round_trip():
    for _, text, _, _ in ALL_ROWS:
        ds = parse_meta(text)
        assert parse_meta(format_meta(ds)) == ds


def test_cyclic_text_round_trip():
    for _, _, dg, df in ALL_ROWS:
        for text in (dg, df):
            ds = parse_cyclic(text)
            assert format_cyclic(ds) == text
            assert parse_cyclic(format_cyclic(ds)) == ds


def test_json_round_trip():
    for _, text, dg, _ in ALL_ROWS[:4]:
        ds = parse_meta(text)
        assert meta_from_json(meta_to_json(ds)) == ds
        cyc = parse_cyclic(dg)
        assert cyclic_from_json(cyclic_to_json(cyc)) == cyc


def test_free_cyclic_round_trip():
    ds = parse_cyclic("(4,6,1;)")
    assert (ds.n, ds.g0, ds.d) == (4, 6, 1) and ds.is_free
    assert format_cyclic(ds) == "(4,6,1;)"


def test_degree_separator_variants():
    a = parse_meta("((2·4,2,-1),1;[(1,4),(0,1),4])")
    b = parse_meta("((2x4,2,-1),1;[(1,4),(0,1),4])")
    c = parse_meta("(( 2 X 4 , 2 , -1 ) , 1 ; [ (1,4),(0,1),4 ])")
    assert a == b == c
    assert "·" in format_meta(a)


def test_negative_twist_round_trip():
    ds = parse_meta("((2·20,10,-1),1;[(0,1),(1,2),2])")
    assert ds.k == 19
    assert ",-1)" in format_meta(ds)


def test_multiplicity_suffix():
    a = parse_meta("((2·4,2,-1),0;[(0,1),(1,2),2]_4,"
                   "[(1,4),(0,1),4],[(0,1),(1,4),4],[(3,4),(1,4),4])")
    assert a.ell == 7
    assert a.triples[0] == a.triples[3]
    assert "_4" in format_meta(a.sorted_triples())


def test_degree_swap_fallback():
    # degree written n-first: 11·10 with r = 11 forces n = 11, u = 10
    ds = parse_meta(SPLIT_INSTANCE)
    assert (ds.u, ds.n, ds.r, ds.k) == (10, 11, 11, 2)


def test_parse_any_dispatch():
    meta = parse_meta(ALL_ROWS[0][1])
    assert parse_any(ALL_ROWS[0][1]) == meta
    assert parse_any(ALL_ROWS[0][2]) == parse_cyclic(ALL_ROWS[0][2])
    import json
    assert parse_any(json.dumps(meta_to_json(meta))) == meta


def test_parse_errors_report_byte_offset():
    with pytest.raises(ParseError) as exc:
        parse_cyclic("(4,1;(1,4),(3,4)")
    assert exc.value.byte_offset == len("(4,1;(1,4),(3,4)")
    with pytest.raises(ParseError) as exc:
        parse_meta("((2*4,2,-1),1;[(1,4),(0,1),4])")
    assert exc.value.byte_offset == 3
    assert "degree separator" in str(exc.value)
    with pytest.raises(ParseError):
        parse_cyclic("(4,1;(1,4)) trailing")
    with pytest.raises(ParseError):
        parse_meta("((2·4,2,-1),0;[(0,1),(1,2),2]_0)")


def test_structural_defects_become_parse_errors():
    with pytest.raises(ParseError):
        parse_cyclic("(4,0;(2,4))")  # cone class not a unit
    with pytest.raises(ParseError):
        parse_meta("((2·4,3,-1),1;)")  # r does not divide n either way
