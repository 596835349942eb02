"""Command-line interface: subcommands, exit codes, output formats."""

import json

from metacyclic.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main

from goldens import G10_ROWS


VALID_META = G10_ROWS[4][1]  # genus-10 quaternion row with orbit genus 1
VALID_CYCLIC = "(20,0;(1,20),(19,20),((1,2),2))"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_meta_ok(capsys):
    code, out, _ = run(capsys, "validate", "--meta", VALID_META)
    assert code == EXIT_OK
    assert "valid" in out and "genus 10" in out


def test_validate_meta_negative(capsys):
    code, out, _ = run(capsys, "validate", "--meta",
                       "((2·4,2,-1),0;[(1,4),(0,1),4])")
    assert code == EXIT_NEGATIVE
    assert "invalid" in out


def test_validate_cyclic_roundtrip_and_json(capsys):
    code, out, _ = run(capsys, "validate", "--cyclic", VALID_CYCLIC,
                       "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["valid"] is True
    assert payload["genus"] == [10, 1]


def test_validate_positional_dispatch(capsys):
    code, _, _ = run(capsys, "validate", VALID_CYCLIC)
    assert code == EXIT_OK


def test_parse_error_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "--meta", "((2*4,2,-1),1;)")
    assert code == EXIT_ERROR
    assert "error:" in err


def test_derive_text(capsys):
    code, out, _ = run(capsys, "derive", "--meta", G10_ROWS[0][1])
    assert code == EXIT_OK
    assert f"[{G10_ROWS[0][2]};{G10_ROWS[0][3]}]" in out


def test_derive_rejects_invalid(capsys):
    code, _, _ = run(capsys, "derive", "--meta",
                     "((2·4,2,-1),0;[(1,4),(0,1),4])")
    assert code == EXIT_NEGATIVE


def test_classify_text_header(capsys):
    code, out, _ = run(capsys, "classify", "--genus", "2", "--nonsplit")
    assert code == EXIT_OK
    head = out.splitlines()[0]
    assert head.startswith("# classification genus=2 nonsplit=true")
    assert "M(2,4,2,-1)" in out


def test_classify_formats_agree(capsys):
    code, text, _ = run(capsys, "classify", "--genus", "3", "--nonsplit")
    assert code == EXIT_OK
    code, js, _ = run(capsys, "classify", "--genus", "3", "--nonsplit",
                      "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(js)
    assert payload["classes"] == len(text.strip().splitlines()) - 1
    code, csv_out, _ = run(capsys, "classify", "--genus", "3", "--nonsplit",
                           "--format", "csv")
    assert code == EXIT_OK
    assert csv_out.splitlines()[0] == "group,u,n,r,k,representative,DG,DF"
    assert len(csv_out.strip().splitlines()) - 1 == payload["classes"]


def test_classify_worker_count_does_not_change_output(capsys):
    code, a, _ = run(capsys, "classify", "--genus", "6", "--nonsplit",
                     "--workers", "1")
    assert code == EXIT_OK
    code, b, _ = run(capsys, "classify", "--genus", "6", "--nonsplit",
                     "--workers", "2")
    assert code == EXIT_OK
    assert a == b


def test_query_pair_found_and_none(capsys):
    code, out, _ = run(capsys, "query-pair",
                       "--df", "(12,1;(1,6),(5,6))",
                       "--dg", "(4,3;((1,2),2))",
                       "--u", "2", "--r", "6", "--k", "11")
    assert code == EXIT_OK
    assert out.strip() == "((2·12,6,-1),1;[(0,1),(1,6),6])"
    code, out, _ = run(capsys, "query-pair",
                       "--df", VALID_CYCLIC,
                       "--dg", "(4,1;(1,4),(3,4),((1,2),6))",
                       "--u", "2", "--r", "10", "--k", "19")
    assert code == EXIT_NEGATIVE
    assert out.strip() == "none"


def test_dicyclic_exit_codes(capsys):
    code, out, _ = run(capsys, "dicyclic", "--df", VALID_CYCLIC)
    assert code == EXIT_OK and "clause i" in out
    code, out, _ = run(capsys, "dicyclic", "--df",
                       "(20,0;(1,20),(3,20),((1,2),2))")
    assert code == EXIT_NEGATIVE and "no dicyclic extension" in out


def test_lift_text(capsys):
    code, out, _ = run(capsys, "lift", "--meta",
                       "((2·12,6,-1),1;[(0,1),(1,6),6])")
    assert code == EXIT_OK
    assert "genus 21" in out and "M(4,12,12,-1)" in out


def test_lift_split_input_is_usage_error(capsys):
    code, _, err = run(capsys, "lift", "--meta",
                       "((11·10,11,2),0;[(1,2),(1,11),2],[(1,5),(7,11),5],"
                       "[(3,10),(0,1),10])")
    assert code == EXIT_ERROR and "error:" in err


def test_bound_genus_2(capsys):
    code, out, _ = run(capsys, "bound", "--genus", "2")
    assert code == EXIT_OK
    assert "bound 4g = 8" in out
    assert "dicyclic realization (valid)" in out


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "--max-order", "8",
                       "--max-genus", "3", "--max-g0", "1")
    assert code == EXIT_OK
    assert "validators agreed" in out


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.txt"
    code, out, _ = run(capsys, "validate", "--meta", VALID_META,
                       "--output", str(path))
    assert code == EXIT_OK and out == ""
    assert "valid" in path.read_text()


def test_stdin_and_file_input(tmp_path, capsys, monkeypatch):
    src = tmp_path / "ds.txt"
    src.write_text(VALID_META + "\n")
    code, _, _ = run(capsys, "validate", "--meta", str(src))
    assert code == EXIT_OK
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(VALID_META))
    code, _, _ = run(capsys, "validate", "-")
    assert code == EXIT_OK
