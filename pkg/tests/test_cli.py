"""End-to-end command line checks: output bytes, exit codes, JSON shapes."""

import json

import pytest

from cnskit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_encode_plain(capsys):
    code, out, err = run(capsys, "encode", "--value", "3")
    assert (code, out, err) == (0, "1101\n", "")


def test_encode_json(capsys):
    code, out, _ = run(capsys, "encode", "--value", "3", "--json")
    assert code == 0
    assert json.loads(out) == {
        "poly": "2,2,1", "value": 3, "digits": "1101", "length": 4}


def test_encode_pretty(capsys):
    code, out, _ = run(capsys, "encode", "--value", "3", "--pretty")
    assert (code, out) == (0, "(1101)_p\n")


def test_encode_not_representable(capsys):
    code, out, err = run(capsys, "encode", "--poly", "2,-2,1", "--value", "2")
    assert code == 1
    assert out == ""
    assert "not representable" in err
    assert "(-1, 1)" in err


def test_encode_budget_exhausted(capsys):
    code, _, err = run(capsys, "encode", "--value", "820", "--max-steps", "3")
    assert code == 3
    assert "within 3 steps" in err


def test_encode_rejects_bad_base(capsys):
    code, _, err = run(capsys, "encode", "--poly", "1,1", "--value", "5")
    assert code == 2
    assert "|p(0)| > 1" in err


def test_decode_round_trip(capsys):
    code, out, _ = run(capsys, "decode", "--digits", "1101")
    assert (code, out) == (0, "3\n")


def test_decode_non_constant_residue(capsys):
    code, out, err = run(capsys, "decode", "--digits", "10")
    assert code == 1
    assert out == ""
    assert "non-constant residue" in err


def test_negabase_value_and_digits(capsys):
    code, out, _ = run(capsys, "negabase", "--base", "4", "--value", "820")
    assert (code, out) == (0, "1303030\n")
    code, out, _ = run(capsys, "negabase", "--base", "4", "--digits", "1303030")
    assert (code, out) == (0, "820\n")


def test_negabase_pretty(capsys):
    code, out, _ = run(capsys, "negabase", "--base", "4", "--value", "820",
                       "--pretty")
    assert (code, out) == (0, "(1303030)_-4\n")


def test_convert_json_has_prediction(capsys):
    code, out, _ = run(capsys, "convert", "--value", "820", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["digits"] == "1110100001101000011010000"
    assert payload["predicted_length"] == payload["length"] == 25


def test_scheme_table(capsys):
    code, out, _ = run(capsys, "scheme", "--poly", "2,2,1", "--c", "4",
                       "--d", "4")
    assert code == 0
    assert out == ("base 2,2,1 c 4 d 4\n"
                   "0 = 0000 (length 1)\n"
                   "1 = 0001 (length 1)\n"
                   "2 = 1100 (length 4)\n"
                   "3 = 1101 (length 4)\n")


def test_scheme_violation_exit(capsys):
    code, out, _ = run(capsys, "scheme", "--poly", "8,4,1", "--c", "64",
                       "--d", "4")
    assert code == 1
    assert out == "violation digit 56 needs 7 digits, more than the block width\n"


def test_scheme_violation_json(capsys):
    code, out, _ = run(capsys, "scheme", "--poly", "8,4,1", "--c", "64",
                       "--d", "4", "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["violation"] == {
        "kind": "block_too_long", "digit": 56, "block_length": 7}


def test_lift(capsys):
    code, out, _ = run(capsys, "lift", "--digits", "1101", "--k", "2")
    assert (code, out) == (0, "1010001\n")


def test_lift_json_names_composed_base(capsys):
    code, out, _ = run(capsys, "lift", "--digits", "1101", "--k", "2",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lifted_poly"] == "2,0,2,0,1"
    assert payload["lifted_digits"] == "1010001"


def test_seq_one_value_per_line(capsys):
    code, out, _ = run(capsys, "seq", "--name", "a", "--count", "5")
    assert (code, out) == (0, "0\n1\n4\n5\n8\n")


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "--name", "c", "--count", "5", "--json")
    assert json.loads(out) == {"name": "c", "values": [1, 7, 11, 29, 37]}
    assert code == 0


def test_seq_rejects_unknown_name(capsys):
    code, _, err = run(capsys, "seq", "--name", "z", "--count", "5")
    assert code == 2
    assert "invalid choice" in err


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "iv", "--range", "300")
    assert (code, out) == (0, "PASS boundary_jumps\n")


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "iv,x")
    assert code == 2
    assert "unknown suite 'x'" in err


def test_verify_viii_reports_failure(capsys):
    """The additive sum slack claim is false, so this exits nonzero."""
    code, out, _ = run(capsys, "verify", "--suite", "viii", "--samples", "200")
    assert code == 1
    assert out.startswith("FAIL additive_bounds counterexamples=4")
    assert "[['sum', 1, 3, 1, 4, 9]" in out


def test_verify_report_file(tmp_path, capsys):
    path = tmp_path / "checks.jsonl"
    code, out, _ = run(capsys, "verify", "--suite", "iv,remark",
                       "--range", "300", "--report", str(path))
    assert code == 0
    assert out == "PASS boundary_jumps\nPASS scheme_counterexample\n"
    lines = path.read_text().splitlines()
    records = [json.loads(line) for line in lines]
    assert [r["check_id"] for r in records] == [
        "boundary_jumps", "scheme_counterexample"]
    for record in records:
        assert list(record) == ["check_id", "params", "passed",
                                "counterexamples", "witnesses", "elapsed_ms"]
        assert record["passed"] is True


def test_stdout_is_reproducible(capsys):
    argv = ["verify", "--suite", "vii", "--samples", "300"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("argv", [
    [],
    ["encode"],
    ["negabase", "--base", "1", "--value", "5"],
    ["encode", "--value", "notanint"],
    ["scheme", "--poly", "2,2,1", "--c", "4", "--d", "0"],
    ["scheme", "--poly", "2;2;1", "--c", "4", "--d", "4"],
])
def test_invalid_input_exits_2(capsys, argv):
    code = main(argv)
    capsys.readouterr()
    assert code == 2
