"""
CLI tests: exit-code contract, output formats and round-trips.
"""
import argparse
import json

import pytest

from subcount.cli.count import cmd_count
from subcount.config import build_settings
from subcount.models.trace import TraceTree
from subcount.schemas.output_dto import Method, OutputRecord, VerificationReport


@pytest.mark.integration
def test_count_even(run_cli):
    """Test `count` on an even d' instance."""
    code, out, _ = run_cli(["count", "--r", "4", "--d", "8", "--r-prime", "2", "--g", "3"])
    assert code == 0
    assert "d': 2 (even)" in out
    assert "count: 288" in out
    assert "agreement: true" in out


@pytest.mark.integration
def test_count_odd_json_round_trip(run_cli):
    """Test `count --format json` carries the count as a string and parses back."""
    code, out, _ = run_cli(["count", "--r", "4", "--d", "10", "--r-prime", "2", "--g", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == "224"
    assert payload["d_prime"] == 3
    assert payload["parity"] == "odd"
    record = OutputRecord.model_validate_json(out)
    assert record.count == 224
    assert OutputRecord.model_validate_json(record.model_dump_json()) == record


@pytest.mark.integration
def test_count_large_genus_is_exact(run_cli):
    """Test counts beyond 2^53 survive serialization."""
    code, out, _ = run_cli(["count", "--r", "4", "--d", "198", "--r-prime", "2", "--g", "100",
                            "--format", "json"])
    assert code == 0
    assert json.loads(out)["count"] == str((8 ** 100 + 4 ** 100) // 2)


@pytest.mark.integration
def test_count_beyond_decimal_digit_limit(run_cli):
    """Test a count with more than 4300 decimal digits is written and parsed back exactly."""
    code, out, err = run_cli(["count", "--r", "4", "--d", "9998", "--r-prime", "2", "--g", "5000",
                              "--method", "matrix-power", "--format", "json"])
    assert code == 0, err
    expected = (8 ** 5000 + 4 ** 5000) // 2
    payload = json.loads(out)
    assert payload["d_prime"] == 0
    assert len(payload["count"]) > 4300
    assert payload["count"] == str(expected)
    assert OutputRecord.model_validate_json(out).count == expected


@pytest.mark.integration
def test_count_uses_configured_default_methods():
    """Test `count` without --method runs the paths named in the settings."""
    args = argparse.Namespace(r=4, d=8, r_prime=2, g=3, method=None, format="json")
    result = cmd_count(args, build_settings(DEFAULT_METHODS=("eigen-form", "binomial-sum")))
    record = OutputRecord.model_validate_json(result.output)
    assert result.exit_code == 0
    assert record.count == 288
    assert record.method is Method.EIGEN_FORM
    assert record.methods_run == [Method.EIGEN_FORM, Method.BINOMIAL_SUM]


@pytest.mark.integration
@pytest.mark.parametrize("argv, expected", [
    (["count", "--r", "4", "--d", "9", "--r-prime", "2", "--g", "3"], 2),
    (["count", "--r", "4", "--d", "8", "--r-prime", "4", "--g", "3"], 2),
    (["count", "--r", "4", "--d", "8", "--r-prime", "2", "--g", "0"], 2),
    (["count", "--r", "5", "--d", "10", "--r-prime", "2", "--g", "1"], 3),
    (["count", "--r", "4", "--d", "8"], 2),
    (["count", "--r", "4", "--d", "8", "--r-prime", "2", "--g", "3", "--method", "guess"], 2),
])
def test_count_exit_codes(run_cli, argv, expected):
    """Test the stable exit-code contract."""
    code, _, _ = run_cli(argv)
    assert code == expected


@pytest.mark.integration
def test_count_no_valid_dprime_message(run_cli):
    """Test the ill-posed instance reports why on stderr."""
    code, out, err = run_cli(["count", "--r", "4", "--d", "9", "--r-prime", "2", "--g", "3"])
    assert code == 2
    assert out == ""
    assert "d'" in err


@pytest.mark.integration
def test_count_negative_degree(run_cli):
    """Test negative degrees are accepted."""
    code, out, _ = run_cli(["count", "--r", "2", "--d", "-3", "--r-prime", "1", "--g", "2"])
    assert code == 0
    assert "d': -2 (even)" in out
    assert "count: 4" in out


@pytest.mark.integration
def test_table_csv(run_cli):
    """Test `table` CSV output with a header row."""
    code, out, _ = run_cli(["table", "--case", "rank2of4", "--max-g", "2"])
    assert code == 0
    assert out.splitlines() == ["g,a_g,b_g", "1,6,2", "2,40,24"]

    code, out, _ = run_cli(["table", "--case", "line", "--r", "2", "--max-g", "3"])
    assert code == 0
    assert out.splitlines() == ["g,count", "1,2", "2,4", "3,8"]


@pytest.mark.integration
def test_table_line_beyond_decimal_digit_limit(run_cli):
    """Test CSV rows stay exact once r^g passes 4300 decimal digits."""
    code, out, err = run_cli(["table", "--case", "line", "--r", "10", "--max-g", "4400"])
    assert code == 0, err
    lines = out.splitlines()
    assert len(lines) == 4401
    assert lines[-1] == "4400," + "1" + "0" * 4400


@pytest.mark.integration
def test_table_jsonl(run_cli):
    """Test `table --format jsonl` emits one object per genus with string counts."""
    code, out, _ = run_cli(["table", "--case", "rank2of4", "--max-g", "3", "--format", "jsonl"])
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[-1] == {"g": 3, "a_g": "288", "b_g": "224"}


@pytest.mark.integration
@pytest.mark.parametrize("argv, expected", [
    (["table", "--case", "rank2of4", "--max-g", "0"], 2),
    (["table", "--case", "line", "--max-g", "3"], 2),
    (["table", "--case", "line", "--r", "1", "--max-g", "3"], 2),
    (["table", "--case", "rank2of4", "--r", "5", "--max-g", "3"], 3),
])
def test_table_errors(run_cli, argv, expected):
    """Test bad table flags."""
    code, _, _ = run_cli(argv)
    assert code == expected


@pytest.mark.integration
def test_verify_genus_one(run_cli):
    """Test `verify --max-g 1` confirms the base case."""
    code, out, _ = run_cli(["verify", "--max-g", "1"])
    assert code == 0
    assert "base case: a_1=6 b_1=2" in out
    assert out.strip().endswith("PASS")


@pytest.mark.integration
def test_verify_json(run_cli):
    """Test the JSON report parses back."""
    code, out, _ = run_cli(["--workers", "2", "verify", "--max-g", "16", "--format", "json"])
    assert code == 0
    report = VerificationReport.model_validate_json(out)
    assert report.passed
    assert json.loads(out)["passed"] is True


@pytest.mark.integration
def test_verify_fault_injection(run_cli, perturbed_rank_two_system):
    """Test a perturbed transfer matrix makes `verify` exit 1."""
    code, out, _ = run_cli(["verify", "--max-g", "4"])
    assert code == 1
    assert "MISMATCH g=2" in out
    assert out.strip().endswith("FAIL")


@pytest.mark.slow
def test_verify_full(run_cli):
    """Test `verify --max-g 512` passes."""
    code, out, _ = run_cli(["verify", "--max-g", "512"])
    assert code == 0
    assert "recurrence=binomial-sum: 512/512 passed" in out


@pytest.mark.integration
def test_trace_json(run_cli):
    """Test `trace` JSON follows the schema and round-trips."""
    code, out, _ = run_cli(["trace", "--r", "4", "--d", "8", "--r-prime", "2", "--g", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 3
    assert payload["parity"] == "even"
    assert payload["total"] == "288"
    assert [rec["split"] for rec in payload["records"]] == [[0, 2], [1, 1], [1, 2]]
    assert [rec["excluded"] for rec in payload["records"]] == [False, False, True]
    assert payload["records"][2]["reason"]
    for rec in payload["records"]:
        assert set(rec) >= {"split", "elliptic_count", "recursive_count", "product", "excluded", "reason"}
        assert isinstance(rec["product"], str)
    tree = TraceTree.model_validate_json(out)
    assert TraceTree.model_validate_json(tree.model_dump_json()) == tree


@pytest.mark.integration
def test_trace_line_text(run_cli):
    """Test the single-split line trace as text."""
    code, out, _ = run_cli(["trace", "--r", "3", "--d", "5", "--r-prime", "1", "--g", "2", "--format", "text"])
    assert code == 0
    assert "split (0,1): 3 x 3 = 9" in out
    assert "total: 9" in out


@pytest.mark.integration
@pytest.mark.parametrize("argv, expected", [
    (["trace", "--r", "4", "--d", "8", "--r-prime", "2", "--g", "1"], 2),
    (["trace", "--r", "3", "--d", "4", "--r-prime", "1", "--g", "2"], 2),
    (["trace", "--r", "6", "--d", "6", "--r-prime", "3", "--g", "2"], 3),
])
def test_trace_errors(run_cli, argv, expected):
    """Test trace rejects the base genus, ill-posed and unsupported instances."""
    code, _, _ = run_cli(argv)
    assert code == expected


@pytest.mark.integration
def test_missing_command(run_cli):
    """Test a missing subcommand is a flag error."""
    code, _, _ = run_cli([])
    assert code == 2
