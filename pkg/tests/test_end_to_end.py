"""Full verification sweeps driven through the command line entry point."""

import json

from kloosterman.cli.config import CHECKS
from kloosterman.cli.main import EXIT_FAILED, EXIT_OK, main


def _run(tmp_path, *args: str) -> tuple[int, dict]:
    target = tmp_path / "report.json"
    code = main(["verify", *args, "--format", "json", "--out", str(target)])
    return code, json.loads(target.read_text())


def test_every_check_passes_on_small_fields(tmp_path):
    code, report = _run(tmp_path, "--sweep", "1..3")
    failures = [row for row in report["rows"] if not row["match"]]
    assert failures == []
    assert code == EXIT_OK
    assert report["schema"] == "1"
    assert report["passed"] is True
    assert {row["check"] for row in report["rows"]} == set(CHECKS)
    assert sorted({row["q"] for row in report["rows"]}) == [2, 4, 8]


def test_shuffled_enumeration_gives_the_same_report(tmp_path):
    checks = "prop-j,lemma-l,pless"
    _, plain = _run(tmp_path, "--sweep", "2,3", "--only", checks)
    _, shuffled = _run(tmp_path, "--sweep", "2,3", "--only", checks, "--seed-order", "11")
    assert plain == shuffled


def test_trace_one_recursion_over_larger_fields(tmp_path):
    code, report = _run(tmp_path, "--sweep", "4..6", "--only", "theorem-a,prop-h", "--hmax", "7")
    assert code == EXIT_OK
    assert [row["h"] for row in report["rows"] if row["check"] == "theorem-a" and row["q"] == 64] == [1, 3, 5, 7]


def test_fault_at_higher_index_is_caught(tmp_path, capsys):
    code, report = _run(tmp_path, "--r", "2", "--only", "theorem-a", "--inject-fault", "3")
    assert code == EXIT_FAILED
    assert report["passed"] is False
    assert "FAILED theorem-a q=4" in capsys.readouterr().err


def test_checks_outside_their_range_are_skipped(tmp_path):
    code, report = _run(tmp_path, "--r", "9", "--only", "prop-h,weights")
    assert code == EXIT_OK
    assert {row["check"] for row in report["rows"]} == {"prop-h"}
