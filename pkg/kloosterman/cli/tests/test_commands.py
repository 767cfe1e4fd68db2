import pytest

from kloosterman.cli.commands import cmd_gauss, cmd_kloosterman, cmd_moments, cmd_verify, cmd_weights
from kloosterman.cli.config import RunConfig
from kloosterman.core.exceptions import SizeGuardError


def test_kloosterman_gf4():
    output = cmd_kloosterman(RunConfig(command="kloosterman", r=2))
    assert output.payload["field"] == {"r": 2, "modulus_hex": "0x7"}
    assert output.payload["values"] == [
        {"a": "0x1", "trace": 0, "K": "3"},
        {"a": "0x2", "trace": 1, "K": "-1"},
        {"a": "0x3", "trace": 1, "K": "-1"},
    ]
    assert output.sections[0].rows[0] == ["0x1", "0", "3"]


def test_moments_with_cross_check():
    output = cmd_moments(RunConfig(command="moments", r=2, h_max=2, cross_check=True))
    assert output.payload["MK"] == ["3", "1", "11"]
    assert output.payload["MK_recursion"] == ["3", "1", "11"]
    assert output.payload["T1K"] == ["2", "-2", "2"]
    assert output.sections[0].columns[-1] == "MK (recursion)"


def test_gauss_gf4():
    output = cmd_gauss(RunConfig(command="gauss", r=2))
    assert output.payload["gauss"][:2] == [{"a": "0x1", "o3": "12", "sp2": "12"}, {"a": "0x2", "o3": "4", "sp2": "-4"}]
    assert output.payload["formula"] == {"n": 1, "value": "12", "bruteforce": "12"}


def test_gauss_sp4_binary():
    output = cmd_gauss(RunConfig(command="gauss", q=2, n=2))
    assert output.payload["formula"] == {"n": 2, "value": "-112", "bruteforce": "-112"}


def test_weights_full_gf2():
    output = cmd_weights(RunConfig(command="weights", r=1, full=True))
    assert output.payload["dual"] == {"o3": {"0": 1, "4": 1}, "sp2": {"0": 1, "2": 1}}
    assert output.payload["weights"]["o3"]["counts"] == {"0": "1", "1": "2", "2": "7", "3": "12", "4": "7", "5": "2", "6": "1"}
    assert output.payload["D"] == ["0", "-2", "0", "4", "0", "-2", "0"]
    assert output.sections[-1].columns == ["j", "C_j o3", "C_j sp2", "D_j"]


def test_weights_truncated_single_code():
    output = cmd_weights(RunConfig(command="weights", r=2, code="o3"))
    weights = output.payload["weights"]["o3"]
    assert weights["mode"] == "truncated"
    assert weights["j_max"] == 9
    assert (weights["counts"]["1"], weights["counts"]["2"]) == ("20", "442")
    assert "D" not in output.payload


def test_weights_full_is_guarded():
    with pytest.raises(SizeGuardError):
        cmd_weights(RunConfig(command="weights", r=4, full=True))


def test_verify():
    output = cmd_verify(RunConfig(command="verify", r=2, only="prop-h,prop-c"))
    assert output.ok
    assert output.payload["passed"] is True
    assert "schema" not in output.payload
    assert [row[2] for row in output.sections[0].rows] == ["prop-h", "prop-h", "prop-c"]
