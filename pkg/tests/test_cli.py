import json

import pytest

from bcfusion.cli import format_weight, main, parse_weight
from bcfusion.errors import WeightParseError
from bcfusion.fusion import alcove_enumerate


def test_parse_weight():
    assert parse_weight("3/2,1/2").doubled == (3, 1)
    assert parse_weight("1,0").doubled == (2, 0)
    assert parse_weight("-1,2").doubled == (-2, 4)


def test_parse_weight_errors():
    with pytest.raises(WeightParseError):
        parse_weight("1,1/2")  # mixed parity
    with pytest.raises(WeightParseError):
        parse_weight("1/3,1/3")
    with pytest.raises(WeightParseError):
        parse_weight("a,b")
    with pytest.raises(WeightParseError):
        parse_weight("")


def test_format_roundtrip_on_alcove(params29):
    for lab in alcove_enumerate(params29):
        assert parse_weight(format_weight(lab)) == lab


def test_cli_alcove(capsys):
    assert main(["alcove", "--rank", "2", "--ell", "9"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["labels"]) == 12
    assert main(["alcove", "--rank", "2", "--ell", "9", "--format", "table"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 12 and "5/2,5/2" in lines


def test_cli_fuse(capsys):
    assert main(["fuse", "--rank", "2", "--ell", "9", "--lhs", "1,0", "--rhs", "1,0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"0,0": 1, "1,1": 1, "2,0": 1}


def test_cli_fuse_rejects_outside_alcove(capsys):
    assert main(["fuse", "--rank", "2", "--ell", "9", "--lhs", "4,0", "--rhs", "1,0"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_matrix(capsys):
    assert main(["matrix", "--rank", "2", "--ell", "9", "--lhs", "0,0",
                 "--format", "table"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 12  # identity matrix rows


def test_cli_full_table_is_byte_stable(capsys):
    assert main(["matrix", "--rank", "2", "--ell", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["matrix", "--rank", "2", "--ell", "9"]) == 0
    assert capsys.readouterr().out == first
    payload = json.loads(first)
    assert set(payload) == {"family", "rank", "ell", "labels", "N"}
    assert len(payload["N"]) == 12


def test_cli_chars(capsys):
    assert main(["chars", "--rank", "2", "--ell", "9", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("label,Dim,")
    assert len(lines) == 13
    assert main(["chars", "--rank", "2", "--ell", "9", "--z", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["z"] == 2 and len(payload["Dim"]) == 12


def test_cli_chars_bad_z():
    with pytest.raises(SystemExit) as err:
        main(["chars", "--rank", "2", "--ell", "9", "--z", "3"])
    assert err.value.code == 2


def test_cli_usage_error_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["fuse", "--rank", "2", "--ell", "9"])  # missing --lhs/--rhs
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 2


def test_cli_verify_single_cell(capsys):
    assert main(["verify", "--rank", "2", "--ell", "9"]) == 0
    out = capsys.readouterr().out
    assert "checks pass" in out and "FAIL" not in out


def test_cli_verify_json(capsys):
    assert main(["verify", "--rank", "2", "--ell", "9", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["rank"] == 2 and all(c["ok"] for c in payload[0]["checks"])


def test_default_verify_grid():
    from bcfusion.verify import DEFAULT_GRID

    assert DEFAULT_GRID == ((2, 9), (2, 11), (2, 13), (3, 13), (3, 15), (4, 17))


def test_cli_unitarity_nonconclusive_cell_exits_zero(capsys):
    assert main(["unitarity", "--rank", "2", "--ell", "9"]) == 0
    assert "NOT conclusive" in capsys.readouterr().out


def test_cli_duality(capsys):
    assert main(["duality", "--rank", "2", "--ell", "9"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["homeq_ok"] and payload["gamma_size"] == 12


def test_cli_unitarity(capsys, tmp_path):
    out = tmp_path / "audit.json"
    assert main(["unitarity", "--rank", "2", "--ell", "11", "--format", "json",
                 "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload[0]["k"] == 2 and payload[0]["all_witnessed"]
    assert main(["unitarity", "--rank", "2", "--ell", "11"]) == 0
    assert "witness" in capsys.readouterr().out


def test_cli_output_file(tmp_path, capsys):
    path = tmp_path / "alcove.json"
    assert main(["alcove", "--rank", "2", "--ell", "9", "--output", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert len(json.loads(path.read_text())["labels"]) == 12
