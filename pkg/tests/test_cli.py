import json

import pytest

from bunred import GenusContext, SheafType, dumps, reduce, trace_to_dict
from bunred.cli import main


def test_reduce_text(capsys):
    assert main(["reduce", "--genus", "2", "--rank", "2", "--degree", "1",
                 "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "certificate VALID" in out
    assert "--[3,-2]-->" in out
    assert "total affine dimension: 3" in out


def test_reduce_base_case(capsys):
    assert main(["reduce", "--genus", "2", "--rank", "3", "--degree", "0"]) == 0
    out = capsys.readouterr().out
    assert "total affine dimension: 0" in out


def test_reduce_rejects_small_genus(capsys):
    assert main(["reduce", "--genus", "1", "--rank", "2", "--degree", "1"]) == 1
    assert "genus must be >= 2" in capsys.readouterr().err


def test_reduce_json(capsys):
    assert main(["reduce", "-g", "2", "-r", "2", "-d", "1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["valid"] is True
    assert doc["total_affine_dim"] == 3
    assert doc["root"]["rF"] == 3


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["reduce", "--genus", "2"])
    assert exc.value.code == 2


def test_sweep_table(capsys):
    assert main(["sweep", "--genus", "2", "--max-rank", "6",
                 "--degree-range=-6..6"]) == 0
    out = capsys.readouterr().out
    assert "78 cases, 78 valid" in out


def test_sweep_json_matches_closed_form(capsys):
    assert main(["sweep", "--genus", "2..3", "--max-rank", "5",
                 "--degree-range=-4..4", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_valid"] is True
    for row in doc["rows"]:
        g, r, h = row["genus"], row["rank"], row["h"]
        assert row["n"] == (g - 1) * (r * r - h * h)
        assert row["depth"] <= r


def test_sweep_empty_range(capsys):
    assert main(["sweep", "--genus", "2", "--max-rank", "3",
                 "--degree-range=5..4"]) == 0
    assert "0 cases, 0 valid" in capsys.readouterr().out


def test_sweep_emits_traces(tmp_path, capsys):
    target = tmp_path / "traces"
    assert main(["sweep", "--genus", "2", "--max-rank", "2", "--degree-range=0..1",
                 "--traces-dir", str(target)]) == 0
    capsys.readouterr()
    files = sorted(p.name for p in target.iterdir())
    assert files == [
        "trace_g2_r1_d0.json", "trace_g2_r1_d1.json",
        "trace_g2_r2_d0.json", "trace_g2_r2_d1.json",
    ]


def test_verify_valid_and_tampered_file(tmp_path, capsys):
    tr = reduce(GenusContext(2), SheafType(2, 1))
    path = tmp_path / "t.json"
    path.write_text(dumps(tr))
    assert main(["verify", str(path)]) == 0
    out = capsys.readouterr().out
    assert "certificate VALID" in out

    doc = trace_to_dict(tr)
    doc["root"]["dF"] = -1
    path.write_text(json.dumps(doc))
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "certificate INVALID" in out
    assert "euler_equation" in out


def test_verify_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{ not json")
    assert main(["verify", str(path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_chi(capsys):
    assert main(["chi", "-g", "2", "--t1", "3,-2", "--t2", "2,1"]) == 0
    assert "= 1" in capsys.readouterr().out


def test_solve_lemma(capsys):
    assert main(["solve-lemma", "-g", "2", "-r", "2", "-d", "1"]) == 0
    out = capsys.readouterr().out
    assert "rF=3" in out and "dF=-2" in out

    assert main(["solve-lemma", "-g", "2", "-r", "3", "-d", "0"]) == 0
    assert "base case" in capsys.readouterr().out


def test_generic_hom(capsys):
    assert main(["generic-hom", "-g", "2", "--t1", "3,-2", "--t2", "2,1"]) == 0
    out = capsys.readouterr().out
    assert "= 1" in out and "surjective" in out

    assert main(["generic-hom", "-g", "2", "--t1", "1,1", "--t2", "1,0"]) == 0
    assert "not covered" in capsys.readouterr().out


def test_scan_splittings(capsys):
    assert main(["scan-splittings", "-g", "2", "--t1", "3,-2", "--t2", "2,1",
                 "--bound", "20"]) == 0
    assert "0 violations" in capsys.readouterr().out


def test_bad_type_argument(capsys):
    assert main(["chi", "-g", "2", "--t1", "nope", "--t2", "2,1"]) == 1
    assert "error:" in capsys.readouterr().err


def test_out_file(tmp_path, capsys):
    path = tmp_path / "out.txt"
    assert main(["reduce", "-g", "2", "-r", "2", "-d", "1", "--out", str(path)]) == 0
    assert "certificate VALID" in path.read_text()
