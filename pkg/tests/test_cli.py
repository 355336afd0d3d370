import json
import subprocess
import sys

import pytest

from parfus.cli import RunConfig, main, parse_group_spec, parse_subgroup, run


def _run(command, group, **kw):
    return run(RunConfig(command, group, **kw))


def test_info_json():
    code, text = _run("info", "cyclic:3")
    assert code == 0
    data = json.loads(text)
    assert data["dim"] == data["dim_formula"] == 8
    assert data["orbits"] == 3


def test_decompose_markdown_z4():
    code, text = _run("decompose", "cyclic:4", format="md")
    assert code == 0
    assert text.rstrip().endswith("7·M1 ⊕ M2 ⊕ M3 over C")


def test_decompose_klein_json():
    code, text = _run("decompose", "product:2x2")
    assert json.loads(text)["wedderburn"] == [1] * 11 + [3]


def test_simples_csv():
    code, text = _run("simples", "cyclic:3", format="csv")
    rows = text.splitlines()
    assert rows[0] == "module,X,alpha,dim"
    assert len(rows) == 6


def test_fusion_json_c3():
    code, text = _run("fusion", "cyclic:3")
    data = json.loads(text)
    assert len(data["labels"]) == 5
    assert data["N"][3][4] == [0, 0, 1, 0, 0]


@pytest.mark.parametrize("suite", ["foundations", "weakhopf", "blocks", "simples", "fusion"])
def test_verify_suites(suite):
    code, text = _run("verify", "product:2x2", suite=suite)
    assert code == 0
    assert all(c["status"] == "pass" for c in json.loads(text)["checks"])


def test_verify_respects_suite_cap():
    code, text = _run("verify", "cyclic:7", suite="weakhopf")
    assert code == 2
    assert "--cap" in text


def test_christmas_all_subgroups():
    code, text = _run("christmas", "sym:3")
    assert code == 0
    assert len(json.loads(text)) == 6


def test_christmas_one_subgroup_md():
    code, text = _run("christmas", "dihedral:4", subgroup="gens:1", format="md")
    assert code == 0
    assert "| pass |" in text


def test_matryoshka():
    code, text = _run("matryoshka", "product:2x4", subgroup="gens:5")
    assert code == 0
    assert json.loads(text)[0]["status"] == "pass"


def test_matryoshka_usage_errors():
    assert _run("matryoshka", "cyclic:4")[0] == 2
    assert _run("matryoshka", "sym:3", subgroup="gens:1")[0] == 2


def test_bad_specs():
    for spec in ("cyclic:x", "nonsense:3", "product:2", "cyclic:0"):
        code, text = _run("info", spec)
        assert code == 2
        assert text.startswith("error:")


def test_cap_exceeded():
    code, text = _run("info", "sym:4")
    assert code == 2
    assert "--cap" in text


def test_parse_group_spec_variants():
    assert parse_group_spec("product:2x3x2").order == 12
    assert parse_group_spec("dihedral:4").order == 8
    assert parse_group_spec("dicyclic:2").order == 8
    assert not parse_group_spec("sym:3").is_abelian


def test_parse_subgroup():
    G = parse_group_spec("cyclic:6")
    assert parse_subgroup(G, "gens:2").order == 3
    assert parse_subgroup(G, "gens:2,3").order == 6


def test_file_group(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "label": "C3"}))
    code, text = _run("info", f"file:{path}")
    assert code == 0
    assert json.loads(text)["dim"] == 8
    for bad in ({"table": [[0, 1], [1, 1]]}, {"order": 3, "table": [[0]]}, [[0]]):
        path.write_text(json.dumps(bad))
        assert _run("info", f"file:{path}")[0] == 2
    assert _run("info", f"file:{tmp_path / 'missing.json'}")[0] == 2


def test_cache_round_trip(tmp_path):
    cfg = RunConfig("fusion", "cyclic:3", format="md", cache_dir=str(tmp_path))
    first = run(cfg)
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert run(cfg) == first
    # corrupt cache entries are ignored
    next(tmp_path.glob("*.json")).write_text("{")
    assert run(cfg) == first


def test_main_writes_stdout(capsys):
    assert main(["info", "--group", "cyclic:2", "--no-cache"]) == 0
    assert json.loads(capsys.readouterr().out)["order"] == 2


def test_main_errors_to_stderr(capsys):
    assert main(["info", "--group", "sym:9", "--no-cache"]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "parfus.cli", "decompose", "--group", "cyclic:3",
                          "--format", "md", "--no-cache"], capture_output=True, text=True, check=True)
    assert "4·M1 ⊕ M2 over C" in out.stdout
