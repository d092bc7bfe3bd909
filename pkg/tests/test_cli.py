import json
import os
import subprocess
import sys

import pytest

from rectangle_forge.cli import main
from rectangle_forge.core import dumps, loads
from rectangle_forge.presentations import parse_presentations


def cli(*args):
    return main([str(a) for a in args])


def test_enumerate_stats_stdout(capsys):
    assert cli("enumerate", "--rows", 3, "--cols", 4, "--rules", "all", "--stats", "-") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["survivors"] == 0 and doc["n"] == 3 and doc["m"] == 4


def test_enumerate_outputs(tmp_path):
    emit, pres, stats = tmp_path / "e.jsonl", tmp_path / "p.g", tmp_path / "s.json"
    rc = cli("enumerate", "--rows", 4, "--cols", 4, "--rules", "structural", "--emit", emit,
             "--presentations", pres, "--stats", stats, "--validate")
    assert rc == 0
    rects = [loads(l) for l in emit.read_text().splitlines()]
    blocks = parse_presentations(pres.read_text())
    doc = json.loads(stats.read_text())
    assert len(rects) == len(blocks) == doc["survivors"] > 0
    assert doc["invalid_certificates"] == 0


def test_enumerate_deterministic(tmp_path):
    outs = []
    for k, jobs in enumerate((1, 1, 2)):
        emit, pres = tmp_path / f"e{k}", tmp_path / f"p{k}"
        assert cli("enumerate", "--rows", 4, "--cols", 4, "--rules", "structural,closure",
                   "--emit", emit, "--presentations", pres, "--jobs", jobs) == 0
        outs.append((emit.read_bytes(), pres.read_bytes()))
    assert outs[0] == outs[1] == outs[2]


def test_truncated_run_reports(capsys):
    assert cli("enumerate", "--rows", 7, "--cols", 4, "--max-nodes", 300, "--stats", "-") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["truncated"] is True and doc["nodes"] <= 300


def test_canon(tmp_path, capsys):
    src = tmp_path / "in.jsonl"
    src.write_text('{"n":2,"m":2,"edges":[[[1,2],[2,1]],[[1,1],[2,2]]]}\n')
    assert cli("canon", src) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    doc = json.loads(lines[0])
    assert doc["aut_order"] == 4 and doc["n"] == 2


def test_canon_outside_domain_is_runtime_error(tmp_path, capsys):
    src = tmp_path / "in.jsonl"
    src.write_text('{"n":2,"m":2,"edges":[[[1,1],[1,2]],[[2,1],[2,2]]]}\n')
    assert cli("canon", src) == 2
    assert "error" in capsys.readouterr().err


def test_oracle_check(capsys):
    assert cli("oracle-check", "--rows", 2, "--cols", 2, "--filter", "structural") == 0
    assert json.loads(capsys.readouterr().out)["classes"] == 1


def test_export(tmp_path, capsys):
    src = tmp_path / "in.jsonl"
    src.write_text('{"n":2,"m":2,"edges":[[[1,1],[2,2]],[[1,2],[2,1]]]}\n')
    assert cli("export", src, "--core", "1,1") == 0
    (p,) = parse_presentations(capsys.readouterr().out)
    assert len(p.relators) == 4
    assert cli("export", src, "--core", "x") == 1


@pytest.mark.parametrize("args", [
    [],
    ["enumerate", "--rows", "3"],
    ["enumerate", "--rows", "0", "--cols", "4"],
    ["enumerate", "--rows", "3", "--cols", "4", "--rules", "bogus"],
    ["enumerate", "--rows", "3", "--cols", "4", "--jobs", "0"],
    ["oracle-check", "--rows", "2", "--cols", "2", "--filter", "nope"],
    ["frobnicate"],
])
def test_usage_errors(args, capsys):
    assert main(args) == 1
    assert capsys.readouterr().err


def test_runtime_errors(tmp_path):
    assert cli("oracle-check", "--rows", 3, "--cols", 3) == 2
    assert cli("canon", tmp_path / "missing.jsonl") == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{not json\n")
    assert cli("canon", bad) == 2


def test_jobs_env_default(monkeypatch, capsys):
    monkeypatch.setenv("RECTANGLE_FORGE_JOBS", "nope")
    assert cli("enumerate", "--rows", 2, "--cols", 2) == 1
    monkeypatch.setenv("RECTANGLE_FORGE_JOBS", "2")
    assert cli("enumerate", "--rows", 2, "--cols", 2, "--stats", "-") == 0


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "rectangle_forge.cli", "oracle-check", "--rows", "2", "--cols", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["total"] == 15
