from __future__ import annotations

import json
from pathlib import Path

import pytest

from symgen.app import run

JOB = """\
title: S4 over S3
control: S3
action: natural
relations:
  (t[1] * (1 2))^3
expect:
  index = 4
output:
  json = {json}
  dot = {dot}
"""


def test_version_and_usage_errors(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["--version"]) == 0
    assert "1.0.0" in capsys.readouterr().out
    assert run(["bogus"]) == 3
    assert run(["golay", "dodecads", "24"]) == 3
    assert "Error:" in capsys.readouterr().err


def test_golay_counts(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["golay", "counts"]) == 0
    out = capsys.readouterr().out
    assert "octads 759 / dodecads 2576 / trios 3795" in out
    assert run(["--json", "golay", "counts"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"octads": 759, "dodecads": 2576, "trios": 3795, "steiner": True}


def test_golay_dump_and_trios(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["golay", "dump"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 4096
    assert run(["golay", "trios"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3795
    assert all(line.count("|") == 2 for line in lines)


def test_golay_dodecads(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["--json", "golay", "dodecads", "24", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["degree"] == 672
    assert payload["group_order"] == 443520
    assert payload["transitive"] is True


def test_verify(capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["--workers", "1", "verify", "--entry", "coxeter-A2", "--entry", "coxeter-A3"])
    captured = capsys.readouterr()
    assert code == 0
    assert "2 entries: 2 verified" in captured.out
    assert "[2/2]" in captured.err
    assert run(["--workers", "1", "--json", "verify", "--entry", "coxeter-A2"]) == 0
    (record,) = json.loads(capsys.readouterr().out)
    assert record["index"] == 3


def test_verify_unknown_entry(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["verify", "--entry", "no-such-entry"]) == 3
    assert "no-such-entry" in capsys.readouterr().err


def test_enumerate_job_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    job = tmp_path / "s4.sgp"
    out_json, out_dot = tmp_path / "out" / "s4.json", tmp_path / "out" / "s4.dot"
    job.write_text(JOB.format(json=out_json, dot=out_dot), encoding="utf-8")
    assert run(["--workers", "1", "enumerate", str(job)]) == 0
    out = capsys.readouterr().out
    assert "Index: 4" in out
    assert "Order: 24" in out
    (record,) = json.loads(out_json.read_text(encoding="utf-8"))
    assert record["entry"] == "s4"
    assert out_dot.read_text(encoding="utf-8").startswith('digraph "s4"')


def test_enumerate_overflow(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    job = tmp_path / "free.sgp"
    job.write_text("control: S3\naction: natural\n", encoding="utf-8")
    assert run(["--max-cosets", "50", "enumerate", str(job)]) == 2
    assert "50" in capsys.readouterr().out


def test_enumerate_bad_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    job = tmp_path / "bad.sgp"
    job.write_text("control: S3\nrelations:\n  (t[1)^3\n", encoding="utf-8")
    assert run(["enumerate", str(job)]) == 3
    assert "line 3, column" in capsys.readouterr().err


def test_graph(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["graph", "--entry", "coxeter-A4"]) == 0
    assert capsys.readouterr().out.startswith('digraph "coxeter-A4"')
    target = tmp_path / "a4.dot"
    assert run(["graph", "--entry", "coxeter-A4", "--dot", str(target)]) == 0
    assert target.exists()


def test_suggest_and_search(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["suggest", "--entry", "coxeter-A4", "--points", "1,2"]) == 0
    assert "has order 4" in capsys.readouterr().out
    args = ["--workers", "1", "search", "--entry", "coxeter-A4", "--template", "(t[1] * pi)^3"]
    assert run(args + ["--source", "order", "--order", "2", "--cap", "2000"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("3 candidate(s)")
    assert "index 5" in out


def test_element_arithmetic(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["elt", "--entry", "coxeter-A4", "canon", "pi = (1 2) ; w = t2 t1 t2"]) == 0
    assert capsys.readouterr().out.strip() == "pi = () ; w = 1"
    assert run(["--json", "elt", "--entry", "coxeter-A4", "rand", "--count", "3", "--seed", "4"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 3
    assert run(["elt", "--entry", "coxeter-A4", "mul", "pi = () ; w = t1"]) == 3
