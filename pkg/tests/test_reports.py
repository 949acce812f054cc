from __future__ import annotations

import json
from pathlib import Path

from symgen.catalog import VerificationReport, enumerate_entry, run_entry
from symgen.progenitor import double_coset_analysis
from symgen.reports import double_coset_dot, reports_json, reports_table, write_text

REPORT_KEYS = {
    "entry", "status", "index", "order", "abelianization", "double_cosets", "stats",
    "degree", "control_embeds", "relation", "mismatches", "notes",
}


def test_json_records(catalog) -> None:
    report = run_entry("coxeter-A3", catalog, workers=1)
    (record,) = json.loads(reports_json([report]))
    assert set(record) == REPORT_KEYS
    assert record["index"] == 4
    assert record["order"] == 24
    assert set(record["stats"]) == {"defined", "merged", "seconds"}
    assert all(set(dc) == {"size", "stab_order", "word"} for dc in record["double_cosets"])


def test_table_lists_entries_and_counts() -> None:
    reports = [
        VerificationReport("coxeter-A2", "verified", index=3, order=6, degree=2, seconds=0.01),
        VerificationReport("tits-S4", "overflow", degree=4, seconds=2.5),
        VerificationReport("broken", "mismatch", mismatches=("index: expected 5, measured 4",)),
    ]
    text = reports_table(reports)
    lines = text.splitlines()
    assert lines[0].split() == ["Entry", "Status", "Index", "Order", "Degree", "Seconds"]
    assert "coxeter-A2" in lines[2] and "verified" in lines[2]
    assert "    ! index: expected 5, measured 4" in lines
    assert lines[-1] == "3 entries: 1 verified, 1 overflow, 1 mismatch, 0 skipped"


def test_table_in_portuguese() -> None:
    text = reports_table([VerificationReport("coxeter-A2", "verified")], lang="pt_br")
    assert "Entry" not in text.splitlines()[0]


def test_dot_is_deterministic(catalog) -> None:
    result = enumerate_entry("coxeter-A4", catalog)
    table = double_coset_analysis(result)
    dot = double_coset_dot(table, result.symmetric.progenitor, "coxeter-A4")
    assert dot == double_coset_dot(double_coset_analysis(result), result.symmetric.progenitor, "coxeter-A4")
    assert dot.startswith('digraph "coxeter-A4" {')
    assert '0 [label="*\\n|N:N^(w)| = 1"];' in dot
    assert '0 -> 1 [label="4"];' in dot
    assert dot.rstrip().endswith("}")


def test_write_text_creates_folders(tmp_path: Path) -> None:
    path = write_text(tmp_path / "out" / "a.dot", "digraph {}\n")
    assert path.read_text(encoding="utf-8") == "digraph {}\n"
