from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from symgen.constants import CATALOG_DIR
from symgen.runner import CatalogRunner, Hook


@pytest.fixture
def small_catalog(tmp_path: Path) -> Path:
    for name in ("coxeter-A2", "coxeter-A3"):
        shutil.copy(CATALOG_DIR / f"{name}.sgp", tmp_path / f"{name}.sgp")
    return tmp_path


def _collect(runner: CatalogRunner) -> dict[str, list]:
    events: dict[str, list] = {"progress": [], "log": [], "done": [], "error": [], "cancelled": []}
    runner.progress.connect(lambda a, b: events["progress"].append((a, b)))
    for name in ("log", "done", "error", "cancelled"):
        getattr(runner, name).connect(events[name].append)
    return events


def test_hook_calls_slots_in_order() -> None:
    hook = Hook()
    calls: list[tuple[str, int]] = []
    hook.connect(lambda x: calls.append(("first", x)))
    hook.connect(lambda x: calls.append(("second", x)))
    hook.emit(7)
    assert calls == [("first", 7), ("second", 7)]


def test_runner_reports_progress_and_results(small_catalog: Path) -> None:
    runner = CatalogRunner(directory=small_catalog, workers=1)
    events = _collect(runner)
    runner.start()
    runner.join()
    (reports,) = events["done"]
    assert [r.entry for r in reports] == ["coxeter-A2", "coxeter-A3"]
    assert events["progress"] == [(1, 2), (2, 2)]
    assert events["log"][0] == "Running 2 catalog entries (scale desk)."
    assert events["log"][1].startswith("[1/2] coxeter-A2:")
    assert not events["error"] and not events["cancelled"]


def test_cancel_before_start(small_catalog: Path) -> None:
    runner = CatalogRunner(directory=small_catalog, workers=1)
    events = _collect(runner)
    runner.request_cancel()
    runner.request_cancel()
    runner.start()
    runner.join()
    assert events["cancelled"] == ["Cancelled by user."]
    assert events["log"].count("Cancelling…") == 1
    assert not events["done"]


def test_errors_are_reported(small_catalog: Path) -> None:
    runner = CatalogRunner(scale="enormous", directory=small_catalog)
    events = _collect(runner)
    runner.start()
    runner.join()
    assert len(events["error"]) == 1
    assert "enormous" in events["error"][0]
    assert not events["done"]
