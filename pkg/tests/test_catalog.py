from __future__ import annotations

import random
import shutil
from pathlib import Path

import pytest

from symgen.catalog import (
    VerificationReport,
    build_control,
    build_entry,
    enumerate_entry,
    exit_status,
    load_catalog,
    run_all,
    run_entry,
    search_entry,
    select_entries,
    suggest,
)
from symgen.constants import CATALOG_DIR
from symgen.cosets import EnumerationLimits, todd_coxeter
from symgen.errors import CatalogError
from symgen.presentations import Presentation
from symgen.progenitor import lemma_violations

DESK_COXETER = [
    "coxeter-A2", "coxeter-A3", "coxeter-A4", "coxeter-A5", "coxeter-A6",
    "coxeter-D4", "coxeter-D5", "coxeter-D6", "coxeter-E6", "coxeter-E7",
]


def test_catalog_loads_in_id_order(catalog) -> None:
    assert list(catalog) == sorted(catalog)
    assert set(DESK_COXETER) <= set(catalog)
    assert catalog["fi23-Sp82"].expects_overflow
    assert catalog["fi23-Sp82"].expected_int("index") == 86316516
    assert "3592512" in catalog["fi23-Sp82"].config.note
    assert catalog["coxeter-A4"].expected_int("index") == 5


def test_select_entries(catalog) -> None:
    desk = {e.id for e in select_entries(catalog, "desk")}
    assert "coxeter-E6" in desk
    assert "tits-S4" not in desk
    assert "ru-L32" not in desk
    assert "tits-S4" in {e.id for e in select_entries(catalog, "heavy")}
    assert len(select_entries(catalog, "definition-only")) == len(catalog)
    assert [e.id for e in select_entries(catalog, "desk", ["coxeter-A2"])] == ["coxeter-A2"]
    with pytest.raises(ValueError):
        select_entries(catalog, "enormous")
    with pytest.raises(CatalogError):
        select_entries(catalog, "desk", ["no-such-entry"])


@pytest.mark.parametrize("entry_id", DESK_COXETER)
def test_coxeter_entries_verify(catalog, entry_id: str) -> None:
    report = run_entry(entry_id, catalog, workers=1)
    assert report.status == "verified", report.mismatches
    assert report.index == catalog[entry_id].expected_int("index")
    assert report.control_embeds
    assert sum(dc.size for dc in report.double_cosets) == report.index


def test_a4_report_details(catalog) -> None:
    report = run_entry("coxeter-A4", catalog, workers=1)
    assert report.order == 120
    assert report.abelianization == 2
    assert [dc.size for dc in report.double_cosets] == [1, 4]
    built = build_entry("coxeter-A4", catalog, workers=1)
    assert report.relation == built.symmetric.relations[0].format(built.control.progenitor)
    assert report.relation.startswith("(1 2) * t[")


@pytest.mark.parametrize("entry_id, degree", [("m22-A7", 42), ("ru-L32", 7)])
def test_definition_only_entries_are_skipped(catalog, entry_id: str, degree: int) -> None:
    report = run_entry(entry_id, catalog)
    assert report.status == "skipped"
    assert report.degree == degree
    assert report.index is None


def test_overflow_is_a_status(catalog) -> None:
    report = run_entry("coxeter-E7", catalog, EnumerationLimits(max_cosets=100), workers=1)
    assert report.status == "overflow"
    assert report.stats is not None


def test_exit_status() -> None:
    ok = VerificationReport("a", "verified")
    skipped = VerificationReport("b", "skipped")
    over = VerificationReport("c", "overflow")
    bad = VerificationReport("d", "mismatch")
    assert exit_status([ok, skipped]) == "verified"
    assert exit_status([ok, over]) == "overflow"
    assert exit_status([over, bad, ok]) == "mismatch"
    assert exit_status([]) == "verified"


def test_frozen_mismatch_is_reported(tmp_path: Path) -> None:
    text = (CATALOG_DIR / "coxeter-A3.sgp").read_text(encoding="utf-8")
    (tmp_path / "coxeter-A3.sgp").write_text(text.replace("index = 4", "index = 5"), encoding="utf-8")
    report = run_entry("coxeter-A3", load_catalog(tmp_path), workers=1)
    assert report.status == "mismatch"
    assert any("index" in m for m in report.mismatches)


def test_duplicate_ids_are_rejected(tmp_path: Path) -> None:
    shutil.copy(CATALOG_DIR / "coxeter-A2.sgp", tmp_path / "one.sgp")
    shutil.copy(CATALOG_DIR / "coxeter-A2.sgp", tmp_path / "two.sgp")
    with pytest.raises(CatalogError):
        load_catalog(tmp_path)


def test_run_all_orders_and_stops(tmp_path: Path) -> None:
    for name in ("coxeter-A3", "coxeter-A2", "ru-L32"):
        shutil.copy(CATALOG_DIR / f"{name}.sgp", tmp_path / f"{name}.sgp")
    seen: list[str] = []
    reports = run_all("definition-only", tmp_path, workers=1, progress=lambda r: seen.append(r.entry))
    assert [r.entry for r in reports] == ["coxeter-A2", "coxeter-A3", "ru-L32"]
    assert [r.status for r in reports] == ["verified", "verified", "skipped"]
    assert sorted(seen) == [r.entry for r in reports]
    assert run_all("desk", tmp_path, workers=1, should_stop=lambda: True) == []


def test_suggest_gives_the_lemma_centralizer(catalog) -> None:
    built, centralizer = suggest("coxeter-A4", ["1", "2"], catalog)
    assert built.progenitor.n == 4
    assert centralizer.order() == 4


def test_search_entry(catalog) -> None:
    built, template, report = search_entry(
        "coxeter-A4", "(t[1] * pi)^3", order=2, source="order", cap=2000, catalog=catalog, workers=1
    )
    assert template.points() == (0,)
    assert len(report.candidates) == 3
    assert any(o.index == 5 for o in report.survivors)


@pytest.mark.parametrize(
    "entry_id",
    [
        *DESK_COXETER[:-1],
        pytest.param("coxeter-E7", marks=pytest.mark.slow),
        pytest.param("sp62-S7", marks=pytest.mark.slow),
        pytest.param("mcl2-M22", marks=pytest.mark.slow),
    ],
)
def test_index_does_not_depend_on_relator_order(catalog, entry_id: str) -> None:
    built = build_entry(entry_id, catalog, workers=1)
    presentation, subgroup = built.symmetric.expand()
    expected = catalog[entry_id].expected_int("index")
    rng = random.Random(entry_id)
    for _ in range(10):
        relators = list(presentation.relators)
        rng.shuffle(relators)
        shuffled = Presentation(presentation.generators, tuple(relators))
        assert todd_coxeter(shuffled, subgroup, EnumerationLimits(strategy="hlt")).index == expected


@pytest.mark.parametrize(
    "entry_id",
    [
        "coxeter-E6",
        pytest.param("sp62-S7", marks=pytest.mark.slow),
        pytest.param("mcl2-M22", marks=pytest.mark.slow),
    ],
)
def test_two_generator_words_in_n_centralize_the_pair_stabilizer(catalog, entry_id: str) -> None:
    result = enumerate_entry(entry_id, catalog, workers=1)
    orbit = result.symmetric.progenitor.orbits[0]
    assert lemma_violations(result, orbit[0], orbit[1]) == []
    report = run_entry(entry_id, catalog, workers=1)
    assert report.status == "verified", report.mismatches


def test_lemma_failures_are_mismatches(catalog, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr("symgen.catalog.lemma_violations", lambda result, i, j: [(i, j, i)])
    report = run_entry("coxeter-A3", catalog, workers=1)
    assert report.status == "mismatch"
    assert any("C_N(Stab_N(1, 2))" in m and "e.g. 1 2 1" in m for m in report.mismatches)


@pytest.mark.slow
def test_mcl2_abelianization(catalog) -> None:
    assert catalog["mcl2-M22"].expected_int("abelianization") == 2
    report = run_entry("mcl2-M22", catalog, workers=1)
    assert report.abelianization == 2
    assert report.status == "verified", report.mismatches


@pytest.mark.parametrize(
    "entry_id",
    [*DESK_COXETER, "coxeter-E8", "sp62-S7", "j32-L2_16_4", "mcl2-M22", "m22-A7", "ru-L42"],
)
def test_control_groups_are_faithful_and_satisfy_orbit_stabilizer(catalog, entry_id: str) -> None:
    built = build_control(catalog[entry_id].config, catalog)
    assert built.action.is_faithful()
    control = built.progenitor.control
    for orbit in control.orbits():
        assert len(orbit) * control.point_stabilizer([orbit[0]]).order() == control.order()

@pytest.mark.slow
def test_e8_entry(catalog) -> None:
    assert run_entry("coxeter-E8", catalog, workers=1).status == "verified"


@pytest.mark.slow
@pytest.mark.parametrize("entry_id", ["sp62-S7", "j32-L2_16_4", "mcl2-M22"])
def test_searched_and_sporadic_entries(catalog, entry_id: str) -> None:
    built = build_entry(entry_id, catalog, workers=1)
    if catalog[entry_id].config.search is not None:
        assert built.chosen is not None
    report = run_entry(entry_id, catalog, workers=1)
    assert report.status == "verified", report.mismatches


@pytest.mark.heavy
@pytest.mark.parametrize("entry_id", ["sp82-S10", "tits-S4"])
def test_heavy_entries(catalog, entry_id: str) -> None:
    report = run_entry(entry_id, catalog)
    assert report.status == "verified", report.mismatches
