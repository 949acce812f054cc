from __future__ import annotations

from i18n_pkg import APP_VERSION, LANGS, NAMES, T, get_month_name, list_languages, missing_keys


def test_languages() -> None:
    assert [code for code, _ in list_languages()] == ["en", "pt_br"]


def test_every_language_knows_every_english_key() -> None:
    for code in LANGS:
        assert missing_keys(code) == [], code
    assert "Entry" in missing_keys("xx")
    assert set(NAMES) == set(LANGS)


def test_lookup_and_fallback() -> None:
    assert T("pt_br", "Entry") == "Entrada"
    assert T("xx", "Entry") == "Entry"
    assert T("en", "no such key") == "no such key"
    assert T("en", "Index: {index}", index=12) == "Index: 12"


def test_base_context() -> None:
    assert APP_VERSION in T("en", "Version")
    assert get_month_name("en") in T("en", "Version")
    assert get_month_name("pt_br") != get_month_name("en")


def test_missing_placeholders_leave_the_template() -> None:
    assert T("en", "Index: {index}") == "Index: {index}"
