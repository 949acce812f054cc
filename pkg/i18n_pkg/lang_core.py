from __future__ import annotations
from typing import Dict

from .meta import APP_VERSION, RELEASE_MONTH, RELEASE_YEAR, get_month_name

# Import language dictionaries (each in its own file)
from .lang_en import STRINGS as en
from .lang_pt_br import STRINGS as pt_br

# Register languages here
LANGS: Dict[str, Dict[str, str]] = {
    "en": en,
    "pt_br": pt_br,
}

# Human-friendly names for --help
NAMES: Dict[str, str] = {
    "en": "English",
    "pt_br": "Português (Brasil)",
}

def list_languages():
    """Return list of (code, display_name) tuples for the CLI."""
    return [(code, NAMES.get(code, code)) for code in LANGS.keys()]

def get_lang(code: str) -> Dict[str, str]:
    return LANGS.get(code, en)

def missing_keys(code: str) -> list[str]:
    """English keys the table for ``code`` does not define, sorted."""
    table = LANGS.get(code, {})
    return sorted(key for key in en if key not in table)


def _base_context(lang: str) -> Dict[str, str]:
    return {
        "version": APP_VERSION,
        "year": str(RELEASE_YEAR),
        "month_number": str(RELEASE_MONTH),
        "month_name": get_month_name(lang),
    }


def T(lang: str, key: str, **kwargs) -> str:
    # Fallback to English if missing
    table = get_lang(lang)
    s = table.get(key, en.get(key, key))
    try:
        ctx = _base_context(lang)
        ctx.update(kwargs)
        return s.format(**ctx)
    except (KeyError, IndexError, ValueError):
        return s
