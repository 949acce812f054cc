"""Message tables for symgen output: ``T(lang, key, **kwargs)`` with English fallback."""
from .lang_core import LANGS, NAMES, T, get_lang, list_languages, missing_keys
from .meta import APP_VERSION, RELEASE_MONTH, RELEASE_YEAR, get_month_name

__all__ = [
    "APP_VERSION",
    "LANGS",
    "NAMES",
    "RELEASE_MONTH",
    "RELEASE_YEAR",
    "T",
    "get_lang",
    "get_month_name",
    "list_languages",
    "missing_keys",
]
