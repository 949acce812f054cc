from __future__ import annotations

"""Shared constants for symgen."""

from pathlib import Path
import sys


def _base_dir() -> Path:
    """Return the directory where bundled data lives.

    A frozen build extracts resources to ``_MEIPASS``; otherwise this is the
    package directory itself.
    """

    root = getattr(sys, "_MEIPASS", None)  # type: ignore[attr-defined]
    if root:
        return Path(root) / "symgen"
    return Path(__file__).resolve().parent


APP_TITLE = "symgen"
CATALOG_DIR = _base_dir() / "data" / "catalog"
CATALOG_SUFFIX = ".sgp"

# Coset enumeration
DEFAULT_MAX_COSETS = 5_000_000
DEFAULT_STRATEGY = "felsch"
STRATEGIES = ("felsch", "hlt")
LOG_EVERY_DEFINITIONS = 100_000

# Scale classes, in the order run_all compares them
SCALES = ("desk", "heavy", "definition-only")
DESK_INDEX_LIMIT = 20_000
HEAVY_INDEX_LIMIT = 2_000_000

# Schreier-Sims
RANDOM_SIFT_STREAK = 40
PRODUCT_REPLACEMENT_SIZE = 10
PRODUCT_REPLACEMENT_WARMUP = 50
TRANSVERSAL_CACHE_LIMIT = 20_000_000
ENUMERATE_ELEMENTS_LIMIT = 2_000_000

# relation_search
SEARCH_DEFAULT_CAP = 20_000

# symrep
SYMREP_MAX_INDEX = 20_000

# Environment
ENV_MEMORY_BUDGET = "SYMGEN_MEMORY_BUDGET_MB"
ENV_WORKERS = "SYMGEN_WORKERS"
BYTES_PER_TABLE_ENTRY = 36

# Exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_OVERFLOW = 2
EXIT_USAGE = 3
