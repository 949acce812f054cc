"""Core package for symgen, a workbench for symmetric generation of groups."""
from __future__ import annotations

from .dependencies import ensure_dependencies

ensure_dependencies()

__all__ = ["ensure_dependencies"]
