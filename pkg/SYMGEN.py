from __future__ import annotations

"""Compatibility launcher for symgen."""

from symgen.app import main


if __name__ == "__main__":
    main()
