from __future__ import annotations

"""Report emitters: JSON records, plain-text tables and DOT graphs."""

import json
import logging
from collections import Counter
from pathlib import Path
from typing import Iterable, Sequence

from i18n_pkg import T

from .catalog import VerificationReport
from .progenitor import DoubleCosetTable, Progenitor

logger = logging.getLogger(__name__)


def reports_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True)


def _cell(value) -> str:
    return "-" if value is None else str(value)


def reports_table(reports: Sequence[VerificationReport], lang: str = "en") -> str:
    headers = [T(lang, key) for key in ("Entry", "Status", "Index", "Order", "Degree", "Seconds")]
    rows = [
        [r.entry, T(lang, r.status), _cell(r.index), _cell(r.order), _cell(r.degree), f"{r.seconds:.2f}"]
        for r in reports
    ]
    widths = [max(len(h), *(len(row[k]) for row in rows)) if rows else len(h) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r, row in zip(reports, rows):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        lines.extend(f"    ! {m}" for m in r.mismatches)
    counts = Counter(r.status for r in reports)
    lines.append(
        T(
            lang,
            "{count} entries: {verified} verified, {overflow} overflow, {mismatch} mismatch, {skipped} skipped",
            count=len(reports),
            **{s: counts.get(s, 0) for s in ("verified", "overflow", "mismatch", "skipped")},
        )
    )
    return "\n".join(lines)


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return '"' + escaped + '"'


def double_coset_dot(table: DoubleCosetTable, progenitor: Progenitor, name: str = "G") -> str:
    """Cayley diagram of the double cosets; node and edge order is fixed."""
    graph = table.graph()
    lines = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for node in sorted(graph.nodes):
        data = graph.nodes[node]
        word = " ".join(progenitor.format_point(i) for i in data["word"]) or "*"
        label = f"{word}\n|N:N^(w)| = {data['size']}"
        lines.append(f"  {node} [label={_quote(label)}];")
    edges = sorted((u, v, len(d["points"])) for u, v, d in graph.edges(data=True))
    for u, v, count in edges:
        lines.append(f"  {u} -> {v} [label={_quote(str(count))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)
    return path


__all__ = ["double_coset_dot", "reports_json", "reports_table", "write_text"]
