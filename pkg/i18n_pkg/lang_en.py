"""English message table. Keys are the English text itself, so a missing
translation falls back to readable output."""
from __future__ import annotations

from typing import Dict

from .meta import BASE_STRINGS

STRINGS: Dict[str, str] = {
    **BASE_STRINGS,
    # report table
    "Entry": "Entry",
    "Status": "Status",
    "Index": "Index",
    "Order": "Order",
    "Degree": "Degree",
    "Seconds": "Seconds",
    "verified": "verified",
    "overflow": "overflow",
    "mismatch": "mismatch",
    "skipped": "skipped",
    "{count} entries: {verified} verified, {overflow} overflow, {mismatch} mismatch, {skipped} skipped": "{count} entries: {verified} verified, {overflow} overflow, {mismatch} mismatch, {skipped} skipped",
    # catalog runner
    "Running {n} catalog entries (scale {scale}).": "Running {n} catalog entries (scale {scale}).",
    "[{a}/{b}] {entry}: {status}": "[{a}/{b}] {entry}: {status}",
    "Cancelled by user.": "Cancelled by user.",
    "Cancelling…": "Cancelling…",
    # enumerate
    "Index: {index}": "Index: {index}",
    "Order: {order}": "Order: {order}",
    "Control group embeds: {embeds}": "Control group embeds: {embeds}",
    "Double cosets: {count}": "Double cosets: {count}",
    "Cosets defined: {defined}, merged: {merged}, in {seconds:.2f}s": "Cosets defined: {defined}, merged: {merged}, in {seconds:.2f}s",
    "Enumeration overflowed at {cap} cosets.": "Enumeration overflowed at {cap} cosets.",
    # suggest / search
    "C_N(Stab_N({points})) has order {order}:": "C_N(Stab_N({points})) has order {order}:",
    "{n} candidate(s), {survivors} survivor(s):": "{n} candidate(s), {survivors} survivor(s):",
    "index {index}": "index {index}",
    "collapsed": "collapsed",
    "over cap": "over cap",
    # golay
    "octads {octads} / dodecads {dodecads} / trios {trios}": "octads {octads} / dodecads {dodecads} / trios {trios}",
    "Steiner system S(5,8,24): {result}": "Steiner system S(5,8,24): {result}",
    "ok": "ok",
    "failed": "failed",
    "{n} dodecads meet dodecad {rep} in 8 points; {orbits} orbit(s) under M22": "{n} dodecads meet dodecad {rep} in 8 points; {orbits} orbit(s) under M22",
    # graph / files
    "Wrote {path}": "Wrote {path}",
    # errors
    "Error: {message}": "Error: {message}",
    "Expected {n} argument(s) for '{op}'.": "Expected {n} argument(s) for '{op}'.",
}
