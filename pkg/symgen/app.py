from __future__ import annotations

"""Application entry point."""

import argparse
import json
import logging
import random
import sys
from dataclasses import replace
from pathlib import Path
from typing import Callable, Sequence

from i18n_pkg import T, list_languages

from .catalog import (
    CatalogEntry,
    VerificationReport,
    enumerate_entry,
    exit_status,
    load_catalog,
    run_entry,
    search_entry,
    suggest,
)
from .config import load_config
from .constants import (
    DEFAULT_MAX_COSETS,
    DEFAULT_STRATEGY,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_OVERFLOW,
    EXIT_USAGE,
    SCALES,
    SEARCH_DEFAULT_CAP,
    STRATEGIES,
)
from .cosets import EnumerationLimits
from .errors import EnumerationOverflow, SymgenError
from .golay import bitstring, build_golay, dodecad_pairs_meeting_in_8, dodecads_672, mask_of, points_of, steiner_check, trios
from .progenitor import double_coset_analysis
from .reports import double_coset_dot, reports_json, reports_table, write_text
from .runner import CatalogRunner
from .symrep import SymContext

logger = logging.getLogger(__name__)

_STATUS_EXIT = {"verified": EXIT_OK, "skipped": EXIT_OK, "mismatch": EXIT_MISMATCH, "overflow": EXIT_OVERFLOW}
_ELT_ARITY = {"mul": 2, "inv": 1, "canon": 1, "rand": 0}


class UsageError(SymgenError):
    pass


def _limits(args: argparse.Namespace) -> EnumerationLimits | None:
    if args.max_cosets is None and args.strategy is None:
        return None
    return EnumerationLimits(
        max_cosets=args.max_cosets or DEFAULT_MAX_COSETS,
        strategy=args.strategy or DEFAULT_STRATEGY,
    )


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _points_text(mask: int) -> str:
    return " ".join(str(p + 1) for p in points_of(mask))


# -- commands ------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    runner = CatalogRunner(
        scale=args.scale,
        ids=args.entry,
        directory=args.catalog,
        limits=_limits(args),
        workers=args.workers,
        force=args.force,
        show_progress=args.progress,
        lang=args.lang,
    )
    outcome: dict[str, object] = {}
    runner.log.connect(lambda text: print(text, file=sys.stderr))
    runner.done.connect(lambda reports: outcome.setdefault("reports", reports))
    runner.error.connect(lambda text: outcome.setdefault("error", text))
    runner.cancelled.connect(lambda text: outcome.setdefault("cancelled", text))
    runner.start()
    try:
        while runner.is_alive():
            runner.join(0.2)
    except KeyboardInterrupt:
        runner.request_cancel()
        runner.join()
    if "error" in outcome:
        raise UsageError(str(outcome["error"]))
    if "cancelled" in outcome:
        print(outcome["cancelled"], file=sys.stderr)
        return EXIT_MISMATCH
    reports: list[VerificationReport] = outcome.get("reports", [])  # type: ignore[assignment]
    print(reports_json(reports) if args.json else reports_table(reports, args.lang))
    return _STATUS_EXIT[exit_status(reports)]


def cmd_enumerate(args: argparse.Namespace) -> int:
    path = Path(args.file)
    config = load_config(path)
    config = replace(config, entry=config.entry or path.stem)
    entry = CatalogEntry(config, path)
    entry.validate()
    catalog = {**load_catalog(args.catalog), entry.id: entry}
    limits = _limits(args)
    report = run_entry(entry, catalog, limits, force=True, workers=args.workers)
    outputs = dict(config.output)
    if "json" in outputs:
        write_text(outputs["json"], reports_json([report]))
    if "dot" in outputs and report.status != "overflow":
        result = enumerate_entry(entry, catalog, limits, args.workers)
        write_text(outputs["dot"], double_coset_dot(double_coset_analysis(result), result.symmetric.progenitor, entry.id))
    if args.json:
        _print_json(report.as_dict())
        return _STATUS_EXIT[report.status]
    lang = args.lang
    if report.status == "overflow":
        cap = limits.max_cosets if limits else int(config.limit("max_cosets") or DEFAULT_MAX_COSETS)
        print(T(lang, "Enumeration overflowed at {cap} cosets.", cap=cap))
    else:
        print(T(lang, "Index: {index}", index=report.index))
        print(T(lang, "Order: {order}", order=report.order))
        print(T(lang, "Control group embeds: {embeds}", embeds=report.control_embeds))
        print(T(lang, "Double cosets: {count}", count=len(report.double_cosets)))
    if report.stats is not None:
        print(
            T(
                lang,
                "Cosets defined: {defined}, merged: {merged}, in {seconds:.2f}s",
                defined=report.stats.defined,
                merged=report.stats.merged,
                seconds=report.stats.seconds,
            )
        )
    for line in report.mismatches:
        print(f"! {line}")
    return _STATUS_EXIT[report.status]


def cmd_suggest(args: argparse.Namespace) -> int:
    points = [p.strip() for p in args.points.split(",") if p.strip()]
    built, centralizer = suggest(args.entry, points)
    action = built.action
    elements = [action.lift(g) for g in centralizer.elements()]
    if args.json:
        _print_json({"points": points, "order": centralizer.order(), "elements": [str(g) for g in elements]})
        return EXIT_OK
    print(T(args.lang, "C_N(Stab_N({points})) has order {order}:", points=", ".join(points), order=centralizer.order()))
    for g in elements:
        print(f"  {g}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    built, template, report = search_entry(
        args.entry,
        args.template,
        order=args.order,
        source=args.source,
        cap=args.cap,
        workers=args.workers,
    )
    progenitor = built.progenitor
    rows = []
    for outcome in report.outcomes:
        rows.append(
            {
                "pi": str(built.action.lift(outcome.pi)),
                "relation": template.instantiate(outcome.pi).format(progenitor),
                "index": outcome.index,
                "survivor": outcome in report.survivors,
            }
        )
    if args.json:
        _print_json({"cap": report.cap, "candidates": rows})
        return EXIT_OK
    lang = args.lang
    print(T(lang, "{n} candidate(s), {survivors} survivor(s):", n=len(rows), survivors=len(report.survivors)))
    for row in rows:
        if row["index"] is None:
            status = T(lang, "over cap")
        elif row["index"] == 1:
            status = T(lang, "collapsed")
        else:
            status = T(lang, "index {index}", index=row["index"])
        mark = "*" if row["survivor"] else " "
        print(f"{mark} {row['relation']}  ->  {status}")
    return EXIT_OK


def cmd_golay(args: argparse.Namespace) -> int:
    code = build_golay(args.construction)
    lang = args.lang
    what = args.what
    if what == "counts":
        counts = {"octads": len(code.octads()), "dodecads": len(code.dodecads()), "trios": len(trios(code))}
        steiner = steiner_check(code)
        if args.json:
            _print_json({**counts, "steiner": steiner})
        else:
            print(T(lang, "octads {octads} / dodecads {dodecads} / trios {trios}", **counts))
            print(T(lang, "Steiner system S(5,8,24): {result}", result=T(lang, "ok" if steiner else "failed")))
        return EXIT_OK if steiner else EXIT_MISMATCH
    if what == "dump":
        sys.stdout.write("\n".join(code.dump_lines()) + "\n")
        return EXIT_OK
    if what == "trios":
        for trio in trios(code):
            print(" | ".join(_points_text(m) for m in trio))
        return EXIT_OK
    if len(args.points) != 2:
        raise UsageError(T(lang, "Expected {n} argument(s) for '{op}'.", n=2, op="dodecads"))
    a, b = (int(p) - 1 for p in args.points)
    family = dodecads_672(code, a, b)
    pairs = dodecad_pairs_meeting_in_8(family)
    rep = bitstring(mask_of(family.labels[pairs.representative]))
    if args.json:
        _print_json(
            {
                "degree": family.degree,
                "group_order": family.group.order(),
                "transitive": family.group.is_transitive(),
                "representative": rep,
                "partners": len(pairs.partners),
                "partner_orbits": [len(o) for o in pairs.orbits],
            }
        )
        return EXIT_OK
    print(f"{family.degree} dodecads, |M22| = {family.group.order()}, transitive: {family.group.is_transitive()}")
    print(T(lang, "{n} dodecads meet dodecad {rep} in 8 points; {orbits} orbit(s) under M22",
            n=len(pairs.partners), rep=rep, orbits=len(pairs.orbits)))
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    result = enumerate_entry(args.entry, None, _limits(args), args.workers)
    table = double_coset_analysis(result)
    text = double_coset_dot(table, result.symmetric.progenitor, args.entry)
    if args.dot:
        write_text(args.dot, text)
        print(T(args.lang, "Wrote {path}", path=args.dot), file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_elt(args: argparse.Namespace) -> int:
    arity = _ELT_ARITY[args.op]
    if len(args.args) != arity:
        raise UsageError(T(args.lang, "Expected {n} argument(s) for '{op}'.", n=arity, op=args.op))
    ctx = SymContext(enumerate_entry(args.entry, None, _limits(args), args.workers))
    elements = [ctx.parse(text) for text in args.args]
    if args.op == "mul":
        out = [ctx.multiply(*elements)]
    elif args.op == "inv":
        out = [ctx.invert(elements[0])]
    elif args.op == "canon":
        out = [ctx.canonicalize(elements[0])]
    else:
        rng = random.Random(args.seed)
        out = [ctx.random_element(rng) for _ in range(args.count)]
    texts = [ctx.format(e) for e in out]
    if args.json:
        _print_json(texts)
    else:
        print("\n".join(texts))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    langs = [code for code, _ in list_languages()]
    parser = argparse.ArgumentParser(prog="symgen", description=T("en", "Description"))
    parser.add_argument("--version", action="version", version=T("en", "Version"))
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--lang", choices=langs, default="en", help="language of the text output")
    parser.add_argument("--workers", type=int, default=None, help="process count (default: SYMGEN_WORKERS or CPU count)")
    parser.add_argument("--strategy", choices=STRATEGIES, default=None)
    parser.add_argument("--max-cosets", type=int, default=None, dest="max_cosets")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="rebuild and check catalog entries")
    p.add_argument("--scale", choices=SCALES, default="desk")
    p.add_argument("--entry", action="append", default=None, help="entry id (repeatable)")
    p.add_argument("--force", action="store_true", help="also enumerate definition-only entries")
    p.add_argument("--catalog", default=None, help="catalog directory")
    p.add_argument("--progress", action="store_true", help="show a progress bar")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate the presentation in a job file")
    p.add_argument("file")
    p.add_argument("--catalog", default=None, help="catalog directory for enumeration controls")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("suggest", help="candidate control elements for a relation in the given generators")
    p.add_argument("--entry", required=True)
    p.add_argument("--points", required=True, help="comma-separated symmetric generator labels")
    p.set_defaults(func=cmd_suggest)

    p = sub.add_parser("search", help="try a relation template over candidate control elements")
    p.add_argument("--entry", required=True)
    p.add_argument("--template", required=True, help="relation with one 'pi', e.g. '(pi * t[1])^5'")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--source", choices=("lemma", "order"), default="lemma")
    p.add_argument("--cap", type=int, default=SEARCH_DEFAULT_CAP)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("golay", help="the binary Golay code and its block families")
    p.add_argument("what", choices=("counts", "dump", "trios", "dodecads"))
    p.add_argument("points", nargs="*", help="for dodecads: the two points fixed by M22 (1-based)")
    p.add_argument("--construction", choices=("qr", "lexicode"), default="qr")
    p.set_defaults(func=cmd_golay)

    p = sub.add_parser("graph", help="double coset Cayley diagram as DOT")
    p.add_argument("--entry", required=True)
    p.add_argument("--dot", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("elt", help="element arithmetic in 'pi = ... ; w = ...' form")
    p.add_argument("--entry", required=True)
    p.add_argument("op", choices=tuple(_ELT_ARITY))
    p.add_argument("args", nargs="*")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_elt)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except EnumerationOverflow as exc:
        print(T(args.lang, "Enumeration overflowed at {cap} cosets.", cap=exc.max_cosets), file=sys.stderr)
        return EXIT_OVERFLOW
    except (SymgenError, ValueError) as exc:
        logger.debug("command failed", exc_info=True)
        print(T(args.lang, "Error: {message}", message=exc), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "main", "run"]
