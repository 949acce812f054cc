from __future__ import annotations

"""The catalog of symmetric presentations and its verifier.

Each ``*.sgp`` file under ``data/catalog`` describes one presentation: how
to build the control group and its action, the relations (or a relation
search), and the expected index, order and action degree with their
provenance. :func:`run_entry` rebuilds everything from scratch and
compares.
"""

import logging
import re
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from tqdm import tqdm

from .actions import ActionRecipe, InducedAction, induced_action
from .config import Cycles, JobConfig, NameDef, RelationExpr, load_config, parse_relation, to_items
from .constants import CATALOG_DIR, CATALOG_SUFFIX, DESK_INDEX_LIMIT, HEAVY_INDEX_LIMIT, SCALES, SEARCH_DEFAULT_CAP
from .cosets import EnumerationLimits
from .errors import CatalogError, EnumerationOverflow, EnumerationStats, SymgenError
from .geometry import l2_16_4, linear_group, matchsticks, plane_action, sylow17_action
from .golay import INFINITY, build_golay, dodecad_action, dodecads_672, m22, m24, octad_action, trio_action
from .groups import PermutationGroup
from .perms import Permutation
from .progenitor import (
    PI,
    ControlLetter,
    ControlPresentation,
    EnumerationResult,
    Progenitor,
    RelationTemplate,
    SearchReport,
    SymmetricPresentation,
    SymRelation,
    conjugation_law_violations,
    double_coset_analysis,
    enumerate_cosets,
    lemma_centralizer,
    lemma_violations,
    perfectness_report,
    relation_search,
    worker_count,
)
from .weyl import diagram_violations, weyl_order

logger = logging.getLogger(__name__)

SCALE_RANK = {scale: rank for rank, scale in enumerate(SCALES)}
STATUSES = ("verified", "overflow", "mismatch", "skipped")

_SYMMETRIC_RE = re.compile(r"^S(\d+)$")
_ALTERNATING_RE = re.compile(r"^A(\d+)$")
_LINEAR_RE = re.compile(r"^L(\d+)\(2\)$")


@dataclass(frozen=True)
class CatalogEntry:
    config: JobConfig
    path: Path | None = field(default=None, compare=False)

    @property
    def id(self) -> str:
        return self.config.entry

    @property
    def scale(self) -> str:
        return self.config.scale

    @property
    def title(self) -> str:
        return self.config.title

    def expected_int(self, key: str) -> int | None:
        tagged = self.config.expected(key)
        return int(tagged.value) if tagged is not None else None

    @property
    def expects_overflow(self) -> bool:
        tagged = self.config.expected("status")
        return tagged is not None and tagged.value == "overflow"

    def validate(self) -> None:
        if not self.id:
            raise CatalogError("catalog entry without an 'entry:' id")
        if self.scale not in SCALES:
            raise CatalogError(f"{self.id}: unknown scale {self.scale!r}")
        index = self.expected_int("index")
        if index is not None and not self.expects_overflow:
            if self.scale == "desk" and index > DESK_INDEX_LIMIT:
                raise CatalogError(f"{self.id}: desk entries need index <= {DESK_INDEX_LIMIT}")
            if self.scale == "heavy" and index > HEAVY_INDEX_LIMIT:
                raise CatalogError(f"{self.id}: heavy entries need index <= {HEAVY_INDEX_LIMIT}")
        if self.scale != "definition-only" and not self.config.control:
            raise CatalogError(f"{self.id}: only definition-only entries may omit the control group")


def load_catalog(directory: str | Path | None = None) -> dict[str, CatalogEntry]:
    """All entries under ``directory``, keyed and ordered by id."""
    directory = Path(directory) if directory is not None else CATALOG_DIR
    entries: dict[str, CatalogEntry] = {}
    for path in sorted(directory.glob(f"*{CATALOG_SUFFIX}")):
        entry = CatalogEntry(load_config(path), path)
        entry.validate()
        if entry.id in entries:
            raise CatalogError(f"entry {entry.id!r} defined in {entries[entry.id].path} and {path}")
        entries[entry.id] = entry
    logger.debug("loaded %d catalog entries from %s", len(entries), directory)
    return dict(sorted(entries.items()))


# -- building ----------------------------------------------------------------


@dataclass
class BuiltControl:
    """The control group acting on the symmetric generators, with named objects."""

    action: InducedAction
    progenitor: Progenitor
    inner: EnumerationResult | None = None
    bindings: list[dict[str, int]] = field(default_factory=lambda: [{}])
    _presentation: ControlPresentation | None = None
    presentation_kind: str = ""

    @property
    def source(self) -> PermutationGroup:
        return self.action.source

    @property
    def presentation(self) -> ControlPresentation:
        if self._presentation is None:
            kind = self.presentation_kind
            if kind == "coxeter":
                self._presentation = ControlPresentation.coxeter(self.action)
            elif kind == "chain":
                self._presentation = ControlPresentation.from_chain(self.action)
            elif kind == "enumeration":
                if self.inner is None:
                    raise CatalogError("an enumeration presentation needs an enumerated control group")
                self._presentation = ControlPresentation.from_enumeration(self.inner)
            else:
                raise CatalogError(f"unknown control presentation {kind!r}")
        return self._presentation


def _golay_points(args: Sequence[str]) -> tuple[int, int]:
    """Two 1-based points of the Golay labeling; 24 is infinity."""
    if not args:
        return INFINITY, 0
    if len(args) != 2 or not all(a.isdigit() for a in args):
        raise CatalogError("M22 takes two points, e.g. 'M22 24 1'")
    a, b = (int(x) - 1 for x in args)
    if not (0 <= a < 24 and 0 <= b < 24) or a == b:
        raise CatalogError("M22 points must be two different points in 1..24")
    return a, b


def _source_group(config: JobConfig, catalog: Mapping[str, CatalogEntry] | None, limits) -> tuple[PermutationGroup, EnumerationResult | None]:
    name, *args = config.control
    if m := _SYMMETRIC_RE.match(name):
        return PermutationGroup.symmetric(int(m.group(1))), None
    if m := _ALTERNATING_RE.match(name):
        return PermutationGroup.alternating(int(m.group(1))), None
    if name == "M24":
        return m24(build_golay()), None
    if name == "M22":
        return m22(build_golay(), *_golay_points(args)), None
    if name == "L2(16):4":
        return l2_16_4(), None
    if m := _LINEAR_RE.match(name):
        return linear_group(int(m.group(1))), None
    if name == "perms":
        if len(args) != 1 or not args[0].isdigit():
            raise CatalogError("'control: perms DEGREE' needs the degree")
        degree = int(args[0])
        gens = [Permutation.parse(text, degree) for text in config.control_perms]
        return PermutationGroup(gens, degree=degree, name=config.entry), None
    if name == "enumeration":
        if len(args) != 1:
            raise CatalogError("'control: enumeration ENTRY' names one catalog entry")
        inner = enumerate_entry(args[0], catalog, limits)
        if not inner.control_embeds:
            raise CatalogError(f"{args[0]}: control group does not embed, cannot act on its cosets")
        group = inner.coset_action
        group.name = args[0]
        return group, inner
    raise CatalogError(f"unknown control group {name!r}")


def _sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CatalogError(f"expected comma-separated sizes, got {text!r}") from None


def _action(config: JobConfig, source: PermutationGroup) -> tuple[InducedAction, bool]:
    kind, *args = config.action
    intransitive = "intransitive" in args
    args = [a for a in args if a != "intransitive"]
    name = config.control[0]
    code = build_golay() if name in ("M24", "M22") else None
    if kind in ("natural", "cosets"):
        action = induced_action(source, ActionRecipe.natural())
    elif kind == "subsets":
        action = induced_action(source, ActionRecipe.subsets(*_sizes(args[0])))
    elif kind == "partitions":
        action = induced_action(source, ActionRecipe.partitions(*_sizes(args[0])))
    elif kind in ("octads", "dodecads", "trios") and name == "M24":
        action = {"octads": octad_action, "dodecads": dodecad_action, "trios": trio_action}[kind](code)
    elif kind == "dodecads672" and name == "M22":
        action = dodecads_672(code, *_golay_points(config.control[1:]))
    elif kind in ("matchsticks", "planes") and name == "L4(2)":
        action = matchsticks(4) if kind == "matchsticks" else plane_action(4)
    elif kind == "sylow17" and name == "L2(16):4":
        action = sylow17_action()
    else:
        raise CatalogError(f"action {kind!r} is not available for control {name!r}")
    return action, intransitive


def _meet_alternatives(
    nd: NameDef, binding: Mapping[str, int], action: InducedAction, control: PermutationGroup
) -> list[int]:
    other, size = nd.meet
    a = binding[other]
    base = action.labels[a]
    if not isinstance(base, frozenset) or not all(isinstance(x, int) for x in base):
        raise CatalogError(f"meet() needs objects that are point sets, got {action.format_point(a)}")
    hits = {k for k, label in enumerate(action.labels) if k != a and len(label & base) == size}
    if not hits:
        return []
    stab = control.point_stabilizer([a])
    return sorted(min(orb) for orb in stab.orbits() if orb[0] in hits)


def _bindings(config: JobConfig, action: InducedAction, progenitor: Progenitor) -> list[dict[str, int]]:
    bindings: list[dict[str, int]] = [{}]
    for nd in config.names:
        grown = []
        for b in bindings:
            if nd.meet is None:
                alternatives = [progenitor.parse_point(nd.label)]
            else:
                alternatives = _meet_alternatives(nd, b, action, progenitor.control)
            grown.extend({**b, nd.name: alt} for alt in alternatives)
        bindings = grown
        if not bindings:
            raise CatalogError(f"no object satisfies the definition of {nd.name}")
    return bindings


def default_presentation(config: JobConfig) -> str:
    if config.presentation:
        return config.presentation
    name = config.control[0]
    if name == "enumeration":
        return "enumeration"
    if _SYMMETRIC_RE.match(name):
        return "coxeter"
    return "chain"


def build_control(
    config: JobConfig,
    catalog: Mapping[str, CatalogEntry] | None = None,
    limits: EnumerationLimits | None = None,
) -> BuiltControl:
    if not config.control:
        raise CatalogError(f"{config.entry}: no control group given")
    source, inner = _source_group(config, catalog, limits)
    action, intransitive = _action(config, source)
    progenitor = Progenitor(action.group, action, allow_intransitive=intransitive, name=source.name)
    built = BuiltControl(action, progenitor, inner, presentation_kind=default_presentation(config))
    built.bindings = _bindings(config, action, progenitor)
    return built


class _EntryResolver:
    """Resolves the names in a relation against a built control group."""

    def __init__(self, built: BuiltControl, binding: Mapping[str, int]) -> None:
        self.built = built
        self.binding = binding

    def control(self, cycles: Cycles) -> Permutation:
        if self.built.inner is not None:
            raise CatalogError("write control elements of an enumerated group as r[label]")
        source = self.built.source
        text = "".join(f"({b})" for b in cycles.bodies) or "()"
        g = Permutation.parse(text, source.degree)
        if not source.contains(g):
            raise CatalogError(f"{text} is not in the control group")
        return self.built.action.image(g)

    def symmetric(self, label: str) -> int:
        if label in self.binding:
            return self.binding[label]
        return self.built.progenitor.parse_point(label)

    def inner(self, label: str) -> ControlLetter:
        inner = self.built.inner
        if inner is None:
            raise CatalogError("r[label] refers to the symmetric generators of an enumerated control group")
        point = inner.symmetric.progenitor.parse_point(label)
        return ControlLetter(inner.t_image(point), inner.symmetric.symmetric_word(point))

    def pi(self):
        return PI


def relation_from_expr(expr: RelationExpr, built: BuiltControl, binding: Mapping[str, int]) -> SymRelation:
    items = to_items(expr.root, _EntryResolver(built, binding))
    return SymRelation.from_items(items, 1, text=expr.text)


def template_from_expr(expr: RelationExpr, built: BuiltControl, binding: Mapping[str, int]) -> RelationTemplate:
    return RelationTemplate(tuple(to_items(expr.root, _EntryResolver(built, binding))))


@dataclass
class BuiltEntry:
    """A symmetric presentation ready to enumerate, and how its relations were found."""

    entry: CatalogEntry
    control: BuiltControl
    symmetric: SymmetricPresentation
    searches: list[tuple[dict[str, int], SearchReport]] = field(default_factory=list)
    chosen: SymRelation | None = None


def _entry_limits(entry: CatalogEntry, override: EnumerationLimits | None) -> EnumerationLimits:
    if override is not None:
        return override
    base = EnumerationLimits()
    cap = entry.config.limit("max_cosets")
    strategy = entry.config.limit("strategy")
    return replace(
        base,
        max_cosets=int(cap) if cap else base.max_cosets,
        strategy=strategy or base.strategy,
    )


def _lookup(entry: str | CatalogEntry, catalog: Mapping[str, CatalogEntry] | None) -> CatalogEntry:
    if isinstance(entry, CatalogEntry):
        return entry
    catalog = catalog if catalog is not None else load_catalog()
    try:
        return catalog[entry]
    except KeyError:
        raise CatalogError(f"no catalog entry {entry!r}") from None


def build_entry(
    entry: str | CatalogEntry,
    catalog: Mapping[str, CatalogEntry] | None = None,
    limits: EnumerationLimits | None = None,
    workers: int | None = None,
) -> BuiltEntry:
    """Build the symmetric presentation of an entry, running its relation search if any.

    The searched relation is the first surviving candidate whose index
    matches the expected index, or the first survivor when none is expected.
    """
    entry = _lookup(entry, catalog)
    config = entry.config
    limits = _entry_limits(entry, limits)
    built = build_control(config, catalog, limits)
    first = built.bindings[0]
    relations = [relation_from_expr(expr, built, first) for expr in config.relations]
    sp = SymmetricPresentation(built.progenitor, relations, built.presentation, name=entry.id)
    out = BuiltEntry(entry, built, sp)
    search = config.search
    if search is None:
        return out
    search_limits = replace(limits, max_cosets=search.cap or SEARCH_DEFAULT_CAP)
    expected = entry.expected_int("index")
    fallback: SymRelation | None = None
    for binding in built.bindings:
        template = template_from_expr(search.template, built, binding)
        report = relation_search(sp, template, order=search.order, source=search.source, limits=search_limits, workers=workers)
        out.searches.append((binding, report))
        for outcome in report.survivors:
            relation = template.instantiate(outcome.pi)
            if expected is None or outcome.index == expected:
                out.chosen = relation
                out.symmetric = sp.with_relations([relation])
                return out
            fallback = fallback or relation
    if fallback is not None:
        out.chosen = fallback
        out.symmetric = sp.with_relations([fallback])
        return out
    raise CatalogError(f"{entry.id}: no candidate relation survived the search")


def search_entry(
    entry: str | CatalogEntry,
    template: str,
    order: int | None = None,
    source: str = "order",
    cap: int = SEARCH_DEFAULT_CAP,
    catalog: Mapping[str, CatalogEntry] | None = None,
    workers: int | None = None,
) -> tuple[BuiltControl, RelationTemplate, SearchReport]:
    """Search ``template`` over the entry's progenitor, keeping its fixed relations.

    Named objects bind to their first alternative.
    """
    entry = _lookup(entry, catalog)
    limits = replace(_entry_limits(entry, None), max_cosets=cap)
    built = build_control(entry.config, catalog, limits)
    binding = built.bindings[0]
    relations = [relation_from_expr(expr, built, binding) for expr in entry.config.relations]
    sp = SymmetricPresentation(built.progenitor, relations, built.presentation, name=entry.id)
    tmpl = template_from_expr(parse_relation(template), built, binding)
    report = relation_search(sp, tmpl, order=order, source=source, limits=limits, workers=workers)
    return built, tmpl, report


_RESULTS: dict[tuple[str, EnumerationLimits], EnumerationResult] = {}


def enumerate_entry(
    entry: str | CatalogEntry,
    catalog: Mapping[str, CatalogEntry] | None = None,
    limits: EnumerationLimits | None = None,
    workers: int | None = None,
) -> EnumerationResult:
    """Enumerate an entry's target over its control group; results are cached per process.

    :raises EnumerationOverflow: passed through.
    """
    entry = _lookup(entry, catalog)
    limits = _entry_limits(entry, limits)
    key = (entry.id, limits)
    if key not in _RESULTS:
        built = build_entry(entry, catalog, limits, workers)
        _RESULTS[key] = enumerate_cosets(built.symmetric, limits)
    return _RESULTS[key]


# -- verification --------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCosetSummary:
    size: int
    stab_order: int
    word: str


@dataclass(frozen=True)
class VerificationReport:
    entry: str
    status: str
    title: str = ""
    scale: str = ""
    index: int | None = None
    order: int | None = None
    abelianization: int | None = None
    degree: int | None = None
    control_embeds: bool | None = None
    double_cosets: tuple[DoubleCosetSummary, ...] = ()
    relation: str = ""
    stats: EnumerationStats | None = None
    seconds: float = 0.0
    mismatches: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        stats = self.stats
        return {
            "entry": self.entry,
            "status": self.status,
            "index": self.index,
            "order": self.order,
            "abelianization": self.abelianization,
            "double_cosets": [
                {"size": dc.size, "stab_order": dc.stab_order, "word": dc.word} for dc in self.double_cosets
            ],
            "stats": {
                "defined": stats.defined if stats else None,
                "merged": stats.merged if stats else None,
                "seconds": round(stats.seconds, 3) if stats else None,
            },
            "degree": self.degree,
            "control_embeds": self.control_embeds,
            "relation": self.relation,
            "mismatches": list(self.mismatches),
            "notes": list(self.notes),
        }


def _compare(entry: CatalogEntry, key: str, measured: int | None, mismatches: list[str]) -> None:
    expected = entry.config.expected(key)
    if expected is None or measured is None:
        return
    if int(expected.value) != measured:
        alarm = "correctness alarm" if expected.tag == "PAPER" else "regression"
        tag = f" [{expected.tag}]" if expected.tag else ""
        mismatches.append(f"{key}: expected {expected.value}{tag}, measured {measured} ({alarm})")


def _oracle_checks(entry: CatalogEntry, result: EnumerationResult, mismatches: list[str]) -> None:
    oracle = entry.config.oracle
    if not oracle:
        return
    if len(oracle) != 3 or oracle[0] != "weyl" or not oracle[2].isdigit():
        raise CatalogError(f"{entry.id}: oracle is written 'weyl TYPE RANK'")
    family, rank = oracle[1], int(oracle[2])
    if result.order != weyl_order(family, rank):
        mismatches.append(f"order {result.order} differs from |W({family}{rank})| = {weyl_order(family, rank)}")
    gens = result.coset_action.generators
    sp = result.symmetric
    images = {f"s{i}": gens[i - 1] for i in range(1, sp.rank + 1)}
    images["t"] = gens[sp.rank]
    for a, b, want, got in diagram_violations(images, family, rank):
        mismatches.append(f"({a} {b}) has order {got} in the image, diagram says {want}")


def _lemma_pair(progenitor: Progenitor) -> tuple[int, int] | None:
    """Two symmetric generators from the first orbit with more than one point."""
    for orbit in progenitor.orbits:
        if len(orbit) > 1:
            return orbit[0], orbit[1]
    return None


def _definition_report(entry: CatalogEntry, catalog, limits, started: float, force: bool) -> VerificationReport:
    mismatches: list[str] = []
    degree = None
    notes = [f"definition-only entry; not enumerated{'' if force else ' (use --force)'}"]
    if entry.config.control:
        degree = build_control(entry.config, catalog, limits).progenitor.n
        _compare(entry, "degree", degree, mismatches)
    else:
        notes.append("control group is not constructed")
    return VerificationReport(
        entry.id, "mismatch" if mismatches else "skipped", entry.title, entry.scale,
        degree=degree, seconds=time.perf_counter() - started,
        mismatches=tuple(mismatches), notes=tuple(notes),
    )


def run_entry(
    entry: str | CatalogEntry,
    catalog: Mapping[str, CatalogEntry] | None = None,
    limits: EnumerationLimits | None = None,
    force: bool = False,
    workers: int | None = None,
) -> VerificationReport:
    """Rebuild, enumerate and check one entry.

    Overflow and mismatches are report statuses. Construction failures raise
    :class:`CatalogError`.
    """
    entry = _lookup(entry, catalog)
    started = time.perf_counter()
    logger.info("entry %s (%s) started", entry.id, entry.scale)
    limits = _entry_limits(entry, limits)
    if entry.scale == "definition-only" and not force:
        return _definition_report(entry, catalog, limits, started, force)
    try:
        built = build_entry(entry, catalog, limits, workers)
    except SymgenError as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"{entry.id}: {exc}") from exc
    progenitor = built.control.progenitor
    degree = progenitor.n
    chosen = [built.chosen] if built.chosen is not None else built.symmetric.relations
    relation = "; ".join(rel.format(progenitor) for rel in chosen)
    try:
        result = enumerate_cosets(built.symmetric, limits)
    except EnumerationOverflow as exc:
        notes = ["overflow expected for this entry"] if entry.expects_overflow else []
        logger.info("entry %s overflowed at %d cosets", entry.id, exc.max_cosets)
        return VerificationReport(
            entry.id, "overflow", entry.title, entry.scale, degree=degree, relation=relation,
            stats=exc.stats, seconds=time.perf_counter() - started, notes=tuple(notes),
        )
    _RESULTS[(entry.id, limits)] = result

    mismatches: list[str] = []
    notes: list[str] = []
    embeds = result.control_embeds
    if not embeds:
        mismatches.append("the control group does not embed in the target")
    table = double_coset_analysis(result)
    if not table.is_connected():
        mismatches.append("double coset graph is not connected")
    bad = conjugation_law_violations(result, samples=100)
    if bad:
        mismatches.append(f"conjugation law fails for {bad} of 100 samples")
    pair = _lemma_pair(progenitor)
    if embeds and pair is not None:
        words = lemma_violations(result, *pair)
        if words:
            fmt = progenitor.format_point
            shown = " ".join(fmt(i) for i in words[0])
            mismatches.append(
                f"{len(words)} words in t[{fmt(pair[0])}], t[{fmt(pair[1])}] land in N outside "
                f"C_N(Stab_N({fmt(pair[0])}, {fmt(pair[1])})), e.g. {shown}"
            )
    abelianization = None
    if result.index <= DESK_INDEX_LIMIT or entry.config.expected("abelianization") is not None:
        perfectness = perfectness_report(result)
        abelianization = perfectness.abelianization
        if perfectness.consistent is False:
            mismatches.append(f"abelianization {abelianization} contradicts the perfect control group")
    order = result.order if embeds else None
    _compare(entry, "degree", degree, mismatches)
    _compare(entry, "index", result.index, mismatches)
    _compare(entry, "order", order, mismatches)
    _compare(entry, "abelianization", abelianization, mismatches)
    _compare(entry, "double_cosets", len(table), mismatches)
    _oracle_checks(entry, result, mismatches)
    if entry.expects_overflow:
        notes.append("completed although overflow was expected")
    fmt = built.control.progenitor.format_point
    summaries = tuple(
        DoubleCosetSummary(dc.size, dc.stabilizer_order, " ".join(fmt(i) for i in dc.word))
        for dc in table.double_cosets
    )
    status = "mismatch" if mismatches else "verified"
    logger.info("entry %s %s: index %d", entry.id, status, result.index)
    return VerificationReport(
        entry.id, status, entry.title, entry.scale,
        index=result.index, order=order, abelianization=abelianization, degree=degree,
        control_embeds=embeds, double_cosets=summaries, relation=relation, stats=result.stats,
        seconds=time.perf_counter() - started, mismatches=tuple(mismatches), notes=tuple(notes),
    )


def _run_entry_job(entry_id: str, directory: str | None, limits: EnumerationLimits | None, force: bool) -> VerificationReport:
    catalog = load_catalog(directory)
    try:
        return run_entry(entry_id, catalog, limits, force=force, workers=1)
    except CatalogError as exc:
        return VerificationReport(entry_id, "mismatch", mismatches=(str(exc),))


def select_entries(
    catalog: Mapping[str, CatalogEntry], scale: str = "desk", ids: Iterable[str] | None = None
) -> list[CatalogEntry]:
    if scale not in SCALE_RANK:
        raise ValueError(f"unknown scale {scale!r}; choose from {', '.join(SCALES)}")
    wanted = set(ids) if ids is not None else None
    if wanted is not None:
        missing = wanted - set(catalog)
        if missing:
            raise CatalogError(f"no catalog entries {', '.join(sorted(missing))}")
    return [
        e for e in catalog.values()
        if SCALE_RANK[e.scale] <= SCALE_RANK[scale] and (wanted is None or e.id in wanted)
    ]


def run_all(
    scale: str = "desk",
    directory: str | Path | None = None,
    limits: EnumerationLimits | None = None,
    workers: int | None = None,
    ids: Iterable[str] | None = None,
    progress: Callable[[VerificationReport], None] | None = None,
    show_progress: bool = False,
    force: bool = False,
    should_stop: Callable[[], bool] | None = None,
) -> list[VerificationReport]:
    """Run every entry at or below ``scale`` concurrently; the reports are ordered by id.

    Definition-only entries among them are reported as skipped unless
    ``force`` is set. When ``should_stop`` turns true, pending entries are
    dropped and only the finished reports are returned.
    """
    catalog = load_catalog(directory)
    selected = select_entries(catalog, scale, ids)
    if not selected:
        return []
    n_workers = min(worker_count(workers), len(selected))
    folder = str(directory) if directory else None
    stop = should_stop or (lambda: False)
    reports: dict[str, VerificationReport] = {}
    bar = tqdm(total=len(selected), desc="catalog", unit="entry", disable=not show_progress)

    def finish(report: VerificationReport) -> None:
        reports[report.entry] = report
        bar.update()
        if progress:
            progress(report)

    try:
        if n_workers == 1:
            for e in selected:
                if stop():
                    break
                finish(_run_entry_job(e.id, folder, limits, force))
        else:
            with ProcessPoolExecutor(max_workers=n_workers) as pool:
                futures = [pool.submit(_run_entry_job, e.id, folder, limits, force) for e in selected]
                for future in as_completed(futures):
                    finish(future.result())
                    if stop():
                        pool.shutdown(wait=False, cancel_futures=True)
                        break
    finally:
        bar.close()
    return [reports[e.id] for e in selected if e.id in reports]


def suggest(
    entry: str | CatalogEntry,
    points: Sequence[str],
    catalog: Mapping[str, CatalogEntry] | None = None,
) -> tuple[BuiltControl, PermutationGroup]:
    """``C_N(Stab_N(points))`` for symmetric generators named by label."""
    entry = _lookup(entry, catalog)
    built = build_control(entry.config, catalog)
    resolver = _EntryResolver(built, built.bindings[0])
    indices = [resolver.symmetric(p) for p in points]
    return built, lemma_centralizer(built.progenitor, indices)


def exit_status(reports: Iterable[VerificationReport]) -> str:
    """Worst status: mismatch over overflow over verified/skipped."""
    statuses = {r.status for r in reports}
    if "mismatch" in statuses:
        return "mismatch"
    if "overflow" in statuses:
        return "overflow"
    return "verified"


__all__ = [
    "BuiltControl",
    "BuiltEntry",
    "CatalogEntry",
    "DoubleCosetSummary",
    "STATUSES",
    "VerificationReport",
    "build_control",
    "build_entry",
    "enumerate_entry",
    "exit_status",
    "load_catalog",
    "relation_from_expr",
    "run_all",
    "run_entry",
    "search_entry",
    "select_entries",
    "suggest",
    "template_from_expr",
]
