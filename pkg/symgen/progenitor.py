from __future__ import annotations

"""Progenitors ``2^*n : N``, symmetric presentations and their enumeration.

Symmetric generators are involutions ``t_i`` permuted by the control group
``N`` through ``t_i^pi = t_{pi(i)}``. A relation ``pi * t_a t_b ...`` is
kept with ``pi`` as a permutation and only turned into a word over the
control presentation when the symmetric presentation is expanded into an
ordinary one.
"""

import logging
import math
import os
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence, Union

import networkx as nx
import numpy as np

from .actions import InducedAction
from .constants import ENV_WORKERS, SEARCH_DEFAULT_CAP
from .cosets import CosetTable, EnumerationLimits, todd_coxeter
from .errors import (
    EnumerationOverflow,
    IntegrityError,
    NotInGroupError,
    PresentationError,
    WordError,
)
from .groups import LiftingMap, PermutationGroup, StabilizerChain, chain_presentation
from .perms import Permutation, evaluate
from .presentations import Presentation, Word, commutator, format_word, free_reduce, invert_word

logger = logging.getLogger(__name__)


def worker_count(requested: int | None = None) -> int:
    """Process count from the argument, ``SYMGEN_WORKERS`` or the CPU count."""
    if requested is not None:
        return max(1, requested)
    raw = os.environ.get(ENV_WORKERS)
    if raw and raw.isdigit():
        return max(1, int(raw))
    return max(1, os.cpu_count() or 1)


# -- control presentations ------------------------------------------------


def coxeter_presentation(n: int, prefix: str = "s") -> Presentation:
    """Coxeter presentation of ``S_n`` on ``s_i = (i i+1)``, ``i = 1..n-1``."""
    if n < 2:
        raise PresentationError("a Coxeter presentation of S_n needs n >= 2")
    names = tuple(f"{prefix}{i}" for i in range(1, n))
    rels: list[Word] = [(i, i) for i in range(1, n)]
    for i in range(1, n):
        for j in range(i + 1, n):
            m = 3 if j == i + 1 else 2
            rels.append((i, j) * m)
    return Presentation(names, tuple(rels))


class ControlPresentation:
    """A presentation of the control group with generator images and a word encoder.

    ``images[k]`` is the image of generator ``k`` in the control action.
    ``encoder`` turns a control element into a word over the generators.
    """

    def __init__(
        self,
        presentation: Presentation,
        images: Sequence[Permutation],
        encoder: Callable[[Permutation], Word],
        kind: str = "custom",
    ) -> None:
        if len(images) != presentation.rank:
            raise PresentationError(
                f"{len(images)} generator images for {presentation.rank} generators"
            )
        self.presentation = presentation
        self.images = tuple(images)
        self._encoder = encoder
        self.kind = kind

    @property
    def degree(self) -> int:
        return self.images[0].degree

    @classmethod
    def coxeter(cls, action: InducedAction) -> "ControlPresentation":
        """S_n on its Coxeter generators; they form a strong generating set for base ``n-1, ..., 1``."""
        source = action.source
        n = source.degree
        expected = [Permutation.from_cycles([(i - 1, i)], n) for i in range(1, n)]
        if list(source.generators) != expected:
            raise PresentationError("the control source is not S_n on its Coxeter generators")
        chain = StabilizerChain(n, expected, base=range(n - 1, 0, -1), order=math.factorial(n))
        if [g.key() for g in chain.strong] != [g.key() for g in expected]:
            raise IntegrityError("Coxeter generators did not form a strong generating set")

        def encode(g: Permutation) -> Word:
            return chain.sift_word(action.lift(g))

        return cls(coxeter_presentation(n), action.group.generators, encode, kind="coxeter")

    @classmethod
    def from_chain(cls, action: InducedAction, prefix: str = "x") -> "ControlPresentation":
        """Schreier presentation read off the source group's stabilizer chain."""
        chain = action.source.chain
        presentation, strong = chain_presentation(chain, prefix)
        logger.debug(
            "chain presentation with %d generators and %d relators",
            presentation.rank, len(presentation.relators),
        )

        def encode(g: Permutation) -> Word:
            return chain.sift_word(action.lift(g))

        return cls(presentation, [action.image(s) for s in strong], encode, kind="chain")

    @classmethod
    def from_enumeration(cls, result: "EnumerationResult") -> "ControlPresentation":
        """The target of a verified symmetric presentation, acting on its cosets.

        An element ``g`` is written as ``h * w`` where ``w`` is the coset
        representative word of ``0^g`` and ``h`` fixes coset 0, so lies in the
        image of the inner control group.
        """
        if not result.control_embeds:
            raise PresentationError("the inner control group does not embed in the target")
        inner = result.symmetric.control
        table = result.table
        images = result.coset_action.generators
        index = result.index
        rank = inner.presentation.rank
        lifting = LiftingMap(
            list(result.control_image.generators), list(inner.images), result.control_image.order()
        )

        def encode(g: Permutation) -> Word:
            coset = g(0)
            word = table.representative_word(coset)
            rep = evaluate(word, images, index)
            h = g * rep.inverse()
            inner_word = inner.encode(lifting(h))
            if any(abs(letter) > rank for letter in inner_word):
                raise IntegrityError("inner encoding used a symmetric generator")
            return free_reduce(inner_word + word)

        return cls(result.presentation, images, encode, kind="enumeration")

    def encode(self, g: Permutation) -> Word:
        word = self._encoder(g)
        if evaluate(word, self.images, g.degree) != g:
            raise IntegrityError(f"encoding of {g} does not evaluate back to it")
        return word

    def evaluate(self, word: Sequence[int]) -> Permutation:
        return evaluate(word, self.images, self.degree)

    def certify(self, control: PermutationGroup) -> None:
        """Relators hold on the images and the images generate all of ``control``."""
        for rel in self.presentation.relators:
            if not self.evaluate(rel).is_identity():
                raise IntegrityError(
                    f"relator {format_word(rel, self.presentation.generators)} fails on the generator images"
                )
        for g in self.images:
            if not control.contains(g):
                raise IntegrityError(f"generator image {g} is not in the control group")
        image_order = PermutationGroup(self.images, degree=self.degree).order()
        if image_order != control.order():
            raise IntegrityError(
                f"generator images span a group of order {image_order}, not {control.order()}"
            )


# -- progenitors and relations ---------------------------------------------


class Progenitor:
    """``2^*n : N`` for a control group ``N`` of degree ``n``.

    An intransitive control is accepted only with ``allow_intransitive``; it
    then gets one distinguished symmetric generator per orbit.
    """

    def __init__(
        self,
        control: PermutationGroup,
        action: InducedAction | None = None,
        allow_intransitive: bool = False,
        name: str | None = None,
    ) -> None:
        self.control = control
        self.action = action
        self.name = name or control.name or "N"
        orbits = control.orbits()
        if len(orbits) > 1 and not allow_intransitive:
            raise PresentationError(
                f"control group has {len(orbits)} orbits; a progenitor needs a transitive one"
            )
        self.orbits = orbits
        self.representatives = tuple(orb[0] for orb in orbits)
        self._orbit_of = [0] * control.degree
        for k, orb in enumerate(orbits):
            for p in orb:
                self._orbit_of[p] = k

    @property
    def n(self) -> int:
        return self.control.degree

    @property
    def is_transitive(self) -> bool:
        return len(self.orbits) == 1

    def orbit_of(self, point: int) -> int:
        return self._orbit_of[point]

    def format_point(self, point: int) -> str:
        if self.action is not None:
            return self.action.format_point(point)
        return str(point + 1)

    def parse_point(self, text: str) -> int:
        if self.action is not None:
            return self.action.parse_label(text)
        from .perms import parse_point

        return parse_point(text, self.n)


@dataclass(frozen=True)
class ControlLetter:
    """A control element inside a relation, optionally with a known word."""

    perm: Permutation
    word: Word | None = None

    def inverse(self) -> "ControlLetter":
        return ControlLetter(self.perm.inverse(), invert_word(self.word) if self.word is not None else None)


Item = Union[int, Permutation, ControlLetter]


def invert_items(items: Sequence[Item]) -> list[Item]:
    """Inverse of a product of control elements and (involutory) symmetric generators."""
    out: list[Item] = []
    for item in reversed(items):
        if isinstance(item, Permutation):
            out.append(item.inverse())
        elif isinstance(item, ControlLetter):
            out.append(item.inverse())
        else:
            out.append(item)
    return out


@dataclass(frozen=True)
class SymRelation:
    """A relator ``pi * t_{w1} ... t_{wk}``."""

    pi: Permutation
    word: tuple[int, ...]
    pi_word: Word | None = field(default=None, compare=False)
    text: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.word:
            raise WordError("a relation needs at least one symmetric generator")
        for i in self.word:
            if not 0 <= i < self.pi.degree:
                raise WordError(f"symmetric generator index {i} out of range")

    @property
    def t_length(self) -> int:
        return len(self.word)

    @classmethod
    def from_items(cls, items: Sequence[Item], exponent: int = 1, text: str = "") -> "SymRelation":
        """Normal form of ``(items)^exponent``.

        Permutations move to the left with ``t_i pi = pi t_{pi(i)}`` and
        adjacent equal symmetric generators cancel.
        """
        if exponent < 1:
            raise WordError("relation exponents must be at least 1")
        items = list(items) * exponent
        degree = None
        for item in items:
            perm = item.perm if isinstance(item, ControlLetter) else item
            if isinstance(perm, Permutation):
                if degree is not None and perm.degree != degree:
                    raise WordError("permutations of different degrees in one relation")
                degree = perm.degree
        if degree is None:
            raise WordError("relation has no degree; write the identity as ()")
        pi = Permutation.identity(degree)
        pi_word: list[int] | None = []
        word: list[int] = []
        for item in items:
            if isinstance(item, (Permutation, ControlLetter)):
                perm = item.perm if isinstance(item, ControlLetter) else item
                letters = item.word if isinstance(item, ControlLetter) else None
                pi = pi * perm
                if letters is None or pi_word is None:
                    pi_word = None
                else:
                    pi_word.extend(letters)
                images = perm.as_list()
                word = [images[i] for i in word]
            else:
                if not 0 <= item < degree:
                    raise WordError(f"symmetric generator index {item} out of range")
                if word and word[-1] == item:
                    word.pop()
                else:
                    word.append(item)
        if not word:
            raise WordError("relation reduces to a control element alone")
        return cls(pi, tuple(word), tuple(pi_word) if pi_word is not None else None, text)

    def format(self, progenitor: Progenitor | None = None) -> str:
        fmt = progenitor.format_point if progenitor else (lambda i: str(i + 1))
        return f"{self.pi} * " + " ".join(f"t[{fmt(i)}]" for i in self.word)


class _PiSlot:
    def __repr__(self) -> str:
        return "PI"


PI = _PiSlot()


@dataclass(frozen=True)
class RelationTemplate:
    """A relation shape with one unknown control element ``PI``."""

    items: tuple
    exponent: int = 1

    def __post_init__(self) -> None:
        if sum(1 for item in self.items if item is PI) == 0:
            raise WordError("a relation template needs the unknown PI")
        if len(self.points()) > 3:
            raise WordError("a relation template may name at most 3 symmetric generators")

    def points(self) -> tuple[int, ...]:
        return tuple(sorted({item for item in self.items if isinstance(item, int)}))

    def instantiate(self, pi: Permutation) -> SymRelation:
        items = [pi if item is PI else item for item in self.items]
        return SymRelation.from_items(items, self.exponent, text=f"template with pi = {pi}")


# -- symmetric presentations ------------------------------------------------


class SymmetricPresentation:
    """A progenitor, its relations and a certified presentation of the control group."""

    def __init__(
        self,
        progenitor: Progenitor,
        relations: Iterable[SymRelation],
        control: ControlPresentation,
        stabilizer_words: Sequence[Sequence[Word]] | None = None,
        name: str = "",
    ) -> None:
        self.progenitor = progenitor
        self.relations = tuple(relations)
        self.control = control
        self.name = name or progenitor.name
        group = progenitor.control
        if control.degree != progenitor.n:
            raise PresentationError("control presentation acts on a different number of points")
        control.certify(group)
        for rel in self.relations:
            if rel.pi.degree != progenitor.n:
                raise WordError(f"relation permutation {rel.pi} has the wrong degree")
            if not group.contains(rel.pi):
                raise NotInGroupError(f"{rel.pi} is not in the control group")
        self._schreier = self._schreier_words()
        if stabilizer_words is None:
            stabilizer_words = [self._stabilizer_words(r) for r in progenitor.representatives]
        self.stabilizer_words = tuple(tuple(ws) for ws in stabilizer_words)
        self._certify_stabilizers()

    @property
    def rank(self) -> int:
        return self.control.presentation.rank

    @property
    def t_names(self) -> tuple[str, ...]:
        m = len(self.progenitor.representatives)
        return ("t",) if m == 1 else tuple(f"t{k + 1}" for k in range(m))

    def t_letter(self, point: int) -> int:
        return self.rank + self.progenitor.orbit_of(point) + 1

    def schreier_word(self, point: int) -> Word:
        """Word over the control generators sending the orbit representative to ``point``."""
        return self._schreier[point]

    def _schreier_words(self) -> list[Word]:
        lists = [g.as_list() for g in self.control.images]
        words: list[Word | None] = [None] * self.progenitor.n
        for r in self.progenitor.representatives:
            words[r] = ()
            queue = deque([r])
            while queue:
                p = queue.popleft()
                for k, img in enumerate(lists):
                    q = img[p]
                    if words[q] is None:
                        words[q] = words[p] + (k + 1,)
                        queue.append(q)
        return [w if w is not None else () for w in words]

    def _stabilizer_words(self, point: int) -> list[Word]:
        stab = self.progenitor.control.point_stabilizer([point])
        return [self.control.encode(g) for g in stab.generators]

    def _certify_stabilizers(self) -> None:
        group = self.progenitor.control
        for r, words in zip(self.progenitor.representatives, self.stabilizer_words):
            perms = [self.control.evaluate(w) for w in words]
            for p in perms:
                if p(r) != r:
                    raise IntegrityError(f"stabilizer word does not fix point {r}")
            expected = group.order() // len(group.orbit(r))
            got = PermutationGroup(perms, degree=group.degree).order() if perms else 1
            if got != expected:
                raise IntegrityError(f"stabilizer words generate order {got}, expected {expected}")

    def encode(self, pi: Permutation) -> Word:
        return self.control.encode(pi)

    def symmetric_word(self, point: int) -> Word:
        """Word over the expanded generators for ``t_point``."""
        sigma = self._schreier[point]
        return invert_word(sigma) + (self.t_letter(point),) + sigma

    def relation_word(self, relation: SymRelation) -> Word:
        pi_word = relation.pi_word if relation.pi_word is not None else self.encode(relation.pi)
        out = tuple(pi_word)
        for i in relation.word:
            out += self.symmetric_word(i)
        return free_reduce(out)

    def with_relations(self, extra: Iterable[SymRelation]) -> "SymmetricPresentation":
        return SymmetricPresentation(
            self.progenitor,
            self.relations + tuple(extra),
            self.control,
            self.stabilizer_words,
            self.name,
        )

    def expand(self) -> tuple[Presentation, tuple[Word, ...]]:
        """Ordinary presentation of the target and the words generating ``N``."""
        base = self.control.presentation
        names = base.generators + self.t_names
        rels: list[Word] = list(base.relators)
        for k, (r, words) in enumerate(zip(self.progenitor.representatives, self.stabilizer_words)):
            t = self.rank + k + 1
            rels.append((t, t))
            for s in words:
                rel = commutator((t,), s)
                if rel:
                    rels.append(rel)
        for relation in self.relations:
            rel = self.relation_word(relation)
            if not rel:
                logger.warning("relation %s expands to the empty word", relation.format(self.progenitor))
                continue
            rels.append(rel)
        subgroup = tuple((k + 1,) for k in range(self.rank))
        return Presentation(names, tuple(rels)), subgroup


def expand_to_ordinary(sp: SymmetricPresentation) -> tuple[Presentation, tuple[Word, ...]]:
    return sp.expand()


# -- enumeration ----------------------------------------------------------


class EnumerationResult:
    """A completed enumeration of the cosets of ``N`` in the target group."""

    def __init__(self, symmetric: SymmetricPresentation, presentation: Presentation, table: CosetTable) -> None:
        self.symmetric = symmetric
        self.presentation = presentation
        self.table = table

    @property
    def index(self) -> int:
        return self.table.index

    @property
    def stats(self):
        return self.table.stats

    @cached_property
    def coset_action(self) -> PermutationGroup:
        return self.table.coset_action()

    @cached_property
    def control_image(self) -> PermutationGroup:
        gens = self.coset_action.generators[: self.symmetric.rank]
        return PermutationGroup(gens, degree=self.index)

    @cached_property
    def control_embeds(self) -> bool:
        return self.control_image.order() == self.symmetric.progenitor.control.order()

    @property
    def order(self) -> int:
        return self.index * self.control_image.order()

    def word_image(self, word: Sequence[int]) -> Permutation:
        return Permutation._trusted(np.asarray(self.table.trace_all(word), dtype=np.int32))

    def t_image(self, point: int) -> Permutation:
        return self.word_image(self.symmetric.symmetric_word(point))

    @cached_property
    def t_images(self) -> tuple[Permutation, ...]:
        return tuple(self.t_image(i) for i in range(self.symmetric.progenitor.n))

    def control_element_image(self, pi: Permutation) -> Permutation:
        return self.word_image(self.symmetric.encode(pi))


def enumerate_cosets(sp: SymmetricPresentation, limits: EnumerationLimits | None = None) -> EnumerationResult:
    """Enumerate the cosets of ``N`` in the target of ``sp``.

    :raises EnumerationOverflow: passed through from the enumerator.
    """
    presentation, subgroup = sp.expand()
    limits = (limits or EnumerationLimits()).within_budget(2 * presentation.rank)
    logger.info(
        "enumerating %s: %d generators, %d relators, cap %d",
        sp.name, presentation.rank, len(presentation.relators), limits.max_cosets,
    )
    table = todd_coxeter(presentation, subgroup, limits)
    logger.info("%s: index %d in %.2fs", sp.name, table.index, table.stats.seconds)
    return EnumerationResult(sp, presentation, table)


def conjugation_law_violations(result: EnumerationResult, samples: int = 100, seed: int = 0) -> int:
    """Count sampled ``(g, i)`` where ``t_i^g`` differs from ``t_{g(i)}`` in the image."""
    rng = random.Random(seed)
    control = result.symmetric.progenitor.control
    n = control.degree
    bad = 0
    for _ in range(samples):
        g = control.random_element(rng)
        i = rng.randrange(n)
        G = result.control_element_image(g)
        if result.t_images[i].conjugate(G) != result.t_images[g(i)]:
            bad += 1
    return bad


# -- double cosets ----------------------------------------------------------


@dataclass(frozen=True)
class DoubleCoset:
    label: int
    representative: int
    word: tuple[int, ...]
    size: int
    stabilizer_order: int


@dataclass(frozen=True)
class DoubleCosetTable:
    """``N``-orbits on the cosets with their ``t``-edges.

    ``edges`` holds ``(source, target, points)``: from the representative of
    double coset ``source``, ``t_i`` leads into ``target`` for every ``i`` in
    ``points``.
    """

    double_cosets: tuple[DoubleCoset, ...]
    edges: tuple[tuple[int, int, tuple[int, ...]], ...]
    index: int
    coset_labels: np.ndarray = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.double_cosets)

    def total(self) -> int:
        return sum(dc.size for dc in self.double_cosets)

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        for dc in self.double_cosets:
            g.add_node(dc.label, size=dc.size, stabilizer_order=dc.stabilizer_order, word=dc.word)
        for src, dst, points in self.edges:
            g.add_edge(src, dst, points=points)
        return g

    def is_connected(self) -> bool:
        return nx.is_connected(nx.Graph(self.graph()))

    def diameter(self) -> int:
        return max((len(dc.word) for dc in self.double_cosets), default=0)


def double_coset_analysis(result: EnumerationResult) -> DoubleCosetTable:
    table = result.table
    table.certify()
    index = result.index
    n = result.symmetric.progenitor.n
    labels = np.full(index, -1, dtype=np.int64)
    orbits = result.control_image.orbits()
    orbit_of = np.empty(index, dtype=np.int64)
    for k, orb in enumerate(orbits):
        orbit_of[orb] = k
    t_lists = [t.as_list() for t in result.t_images]
    image_order = result.control_image.order()

    found: dict[int, int] = {}
    reps: list[tuple[int, tuple[int, ...]]] = []
    words: list[tuple[int, ...] | None] = [None] * index
    words[0] = ()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        orb = int(orbit_of[c])
        if orb not in found:
            found[orb] = len(reps)
            reps.append((c, words[c]))
        for i in range(n):
            d = t_lists[i][c]
            if words[d] is None:
                words[d] = words[c] + (i,)
                queue.append(d)
    if len(found) != len(orbits):
        raise IntegrityError("t-edges do not reach every double coset")
    for orb, label in found.items():
        labels[orbits[orb]] = label

    double_cosets = []
    edges = []
    for label, (c, word) in enumerate(reps):
        size = len(orbits[int(orbit_of[c])])
        double_cosets.append(DoubleCoset(label, c, word, size, image_order // size))
        targets: dict[int, list[int]] = {}
        for i in range(n):
            targets.setdefault(int(labels[t_lists[i][c]]), []).append(i)
        for dst in sorted(targets):
            edges.append((label, dst, tuple(targets[dst])))
    out = DoubleCosetTable(tuple(double_cosets), tuple(edges), index, labels)
    if out.total() != index:
        raise IntegrityError(f"double coset sizes sum to {out.total()}, not {index}")
    return out


def coset_stabilizer(result: EnumerationResult, dc: DoubleCoset) -> PermutationGroup:
    """``N^(w)`` for a double coset, as a subgroup of the control group on its points."""
    image = result.control_image
    stab = image.point_stabilizer([dc.representative])
    if not stab.generators:
        return PermutationGroup([], degree=result.symmetric.progenitor.n, order=1)
    lifting = LiftingMap(list(image.generators), list(result.symmetric.control.images), image.order())
    return PermutationGroup([lifting(g) for g in stab.generators], degree=result.symmetric.progenitor.n)


# -- lemmas -----------------------------------------------------------------


def lemma_centralizer(progenitor: Progenitor, points: Sequence[int]) -> PermutationGroup:
    """``C_N(Stab_N(points))``: the control elements a relation in ``t_points`` may use."""
    points = list(points)
    control = progenitor.control
    stab = control.point_stabilizer(points)
    action = progenitor.action
    if action is None or action.recipe.kind == "natural":
        return control.centralizer(stab)
    source = action.source
    stab_src = PermutationGroup([action.lift(g) for g in stab.generators], degree=source.degree)
    cent = source.centralizer(stab_src)
    images = [action.image(g) for g in cent.generators]
    return PermutationGroup(images, degree=progenitor.n, order=cent.order())


def lemma_violations(result: EnumerationResult, i: int, j: int, max_length: int = 8) -> list[tuple[int, ...]]:
    """Words in ``t_i, t_j`` up to ``max_length`` landing in ``N`` but outside ``C_N(Stab_N(i, j))``."""
    sp = result.symmetric
    cent = lemma_centralizer(sp.progenitor, [i, j])
    allowed = PermutationGroup(
        [result.control_element_image(g) for g in cent.generators], degree=result.index
    )
    ti, tj = result.t_images[i], result.t_images[j]
    image = result.control_image
    bad = []
    for length in range(1, max_length + 1):
        for first, second in ((i, j), (j, i)):
            word = tuple(first if k % 2 == 0 else second for k in range(length))
            perm = Permutation.identity(result.index)
            for letter in word:
                perm = perm * (ti if letter == i else tj)
            if image.contains(perm) and not allowed.contains(perm):
                bad.append(word)
    return bad


@dataclass(frozen=True)
class PerfectnessReport:
    abelianization: int
    control_perfect: bool
    odd_relation: bool
    faithful: bool

    @property
    def lemma_applies(self) -> bool:
        return self.control_perfect

    @property
    def consistent(self) -> bool | None:
        """None when the control group is not perfect."""
        if not self.control_perfect:
            return None
        if self.odd_relation:
            return self.abelianization == 1
        return self.abelianization in (1, 2)


def perfectness_report(result: EnumerationResult) -> PerfectnessReport:
    result.table.certify()
    sp = result.symmetric
    return PerfectnessReport(
        abelianization=result.coset_action.abelianization_order(),
        control_perfect=sp.progenitor.control.is_perfect(),
        odd_relation=any(rel.t_length % 2 == 1 for rel in sp.relations),
        faithful=result.control_embeds,
    )


def is_image_perfect(result: EnumerationResult) -> bool:
    return perfectness_report(result).abelianization == 1


# -- relation search --------------------------------------------------------


@dataclass(frozen=True)
class SearchOutcome:
    pi: Permutation
    index: int | None

    @property
    def overflowed(self) -> bool:
        return self.index is None


@dataclass(frozen=True)
class SearchReport:
    template: RelationTemplate
    candidates: tuple[Permutation, ...]
    outcomes: tuple[SearchOutcome, ...]
    cap: int

    @property
    def empty(self) -> bool:
        return not self.candidates

    @property
    def survivors(self) -> tuple[SearchOutcome, ...]:
        return tuple(o for o in self.outcomes if o.index is not None and 1 < o.index < self.cap)


def _candidate_index(presentation: Presentation, subgroup: tuple[Word, ...], limits: EnumerationLimits) -> int | None:
    try:
        return todd_coxeter(presentation, subgroup, limits).index
    except EnumerationOverflow:
        return None


def _conjugacy_representatives(
    elements: Iterable[Permutation], conjugators: Sequence[Permutation]
) -> list[Permutation]:
    seen: set[bytes] = set()
    reps = []
    for g in sorted(elements):
        if g.key() in seen:
            continue
        reps.append(g)
        seen.add(g.key())
        stack = [g]
        while stack:
            x = stack.pop()
            for c in conjugators:
                y = x.conjugate(c)
                if y.key() not in seen:
                    seen.add(y.key())
                    stack.append(y)
    return reps


def search_candidates(
    progenitor: Progenitor,
    template: RelationTemplate,
    order: int | None = None,
    source: str = "lemma",
) -> list[Permutation]:
    """Candidate values of ``PI``, one per class under the stabilizer of the template points."""
    points = list(template.points())
    control = progenitor.control
    action = progenitor.action
    if source == "lemma":
        pool = lemma_centralizer(progenitor, points)
        elements = [g for g in pool.elements() if not g.is_identity()]
        if order is not None:
            elements = [g for g in elements if g.order() == order]
    elif source == "order":
        if order is None:
            raise ValueError("an order filter is required when searching the whole control group")
        if action is not None and action.recipe.kind != "natural":
            elements = [action.image(g) for g in action.source.elements() if g.order() == order]
        else:
            elements = [g for g in control.elements() if g.order() == order]
    else:
        raise ValueError(f"unknown candidate source {source!r}")
    conjugators = control.point_stabilizer(points).generators
    return _conjugacy_representatives(elements, conjugators)


def relation_search(
    symmetric: SymmetricPresentation,
    template: RelationTemplate,
    *,
    order: int | None = None,
    source: str = "lemma",
    limits: EnumerationLimits | None = None,
    workers: int | None = None,
) -> SearchReport:
    """Try each candidate ``PI`` in ``template`` with a capped enumeration.

    Survivors are candidates whose target has finite index in ``(1, cap)``.
    Results follow the deterministic candidate order.
    """
    limits = limits or EnumerationLimits(max_cosets=SEARCH_DEFAULT_CAP)
    candidates = search_candidates(symmetric.progenitor, template, order, source)
    logger.info("relation search: %d candidates, cap %d", len(candidates), limits.max_cosets)
    jobs = []
    for pi in candidates:
        presentation, subgroup = symmetric.with_relations([template.instantiate(pi)]).expand()
        jobs.append((presentation, subgroup))
    n_workers = min(worker_count(workers), max(1, len(jobs)))
    if n_workers == 1:
        indices = [_candidate_index(p, s, limits) for p, s in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            futures = [pool.submit(_candidate_index, p, s, limits) for p, s in jobs]
            indices = [f.result() for f in futures]
    outcomes = tuple(SearchOutcome(pi, idx) for pi, idx in zip(candidates, indices))
    for outcome in outcomes:
        logger.info("candidate %s: %s", outcome.pi, "overflow" if outcome.overflowed else f"index {outcome.index}")
    return SearchReport(template, tuple(candidates), outcomes, limits.max_cosets)


__all__ = [
    "PI",
    "ControlLetter",
    "ControlPresentation",
    "DoubleCoset",
    "DoubleCosetTable",
    "EnumerationResult",
    "PerfectnessReport",
    "Progenitor",
    "RelationTemplate",
    "SearchOutcome",
    "SearchReport",
    "SymRelation",
    "SymmetricPresentation",
    "conjugation_law_violations",
    "coset_stabilizer",
    "coxeter_presentation",
    "double_coset_analysis",
    "enumerate_cosets",
    "expand_to_ordinary",
    "invert_items",
    "is_image_perfect",
    "lemma_centralizer",
    "lemma_violations",
    "perfectness_report",
    "relation_search",
    "search_candidates",
    "worker_count",
]
