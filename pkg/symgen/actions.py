from __future__ import annotations

"""Induced actions of a permutation group on combinatorial objects.

Every object gets a dense index; the labeling table is kept so relations can
refer to objects (``t[1234]`` for a 4-subset, ``t[#17]`` for object 17).
"""

import itertools
import logging
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

import numpy as np

from .errors import IntegrityError, NotASubgroupError, RecipeError, WordError
from .groups import LiftingMap, PermutationGroup, StabilizerChain
from .perms import COMPACT_ALPHABET, Permutation, parse_point

logger = logging.getLogger(__name__)

Label = Hashable

KINDS = ("natural", "subsets", "partitions", "family", "cosets", "conjugates", "relabeled")


@dataclass(frozen=True)
class ActionRecipe:
    """How to build an induced action; ``params`` depend on ``kind``."""

    kind: str
    params: tuple[Any, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise RecipeError(f"unknown action kind {self.kind!r}")

    @classmethod
    def natural(cls) -> "ActionRecipe":
        return cls("natural")

    @classmethod
    def subsets(cls, *sizes: int) -> "ActionRecipe":
        return cls("subsets", tuple(sizes))

    @classmethod
    def partitions(cls, *shape: int) -> "ActionRecipe":
        return cls("partitions", tuple(sorted(shape, reverse=True)))

    @classmethod
    def family(cls, labels: Sequence[Label], name: str = "family") -> "ActionRecipe":
        return cls("family", tuple(labels), name=name)

    @classmethod
    def cosets(cls, subgroup: Sequence[Permutation]) -> "ActionRecipe":
        return cls("cosets", tuple(subgroup))

    @classmethod
    def conjugates(cls, element: Permutation) -> "ActionRecipe":
        return cls("conjugates", (element,))

    @classmethod
    def relabeled(cls, mapping: Permutation) -> "ActionRecipe":
        return cls("relabeled", (mapping,))

    def describe(self) -> str:
        if self.kind in ("subsets", "partitions"):
            return f"{self.kind} {','.join(map(str, self.params))}"
        if self.kind == "family":
            return f"family {self.name} ({len(self.params)} objects)"
        return self.kind


def act_on_label(label: Label, images: Sequence[int]) -> Label:
    """Image of a label built from points, frozensets and tuples."""
    if isinstance(label, (int, np.integer)):
        return images[label]
    if isinstance(label, frozenset):
        return frozenset(act_on_label(x, images) for x in label)
    if isinstance(label, tuple):
        return tuple(act_on_label(x, images) for x in label)
    raise RecipeError(f"cannot act on label {label!r}")


def set_partitions(points: Sequence[int], shape: Sequence[int]) -> list[frozenset[frozenset[int]]]:
    """All partitions of ``points`` into blocks with the given sizes."""
    out: list[frozenset[frozenset[int]]] = []

    def rec(remaining: tuple[int, ...], sizes: Counter, blocks: list[frozenset[int]]) -> None:
        if not remaining:
            out.append(frozenset(blocks))
            return
        first, rest = remaining[0], remaining[1:]
        for size in sorted(s for s in sizes if sizes[s] > 0):
            sizes[size] -= 1
            for combo in itertools.combinations(rest, size - 1):
                block = frozenset((first,) + combo)
                left = tuple(p for p in rest if p not in block)
                rec(left, sizes, blocks + [block])
            sizes[size] += 1

    rec(tuple(points), Counter(shape), [])
    return out


def _partition_count(n: int, shape: Sequence[int]) -> int:
    denom = math.prod(math.factorial(s) for s in shape)
    denom *= math.prod(math.factorial(m) for m in Counter(shape).values())
    return math.factorial(n) // denom


def _sort_key(label: Label) -> Any:
    if isinstance(label, frozenset):
        return (len(label), sorted(_sort_key(x) for x in label))
    if isinstance(label, tuple):
        return tuple(_sort_key(x) for x in label)
    return label


class InducedAction:
    """A source group together with its action on indexed objects."""

    def __init__(
        self,
        source: PermutationGroup,
        recipe: ActionRecipe,
        labels: Sequence[Label],
        image: Callable[[Permutation], Permutation],
    ) -> None:
        self.source = source
        self.recipe = recipe
        self.labels = list(labels)
        self._image = image
        self._index = {label: i for i, label in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise RecipeError("object labels are not distinct")
        self.group = PermutationGroup(
            [image(g) for g in source.generators],
            degree=len(self.labels),
            name=source.name,
        )
        self._lifting: LiftingMap | None = None

    @property
    def degree(self) -> int:
        return len(self.labels)

    def image(self, g: Permutation) -> Permutation:
        return self._image(g)

    def is_faithful(self) -> bool:
        """True when no source element acts trivially on the objects.

        The image is a quotient of the source, so a random chain for it that
        reaches the source order certifies faithfulness.
        """
        try:
            StabilizerChain(self.degree, self.group.generators, order=self.source.order())
        except IntegrityError:
            logger.debug("%s on %d objects has a kernel", self.source.name, self.degree)
            return False
        return True

    def lift(self, g: Permutation) -> Permutation:
        """Source element acting as ``g`` on the objects (action must be faithful)."""
        if self.recipe.kind == "natural":
            return g
        if self._lifting is None:
            if not self.source.generators:
                return self.source.identity()
            self._lifting = LiftingMap(
                list(self.group.generators), list(self.source.generators), self.source.order()
            )
        return self._lifting(g)

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise WordError(f"no object labelled {self.format_label(label)}") from None

    def format_point(self, index: int) -> str:
        return self.format_label(self.labels[index])

    def format_label(self, label: Label) -> str:
        compact = self.source.degree <= len(COMPACT_ALPHABET)
        if isinstance(label, (int, np.integer)):
            return COMPACT_ALPHABET[label] if compact else str(label + 1)
        if isinstance(label, frozenset) and all(isinstance(x, (int, np.integer)) for x in label):
            pts = sorted(label)
            if compact:
                return "".join(COMPACT_ALPHABET[p] for p in pts)
            return "{" + ",".join(str(p + 1) for p in pts) + "}"
        if isinstance(label, frozenset):
            return "|".join(self.format_label(x) for x in sorted(label, key=_sort_key))
        if isinstance(label, Permutation):
            return f"<{label}>"
        return "#" + str(self._index.get(label, -2) + 1)

    def parse_label(self, text: str) -> int:
        """Object index for label text.

        ``#17`` is object 17 in any action. Otherwise points are read as in
        cycle notation: ``7`` in the natural action, ``1234`` or ``1,2,3,4``
        for subsets, ``1234|5678|90xy`` for partitions.
        """
        text = text.strip()
        if text.startswith("#"):
            if not text[1:].isdigit() or not 1 <= int(text[1:]) <= self.degree:
                raise WordError(f"object {text} out of range 1..{self.degree}")
            return int(text[1:]) - 1
        degree = self.source.degree
        kind = self.recipe.kind
        if kind == "natural":
            return parse_point(text, degree)
        if kind == "subsets":
            return self.index_of(self._parse_point_set(text, degree))
        if kind == "partitions":
            blocks = frozenset(self._parse_point_set(part, degree) for part in text.split("|"))
            return self.index_of(blocks)
        raise WordError(f"objects of a {kind} action are named as #n, got {text!r}")

    @staticmethod
    def _parse_point_set(text: str, degree: int) -> frozenset[int]:
        text = text.strip().strip("{}")
        tokens = [tok for tok in re.split(r"[\s,]+", text) if tok]
        if len(tokens) == 1 and degree <= len(COMPACT_ALPHABET):
            tokens = list(tokens[0])
        points = [parse_point(tok, degree) for tok in tokens]
        if len(set(points)) != len(points):
            raise WordError(f"repeated point in {text!r}")
        return frozenset(points)


def _labels_action(
    source: PermutationGroup, recipe: ActionRecipe, labels: Sequence[Label]
) -> InducedAction:
    index = {label: i for i, label in enumerate(labels)}

    def image(g: Permutation) -> Permutation:
        images = g.as_list()
        try:
            return Permutation([index[act_on_label(label, images)] for label in labels])
        except KeyError as exc:
            raise RecipeError(f"the objects are not permuted by {g}") from exc

    return InducedAction(source, recipe, labels, image)


def _cosets_action(source: PermutationGroup, recipe: ActionRecipe) -> InducedAction:
    from .cosets import EnumerationLimits, todd_coxeter
    from .groups import chain_presentation

    chain = source.chain
    for h in recipe.params:
        if not chain.contains(h):
            raise NotASubgroupError(f"{h} is not in the group")
    presentation, _ = chain_presentation(chain)
    subgroup = [chain.sift_word(h) for h in recipe.params]
    table = todd_coxeter(presentation, subgroup, EnumerationLimits(max_cosets=max(1000, 4 * source.degree ** 2)))
    labels = [table.representative_word(c) for c in range(table.index)]

    def image(g: Permutation) -> Permutation:
        word = chain.sift_word(g)
        return Permutation(table.trace_all(word))

    return InducedAction(source, recipe, labels, image)


def _conjugates_action(source: PermutationGroup, recipe: ActionRecipe) -> InducedAction:
    (element,) = recipe.params
    if not source.contains(element):
        raise NotASubgroupError(f"{element} is not in the group")

    def subgroup_key(x: Permutation) -> frozenset[bytes]:
        keys = set()
        power = x
        while not power.is_identity():
            keys.add(power.key())
            power = power * x
        return frozenset(keys)

    reps = [element]
    index = {subgroup_key(element): 0}
    for rep in reps:
        for g in source.generators:
            conj = rep.conjugate(g)
            key = subgroup_key(conj)
            if key not in index:
                index[key] = len(reps)
                reps.append(conj)

    def image(g: Permutation) -> Permutation:
        return Permutation([index[subgroup_key(rep.conjugate(g))] for rep in reps])

    return InducedAction(source, recipe, reps, image)


def _relabeled_action(source: PermutationGroup, recipe: ActionRecipe) -> InducedAction:
    (mapping,) = recipe.params
    if mapping.degree != source.degree:
        raise RecipeError("relabeling map has the wrong degree")
    inverse = mapping.inverse()
    labels = [inverse(i) for i in range(source.degree)]
    return InducedAction(source, recipe, labels, lambda g: g.conjugate(mapping))


def induced_action(group: PermutationGroup, recipe: ActionRecipe) -> InducedAction:
    n = group.degree
    kind = recipe.kind
    if kind == "natural":
        return InducedAction(group, recipe, list(range(n)), lambda g: g)
    if kind == "subsets":
        if not recipe.params or any(not 1 <= k <= n for k in recipe.params):
            raise RecipeError(f"subset sizes {recipe.params} invalid for degree {n}")
        labels = [
            frozenset(c) for k in recipe.params for c in itertools.combinations(range(n), k)
        ]
        action = _labels_action(group, recipe, labels)
        expected = sum(math.comb(n, k) for k in recipe.params)
    elif kind == "partitions":
        if sum(recipe.params) != n or any(s < 1 for s in recipe.params):
            raise RecipeError(f"shape {recipe.params} does not partition {n} points")
        labels = set_partitions(range(n), recipe.params)
        action = _labels_action(group, recipe, labels)
        expected = _partition_count(n, recipe.params)
    elif kind == "family":
        action = _labels_action(group, recipe, list(recipe.params))
        expected = len(recipe.params)
    elif kind == "cosets":
        action = _cosets_action(group, recipe)
        expected = group.order() // PermutationGroup(recipe.params, degree=n).order()
    elif kind == "conjugates":
        action = _conjugates_action(group, recipe)
        expected = action.degree
    else:
        action = _relabeled_action(group, recipe)
        expected = n
    if action.degree != expected:
        raise RecipeError(f"{recipe.describe()}: built {action.degree} objects, expected {expected}")
    logger.debug("induced action %s of degree %d", recipe.describe(), action.degree)
    return action


__all__ = [
    "ActionRecipe",
    "InducedAction",
    "act_on_label",
    "induced_action",
    "set_partitions",
]
