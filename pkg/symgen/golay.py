from __future__ import annotations

"""The binary Golay code, the Steiner system S(5,8,24) and the Mathieu groups.

Subsets of the 24 points are packed into ints, point ``p`` as bit ``p``.
The default construction is the extended quadratic residue code on the
projective line over GF(23) (points ``0..22`` and ``INFINITY = 23``); the
embedded M24 generators are maps of that line. The lexicographic code is
built as an independent second construction.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .actions import ActionRecipe, InducedAction, induced_action
from .errors import IntegrityError
from .groups import PermutationGroup
from .perms import Permutation

logger = logging.getLogger(__name__)

POINTS = 24
INFINITY = 23
FULL_MASK = (1 << POINTS) - 1
P = 23
QUADRATIC_RESIDUES = frozenset(x * x % P for x in range(1, P))
NON_RESIDUES = frozenset(range(1, P)) - QUADRATIC_RESIDUES
EXPECTED_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
M24_ORDER = 244_823_040
CONSTRUCTIONS = ("qr", "lexicode")


def mask_of(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def points_of(mask: int) -> tuple[int, ...]:
    return tuple(p for p in range(POINTS) if mask >> p & 1)


def bitstring(mask: int) -> str:
    """24 characters, bit 0 leftmost."""
    return "".join("1" if mask >> p & 1 else "0" for p in range(POINTS))


def _basis(vectors: Iterable[int]) -> list[int]:
    """Row-reduced GF(2) basis of the span, by leading bit."""
    pivots: dict[int, int] = {}
    for v in vectors:
        v = int(v)
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                break
            v ^= pivots[top]
    return [pivots[k] for k in sorted(pivots, reverse=True)]


def _span(basis: Sequence[int]) -> np.ndarray:
    code = np.zeros(1, dtype=np.int64)
    for v in basis:
        code = np.concatenate([code, code ^ v])
    return np.sort(code)


def _map_masks(masks: np.ndarray, images: Sequence[int]) -> np.ndarray:
    out = np.zeros_like(masks)
    for p, q in enumerate(images):
        out |= ((masks >> p) & 1) << q
    return out


class GolayCode:
    """The 4096 codewords as sorted ints, with the octad/dodecad views."""

    def __init__(self, codewords: Iterable[int], construction: str) -> None:
        self.codewords = np.unique(np.asarray(list(codewords), dtype=np.int64))
        self.codewords.flags.writeable = False
        self.construction = construction
        self.weights = np.bitwise_count(self.codewords)

    def __len__(self) -> int:
        return int(self.codewords.size)

    def __contains__(self, mask: int) -> bool:
        i = int(np.searchsorted(self.codewords, mask))
        return i < self.codewords.size and int(self.codewords[i]) == mask

    def weight_distribution(self) -> dict[int, int]:
        values, counts = np.unique(self.weights, return_counts=True)
        return {int(w): int(c) for w, c in zip(values, counts)}

    def is_linear(self) -> bool:
        return len(self) == 1 << len(_basis(self.codewords.tolist())) and 0 in self

    def words_of_weight(self, weight: int) -> np.ndarray:
        return self.codewords[self.weights == weight]

    def octads(self) -> np.ndarray:
        return self.words_of_weight(8)

    def dodecads(self) -> np.ndarray:
        return self.words_of_weight(12)

    def preserved_by(self, perm: Permutation) -> bool:
        """True if ``perm`` maps octads to octads (hence codewords to codewords)."""
        octads = self.octads()
        mapped = np.sort(_map_masks(octads, perm.as_list()))
        return bool(np.array_equal(mapped, octads))

    def certify(self) -> None:
        dist = self.weight_distribution()
        if dist != EXPECTED_WEIGHTS:
            raise IntegrityError(f"{self.construction} code has weight distribution {dist}")
        if not self.is_linear():
            raise IntegrityError(f"{self.construction} code is not linear")

    def dump_lines(self) -> list[str]:
        """Octads first, then the remaining codewords, each group numerically sorted."""
        octads = self.octads()
        rest = self.codewords[self.weights != 8]
        return [bitstring(int(m)) for m in octads] + [bitstring(int(m)) for m in rest]


# -- constructions ----------------------------------------------------------


def _qr_candidates() -> list[tuple[str, frozenset[int]]]:
    return [
        ("inf+Q", frozenset(QUADRATIC_RESIDUES | {INFINITY})),
        ("inf+N", frozenset(NON_RESIDUES | {INFINITY})),
        ("0+Q", frozenset(QUADRATIC_RESIDUES | {0})),
        ("0+N", frozenset(NON_RESIDUES | {0})),
    ]


def _translate(points: Iterable[int], shift: int) -> list[int]:
    return [p if p == INFINITY else (p + shift) % P for p in points]


def line_map(fn) -> Permutation:
    """Permutation of the projective line given by a map on ``0..22`` and infinity."""
    return Permutation([fn(x) for x in range(POINTS)])


def _alpha(x: int) -> int:
    return x if x == INFINITY else (x + 1) % P


def _gamma(x: int) -> int:
    if x == INFINITY:
        return 0
    if x == 0:
        return INFINITY
    return (-pow(x, -1, P)) % P


def _qr_code() -> GolayCode:
    gamma = line_map(_gamma)
    for name, support in _qr_candidates():
        vectors = [mask_of(_translate(support, i)) for i in range(P)] + [FULL_MASK]
        basis = _basis(vectors)
        if len(basis) != 12:
            continue
        code = GolayCode(_span(basis).tolist(), "qr")
        if code.weight_distribution() != EXPECTED_WEIGHTS or not code.preserved_by(gamma):
            continue
        logger.debug("quadratic residue code spanned by translates of %s", name)
        return code
    raise IntegrityError("no quadratic residue candidate spans the Golay code")


def _lexicode() -> GolayCode:
    """Greedy lexicographic code of length 24 and minimum distance 8.

    The code is linear, so it suffices to track the words within distance 7
    of the span so far; the next basis vector is the least word outside.
    """
    words = np.arange(1 << POINTS, dtype=np.uint32)
    covered = np.bitwise_count(words) <= 7
    basis = []
    while True:
        v = int(np.argmin(covered))
        if covered[v]:
            break
        basis.append(v)
        covered |= covered[words ^ np.uint32(v)]
    return GolayCode(_span(basis).tolist(), "lexicode")


@lru_cache(maxsize=None)
def build_golay(construction: str = "qr") -> GolayCode:
    if construction == "qr":
        code = _qr_code()
    elif construction == "lexicode":
        code = _lexicode()
    else:
        raise ValueError(f"unknown construction {construction!r}; choose from {', '.join(CONSTRUCTIONS)}")
    code.certify()
    logger.info("built %s Golay code: %s", construction, code.weight_distribution())
    return code


# -- Steiner system ---------------------------------------------------------


def steiner_check(blocks: GolayCode | Iterable[int]) -> bool:
    """True iff every 5-subset of the 24 points lies in exactly one block."""
    octads = blocks.octads() if isinstance(blocks, GolayCode) else np.asarray(list(blocks), dtype=np.int64)
    fives = []
    for octad in octads.tolist():
        fives.extend(mask_of(c) for c in itertools.combinations(points_of(octad), 5))
    unique = np.unique(np.asarray(fives, dtype=np.int64))
    return unique.size == len(fives) == math.comb(POINTS, 5)


def octad_intersections(code: GolayCode) -> set[int]:
    octads = code.octads()
    grid = np.bitwise_count(octads[:, None] & octads[None, :])
    np.fill_diagonal(grid, 0)
    return {int(x) for x in np.unique(grid)}


def trios(code: GolayCode) -> list[tuple[int, int, int]]:
    """All partitions of the points into three octads, as sorted mask triples."""
    octads = code.octads()
    out = []
    for o1 in octads.tolist():
        disjoint = octads[(octads & o1) == 0]
        for o2 in disjoint[disjoint > o1].tolist():
            o3 = FULL_MASK ^ o1 ^ o2
            if o3 > o2:
                out.append((o1, o2, o3))
    return out


def _as_label(mask: int) -> frozenset[int]:
    return frozenset(points_of(mask))


# -- Mathieu groups ---------------------------------------------------------

# x -> x^3 on residues, 2 x^3 on non-residues; fixes 0 and infinity
DELTA_IMAGES = (0, 1, 8, 4, 18, 20, 9, 19, 6, 16, 22, 17, 3, 12, 14, 11, 2, 5, 13, 10, 15, 7, 21, 23)


def psl_2_23() -> PermutationGroup:
    """PSL(2,23) on the projective line, generated by ``x -> x+1`` and ``x -> -1/x``."""
    return PermutationGroup([line_map(_alpha), line_map(_gamma)], order=P * (P * P - 1) // 2, name="L2(23)")


@lru_cache(maxsize=None)
def m24(code: GolayCode) -> PermutationGroup:
    """M24 as the automorphism group of the octads, from embedded generators.

    :raises IntegrityError: if a generator fails to preserve the octads or
        ``delta`` falls inside PSL(2,23).
    """
    psl = psl_2_23()
    delta = Permutation(DELTA_IMAGES)
    for g in (*psl.generators, delta):
        if not code.preserved_by(g):
            raise IntegrityError(f"embedded generator {g} does not preserve the octads")
    if psl.contains(delta):
        raise IntegrityError("embedded generator delta lies in PSL(2,23)")
    return PermutationGroup([*psl.generators, delta], order=M24_ORDER, name="M24")


def m22(code: GolayCode, a: int = INFINITY, b: int = 0) -> PermutationGroup:
    """Pointwise stabilizer of ``a`` and ``b`` in M24."""
    if a == b:
        raise ValueError("the two fixed points must differ")
    stab = m24(code).point_stabilizer([a, b])
    stab.name = "M22"
    return stab


# -- induced actions --------------------------------------------------------


def octad_action(code: GolayCode) -> InducedAction:
    labels = [_as_label(m) for m in code.octads().tolist()]
    return induced_action(m24(code), ActionRecipe.family(labels, "octads"))


def dodecad_action(code: GolayCode) -> InducedAction:
    labels = [_as_label(m) for m in code.dodecads().tolist()]
    return induced_action(m24(code), ActionRecipe.family(labels, "dodecads"))


def trio_action(code: GolayCode) -> InducedAction:
    labels = [frozenset(_as_label(m) for m in trio) for trio in trios(code)]
    return induced_action(m24(code), ActionRecipe.family(labels, "trios"))


def tetrad_action(code: GolayCode) -> InducedAction:
    return induced_action(m24(code), ActionRecipe.subsets(4))


def dodecads_672(code: GolayCode, a: int = INFINITY, b: int = 0) -> InducedAction:
    """Dodecads containing ``a`` but not ``b``, permuted by M22."""
    dodecads = code.dodecads()
    chosen = dodecads[((dodecads >> a) & 1 == 1) & ((dodecads >> b) & 1 == 0)]
    labels = [_as_label(m) for m in chosen.tolist()]
    return induced_action(m22(code, a, b), ActionRecipe.family(labels, "dodecads"))


def label_masks(action: InducedAction) -> np.ndarray:
    return np.asarray([mask_of(label) for label in action.labels], dtype=np.int64)


@dataclass(frozen=True)
class DodecadPairs:
    """Members of a dodecad family meeting ``representative`` in 8 points."""

    representative: int
    partners: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]


def dodecad_pairs_meeting_in_8(family: InducedAction, representative: int = 0) -> DodecadPairs:
    masks = label_masks(family)
    meet = np.bitwise_count(masks & masks[representative])
    partners = tuple(int(i) for i in np.flatnonzero(meet == 8))
    stab = family.group.point_stabilizer([representative])
    partner_set = set(partners)
    orbits = tuple(
        tuple(orb) for orb in stab.orbits() if orb[0] in partner_set
    ) if stab.generators else tuple((p,) for p in partners)
    return DodecadPairs(representative, partners, orbits)


def intersection_sizes(family: InducedAction) -> set[int]:
    """All values of ``|A & B|`` over ordered pairs of distinct family members."""
    masks = label_masks(family)
    grid = np.bitwise_count(masks[:, None] & masks[None, :])
    off_diagonal = ~np.eye(len(masks), dtype=bool)
    return {int(x) for x in np.unique(grid[off_diagonal])}


__all__ = [
    "DELTA_IMAGES",
    "DodecadPairs",
    "GolayCode",
    "INFINITY",
    "M24_ORDER",
    "bitstring",
    "build_golay",
    "dodecad_action",
    "dodecad_pairs_meeting_in_8",
    "dodecads_672",
    "intersection_sizes",
    "line_map",
    "m22",
    "m24",
    "mask_of",
    "octad_action",
    "octad_intersections",
    "points_of",
    "psl_2_23",
    "steiner_check",
    "tetrad_action",
    "trio_action",
    "trios",
]
