from __future__ import annotations

"""Weyl groups of types A, D and E as permutations of their roots.

The roots are the closure of the simple roots under the simple reflections,
computed in integer coordinates; this gives an independent check on
enumerated symmetric presentations of the same groups.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .errors import IntegrityError
from .groups import PermutationGroup
from .perms import Permutation

logger = logging.getLogger(__name__)

TYPES = ("A", "D", "E")


def _check_type(family: str, rank: int) -> None:
    if family not in TYPES:
        raise ValueError(f"unknown root system type {family!r}")
    if family == "A" and rank < 1:
        raise ValueError("type A needs rank >= 1")
    if family == "D" and rank < 4:
        raise ValueError("type D needs rank >= 4")
    if family == "E" and rank not in (6, 7, 8):
        raise ValueError("type E exists in ranks 6, 7 and 8 only")


def simple_roots(family: str, rank: int) -> np.ndarray:
    """Bourbaki-numbered simple roots; type E is scaled by 2 to stay integral."""
    _check_type(family, rank)
    if family == "A":
        roots = np.zeros((rank, rank + 1), dtype=np.int64)
        for i in range(rank):
            roots[i, i], roots[i, i + 1] = 1, -1
        return roots
    if family == "D":
        roots = np.zeros((rank, rank), dtype=np.int64)
        for i in range(rank - 1):
            roots[i, i], roots[i, i + 1] = 1, -1
        roots[rank - 1, rank - 2] = roots[rank - 1, rank - 1] = 1
        return roots
    e8 = np.zeros((8, 8), dtype=np.int64)
    e8[0] = (1, -1, -1, -1, -1, -1, -1, 1)
    e8[1, 0] = e8[1, 1] = 2
    e8[2, 0], e8[2, 1] = -2, 2
    for k in range(3, 8):
        e8[k, k - 2], e8[k, k - 1] = -2, 2
    return e8[:rank]


def _reflect(v: np.ndarray, alpha: np.ndarray, norm: int) -> np.ndarray:
    coef, rem = divmod(2 * int(v @ alpha), norm)
    if rem:
        raise IntegrityError("non-integral reflection coefficient")
    return v - coef * alpha


def root_system(family: str, rank: int) -> list[tuple[int, ...]]:
    simple = simple_roots(family, rank)
    norm = int(simple[0] @ simple[0])
    seen = {tuple(r) for r in simple.tolist()}
    roots = [np.array(r) for r in simple.tolist()]
    for v in roots:
        for alpha in simple:
            w = _reflect(v, alpha, norm)
            key = tuple(w.tolist())
            if key not in seen:
                seen.add(key)
                roots.append(w)
    return sorted(seen)


def root_count(family: str, rank: int) -> int:
    _check_type(family, rank)
    if family == "A":
        return rank * (rank + 1)
    if family == "D":
        return 2 * rank * (rank - 1)
    return {6: 72, 7: 126, 8: 240}[rank]


def weyl_order(family: str, rank: int) -> int:
    _check_type(family, rank)
    if family == "A":
        return math.factorial(rank + 1)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[rank]


@dataclass(frozen=True)
class WeylGroup:
    family: str
    rank: int
    roots: tuple[tuple[int, ...], ...]
    group: PermutationGroup

    @property
    def reflections(self) -> tuple[Permutation, ...]:
        return self.group.generators

    def coxeter_matrix(self) -> np.ndarray:
        r = self.rank
        out = np.ones((r, r), dtype=np.int64)
        for i in range(r):
            for j in range(i + 1, r):
                out[i, j] = out[j, i] = (self.reflections[i] * self.reflections[j]).order()
        return out


@lru_cache(maxsize=None)
def weyl_oracle(family: str, rank: int) -> WeylGroup:
    """``W(family_rank)`` on its roots; order from the stabilizer chain.

    :raises IntegrityError: if the root count or order disagrees with the
        closed forms.
    """
    roots = root_system(family, rank)
    if len(roots) != root_count(family, rank):
        raise IntegrityError(f"{family}{rank}: {len(roots)} roots, expected {root_count(family, rank)}")
    index = {r: k for k, r in enumerate(roots)}
    simple = simple_roots(family, rank)
    norm = int(simple[0] @ simple[0])
    arr = np.asarray(roots, dtype=np.int64)
    gens = []
    for alpha in simple:
        coef = 2 * (arr @ alpha) // norm
        images = arr - np.outer(coef, alpha)
        gens.append(Permutation([index[tuple(row)] for row in images.tolist()]))
    group = PermutationGroup(gens, degree=len(roots), name=f"W({family}{rank})")
    order = group.order()
    if order != weyl_order(family, rank):
        raise IntegrityError(f"W({family}{rank}) has order {order}, expected {weyl_order(family, rank)}")
    logger.debug("W(%s%d): %d roots, order %d", family, rank, len(roots), order)
    return WeylGroup(family, rank, tuple(roots), group)


def node_map(family: str, rank: int) -> dict[str, int]:
    """Simple root (0-based) for each generator ``s1 .. s_{rank-1}`` and ``t``
    of the matching Coxeter-type symmetric presentation."""
    _check_type(family, rank)
    if family == "A":
        out = {f"s{i}": i for i in range(1, rank)}
        out["t"] = 0
    elif family == "D":
        out = {f"s{i}": rank - i - 1 for i in range(1, rank)}
        out["t"] = rank - 1
    else:
        out = {"s1": 0, "s2": 2, "t": 1}
        out.update({f"s{k}": k for k in range(3, rank)})
    return out


def diagram_violations(
    images: Mapping[str, Permutation], family: str, rank: int
) -> list[tuple[str, str, int, int]]:
    """Pairs of generator images whose product order differs from the Coxeter matrix.

    Returns ``(a, b, expected, got)``; a generator paired with itself is
    reported when its image is not an involution.
    """
    matrix = weyl_oracle(family, rank).coxeter_matrix()
    nodes = node_map(family, rank)
    names = sorted(nodes, key=nodes.get)
    bad = []
    for x, a in enumerate(names):
        if images[a].order() != 2:
            bad.append((a, a, 2, images[a].order()))
        for b in names[x + 1:]:
            expected = int(matrix[nodes[a], nodes[b]])
            got = (images[a] * images[b]).order()
            if got != expected:
                bad.append((a, b, expected, got))
    return bad


def coxeter_relators(family: str, rank: int, names: Sequence[str] | None = None) -> list[str]:
    """The diagram's relators in presentation text, e.g. ``(s1*t)^3``."""
    matrix = weyl_oracle(family, rank).coxeter_matrix()
    nodes = node_map(family, rank)
    names = list(names) if names is not None else sorted(nodes, key=nodes.get)
    out = [f"{a}^2" for a in names]
    for x, a in enumerate(names):
        for b in names[x + 1:]:
            out.append(f"({a}*{b})^{int(matrix[nodes[a], nodes[b]])}")
    return out


__all__ = [
    "TYPES",
    "WeylGroup",
    "coxeter_relators",
    "diagram_violations",
    "node_map",
    "root_count",
    "root_system",
    "simple_roots",
    "weyl_oracle",
    "weyl_order",
]
