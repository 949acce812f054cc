from __future__ import annotations

"""Small finite geometries used as control groups.

* the projective line over GF(16) with ``L2(16):4 = PGammaL(2,16)`` on 17
  points, and its action on the 120 conjugates of a Sylow 17-subgroup;
* ``GF(2)^d`` with ``L_d(2)`` on the nonzero vectors, the 2-dimensional
  subspaces and the 105 matchsticks (a plane together with a point on it).

Vectors over GF(2) and elements of GF(16) are ints read as bit vectors.
"""

import itertools
import logging
import math
import random
from functools import lru_cache

import numpy as np

from .actions import ActionRecipe, InducedAction, induced_action
from .errors import IntegrityError
from .groups import PermutationGroup
from .perms import Permutation

logger = logging.getLogger(__name__)

GF16_MODULUS = 0b10011  # x^4 + x + 1
GF16_ORDER = 16
INFINITY16 = 16
L2_16_4_ORDER = 16320
SYLOW_SEED = 17


def _gf16_tables() -> tuple[np.ndarray, np.ndarray]:
    exp = np.zeros(2 * (GF16_ORDER - 1), dtype=np.int64)
    log = np.zeros(GF16_ORDER, dtype=np.int64)
    x = 1
    for k in range(GF16_ORDER - 1):
        exp[k] = x
        log[x] = k
        x <<= 1
        if x & GF16_ORDER:
            x ^= GF16_MODULUS
    exp[GF16_ORDER - 1:] = exp[: GF16_ORDER - 1]
    if len(set(exp[: GF16_ORDER - 1].tolist())) != GF16_ORDER - 1:
        raise IntegrityError("x^4 + x + 1 is not primitive over GF(2)")
    return exp, log


_EXP, _LOG = _gf16_tables()


def gf16_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(_EXP[_LOG[a] + _LOG[b]])


def gf16_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(16)")
    return int(_EXP[(GF16_ORDER - 1 - _LOG[a]) % (GF16_ORDER - 1)])


def _line_perm(fn) -> Permutation:
    return Permutation([fn(x) for x in range(GF16_ORDER + 1)])


def _translate(x: int) -> int:
    return x if x == INFINITY16 else x ^ 1


def _scale(x: int) -> int:
    return x if x == INFINITY16 else gf16_mul(2, x)


def _invert(x: int) -> int:
    if x == INFINITY16:
        return 0
    if x == 0:
        return INFINITY16
    return gf16_inv(x)


def _frobenius(x: int) -> int:
    return x if x == INFINITY16 else gf16_mul(x, x)


@lru_cache(maxsize=None)
def l2_16_4() -> PermutationGroup:
    """``PGammaL(2,16)`` on the projective line, from ``x+1``, ``wx``, ``1/x`` and ``x^2``."""
    gens = [_line_perm(f) for f in (_translate, _scale, _invert, _frobenius)]
    group = PermutationGroup(gens, degree=GF16_ORDER + 1, name="L2(16):4")
    if group.order() != L2_16_4_ORDER:
        raise IntegrityError(f"L2(16):4 generators span order {group.order()}")
    return group


def sylow17_action(seed: int = SYLOW_SEED) -> InducedAction:
    """L2(16):4 on the 120 conjugates of a subgroup of order 17."""
    group = l2_16_4()
    rng = random.Random(seed)
    while True:
        g = group.random_element(rng)
        if g.order() == 17:
            break
    action = induced_action(group, ActionRecipe.conjugates(g))
    if action.degree != 120 or not action.group.is_transitive():
        raise IntegrityError(f"conjugates of an element of order 17 gave degree {action.degree}")
    return action


# -- GF(2)^d ----------------------------------------------------------------


def _apply(columns: tuple[int, ...], v: int) -> int:
    out = 0
    for i, col in enumerate(columns):
        if v >> i & 1:
            out ^= col
    return out


def _matrix_perm(columns: tuple[int, ...]) -> Permutation:
    """Permutation of the nonzero vectors; vector ``v`` is point ``v - 1``."""
    size = 1 << len(columns)
    return Permutation([_apply(columns, v) - 1 for v in range(1, size)])


def linear_group_order(dim: int) -> int:
    return math.prod((1 << dim) - (1 << k) for k in range(dim))


@lru_cache(maxsize=None)
def linear_group(dim: int) -> PermutationGroup:
    """``L_d(2) = GL_d(2)`` on the ``2^d - 1`` nonzero vectors.

    Generated by the coordinate cycle, a coordinate swap and the transvection
    ``e_1 -> e_1 + e_2``.
    """
    if dim < 2:
        raise ValueError("linear groups need dimension at least 2")
    basis = tuple(1 << i for i in range(dim))
    cycle = basis[1:] + basis[:1]
    swap = (basis[1], basis[0]) + basis[2:]
    transvection = (basis[0] ^ basis[1],) + basis[1:]
    gens = [_matrix_perm(c) for c in (cycle, swap, transvection)]
    group = PermutationGroup(gens, name=f"L{dim}(2)")
    expected = linear_group_order(dim)
    if group.order() != expected:
        raise IntegrityError(f"L{dim}(2) generators span order {group.order()}, not {expected}")
    return group


def planes(dim: int = 4) -> list[frozenset[int]]:
    """2-dimensional subspaces as sets of the three nonzero points on them."""
    out = set()
    for a, b in itertools.combinations(range(1, 1 << dim), 2):
        out.add(frozenset((a - 1, b - 1, (a ^ b) - 1)))
    return sorted(out, key=sorted)


def matchsticks(dim: int = 4) -> InducedAction:
    """``L_d(2)`` on incident (plane, point) pairs; 105 of them for ``d = 4``."""
    labels = [(plane, p) for plane in planes(dim) for p in sorted(plane)]
    action = induced_action(linear_group(dim), ActionRecipe.family(labels, "matchsticks"))
    logger.debug("%d planes, %d matchsticks", len(labels) // 3, action.degree)
    return action


def plane_action(dim: int = 4) -> InducedAction:
    return induced_action(linear_group(dim), ActionRecipe.family(planes(dim), "planes"))


__all__ = [
    "GF16_MODULUS",
    "L2_16_4_ORDER",
    "gf16_inv",
    "gf16_mul",
    "l2_16_4",
    "linear_group",
    "linear_group_order",
    "matchsticks",
    "plane_action",
    "planes",
    "sylow17_action",
]
