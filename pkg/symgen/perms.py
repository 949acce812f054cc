from __future__ import annotations

"""Permutations on ``{0..degree-1}`` stored as numpy image arrays.

The action is on the right: ``(a * b)(x) == b(a(x))``. Text uses cycle
notation with 1-based points, e.g. ``"(1 2 3)(4 5)"``; the identity prints
as ``"()"``.
"""

import math
import re
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatchError, PointOutOfRangeError, WordError

# Single-character point names used for compact cycles such as "(12)(34)".
# "0" stands for 10, "x" and "y" for 11 and 12.
COMPACT_ALPHABET = "1234567890xy"

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_POINT_SEP_RE = re.compile(r"[\s,]+")


class Permutation:
    __slots__ = ("_images", "_key", "_list")

    def __init__(self, images: Iterable[int] | np.ndarray) -> None:
        arr = np.array(images, dtype=np.int32)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a permutation needs a non-empty 1-d image array")
        check = np.zeros(arr.size, dtype=bool)
        if arr.min() < 0 or arr.max() >= arr.size:
            raise ValueError("images out of range")
        check[arr] = True
        if not check.all():
            raise ValueError("images do not form a bijection")
        self._set(arr)

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Permutation":
        obj = cls.__new__(cls)
        obj._set(arr)
        return obj

    def _set(self, arr: np.ndarray) -> None:
        arr.flags.writeable = False
        self._images = arr
        self._key = None
        self._list = None

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._trusted(np.arange(degree, dtype=np.int32))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-based cycles; later cycles act after earlier ones."""
        result = cls.identity(degree)
        for cycle in cycles:
            arr = np.arange(degree, dtype=np.int32)
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for i, point in enumerate(cycle):
                if not 0 <= point < degree:
                    raise PointOutOfRangeError(f"point {point + 1} exceeds degree {degree}")
                arr[point] = cycle[(i + 1) % len(cycle)]
            result = result * cls._trusted(arr)
        return result

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation.

        Points inside a cycle are separated by spaces or commas. When the
        degree is at most 12 a cycle written without separators, such as
        ``(45)``, is read one character per point over ``1..9 0 x y``.
        """
        stripped = text.strip()
        if not stripped:
            raise WordError("empty permutation text")
        rest = _CYCLE_RE.sub("", stripped)
        if rest.strip(" *"):
            raise WordError(f"unexpected text {rest.strip()!r} in permutation {text!r}")
        cycles = [parse_cycle(body, degree) for body in _CYCLE_RE.findall(stripped)]
        return cls.from_cycles(cycles, degree)

    # -- basic accessors --------------------------------------------------

    @property
    def degree(self) -> int:
        return int(self._images.size)

    @property
    def images(self) -> np.ndarray:
        return self._images

    def as_list(self) -> list[int]:
        if self._list is None:
            self._list = self._images.tolist()
        return self._list

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._images.tobytes()
        return self._key

    def __call__(self, point: int) -> int:
        if not 0 <= point < self.degree:
            raise PointOutOfRangeError(f"point {point} out of range for degree {self.degree}")
        return int(self._images[point])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other: "Permutation") -> bool:
        return self.as_list() < other.as_list()

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._images)
        inv[self._images] = np.arange(self.degree, dtype=np.int32)
        return Permutation._trusted(inv)

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = Permutation.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by^-1 * self * by``."""
        return by.inverse() * self * by

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def support(self) -> list[int]:
        return np.flatnonzero(self._images != np.arange(self.degree)).tolist()

    def first_moved(self, limit: int | None = None) -> int | None:
        moved = np.flatnonzero(self._images[:limit] != np.arange(self.degree)[:limit])
        return int(moved[0]) if moved.size else None

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        images = self.as_list()
        seen = [False] * len(images)
        out = []
        for start in range(len(images)):
            if seen[start] or images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            point = images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = images[point]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return the permutation sending ``x`` to ``b(a(x))``."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} and {b.degree}")
    return Permutation._trusted(b.images[a.images])


def parse_cycle(body: str, degree: int) -> list[int]:
    """Parse the inside of one 1-based cycle into 0-based points."""
    body = body.strip()
    if not body:
        return []
    tokens = [tok for tok in _POINT_SEP_RE.split(body) if tok]
    if len(tokens) == 1 and len(tokens[0]) > 1 and degree <= len(COMPACT_ALPHABET):
        tokens = list(tokens[0])
    return [parse_point(tok, degree) for tok in tokens]


def parse_point(token: str, degree: int) -> int:
    """Read one 1-based point name (digits, or a compact alphabet letter)."""
    if token.isdigit() and not (token == "0" and degree <= len(COMPACT_ALPHABET)):
        value = int(token) - 1
    elif len(token) == 1 and token in COMPACT_ALPHABET:
        value = COMPACT_ALPHABET.index(token)
    else:
        raise WordError(f"cannot read point {token!r}")
    if not 0 <= value < degree:
        raise PointOutOfRangeError(f"point {token} exceeds degree {degree}")
    return value


def evaluate(word: Sequence[int], generators: Sequence[Permutation], degree: int) -> Permutation:
    """Evaluate a signed-index word (``k+1`` for generator ``k``, ``-(k+1)`` for its inverse)."""
    arr = np.arange(degree, dtype=np.int32)
    inverses: dict[int, np.ndarray] = {}
    for letter in word:
        k = abs(letter) - 1
        if not 0 <= k < len(generators):
            raise WordError(f"letter {letter} refers to an undeclared generator")
        if letter > 0:
            arr = generators[k].images[arr]
        else:
            if k not in inverses:
                inverses[k] = generators[k].inverse().images
            arr = inverses[k][arr]
    return Permutation._trusted(arr)


__all__ = [
    "COMPACT_ALPHABET",
    "Permutation",
    "compose",
    "evaluate",
    "parse_cycle",
    "parse_point",
]
