from __future__ import annotations

"""Elements of a target group written as ``pi * w``.

``pi`` is a control element and ``w`` a short word in the symmetric
generators. The canonical form uses, for each coset of ``N``, one
breadth-first shortest ``t``-word reaching it; ``pi`` is then forced.
"""

import logging
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .constants import SYMREP_MAX_INDEX
from .errors import ContextError, WordError
from .groups import LiftingMap, PermutationGroup
from .perms import Permutation
from .progenitor import EnumerationResult

logger = logging.getLogger(__name__)

_TEXT_RE = re.compile(r"^\s*pi\s*=\s*(?P<pi>.*?)\s*;\s*w\s*=\s*(?P<w>.*?)\s*$")


@dataclass(frozen=True)
class SymElement:
    pi: Permutation
    word: tuple[int, ...] = ()


class SymContext:
    """Canonical forms and arithmetic over a completed enumeration."""

    def __init__(self, result: EnumerationResult, max_index: int = SYMREP_MAX_INDEX) -> None:
        if result.index > max_index:
            raise ContextError(f"index {result.index} is above the limit {max_index} for element arithmetic")
        result.table.certify()
        if not result.control_embeds:
            raise ContextError("the control group does not embed in the target")
        self.result = result
        self.progenitor = result.symmetric.progenitor
        self.index = result.index
        self._t_arrays = [t.images for t in result.t_images]
        self.words = self._bfs_words()
        image = result.control_image
        self._lifting = LiftingMap(list(image.generators), list(result.symmetric.control.images), image.order())
        logger.debug("element context over %d cosets, diameter %d", self.index, self.diameter)

    def _bfs_words(self) -> list[tuple[int, ...]]:
        words: list[tuple[int, ...] | None] = [None] * self.index
        words[0] = ()
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for i, images in enumerate(self._t_arrays):
                d = int(images[c])
                if words[d] is None:
                    words[d] = words[c] + (i,)
                    queue.append(d)
        if any(w is None for w in words):
            raise ContextError("the symmetric generators do not reach every coset")
        return words  # type: ignore[return-value]

    @cached_property
    def diameter(self) -> int:
        return max(len(w) for w in self.words)

    @property
    def control(self) -> PermutationGroup:
        return self.progenitor.control

    # -- images ----------------------------------------------------------

    def word_image(self, word: Sequence[int]) -> Permutation:
        arr = np.arange(self.index)
        for i in word:
            arr = self._t_arrays[i][arr]
        return Permutation(arr)

    def image(self, e: SymElement) -> Permutation:
        """The element as a permutation of the cosets."""
        return self.result.control_element_image(e.pi) * self.word_image(e.word)

    def from_image(self, g: Permutation) -> SymElement:
        """Canonical element with coset-action image ``g``.

        :raises ContextError: if the recovered control part is not in the
            image of ``N``.
        """
        word = self.words[g(0)]
        h = g * self.word_image(word).inverse()
        if not self.result.control_image.contains(h):
            raise ContextError("control part could not be recovered; the context is inconsistent")
        return SymElement(self._lifting(h), word)

    # -- arithmetic ------------------------------------------------------

    def identity(self) -> SymElement:
        return SymElement(self.control.identity(), ())

    def canonicalize(self, e: SymElement) -> SymElement:
        self._check(e)
        return self.from_image(self.image(e))

    def multiply(self, a: SymElement, b: SymElement) -> SymElement:
        self._check(a)
        self._check(b)
        return self.from_image(self.image(a) * self.image(b))

    def invert(self, a: SymElement) -> SymElement:
        self._check(a)
        return self.from_image(self.image(a).inverse())

    def equal(self, a: SymElement, b: SymElement) -> bool:
        return self.canonicalize(a) == self.canonicalize(b)

    def random_element(self, rng: random.Random | None = None) -> SymElement:
        """A uniformly random coset and control element, in canonical form."""
        rng = rng or random.Random()
        pi = self.control.random_element(rng)
        return SymElement(pi, self.words[rng.randrange(self.index)])

    def _check(self, e: SymElement) -> None:
        if e.pi.degree != self.progenitor.n:
            raise WordError(f"control element has degree {e.pi.degree}, expected {self.progenitor.n}")
        for i in e.word:
            if not 0 <= i < self.progenitor.n:
                raise WordError(f"symmetric generator t{i + 1} out of range 1..{self.progenitor.n}")

    # -- text ------------------------------------------------------------

    def format(self, e: SymElement) -> str:
        """``pi = (cycles) ; w = t3 t17 t3`` with ``pi`` in the control group's own points."""
        action = self.progenitor.action
        pi = action.lift(e.pi) if action is not None else e.pi
        word = " ".join(f"t{i + 1}" for i in e.word) or "1"
        return f"pi = {pi} ; w = {word}"

    def parse(self, text: str) -> SymElement:
        m = _TEXT_RE.match(text)
        if not m:
            raise WordError(f"expected 'pi = (cycles) ; w = t1 t2 ...', got {text!r}")
        action = self.progenitor.action
        degree = action.source.degree if action is not None else self.progenitor.n
        pi = Permutation.parse(m.group("pi") or "()", degree)
        if action is not None:
            if not action.source.contains(pi):
                raise WordError(f"{pi} is not in the control group")
            pi = action.image(pi)
        elif not self.control.contains(pi):
            raise WordError(f"{pi} is not in the control group")
        word = []
        for tok in m.group("w").split():
            if tok == "1":
                continue
            if not re.fullmatch(r"t\d+", tok):
                raise WordError(f"cannot read symmetric generator {tok!r}")
            word.append(int(tok[1:]) - 1)
        e = SymElement(pi, tuple(word))
        self._check(e)
        return e


__all__ = ["SymContext", "SymElement"]
