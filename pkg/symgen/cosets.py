from __future__ import annotations

"""Todd-Coxeter coset enumeration.

Two strategies share one table and one coincidence routine:

* ``felsch``: define the first undefined entry in coset order, then scan
  every relator conjugate starting with the new letter (deduction stack).
* ``hlt``: scan-and-fill each relator at each coset in turn; when the table
  is full, a lookahead pass scans all cosets without defining.

Rows of dead cosets stay in place until the finished table is compacted,
which renumbers the live cosets in breadth-first order from coset 0.
"""

import logging
import os
import time
from collections import deque
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .constants import (
    BYTES_PER_TABLE_ENTRY,
    DEFAULT_MAX_COSETS,
    DEFAULT_STRATEGY,
    ENV_MEMORY_BUDGET,
    LOG_EVERY_DEFINITIONS,
    STRATEGIES,
)
from .errors import EnumerationOverflow, EnumerationStats, IncompleteTableError, WordError
from .groups import PermutationGroup
from .perms import Permutation
from .presentations import Presentation, Word, check_word, cyclic_reduce, free_reduce

logger = logging.getLogger(__name__)

UNDEFINED = -1


@dataclass(frozen=True)
class EnumerationLimits:
    max_cosets: int = DEFAULT_MAX_COSETS
    strategy: str = DEFAULT_STRATEGY

    def __post_init__(self) -> None:
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be at least 1")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; choose from {', '.join(STRATEGIES)}")

    def within_budget(self, columns: int, budget_mb: float | None = None) -> "EnumerationLimits":
        """Lower ``max_cosets`` so the table fits the memory budget.

        The budget defaults to the ``SYMGEN_MEMORY_BUDGET_MB`` environment variable.
        """
        if budget_mb is None:
            raw = os.environ.get(ENV_MEMORY_BUDGET)
            if not raw:
                return self
            budget_mb = float(raw)
        fits = int(budget_mb * 1024 * 1024 / (BYTES_PER_TABLE_ENTRY * max(columns, 1)))
        if fits >= self.max_cosets:
            return self
        logger.info("memory budget %.0f MB caps the table at %d cosets", budget_mb, fits)
        return replace(self, max_cosets=max(fits, 1))


class _Columns:
    """Maps letters to table columns; an involution shares one column with its inverse."""

    def __init__(self, presentation: Presentation) -> None:
        involutions = presentation.involutions()
        self.rank = presentation.rank
        self.col_of: dict[int, int] = {}
        self.letter_of: list[int] = []
        self.inverse: list[int] = []
        for k in range(self.rank):
            fwd = len(self.letter_of)
            self.letter_of.append(k + 1)
            if k in involutions:
                self.col_of[k + 1] = self.col_of[-(k + 1)] = fwd
                self.inverse.append(fwd)
            else:
                self.letter_of.append(-(k + 1))
                self.col_of[k + 1] = fwd
                self.col_of[-(k + 1)] = fwd + 1
                self.inverse.extend([fwd + 1, fwd])
        self.count = len(self.letter_of)

    def cols(self, word: Sequence[int]) -> list[int]:
        """Column sequence of a word, with cancelling neighbours removed."""
        check_word(word, self.rank)
        out: list[int] = []
        inverse = self.inverse
        for letter in word:
            c = self.col_of[letter]
            if out and out[-1] == inverse[c]:
                out.pop()
            else:
                out.append(c)
        return out

    def cyclic_cols(self, word: Sequence[int]) -> list[int]:
        out = self.cols(cyclic_reduce(word))
        while len(out) >= 2 and out[0] == self.inverse[out[-1]]:
            out = out[1:-1]
        return out

    def inverse_cols(self, cols: Sequence[int]) -> list[int]:
        return [self.inverse[c] for c in reversed(cols)]


class _Enumerator:
    def __init__(self, presentation: Presentation, subgroup: Sequence[Word], limits: EnumerationLimits) -> None:
        self.columns = _Columns(presentation)
        self.limits = limits
        inverse = self.columns.inverse
        self.relators: list[list[int]] = []
        seen = set()
        for rel in presentation.relators:
            cols = self.columns.cyclic_cols(rel)
            if cols and tuple(cols) not in seen:
                seen.add(tuple(cols))
                self.relators.append(cols)
        self.subgroup = [self.columns.cols(free_reduce(w)) for w in subgroup]
        by_col: list[set[tuple[int, ...]]] = [set() for _ in range(self.columns.count)]
        for cols in self.relators:
            for word in (cols, self.columns.inverse_cols(cols)):
                for i in range(len(word)):
                    conj = tuple(word[i:] + word[:i])
                    by_col[conj[0]].add(conj)
        self.by_col = [sorted(words) for words in by_col]
        self.inverse = inverse
        self.ncols = self.columns.count
        self.table: list[list[int]] = [[UNDEFINED] * self.ncols]
        self.p = [0]
        self.live = 1
        self.merged = 0
        self.deductions: list[tuple[int, int]] = []
        self.felsch = limits.strategy == "felsch"
        self.started = time.perf_counter()

    # -- bookkeeping ------------------------------------------------------

    def stats(self) -> EnumerationStats:
        return EnumerationStats(
            live=self.live,
            defined=len(self.table),
            merged=self.merged,
            seconds=time.perf_counter() - self.started,
        )

    def overflow(self) -> EnumerationOverflow:
        return EnumerationOverflow(self.limits.max_cosets, self.stats())

    def define(self, alpha: int, c: int) -> bool:
        """Define a new coset at ``alpha^c``.

        False when a lookahead freed space instead; ``alpha`` may be dead then
        and the caller rescans.
        """
        if self.live >= self.limits.max_cosets:
            if self.felsch or not self.lookahead():
                raise self.overflow()
            return False
        beta = len(self.table)
        row = [UNDEFINED] * self.ncols
        self.table.append(row)
        self.p.append(beta)
        self.table[alpha][c] = beta
        row[self.inverse[c]] = alpha
        self.live += 1
        if self.felsch:
            self.deductions.append((alpha, c))
        if beta % LOG_EVERY_DEFINITIONS == 0:
            logger.debug("defined %d cosets, %d live, %d merged", beta, self.live, self.merged)
        return True

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, k: int, lam: int, queue: deque) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            queue.append(v)
            self.live -= 1
            self.merged += 1

    def coincidence(self, alpha: int, beta: int) -> None:
        table, inverse, rep = self.table, self.inverse, self.rep
        queue: deque = deque()
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            row = table[gamma]
            for c in range(self.ncols):
                delta = row[c]
                if delta == UNDEFINED:
                    continue
                ic = inverse[c]
                table[delta][ic] = UNDEFINED
                mu, nu = rep(gamma), rep(delta)
                if table[mu][c] != UNDEFINED:
                    self.merge(nu, table[mu][c], queue)
                elif table[nu][ic] != UNDEFINED:
                    self.merge(mu, table[nu][ic], queue)
                else:
                    table[mu][c] = nu
                    table[nu][ic] = mu
                if self.felsch:
                    self.deductions.append((mu, c))

    # -- scanning ---------------------------------------------------------

    def scan(self, alpha: int, word: Sequence[int], fill: bool) -> None:
        table, inverse = self.table, self.inverse
        f = b = alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if nxt == UNDEFINED:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][inverse[word[j]]]
                if nxt == UNDEFINED:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                c = word[i]
                table[f][c] = b
                table[b][inverse[c]] = f
                if self.felsch:
                    self.deductions.append((f, c))
                return
            if not fill or not self.define(f, word[i]):
                return

    def process_deductions(self) -> None:
        p, table, by_col, inverse = self.p, self.table, self.by_col, self.inverse
        stack = self.deductions
        while stack:
            alpha, c = stack.pop()
            if p[alpha] != alpha:
                continue
            for word in by_col[c]:
                self.scan(alpha, word, False)
                if p[alpha] != alpha:
                    break
            if p[alpha] != alpha:
                continue
            beta = table[alpha][c]
            if beta == UNDEFINED or p[beta] != beta:
                continue
            for word in by_col[inverse[c]]:
                self.scan(beta, word, False)
                if p[beta] != beta:
                    break

    def lookahead(self) -> bool:
        """Scan every live coset without defining; True if space was freed."""
        before = self.live
        logger.debug("lookahead at %d live cosets", before)
        for alpha in range(len(self.table)):
            if self.p[alpha] != alpha:
                continue
            for word in self.relators:
                self.scan(alpha, word, False)
                if self.p[alpha] != alpha:
                    break
        return self.live < before

    # -- drivers ----------------------------------------------------------

    def _fill_pass(self) -> None:
        p, table, ncols = self.p, self.table, self.ncols
        alpha = 0
        while alpha < len(table):
            if p[alpha] == alpha:
                if not self.felsch:
                    for word in self.relators:
                        self.scan(alpha, word, True)
                        if p[alpha] != alpha:
                            break
                row = table[alpha]
                for c in range(ncols):
                    if p[alpha] != alpha:
                        break
                    if row[c] == UNDEFINED and self.define(alpha, c):
                        self.process_deductions()
            alpha += 1

    def _closing_scan(self) -> bool:
        """Scan-and-fill the subgroup words at coset 0 and every relator at every
        live coset; True if nothing changed."""
        marker = (len(self.table), self.merged)
        for word in self.subgroup:
            self.scan(0, word, True)
        for alpha in range(len(self.table)):
            for word in self.relators:
                if self.p[alpha] != alpha:
                    break
                self.scan(alpha, word, True)
            self.process_deductions()
        return marker == (len(self.table), self.merged)

    def run(self) -> "CosetTable":
        for word in self.subgroup:
            self.scan(0, word, True)
        self.process_deductions()
        while True:
            self._fill_pass()
            if self._closing_scan():
                break
            logger.debug("closing scan changed the table; refilling")
        return self._compact()

    def _compact(self) -> "CosetTable":
        rep, table = self.rep, self.table
        new_of = {0: 0}
        order = [0]
        parents: list[tuple[int, int]] = [(-1, -1)]
        for old in order:
            for c in range(self.ncols):
                target = rep(table[old][c])
                if target not in new_of:
                    new_of[target] = len(order)
                    order.append(target)
                    parents.append((new_of[old], c))
        arr = np.empty((len(order), self.ncols), dtype=np.int32)
        for new, old in enumerate(order):
            arr[new] = [new_of[rep(x)] for x in table[old]]
        stats = self.stats()
        logger.debug(
            "enumeration finished: index %d, %d defined, %d merged, %.2fs",
            len(order), stats.defined, stats.merged, stats.seconds,
        )
        return CosetTable(self.columns, arr, parents, stats, self.limits.strategy, self.relators, self.subgroup)


class CosetTable:
    """A complete coset table, compacted and numbered breadth-first from coset 0."""

    def __init__(
        self,
        columns: _Columns,
        table: np.ndarray,
        parents: Sequence[tuple[int, int]],
        stats: EnumerationStats,
        strategy: str,
        relators: Sequence[Sequence[int]],
        subgroup: Sequence[Sequence[int]],
    ) -> None:
        self._columns = columns
        self.table = table
        self.table.flags.writeable = False
        self._parents = list(parents)
        self.stats = stats
        self.strategy = strategy
        self._relators = [list(r) for r in relators]
        self._subgroup = [list(w) for w in subgroup]
        self.certify()

    @property
    def index(self) -> int:
        return int(self.table.shape[0])

    @property
    def rank(self) -> int:
        return self._columns.rank

    def __len__(self) -> int:
        return self.index

    def certify(self) -> None:
        """Every relator fixes every coset and every subgroup word fixes coset 0."""
        if (self.table < 0).any():
            raise IncompleteTableError("table has undefined entries")
        everyone = np.arange(self.index, dtype=np.int32)
        for rel in self._relators:
            pos = everyone
            for c in rel:
                pos = self.table[pos, c]
            if not np.array_equal(pos, everyone):
                raise IncompleteTableError("a relator does not trace to the identity")
        for word in self._subgroup:
            pos = 0
            for c in word:
                pos = int(self.table[pos, c])
            if pos != 0:
                raise IncompleteTableError("a subgroup generator moves coset 0")

    def _check_coset(self, coset: int) -> None:
        if not 0 <= coset < self.index:
            raise IndexError(f"coset {coset} out of range 0..{self.index - 1}")

    def column(self, letter: int) -> np.ndarray:
        """Images of all cosets under one letter."""
        if letter == 0 or abs(letter) > self.rank:
            raise WordError(f"letter {letter} outside generators 1..{self.rank}")
        return self.table[:, self._columns.col_of[letter]]

    def image(self, k: int) -> Permutation:
        return Permutation._trusted(np.array(self.column(k + 1)))

    def coset_action(self) -> PermutationGroup:
        gens = [self.image(k) for k in range(self.rank)]
        return PermutationGroup(gens, degree=self.index)

    def trace(self, coset: int, word: Sequence[int]) -> int:
        self._check_coset(coset)
        for letter in word:
            coset = int(self.column(letter)[coset])
        return coset

    def trace_all(self, word: Sequence[int]) -> np.ndarray:
        pos = np.arange(self.index, dtype=np.int32)
        for letter in word:
            pos = self.column(letter)[pos]
        return pos

    def representative_word(self, coset: int) -> Word:
        self._check_coset(coset)
        letters = []
        while coset != 0:
            parent, c = self._parents[coset]
            letters.append(self._columns.letter_of[c])
            coset = parent
        return tuple(reversed(letters))


def todd_coxeter(
    presentation: Presentation,
    subgroup: Sequence[Word] = (),
    limits: EnumerationLimits | None = None,
) -> CosetTable:
    """Enumerate the cosets of ``<subgroup>`` in the group ``presentation`` defines.

    :raises EnumerationOverflow: when ``limits.max_cosets`` live cosets are
        needed; the exception carries the high-water statistics.
    """
    limits = limits or EnumerationLimits()
    for word in subgroup:
        check_word(word, presentation.rank)
    return _Enumerator(presentation, subgroup, limits).run()


__all__ = [
    "CosetTable",
    "EnumerationLimits",
    "UNDEFINED",
    "todd_coxeter",
]
