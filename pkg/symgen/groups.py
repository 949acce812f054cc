from __future__ import annotations

"""Permutation groups with stabilizer chains.

Chains come from a randomized Schreier-Sims phase followed by a deterministic
verification pass over all Schreier generators. A known order certifies the
chain on its own, so rebuilding a chain for a new base is cheap.
"""

import logging
import math
import random
import threading
from typing import Iterable, Iterator, Sequence

import numpy as np

from .constants import (
    ENUMERATE_ELEMENTS_LIMIT,
    PRODUCT_REPLACEMENT_SIZE,
    PRODUCT_REPLACEMENT_WARMUP,
    RANDOM_SIFT_STREAK,
    TRANSVERSAL_CACHE_LIMIT,
)
from .errors import (
    DegreeMismatchError,
    IntegrityError,
    NotASubgroupError,
    NotInGroupError,
    PointOutOfRangeError,
)
from .perms import Permutation
from .presentations import Presentation, Word, canonical_relator, free_reduce, invert_word
from .unionfind import DisjointSet

logger = logging.getLogger(__name__)


class _Level:
    """One base point with its level generators and Schreier tree."""

    __slots__ = (
        "base",
        "degree",
        "generators",
        "gen_ids",
        "_inverses",
        "_lists",
        "_inv_lists",
        "orbit",
        "sv",
        "_uinv",
        "_cache_ok",
    )

    def __init__(self, base: int, degree: int) -> None:
        self.base = base
        self.degree = degree
        self.generators: list[Permutation] = []
        self.gen_ids: list[int] = []
        self._inverses: list[Permutation] = []
        self._lists: list[list[int]] = []
        self._inv_lists: list[list[int]] = []
        self.orbit = [base]
        self.sv = [-1] * degree
        self.sv[base] = -2
        self._uinv: dict[int, np.ndarray] = {}
        self._cache_ok = True

    def add(self, g: Permutation, gid: int) -> None:
        inv = g.inverse()
        self.generators.append(g)
        self.gen_ids.append(gid)
        self._inverses.append(inv)
        self._lists.append(g.as_list())
        self._inv_lists.append(inv.as_list())
        sv, orbit, lists = self.sv, self.orbit, self._lists
        i = 0
        while i < len(orbit):
            p = orbit[i]
            for k, img in enumerate(lists):
                q = img[p]
                if sv[q] == -1:
                    sv[q] = k
                    orbit.append(q)
            i += 1
        self._cache_ok = self.degree * len(orbit) <= TRANSVERSAL_CACHE_LIMIT

    def path(self, point: int) -> list[int]:
        """Level-generator indices leading from the base to ``point``."""
        letters = []
        sv, inv_lists = self.sv, self._inv_lists
        while point != self.base:
            k = sv[point]
            letters.append(k)
            point = inv_lists[k][point]
        letters.reverse()
        return letters

    def transversal(self, point: int) -> Permutation:
        arr = np.arange(self.degree, dtype=np.int32)
        for k in self.path(point):
            arr = self.generators[k].images[arr]
        return Permutation._trusted(arr)

    def _transversal_inverse(self, point: int) -> np.ndarray:
        cached = self._uinv.get(point)
        if cached is not None:
            return cached
        arr = np.arange(self.degree, dtype=np.int32)
        for k in reversed(self.path(point)):
            arr = self._inverses[k].images[arr]
        if self._cache_ok:
            self._uinv[point] = arr
        return arr

    def strip(self, arr: np.ndarray) -> np.ndarray:
        """Return ``arr * u^-1`` where ``u`` maps the base to ``arr[base]``.

        ``arr`` may be a prefix of a permutation as long as it covers the base.
        """
        beta = int(arr[self.base])
        if beta == self.base:
            return arr
        if self._cache_ok:
            return self._transversal_inverse(beta)[arr]
        sv, inverses = self.sv, self._inverses
        while beta != self.base:
            arr = inverses[sv[beta]].images[arr]
            beta = int(arr[self.base])
        return arr


class _ProductReplacement:
    """Random group elements by the product replacement algorithm."""

    def __init__(self, generators: Sequence[Permutation], rng: random.Random) -> None:
        pool = list(generators)
        while len(pool) < PRODUCT_REPLACEMENT_SIZE:
            pool.extend(generators)
        self._pool = [g.images for g in pool[: max(PRODUCT_REPLACEMENT_SIZE, len(generators))]]
        self._acc = np.arange(generators[0].degree, dtype=np.int32)
        self._rng = rng
        for _ in range(PRODUCT_REPLACEMENT_WARMUP):
            self.next()

    def next(self) -> Permutation:
        pool, rng = self._pool, self._rng
        i, j = rng.sample(range(len(pool)), 2)
        if rng.random() < 0.5:
            pool[i] = pool[j][pool[i]]
        else:
            pool[i] = pool[i][pool[j]]
        self._acc = pool[i][self._acc]
        return Permutation._trusted(self._acc.copy())


class StabilizerChain:
    """Base and strong generating set for the group generated by ``generators``.

    :param base: points that must open the base, in order.
    :param order: the group order if known; reaching it certifies the chain
        and skips the verification pass.
    :param point_limit: base points are taken below this bound (used when
        only a prefix of the points carries a faithful action).
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        base: Sequence[int] = (),
        order: int | None = None,
        seed: int = 0,
        point_limit: int | None = None,
    ) -> None:
        self.degree = degree
        self.point_limit = degree if point_limit is None else point_limit
        self.levels: list[_Level] = []
        self.strong: list[Permutation] = []
        self._identity = np.arange(degree, dtype=np.int32)
        self._seed = seed
        for point in base:
            if not 0 <= point < self.point_limit:
                raise PointOutOfRangeError(f"base point {point} out of range")
            if any(lvl.base == point for lvl in self.levels):
                raise ValueError(f"base point {point} repeated")
            self.levels.append(_Level(point, degree))
        seen: set[bytes] = set()
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(f"generator of degree {g.degree} in a group of degree {degree}")
            if g.is_identity() or g.key() in seen:
                continue
            seen.add(g.key())
            arr, j = self._sift(g.images)
            if j < len(self.levels) or not self._is_identity(arr):
                self._insert(g, self._first_moved_level(g))
        self._complete(order)

    # -- construction -----------------------------------------------------

    def _first_moved_level(self, g: Permutation) -> int:
        images = g.as_list()
        for i, lvl in enumerate(self.levels):
            if images[lvl.base] != lvl.base:
                return i
        return len(self.levels)

    def _insert(self, h: Permutation, j: int) -> None:
        if j == len(self.levels):
            point = h.first_moved(self.point_limit)
            if point is None:
                raise IntegrityError("a group element acts trivially on the admissible base points")
            self.levels.append(_Level(point, self.degree))
            logger.debug("base extended with point %d (length %d)", point, len(self.levels))
        gid = len(self.strong)
        self.strong.append(h)
        for i in range(j + 1):
            self.levels[i].add(h, gid)

    def _is_identity(self, arr: np.ndarray) -> bool:
        return bool(np.array_equal(arr, self._identity[: arr.size]))

    def _sift(self, arr: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        levels = self.levels
        for i in range(start, len(levels)):
            lvl = levels[i]
            if lvl.sv[int(arr[lvl.base])] == -1:
                return arr, i
            arr = lvl.strip(arr)
        return arr, len(levels)

    def _complete(self, order: int | None) -> None:
        if not self.strong:
            if order not in (None, 1):
                raise IntegrityError(f"trivial generators cannot have order {order}")
            return
        rng = random.Random(self._seed)
        pool = _ProductReplacement(self.strong, rng)
        streak = 0
        while True:
            current = self.order()
            if order is not None:
                if current == order:
                    return
                if current > order:
                    raise IntegrityError(f"chain order {current} exceeds the declared order {order}")
                if streak >= 20 * RANDOM_SIFT_STREAK:
                    break
            elif streak >= RANDOM_SIFT_STREAK:
                break
            arr, j = self._sift(pool.next().images)
            if j == len(self.levels) and self._is_identity(arr):
                streak += 1
                continue
            streak = 0
            self._insert(Permutation._trusted(np.array(arr, dtype=np.int32)), j)
        self._verify()
        if order is not None and self.order() != order:
            raise IntegrityError(f"group order {self.order()} differs from the declared order {order}")

    def _verify(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            touched = self._verify_level(i)
            if touched is None:
                i -= 1
            else:
                i = min(touched, len(self.levels) - 1)

    def _verify_level(self, i: int) -> int | None:
        lvl = self.levels[i]
        for beta in list(lvl.orbit):
            u = lvl.transversal(beta).images
            for k, s in enumerate(lvl.generators):
                gamma = int(s.images[beta])
                if lvl.sv[gamma] == k and lvl._inv_lists[k][gamma] == beta:
                    continue
                arr, j = self._sift(lvl.strip(s.images[u]), i + 1)
                if j < len(self.levels) or not self._is_identity(arr):
                    self._insert(Permutation._trusted(np.array(arr, dtype=np.int32)), j)
                    return j
        return None

    def add_generator(self, g: Permutation) -> bool:
        """Extend the group by ``g``; False if it was already a member."""
        arr, j = self._sift(g.images)
        if j == len(self.levels) and self._is_identity(arr):
            return False
        self._insert(Permutation._trusted(np.array(arr, dtype=np.int32)), j)
        self._complete(None)
        return True

    # -- queries ----------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lvl.base for lvl in self.levels]

    def order(self) -> int:
        return math.prod(len(lvl.orbit) for lvl in self.levels)

    def orbit_sizes(self) -> list[int]:
        return [len(lvl.orbit) for lvl in self.levels]

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        arr, j = self._sift(g.images)
        return j == len(self.levels) and self._is_identity(arr)

    def factor(self, arr: np.ndarray) -> list[int]:
        """Base images ``beta_i`` with ``g = u_m ... u_1`` for the element given by ``arr``.

        ``arr`` may be a prefix of the element covering every base point.
        """
        betas = []
        for lvl in self.levels:
            beta = int(arr[lvl.base])
            if lvl.sv[beta] == -1:
                raise NotInGroupError("element does not sift through the chain")
            betas.append(beta)
            arr = lvl.strip(arr)
        if not self._is_identity(arr):
            raise NotInGroupError("element leaves a non-trivial residue")
        return betas

    def element_from_base_images(self, betas: Sequence[int]) -> Permutation:
        arr = np.arange(self.degree, dtype=np.int32)
        for lvl, beta in reversed(list(zip(self.levels, betas))):
            arr = lvl.transversal(beta).images[arr]
        return Permutation._trusted(arr)

    def random_element(self, rng: random.Random) -> Permutation:
        return self.element_from_base_images([rng.choice(lvl.orbit) for lvl in self.levels])

    def elements(self) -> Iterator[Permutation]:
        transversals = [[lvl.transversal(b).images for b in lvl.orbit] for lvl in self.levels]

        def walk(i: int, acc: np.ndarray) -> Iterator[Permutation]:
            if i < 0:
                yield Permutation._trusted(acc)
                return
            for u in transversals[i]:
                yield from walk(i - 1, u[acc])

        yield from walk(len(self.levels) - 1, np.arange(self.degree, dtype=np.int32))

    def transversal_word(self, level: int, point: int) -> Word:
        """Word in strong generators (``id + 1``) for the transversal element of ``point``."""
        lvl = self.levels[level]
        return tuple(lvl.gen_ids[k] + 1 for k in lvl.path(point))

    def sift_word(self, g: Permutation, start: int = 0) -> Word:
        """Word in strong generators equal to ``g``, read off by sifting."""
        arr = g.images
        words = []
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            beta = int(arr[lvl.base])
            if lvl.sv[beta] == -1:
                raise NotInGroupError(f"{g} is not in the group")
            words.append(self.transversal_word(i, beta))
            arr = lvl.strip(arr)
        if not self._is_identity(arr):
            raise NotInGroupError(f"{g} is not in the group")
        out: tuple[int, ...] = ()
        for w in reversed(words):
            out += w
        return free_reduce(out)


class PermutationGroup:
    """An immutable permutation group; the stabilizer chain is built on first use."""

    def __init__(
        self,
        generators: Iterable[Permutation],
        degree: int | None = None,
        order: int | None = None,
        name: str | None = None,
        _chain: StabilizerChain | None = None,
    ) -> None:
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(f"generator of degree {g.degree} in a group of degree {degree}")
        self._generators = gens
        self._degree = degree
        self._order_hint = order
        self.name = name
        self._chain = _chain
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        label = self.name or "PermutationGroup"
        return f"<{label} degree={self.degree} generators={len(self.generators)}>"

    @classmethod
    def symmetric(cls, n: int) -> "PermutationGroup":
        """S_n on Coxeter generators ``(i-1 i)``."""
        gens = [Permutation.from_cycles([(i - 1, i)], n) for i in range(1, n)]
        return cls(gens, degree=n, order=math.factorial(n), name=f"S{n}")

    @classmethod
    def alternating(cls, n: int) -> "PermutationGroup":
        gens = [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
        return cls(gens, degree=n, order=max(1, math.factorial(n) // 2), name=f"A{n}")

    @classmethod
    def cyclic(cls, n: int) -> "PermutationGroup":
        gens = [Permutation.from_cycles([tuple(range(n))], n)] if n > 1 else []
        return cls(gens, degree=max(n, 1), order=n, name=f"C{n}")

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    @property
    def chain(self) -> StabilizerChain:
        with self._lock:
            if self._chain is None:
                self._chain = StabilizerChain(self._degree, self._generators, order=self._order_hint)
            return self._chain

    def chain_with_base(self, prefix: Sequence[int]) -> StabilizerChain:
        return StabilizerChain(self._degree, self._generators, base=prefix, order=self.order())

    def order(self) -> int:
        return self.chain.order()

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def contains(self, g: Permutation) -> bool:
        return self.chain.contains(g)

    __contains__ = contains

    def random_element(self, rng: random.Random | None = None) -> Permutation:
        return self.chain.random_element(rng or random.Random())

    def elements(self) -> Iterator[Permutation]:
        if self.order() > ENUMERATE_ELEMENTS_LIMIT:
            raise ValueError(f"refusing to list {self.order()} elements")
        return self.chain.elements()

    # -- orbits -----------------------------------------------------------

    def _check_point(self, point: int) -> None:
        if not 0 <= point < self._degree:
            raise PointOutOfRangeError(f"point {point} out of range for degree {self._degree}")

    def orbit(self, point: int) -> list[int]:
        self._check_point(point)
        lists = [g.as_list() for g in self._generators]
        seen = {point}
        orbit = [point]
        for p in orbit:
            for img in lists:
                q = img[p]
                if q not in seen:
                    seen.add(q)
                    orbit.append(q)
        return orbit

    def orbits(self) -> list[list[int]]:
        """All orbits, each sorted, ordered by smallest point."""
        ds = DisjointSet(self._degree)
        for g in self._generators:
            for p, q in enumerate(g.as_list()):
                ds.union(p, q)
        return ds.classes()

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self._degree

    def is_k_transitive(self, k: int) -> bool:
        """Transitive on ordered k-tuples of distinct points."""
        if k > self._degree:
            return False
        sizes = self.chain_with_base(list(range(k))).orbit_sizes()
        return all(sizes[i] == self._degree - i for i in range(k))

    def point_stabilizer(self, points: Sequence[int]) -> "PermutationGroup":
        points = list(points)
        for p in points:
            self._check_point(p)
        if len(set(points)) != len(points):
            raise ValueError("stabilized points must be distinct")
        chain = self.chain_with_base(points)
        rest = chain.levels[len(points):]
        gens = rest[0].generators if rest else []
        order = math.prod(len(lvl.orbit) for lvl in rest)
        return PermutationGroup(gens, degree=self._degree, order=order)

    def minimal_block(self, alpha: int) -> list[int]:
        """Smallest block containing 0 and ``alpha`` (Atkinson's merge)."""
        self._check_point(alpha)
        ds = DisjointSet(self._degree)
        lists = [g.as_list() for g in self._generators]
        queue = [(0, alpha)]
        ds.union(0, alpha)
        while queue:
            a, b = queue.pop()
            for img in lists:
                ra, rb = ds.find(img[a]), ds.find(img[b])
                if ds.union(ra, rb):
                    queue.append((ra, rb))
        root = ds.find(0)
        return [p for p in range(self._degree) if ds.find(p) == root]

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            return False
        if self._degree < 3:
            return True
        for orb in self.point_stabilizer([0]).orbits():
            alpha = orb[0]
            if alpha != 0 and len(self.minimal_block(alpha)) < self._degree:
                return False
        return True

    # -- subgroups --------------------------------------------------------

    def centralizer(self, other: "PermutationGroup") -> "PermutationGroup":
        if other.degree != self._degree:
            raise DegreeMismatchError("groups act on different point sets")
        for h in other.generators:
            if not self.contains(h):
                raise NotASubgroupError(f"{h} is not in the group")
        hgens = [h for h in other.generators if not h.is_identity()]
        if not hgens:
            return self
        nontrivial = [orb for orb in other.orbits() if len(orb) > 1]
        nontrivial.sort(key=lambda orb: (-len(orb), orb[0]))
        chain = self.chain_with_base([orb[0] for orb in nontrivial])
        found = _CentralizerSearch(chain, hgens).run()
        return PermutationGroup(found, degree=self._degree)

    def normal_closure(self, elements: Iterable[Permutation]) -> "PermutationGroup":
        gens = [e for e in elements if not e.is_identity()]
        if not gens:
            return PermutationGroup([], degree=self._degree, order=1)
        chain = StabilizerChain(self._degree, gens)
        queue = list(gens)
        while queue:
            n = queue.pop()
            for g in self._generators:
                c = n.conjugate(g)
                if chain.add_generator(c):
                    gens.append(c)
                    queue.append(c)
        return PermutationGroup(gens, degree=self._degree, order=chain.order(), _chain=chain)

    def derived_subgroup(self) -> "PermutationGroup":
        gens = self._generators
        comms = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        return self.normal_closure(comms)

    def abelianization_order(self) -> int:
        return self.order() // self.derived_subgroup().order()

    def is_perfect(self) -> bool:
        return self.abelianization_order() == 1


class _CentralizerSearch:
    """Backtrack over a chain whose base opens with representatives of the
    orbits of ``H``; images of base points propagate along ``H``-orbits."""

    def __init__(self, chain: StabilizerChain, hgens: Sequence[Permutation]) -> None:
        self.levels = chain.levels
        self.degree = chain.degree
        self.hlists = [h.as_list() for h in hgens]
        self.harrays = [h.images for h in hgens]

    def _orbit_under(self, gens: Sequence[Permutation], point: int) -> set[int]:
        lists = [g.as_list() for g in gens]
        orbit = [point]
        seen = {point}
        for p in orbit:
            for img in lists:
                q = img[p]
                if q not in seen:
                    seen.add(q)
                    orbit.append(q)
        return seen

    def run(self) -> list[Permutation]:
        found: list[Permutation] = []
        for i in reversed(range(len(self.levels))):
            lvl = self.levels[i]
            if len(lvl.orbit) == 1:
                continue
            reached = self._orbit_under(found, lvl.base)
            failed: list[int] = []
            excluded: set[int] = set()
            for beta in lvl.orbit:
                if beta in reached or beta in excluded:
                    continue
                g = self._search(i, beta)
                if g is None:
                    failed.append(beta)
                    excluded |= self._orbit_under(found, beta)
                else:
                    found.append(g)
                    reached = self._orbit_under(found, lvl.base)
                    excluded = set().union(*(self._orbit_under(found, b) for b in failed))
        return found

    def _propagate(self, phi: list[int], inv: list[int], pairs: list[tuple[int, int]]) -> bool:
        stack = list(pairs)
        hlists = self.hlists
        while stack:
            x, y = stack.pop()
            current = phi[x]
            if current != -1:
                if current != y:
                    return False
                continue
            if inv[y] != -1:
                return False
            phi[x] = y
            inv[y] = x
            for h in hlists:
                stack.append((h[x], h[y]))
        return True

    def _search(self, i: int, beta: int) -> Permutation | None:
        phi = [-1] * self.degree
        inv = [-1] * self.degree
        pairs = [(lvl.base, lvl.base) for lvl in self.levels[:i]]
        pairs.append((self.levels[i].base, beta))
        if not self._propagate(phi, inv, pairs):
            return None
        start = self.levels[i].transversal(beta).images
        return self._descend(i + 1, start, phi, inv)

    def _descend(self, j: int, p: np.ndarray, phi: list[int], inv: list[int]) -> Permutation | None:
        if j == len(self.levels):
            if all(np.array_equal(h[p], p[h]) for h in self.harrays):
                return Permutation._trusted(p)
            return None
        lvl = self.levels[j]
        b = lvl.base
        if phi[b] != -1:
            delta = int(np.flatnonzero(p == phi[b])[0])
            if lvl.sv[delta] == -1:
                return None
            return self._descend(j + 1, p[lvl.transversal(delta).images], phi, inv)
        for delta in lvl.orbit:
            y = int(p[delta])
            phi2, inv2 = phi.copy(), inv.copy()
            if not self._propagate(phi2, inv2, [(b, y)]):
                continue
            found = self._descend(j + 1, p[lvl.transversal(delta).images], phi2, inv2)
            if found is not None:
                return found
        return None


def chain_presentation(chain: StabilizerChain, prefix: str = "x") -> tuple[Presentation, list[Permutation]]:
    """Presentation on the strong generators with one Schreier relator per
    non-tree edge of every level's Schreier tree.

    The relator for level ``i``, orbit point ``beta`` and level generator
    ``s`` is ``u_beta s u_gamma^-1 v^-1`` with ``gamma = beta^s`` and ``v`` the
    word obtained by sifting ``u_beta s u_gamma^-1`` through the deeper levels.
    """
    relators: dict[Word, Word] = {}
    for i, lvl in enumerate(chain.levels):
        for beta in lvl.orbit:
            u_beta = lvl.transversal(beta)
            w_beta = chain.transversal_word(i, beta)
            for k, s in enumerate(lvl.generators):
                gamma = int(s.images[beta])
                if lvl.sv[gamma] == k and lvl._inv_lists[k][gamma] == beta:
                    continue
                w_gamma = chain.transversal_word(i, gamma)
                element = Permutation._trusted(lvl.strip((u_beta * s).images))
                v = chain.sift_word(element, start=i + 1)
                rel = free_reduce(w_beta + (lvl.gen_ids[k] + 1,) + invert_word(w_gamma) + invert_word(v))
                key = canonical_relator(rel)
                if key and key not in relators:
                    relators[key] = key
    names = tuple(f"{prefix}{k + 1}" for k in range(len(chain.strong)))
    ordered = sorted(relators.values(), key=lambda w: (len(w), w))
    return Presentation(names, tuple(ordered)), list(chain.strong)


class LiftingMap:
    """Inverse of the isomorphism ``source[k] -> target[k]`` between two
    faithful permutation representations of one group.

    Built from a chain of the diagonal group on the disjoint union of both
    point sets, with base points taken from the source side.
    """

    def __init__(
        self,
        source: Sequence[Permutation],
        target: Sequence[Permutation],
        order: int,
    ) -> None:
        if len(source) != len(target):
            raise ValueError("generator lists differ in length")
        if not source:
            raise ValueError("at least one generator is required")
        self.m = source[0].degree
        self.n = target[0].degree
        diagonal = [
            Permutation._trusted(np.concatenate([s.images, t.images + self.m]).astype(np.int32))
            for s, t in zip(source, target)
        ]
        self._chain = StabilizerChain(self.m + self.n, diagonal, order=order, point_limit=self.m)

    def __call__(self, g: Permutation) -> Permutation:
        if g.degree != self.m:
            raise DegreeMismatchError(f"expected degree {self.m}, got {g.degree}")
        betas = self._chain.factor(g.images)
        full = self._chain.element_from_base_images(betas)
        return Permutation._trusted((full.images[self.m:] - self.m).astype(np.int32))


__all__ = [
    "LiftingMap",
    "PermutationGroup",
    "StabilizerChain",
    "chain_presentation",
]
