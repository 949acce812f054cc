from __future__ import annotations

import random

import pytest
from sympy.combinatorics import Permutation as SymPyPermutation
from sympy.combinatorics import PermutationGroup as SymPyGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from symgen.actions import ActionRecipe, induced_action
from symgen.cosets import todd_coxeter
from symgen.errors import NotASubgroupError, PointOutOfRangeError
from symgen.groups import LiftingMap, PermutationGroup, chain_presentation
from symgen.perms import Permutation


def P(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


def _sympy(group: PermutationGroup) -> SymPyGroup:
    return SymPyGroup([SymPyPermutation(g.as_list()) for g in group.generators])


def _random_group(seed: int, degree: int, count: int) -> PermutationGroup:
    rng = random.Random(seed)
    gens = []
    for _ in range(count):
        images = list(range(degree))
        rng.shuffle(images)
        gens.append(Permutation(images))
    return PermutationGroup(gens, degree=degree)


def test_symmetric_and_alternating_orders() -> None:
    assert PermutationGroup.symmetric(4).order() == 24
    assert PermutationGroup.alternating(6).order() == 360
    assert PermutationGroup.cyclic(7).order() == 7


@pytest.mark.parametrize("seed", range(8))
def test_order_matches_sympy(seed: int) -> None:
    group = _random_group(seed, 9, 2)
    assert group.order() == _sympy(group).order()


def test_orbits() -> None:
    s4 = PermutationGroup.symmetric(4)
    assert sorted(s4.orbit(0)) == [0, 1, 2, 3]
    assert s4.is_transitive()
    g = PermutationGroup([P("(1 2)", 3)])
    assert g.orbit(2) == [2]
    assert g.orbits() == [[0, 1], [2]]
    assert not g.is_transitive()
    with pytest.raises(PointOutOfRangeError):
        g.orbit(3)


def test_membership() -> None:
    a4 = PermutationGroup.alternating(4)
    assert a4.contains(P("(1 2 3)", 4))
    assert not a4.contains(P("(1 2)", 4))
    assert P("(1 2)(3 4)", 4) in a4


def test_point_stabilizer() -> None:
    s5 = PermutationGroup.symmetric(5)
    stab = s5.point_stabilizer([0, 1])
    assert stab.order() == 6
    assert all(g(0) == 0 and g(1) == 1 for g in stab.generators)


def test_k_transitivity() -> None:
    assert PermutationGroup.symmetric(5).is_k_transitive(5)
    a5 = PermutationGroup.alternating(5)
    assert a5.is_k_transitive(3)
    assert not a5.is_k_transitive(4)


def test_primitivity_and_blocks() -> None:
    assert PermutationGroup.symmetric(4).is_primitive()
    c4 = PermutationGroup.cyclic(4)
    assert sorted(c4.minimal_block(2)) == [0, 2]
    assert not c4.is_primitive()


def test_centralizer_matches_sympy() -> None:
    s5 = PermutationGroup.symmetric(5)
    h = PermutationGroup([P("(1 2)", 5)])
    ours = s5.centralizer(h)
    theirs = SymmetricGroup(5).centralizer(SymPyGroup([SymPyPermutation(0, 1, size=5)]))
    assert ours.order() == theirs.order() == 12
    assert all((g * h.generators[0]) == (h.generators[0] * g) for g in ours.generators)


def test_centralizer_of_double_transposition() -> None:
    s4 = PermutationGroup.symmetric(4)
    assert s4.centralizer(PermutationGroup([P("(1 2)(3 4)", 4)])).order() == 8


def test_centralizer_needs_subgroup() -> None:
    a4 = PermutationGroup.alternating(4)
    with pytest.raises(NotASubgroupError):
        a4.centralizer(PermutationGroup([P("(1 2)", 4)]))


def test_derived_subgroup_and_perfectness() -> None:
    s4 = PermutationGroup.symmetric(4)
    assert s4.derived_subgroup().order() == 12
    assert s4.abelianization_order() == 2
    assert PermutationGroup.alternating(5).is_perfect()
    assert not s4.is_perfect()
    assert s4.normal_closure([P("(1 2)(3 4)", 4)]).order() == 4


@pytest.mark.parametrize("seed", range(4))
def test_derived_subgroup_matches_sympy(seed: int) -> None:
    group = _random_group(100 + seed, 7, 2)
    assert group.derived_subgroup().order() == _sympy(group).derived_subgroup().order()


def test_elements_and_random_element() -> None:
    s4 = PermutationGroup.symmetric(4)
    elements = list(s4.elements())
    assert len(elements) == len(set(elements)) == 24
    rng = random.Random(3)
    assert all(s4.contains(s4.random_element(rng)) for _ in range(20))


def test_chain_presentation_presents_the_group() -> None:
    s4 = PermutationGroup.symmetric(4)
    presentation, strong = chain_presentation(s4.chain)
    assert len(strong) == presentation.rank
    assert todd_coxeter(presentation).index == 24


def test_lifting_map_inverts_an_induced_action() -> None:
    s4 = PermutationGroup.symmetric(4)
    pairs = induced_action(s4, ActionRecipe.subsets(2))
    lift = LiftingMap(list(pairs.group.generators), list(s4.generators), 24)
    for image, gen in zip(pairs.group.generators, s4.generators):
        assert lift(image) == gen
    rng = random.Random(1)
    for _ in range(10):
        a, b = pairs.group.random_element(rng), pairs.group.random_element(rng)
        assert lift(a * b) == lift(a) * lift(b)
