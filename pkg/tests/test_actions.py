from __future__ import annotations

import math
import random

import pytest

from symgen.actions import ActionRecipe, induced_action
from symgen.errors import RecipeError, WordError
from symgen.groups import PermutationGroup
from symgen.perms import Permutation


@pytest.mark.parametrize(
    "n, recipe, degree",
    [
        (6, ActionRecipe.subsets(2), 15),
        (7, ActionRecipe.subsets(3), 35),
        (7, ActionRecipe.subsets(1, 4), 42),
        (6, ActionRecipe.partitions(2, 2, 2), 15),
        (8, ActionRecipe.partitions(4, 4), 35),
    ],
)
def test_degrees_match_counts(n: int, recipe: ActionRecipe, degree: int) -> None:
    assert induced_action(PermutationGroup.symmetric(n), recipe).degree == degree


def test_s12_on_partitions_into_three_4_sets() -> None:
    action = induced_action(PermutationGroup.symmetric(12), ActionRecipe.partitions(4, 4, 4))
    assert action.degree == 5775
    assert action.group.is_transitive()
    assert action.is_faithful()
    image = PermutationGroup(action.group.generators, degree=5775, order=math.factorial(12))
    assert image.point_stabilizer([0]).order() == math.factorial(4) ** 3 * math.factorial(3)


def test_intransitive_subsets_action() -> None:
    action = induced_action(PermutationGroup.symmetric(7), ActionRecipe.subsets(1, 4))
    assert [len(orb) for orb in action.group.orbits()] == [7, 35]


def test_image_is_a_homomorphism_and_lifts_back() -> None:
    s5 = PermutationGroup.symmetric(5)
    action = induced_action(s5, ActionRecipe.subsets(2))
    assert action.is_faithful()
    rng = random.Random(5)
    for _ in range(10):
        a, b = s5.random_element(rng), s5.random_element(rng)
        assert action.image(a * b) == action.image(a) * action.image(b)
        assert action.lift(action.image(a)) == a


def test_labels_read_and_write() -> None:
    action = induced_action(PermutationGroup.symmetric(7), ActionRecipe.subsets(4))
    k = action.parse_label("1234")
    assert action.labels[k] == frozenset({0, 1, 2, 3})
    assert action.format_point(k) == "1234"
    assert action.parse_label("{1,2,3,4}") == k
    assert action.parse_label("#3") == 2
    with pytest.raises(WordError):
        action.parse_label("#99")


def test_large_degree_labels_use_braces() -> None:
    action = induced_action(PermutationGroup.symmetric(13), ActionRecipe.subsets(2))
    k = action.parse_label("{1,13}")
    assert action.format_point(k) == "{1,13}"


def test_partition_labels() -> None:
    action = induced_action(PermutationGroup.symmetric(6), ActionRecipe.partitions(2, 2, 2))
    k = action.parse_label("12|34|56")
    assert action.labels[k] == frozenset({frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})})


def test_coset_action_of_a_point_stabilizer() -> None:
    s4 = PermutationGroup.symmetric(4)
    stab = s4.point_stabilizer([0])
    action = induced_action(s4, ActionRecipe.cosets(list(stab.generators)))
    assert action.degree == 4
    assert action.group.order() == 24


def test_conjugates_of_a_three_cycle() -> None:
    s4 = PermutationGroup.symmetric(4)
    action = induced_action(s4, ActionRecipe.conjugates(Permutation.parse("(1 2 3)", 4)))
    assert action.degree == 4
    assert action.group.is_transitive()


def test_relabeled_action_conjugates() -> None:
    s3 = PermutationGroup.symmetric(3)
    mapping = Permutation.parse("(1 2 3)", 3)
    action = induced_action(s3, ActionRecipe.relabeled(mapping))
    g = s3.generators[0]
    assert action.image(g) == g.conjugate(mapping)


def test_bad_recipes() -> None:
    with pytest.raises(RecipeError):
        ActionRecipe("spirals")
    with pytest.raises(RecipeError):
        induced_action(PermutationGroup.symmetric(4), ActionRecipe.subsets(5))
    with pytest.raises(RecipeError):
        induced_action(PermutationGroup.symmetric(5), ActionRecipe.partitions(2, 2))
