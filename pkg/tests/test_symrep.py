from __future__ import annotations

import random

import pytest

from symgen.actions import ActionRecipe, induced_action
from symgen.errors import ContextError, WordError
from symgen.groups import PermutationGroup
from symgen.perms import Permutation
from symgen.progenitor import (
    ControlPresentation,
    Progenitor,
    SymmetricPresentation,
    SymRelation,
    enumerate_cosets,
)
from symgen.symrep import SymContext, SymElement

DESK_ENTRIES = [
    "coxeter-A2", "coxeter-A3", "coxeter-A4", "coxeter-A5", "coxeter-A6",
    "coxeter-D4", "coxeter-D5", "coxeter-D6", "coxeter-E6", "coxeter-E7",
    pytest.param("sp62-S7", marks=pytest.mark.slow),
    pytest.param("j32-L2_16_4", marks=pytest.mark.slow),
    pytest.param("mcl2-M22", marks=pytest.mark.slow),
]


@pytest.fixture(scope="module")
def s5_result():
    action = induced_action(PermutationGroup.symmetric(4), ActionRecipe.natural())
    progenitor = Progenitor(action.group, action)
    relation = SymRelation.from_items([0, Permutation.parse("(1 2)", 4)], exponent=3)
    sp = SymmetricPresentation(progenitor, [relation], ControlPresentation.coxeter(action))
    return enumerate_cosets(sp)


@pytest.fixture(scope="module")
def context(s5_result) -> SymContext:
    return SymContext(s5_result)


def test_words_reach_every_coset(context: SymContext) -> None:
    assert len(context.words) == 5
    assert context.words[0] == ()
    assert context.diameter == 1


def test_arithmetic_agrees_with_the_coset_action(context: SymContext) -> None:
    rng = random.Random(11)
    for _ in range(30):
        a, b = context.random_element(rng), context.random_element(rng)
        product = context.multiply(a, b)
        assert context.image(product) == context.image(a) * context.image(b)
        assert context.multiply(a, context.invert(a)) == context.identity()


def test_canonical_form_is_stable(context: SymContext) -> None:
    rng = random.Random(2)
    for _ in range(20):
        e = SymElement(context.control.random_element(rng), (0, 1, 0))
        canon = context.canonicalize(e)
        assert context.canonicalize(canon) == canon
        assert context.equal(e, canon)


def test_relation_holds(context: SymContext) -> None:
    pi = Permutation.parse("(1 2)", 4)
    assert context.equal(SymElement(pi, (1, 0, 1)), context.identity())


def test_text_form(context: SymContext) -> None:
    e = context.parse("pi = (1 2) ; w = t1 t2")
    assert e == SymElement(Permutation.parse("(1 2)", 4), (0, 1))
    assert context.parse(context.format(e)) == e
    assert context.parse("pi = () ; w = 1") == context.identity()
    with pytest.raises(WordError):
        context.parse("pi = (1 2) ; w = s1")
    with pytest.raises(WordError):
        context.parse("(1 2) t1")
    with pytest.raises(WordError):
        context.multiply(SymElement(Permutation.identity(4), (7,)), context.identity())


def test_index_limit(s5_result) -> None:
    with pytest.raises(ContextError):
        SymContext(s5_result, max_index=4)


def _oracle_agreement(context: SymContext, rounds: int, seed: int) -> None:
    rng = random.Random(seed)
    for _ in range(rounds):
        a, b = context.random_element(rng), context.random_element(rng)
        assert context.image(context.multiply(a, b)) == context.image(a) * context.image(b)
        assert context.image(context.invert(a)) == context.image(a).inverse()
        canon = context.canonicalize(a)
        assert canon == a
        assert context.canonicalize(canon) == canon


def test_weyl_e7_arithmetic(catalog) -> None:
    from symgen.catalog import enumerate_entry

    context = SymContext(enumerate_entry("coxeter-E7", catalog))
    assert context.index == 576
    _oracle_agreement(context, 200, seed=7)


@pytest.mark.slow
def test_mcl2_arithmetic(catalog) -> None:
    from symgen.catalog import enumerate_entry

    context = SymContext(enumerate_entry("mcl2-M22", catalog, workers=1))
    _oracle_agreement(context, 1000, seed=22)


def _padded(context: SymContext, rng: random.Random) -> tuple[SymElement, SymElement]:
    """A random element, and the same element times a relator with ``t_i t_i`` spliced in."""
    a = context.random_element(rng)
    relation = rng.choice(context.result.symmetric.relations)
    images = relation.pi.as_list()
    word = [images[i] for i in a.word] + list(relation.word)
    i = rng.randrange(context.progenitor.n)
    at = rng.randrange(len(word) + 1)
    word[at:at] = [i, i]
    return a, SymElement(a.pi * relation.pi, tuple(word))


@pytest.mark.parametrize("entry_id", DESK_ENTRIES)
def test_relator_padding_keeps_the_canonical_form(catalog, entry_id: str) -> None:
    from symgen.catalog import enumerate_entry

    context = SymContext(enumerate_entry(entry_id, catalog, workers=1))
    rng = random.Random(entry_id)
    for _ in range(100):
        a, padded = _padded(context, rng)
        assert padded != a
        assert context.canonicalize(padded) == a
