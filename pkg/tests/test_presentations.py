from __future__ import annotations

import pytest

from symgen.errors import PresentationError, WordError
from symgen.presentations import (
    Presentation,
    commutator,
    cyclic_reduce,
    format_word,
    free_reduce,
    invert_word,
    parse_presentation,
    parse_word,
    word_power,
)


def test_parse_presentation() -> None:
    presentation, subgroup = parse_presentation("gens: a b; rels: a^2, b^3, (a*b)^5; sub: a")
    assert presentation.generators == ("a", "b")
    assert presentation.relators[0] == (1, 1)
    assert presentation.relators[1] == (2, 2, 2)
    assert presentation.relators[2] == (1, 2) * 5
    assert subgroup == ((1,),)
    assert presentation.involutions() == frozenset({0})


def test_inverse_exponents_and_commutators() -> None:
    names = ("a", "b")
    assert parse_word("a^-2", names) == (-1, -1)
    assert parse_word("[a, b]", names) == (-1, -2, 1, 2)
    assert parse_word("1", names) == ()


def test_format_parses_back() -> None:
    presentation, subgroup = parse_presentation("gens: x y; rels: x^2, y^3, (x*y)^7, [x,y]^4; sub: x")
    again, sub_again = parse_presentation(presentation.format(subgroup))
    assert again == presentation
    assert sub_again == subgroup


def test_word_helpers() -> None:
    assert free_reduce((1, -1, 2, 3, -3)) == (2,)
    assert cyclic_reduce((-1, 2, 1)) == (2,)
    assert invert_word((1, -2, 3)) == (-3, 2, -1)
    assert word_power((1, 2), 3) == (1, 2, 1, 2, 1, 2)
    assert commutator((1,), (2,)) == (-1, -2, 1, 2)
    assert format_word((1, 1, 2), ("a", "b"))


def test_errors() -> None:
    with pytest.raises(WordError):
        parse_word("c", ("a", "b"))
    with pytest.raises(WordError):
        parse_presentation("rels: a^2")
    with pytest.raises(PresentationError):
        Presentation(("a", "a"))
    with pytest.raises(PresentationError):
        Presentation(("a",), ((),))
