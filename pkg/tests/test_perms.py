from __future__ import annotations

import numpy as np
import pytest

from symgen.errors import DegreeMismatchError, PointOutOfRangeError, WordError
from symgen.perms import Permutation, compose, evaluate, parse_point


def P(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


def test_involution_squares_to_identity() -> None:
    a = P("(1 2)", 4)
    assert (a * a).is_identity()


def test_three_cycle_squared() -> None:
    a = P("(1 2 3)", 3)
    assert a * a == P("(1 3 2)", 3)


def test_composition_applies_left_factor_first() -> None:
    a, b = P("(1 2)", 3), P("(2 3)", 3)
    ab = compose(a, b)
    assert ab(0) == 2
    assert ab(1) == 0
    assert ab(2) == 1
    assert ab == a * b


def test_inverse_law_on_random_permutations() -> None:
    rng = np.random.default_rng(7)
    for _ in range(100):
        a = Permutation(rng.permutation(24))
        assert (a * a.inverse()).is_identity()
        assert (a.inverse() * a).is_identity()


def test_degree_mismatch() -> None:
    with pytest.raises(DegreeMismatchError):
        P("(1 2)", 3) * P("(1 2)", 4)


def test_rejects_non_bijection() -> None:
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@pytest.mark.parametrize(
    "compact, spaced, degree",
    [
        ("(45)", "(4 5)", 7),
        ("(10)", "(1 10)", 12),
        ("(1x)(2y)", "(1 11)(2 12)", 12),
        ("(123)(45)", "(1,2,3)(4,5)", 6),
    ],
)
def test_compact_cycle_notation(compact: str, spaced: str, degree: int) -> None:
    assert P(compact, degree) == P(spaced, degree)


def test_str_is_one_based_cycles() -> None:
    assert str(P("(3 4 5)(1 2)", 5)) == "(1 2)(3 4 5)"
    assert str(Permutation.identity(3)) == "()"


def test_parse_errors() -> None:
    with pytest.raises(PointOutOfRangeError):
        P("(1 9)", 5)
    with pytest.raises(WordError):
        P("(1 2) x", 3)
    with pytest.raises(WordError):
        parse_point("q", 30)


def test_order_and_cycle_type() -> None:
    g = P("(1 2)(3 4 5)", 6)
    assert g.order() == 6
    assert g.cycle_type() == (3, 2, 1)
    assert (g ** 6).is_identity()
    assert g ** -1 == g.inverse()


def test_conjugate_relabels_cycles() -> None:
    g, h = P("(1 2 3)", 4), P("(3 4)", 4)
    assert g.conjugate(h) == P("(1 2 4)", 4)


def test_evaluate_signed_words() -> None:
    a, b = P("(1 2)", 3), P("(1 2 3)", 3)
    assert evaluate((2, -2), [a, b], 3).is_identity()
    assert evaluate((1, 2), [a, b], 3) == a * b
    assert evaluate((), [a, b], 3).is_identity()
