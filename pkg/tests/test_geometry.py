from __future__ import annotations

import pytest

from symgen.geometry import (
    L2_16_4_ORDER,
    gf16_inv,
    gf16_mul,
    l2_16_4,
    linear_group,
    linear_group_order,
    matchsticks,
    plane_action,
    planes,
    sylow17_action,
)


def test_gf16_arithmetic() -> None:
    assert gf16_mul(0, 7) == 0
    assert gf16_mul(1, 9) == 9
    for a in range(1, 16):
        assert gf16_mul(a, gf16_inv(a)) == 1
        for b in range(16):
            assert gf16_mul(a, b) == gf16_mul(b, a)


def test_l2_16_4() -> None:
    group = l2_16_4()
    assert group.order() == L2_16_4_ORDER == 16320
    assert group.degree == 17
    assert group.is_k_transitive(3)


def test_sylow17_conjugates() -> None:
    action = sylow17_action()
    assert action.degree == 120
    assert action.is_faithful()


@pytest.mark.parametrize("dim, order", [(2, 6), (3, 168), (4, 20160)])
def test_linear_groups(dim: int, order: int) -> None:
    assert linear_group_order(dim) == order
    group = linear_group(dim)
    assert group.order() == order
    assert group.degree == 2**dim - 1
    assert group.is_transitive()


def test_linear_group_needs_dimension_two() -> None:
    with pytest.raises(ValueError):
        linear_group(1)


def test_planes_and_matchsticks() -> None:
    assert len(planes(3)) == 7
    assert len(planes(4)) == 35
    assert plane_action(4).degree == 35
    action = matchsticks(4)
    assert action.degree == 105
    assert action.group.is_transitive()


def test_zero_has_no_inverse() -> None:
    with pytest.raises(ZeroDivisionError):
        gf16_inv(0)
