from __future__ import annotations

import pytest

from symgen.golay import (
    DELTA_IMAGES,
    EXPECTED_WEIGHTS,
    INFINITY,
    M24_ORDER,
    QUADRATIC_RESIDUES,
    bitstring,
    build_golay,
    dodecad_action,
    dodecad_pairs_meeting_in_8,
    dodecads_672,
    intersection_sizes,
    m22,
    mask_of,
    octad_action,
    octad_intersections,
    points_of,
    psl_2_23,
    steiner_check,
    tetrad_action,
    trio_action,
    trios,
)
from symgen.groups import PermutationGroup
from symgen.perms import Permutation


def test_masks() -> None:
    assert mask_of([0, 3]) == 0b1001
    assert points_of(0b1001) == (0, 3)
    assert len(bitstring(mask_of([0]))) == 24


@pytest.mark.parametrize("construction", ["qr", "lexicode"])
def test_constructions_give_the_golay_code(construction: str) -> None:
    code = build_golay(construction)
    assert len(code) == 4096
    assert code.weight_distribution() == EXPECTED_WEIGHTS
    assert code.is_linear()
    assert steiner_check(code)


def test_unknown_construction() -> None:
    with pytest.raises(ValueError):
        build_golay("hexacode")


def test_octad_geometry(golay) -> None:
    assert octad_intersections(golay) == {0, 2, 4}
    all_trios = trios(golay)
    assert len(all_trios) == 3795
    o1, o2, o3 = all_trios[0]
    assert o1 | o2 | o3 == (1 << 24) - 1
    assert o1 & o2 == o2 & o3 == 0


def test_dump_lists_octads_first(golay) -> None:
    lines = golay.dump_lines()
    assert len(lines) == 4096
    assert all(len(line) == 24 and set(line) <= {"0", "1"} for line in lines)
    assert all(line.count("1") == 8 for line in lines[:759])
    assert lines[759].count("1") != 8


def test_m24(golay, mathieu24) -> None:
    assert mathieu24.order() == M24_ORDER
    assert all(golay.preserved_by(g) for g in mathieu24.generators)
    assert mathieu24.is_k_transitive(5)
    assert not mathieu24.is_k_transitive(6)


def test_m22(golay) -> None:
    group = m22(golay)
    assert group.order() == 443520
    with pytest.raises(ValueError):
        m22(golay, 3, 3)


def test_m22_on_672_dodecads(golay) -> None:
    family = dodecads_672(golay)
    assert family.degree == 672
    assert family.group.is_transitive()
    assert intersection_sizes(family) == {4, 6, 8}
    pairs = dodecad_pairs_meeting_in_8(family)
    assert pairs.partners
    assert sorted(p for orb in pairs.orbits for p in orb) == list(pairs.partners)


@pytest.mark.parametrize(
    "build, degree",
    [(octad_action, 759), (dodecad_action, 2576), (trio_action, 3795), (tetrad_action, 10626)],
)
def test_m24_actions(golay, build, degree: int) -> None:
    action = build(golay)
    assert action.degree == degree
    assert action.group.is_transitive()


def test_intersection_sizes_skip_the_diagonal(golay) -> None:
    assert intersection_sizes(octad_action(golay)) == {0, 2, 4}


def _first_power_map(golay, psl) -> tuple[int, ...]:
    """Least ``(e, a, b)`` with ``x -> a x^e`` on residues, ``b x^e`` on
    non-residues preserving the octads outside PSL(2,23)."""
    for e in range(2, 22):
        for a in range(1, 23):
            for b in range(1, 23):
                images = [
                    x if x in (0, INFINITY) else (a if x in QUADRATIC_RESIDUES else b) * pow(x, e, 23) % 23
                    for x in range(24)
                ]
                if len(set(images)) != 24:
                    continue
                perm = Permutation(images)
                if golay.preserved_by(perm) and not psl.contains(perm):
                    return tuple(images)
    raise AssertionError("no octad-preserving power map")


def test_embedded_delta_is_the_first_power_map(golay) -> None:
    psl = psl_2_23()
    assert psl.order() == 6072
    assert _first_power_map(golay, psl) == DELTA_IMAGES


def test_m24_on_tetrads_is_faithful(golay) -> None:
    action = tetrad_action(golay)
    assert action.is_faithful()
    group = PermutationGroup(action.group.generators, degree=action.degree, order=M24_ORDER)
    stab = group.point_stabilizer([0])
    assert len(group.orbit(0)) == 10626
    assert stab.order() == M24_ORDER // 10626
