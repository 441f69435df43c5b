import itertools

import pytest

from liedirac.charring import FormalChar, weyl_denominator
from liedirac.rootsys import InputError, Subsystem, add, build_group_datum, cartan_data, neg
from liedirac.spin import (
    exterior_algebra_difference,
    exterior_algebra_full,
    spin_character_difference,
    spin_module_ktypes,
)


ALL_DATA = [
    (label, bits)
    for label in ("A1", "A2", "B2", "G2")
    for bits in itertools.product((0, 1), repeat=cartan_data(label).rank)
]


def test_sl2r_spin_module():
    group = build_group_datum("A1", (1,))
    decomp = spin_module_ktypes(group)
    assert decomp.ktypes.entries == {(2,): 1, (-2,): 1}   # C_{a/2} + C_{-a/2}
    assert decomp.plus.entries == {(2,): 1}
    assert decomp.minus.entries == {(-2,): 1}
    assert decomp.difference == FormalChar({(2,): 1, (-2,): -1})


def test_compact_form_spin_module_is_trivial():
    group = build_group_datum("A1", (0,))
    decomp = spin_module_ktypes(group)
    assert decomp.ktypes.entries == {(0,): 1}
    assert decomp.difference == FormalChar.one(1)


@pytest.mark.parametrize("label,bits", ALL_DATA)
def test_spin_module_against_exterior_algebra_oracle(label, bits):
    group = build_group_datum(label, bits)
    decomp = spin_module_ktypes(group)
    assert decomp.ktypes.dimension() == 2 ** group.q
    assert decomp.difference == exterior_algebra_difference(group)
    assert decomp.ktypes.to_character() == exterior_algebra_full(group)


@pytest.mark.parametrize("label,bits", ALL_DATA)
def test_difference_times_compact_denominator_is_full_denominator(label, bits):
    group = build_group_datum(label, bits)
    decomp = spin_module_ktypes(group)
    assert decomp.difference * weyl_denominator(group.compact) == \
        weyl_denominator(group.full)


def test_spin_character_difference_degenerate_cases():
    cartan = cartan_data("B2")
    full = Subsystem(cartan, (0, 1, 2, 3))
    assert spin_character_difference(full, full) == FormalChar.one(2)
    torus = Subsystem(cartan, ())
    assert spin_character_difference(full, torus) == weyl_denominator(full)


def test_spin_character_difference_b2_long_a1a1():
    cartan = cartan_data("B2")
    full = Subsystem(cartan, (0, 1, 2, 3))
    subsystem = Subsystem(cartan, (1, 3))
    diff = spin_character_difference(full, subsystem)
    # complement roots are e2 (index 0) and e1 (index 2)
    e2 = cartan.positive_roots[0]
    e1 = cartan.positive_roots[2]
    expected = FormalChar({
        add(e1.half, e2.half): 1,
        neg(add(e1.half, e2.half)): 1,
        tuple(a - b for a, b in zip(e1.half, e2.half)): -1,
        tuple(b - a for a, b in zip(e1.half, e2.half)): -1,
    })
    assert diff == expected
    # normalised sign: +1 on the extreme weight rho(s+)
    assert diff.coeff(add(e1.half, e2.half)) == 1


def test_spin_character_difference_containment_error():
    cartan = cartan_data("B2")
    small = Subsystem(cartan, (1,))
    other = Subsystem(cartan, (0,))
    with pytest.raises(InputError):
        spin_character_difference(small, other)


def test_skewness_under_compatible_noncompact_reflection():
    # B2 grading (0,1): reflection in the noncompact short root e1 preserves
    # the compact system, so the difference character is skew under it.
    group = build_group_datum("B2", (0, 1))
    decomp = spin_module_ktypes(group)
    e1 = group.cartan.positive_roots[2]
    refl = group.cartan.reflection_matrix(e1)
    from liedirac.rootsys import mat_apply

    moved = FormalChar({mat_apply(refl, k): v for k, v in decomp.difference.terms.items()})
    assert moved == -decomp.difference
