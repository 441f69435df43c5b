import itertools

import pytest

from liedirac.charring import FormalChar, weyl_denominator
from liedirac.endoscopy import (
    subgroup_compact_part,
    transfer_discrete_series,
    transfer_factor_quotient,
    transfer_factor_spin,
    transfer_finite_dim,
)
from liedirac.rootsys import (
    InputError,
    Subsystem,
    build_group_datum,
    cartan_data,
)
from liedirac.spin import spin_character_difference


def test_factor_degenerate_subs():
    group = build_group_datum("B2", (0, 1))
    assert transfer_factor_spin(group, group.full).factor == FormalChar.one(2)
    assert transfer_factor_spin(group, group.full).sign_exponent == 0
    torus = Subsystem(group.cartan, (), "torus")
    data = transfer_factor_spin(group, torus)
    assert data.factor == weyl_denominator(group.full)
    assert data.sign_exponent == group.q
    assert transfer_factor_quotient(group, group.full) == FormalChar.one(2)
    assert transfer_factor_quotient(group, torus) == data.factor


def test_factor_b2_long_a1a1():
    group = build_group_datum("B2", (0, 1))
    subsystem = Subsystem(group.cartan, (1, 3), "longA1A1")
    data = transfer_factor_spin(group, subsystem)
    assert data.factor == spin_character_difference(group.full, subsystem)
    assert len(data.factor.terms) == 4
    assert data.sign_exponent == 2       # H is compact in this form
    assert transfer_factor_quotient(group, subsystem) == data.factor


@pytest.mark.parametrize("label,subidx", [("B2", (1, 3)), ("G2", (0, 5))])
def test_factor_dual_forms_across_gradings(label, subidx):
    cartan = cartan_data(label)
    subsystem = Subsystem(cartan, subidx)
    admissible = 0
    for bits in itertools.product((0, 1), repeat=cartan.rank):
        group = build_group_datum(label, bits)
        spin_form = transfer_factor_spin(group, subsystem)
        try:
            quotient = transfer_factor_quotient(group, subsystem)
        except InputError:
            continue
        assert quotient == spin_form.factor
        admissible += 1
    assert admissible > 0


def test_quotient_lattice_precondition_failure():
    # for the compact B2 form, rho - rho_H is not a weight of the torus cover
    group = build_group_datum("B2", (0, 0))
    subsystem = Subsystem(group.cartan, (1, 3))
    with pytest.raises(InputError):
        transfer_factor_quotient(group, subsystem)


def test_non_subsystem_rejected():
    # {alpha1, alpha2} generates further roots: not closed, hence rejected
    b2 = cartan_data("B2")
    with pytest.raises(InputError):
        Subsystem(b2, (0, 1))
    g2 = cartan_data("G2")
    with pytest.raises(InputError):
        Subsystem(g2, (0, 1))


def test_transfer_finite_dim_examples():
    group = build_group_datum("B2", (0, 1))
    # sub = ambient: the module itself
    module = transfer_finite_dim(group, group.full, (2, 0))
    assert module.entries == {(2, 0): 1}
    # sub = torus on A1: the Weyl numerator of V_n
    a1 = build_group_datum("A1", (1,))
    torus = Subsystem(a1.cartan, (), "torus")
    for n in range(5):
        module = transfer_finite_dim(a1, torus, (2 * n,))
        assert module.entries == {(2 * (n + 1),): 1, (-2 * (n + 1),): -1}
    # B2 > A1 x A1 at lambda = 0: signed types from the 2-element coset set
    subsystem = Subsystem(group.cartan, (1, 3))
    module = transfer_finite_dim(group, subsystem, (0, 0))
    assert module.entries == {(0, 2): 1, (2, -2): -1}


@pytest.mark.parametrize("label,subidx", [("B2", (1, 3)), ("G2", (0, 5))])
def test_transfer_finite_dim_identity_sweep(label, subidx):
    cartan = cartan_data(label)
    subsystem = Subsystem(cartan, subidx)
    group = build_group_datum(label, (0,) * cartan.rank)
    for coefs in itertools.product(range(4), repeat=cartan.rank):
        if sum(coefs) > 3:
            continue
        transfer_finite_dim(group, subsystem, tuple(2 * c for c in coefs))


def test_transfer_ds_degenerate_and_counts():
    group = build_group_datum("B2", (1, 0))
    result = transfer_discrete_series(group, group.full, group.rho)
    assert result.parameters == ((group.rho, 1),)
    subsystem = Subsystem(group.cartan, (1, 3))
    result = transfer_discrete_series(group, subsystem, group.rho)
    sub_k = subgroup_compact_part(group, subsystem)
    expected = group.compact.weyl.order // sub_k.weyl.order
    assert len(result.parameters) == expected == 2
    for parameter, sign in result.parameters:
        assert sign in (1, -1)
        assert subsystem.is_regular(parameter)


@pytest.mark.parametrize("label,subidx", [("B2", (1, 3)), ("G2", (0, 5))])
def test_transfer_ds_identity_across_gradings(label, subidx):
    cartan = cartan_data(label)
    subsystem = Subsystem(cartan, subidx)
    for bits in itertools.product((0, 1), repeat=cartan.rank):
        group = build_group_datum(label, bits)
        # identity asserted inside; exercise a few regular parameters
        count = 0
        for u in itertools.product(range(-6, 7), repeat=cartan.rank):
            if sum(map(abs, u)) > 6:
                continue
            if not group.is_ktilde_integral(
                tuple(a - b for a, b in zip(u, group.rho))
            ):
                continue
            if not group.full.is_regular(u):
                continue
            transfer_discrete_series(group, subsystem, u)
            count += 1
            if count >= 8:
                break
        assert count > 0


def test_transfer_ds_errors():
    group = build_group_datum("B2", (0, 1))
    subsystem = Subsystem(group.cartan, (1, 3))
    with pytest.raises(InputError):
        transfer_discrete_series(group, subsystem, (0, 2))   # singular
    with pytest.raises(InputError):
        transfer_discrete_series(group, subsystem, (1, 2))   # not spin-integral


def test_factor_functoriality_through_a_chain():
    # factors multiply along a chain of subsystems sharing the torus
    cartan = cartan_data("B2")
    full = Subsystem(cartan, (0, 1, 2, 3), "full")
    mid = Subsystem(cartan, (1, 3), "mid")
    small = Subsystem(cartan, (1,), "small")
    outer = spin_character_difference(full, mid)
    inner = spin_character_difference(mid, small)
    direct = spin_character_difference(full, small)
    assert outer * inner == direct
