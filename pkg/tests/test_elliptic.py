import itertools
from fractions import Fraction

import pytest

from liedirac.charring import FormalChar, torus_inner_product, weyl_denominator
from liedirac.elliptic import (
    cross_pairing_check,
    elliptic_pairing,
    is_elliptic,
    pseudo_coefficient_trace,
    supertempered_numerator,
)
from liedirac.dirac import dirac_index_discrete_series, hd_discrete_series
from liedirac.rootsys import InputError, build_group_datum


def test_supertempered_numerator_sl2r():
    group = build_group_datum("A1", (1,))
    num = supertempered_numerator(group, (2,))
    assert num.numerator == FormalChar({(2,): 1})
    assert num.parity_exponent == group.q


def test_supertempered_numerator_b2():
    group = build_group_datum("B2", (0, 1))
    num = supertempered_numerator(group, group.rho)
    assert len(num.numerator.terms) == 4           # |W_K| distinct signed terms
    signs = sorted(num.numerator.terms.values())
    assert signs == [-1, -1, 1, 1]


def test_supertempered_numerator_wall_vanishing():
    group = build_group_datum("B2", (0, 1))
    num = supertempered_numerator(group, (0, 2))   # fixed by a compact reflection
    assert num.numerator.is_zero()


def test_supertempered_skew_naturality():
    group = build_group_datum("B2", (0, 1))
    base = supertempered_numerator(group, group.rho)
    for w in group.compact.weyl.elements:
        moved = supertempered_numerator(group, w.apply(group.rho))
        expected = base.numerator if w.sign == 1 else -base.numerator
        assert moved.numerator == expected


def test_supertempered_integrality_check():
    group = build_group_datum("A1", (1,))
    with pytest.raises(InputError):
        supertempered_numerator(group, (1,))


def test_elliptic_pairing_values():
    group = build_group_datum("A1", (1,))
    a = supertempered_numerator(group, (2,))
    b = supertempered_numerator(group, (6,))
    assert elliptic_pairing(a, a).value == 1
    assert elliptic_pairing(a, b).value == 0
    b2 = build_group_datum("B2", (0, 1))
    n = supertempered_numerator(b2, b2.rho)
    report = elliptic_pairing(n, n)
    assert report.value == 1
    assert (report.value * b2.compact.weyl.order).denominator == 1


def test_elliptic_pairing_datum_mismatch():
    a = supertempered_numerator(build_group_datum("A1", (1,)), (2,))
    b = supertempered_numerator(build_group_datum("A1", (0,)), (4,))
    with pytest.raises(InputError):
        elliptic_pairing(a, b)


def test_denominator_self_pairing_is_weyl_order():
    full = build_group_datum("A2", (1, 1)).full
    d = weyl_denominator(full)
    assert torus_inner_product(d, d) == 6


@pytest.mark.parametrize("label,bits", [
    ("A1", (1,)), ("A2", (1, 1)), ("B2", (0, 1)), ("B2", (1, 0)), ("G2", (1, 0)),
])
def test_gram_matrix_is_identity(label, bits):
    group = build_group_datum(label, bits)
    rank = group.cartan.rank
    params = []
    for u in itertools.product(range(-6, 7), repeat=rank):
        if sum(abs(c) for c in u) > 6:
            continue
        if not group.is_ktilde_integral(u):
            continue
        if not group.full.is_regular(u):
            continue
        if not group.compact.is_dominant(u):
            continue
        params.append(u)
    numerators = [supertempered_numerator(group, u) for u in params]
    for i, a in enumerate(numerators):
        for j, b in enumerate(numerators):
            assert elliptic_pairing(a, b).value == (1 if i == j else 0)


def test_cross_pairing_check_cases():
    group = build_group_datum("B2", (0, 1))
    assert cross_pairing_check(group, group.rho, group.rho).value == 1
    assert cross_pairing_check(group, group.rho, (6, 2)).value == 0
    for w in group.compact.weyl.elements:
        value = cross_pairing_check(group, group.rho, w.apply(group.rho)).value
        assert value == w.sign


def test_is_elliptic():
    group = build_group_datum("A1", (1,))
    assert is_elliptic(dirac_index_discrete_series(group, (2,)))
    assert not is_elliptic(FormalChar.zero())


def test_spherical_principal_series_index_telescopes_to_zero():
    # truncated K-type sums of the spherical principal series of sl(2,R):
    # the index escapes every fixed window as the truncation grows
    group = build_group_datum("A1", (1,))
    diff = FormalChar({(2,): 1, (-2,): -1})      # ch S+ - ch S-
    for cutoff in (6, 8, 10):
        truncated = FormalChar()
        for n in range(-cutoff, cutoff + 1, 2):
            truncated = truncated + FormalChar.exp((2 * n,))
        index = truncated * diff
        window = {w: c for w, c in index.terms.items() if abs(w[0]) <= 10}
        assert not window                         # stabilises to zero
    assert not is_elliptic(FormalChar.zero())


def test_pseudo_coefficient_kronecker_delta():
    group = build_group_datum("A1", (1,))
    assert pseudo_coefficient_trace(group, "ds", (2,), (2,)) == 1
    assert pseudo_coefficient_trace(group, "ds", (6,), (2,)) == 0
    assert pseudo_coefficient_trace(group, "ds", (-2,), (2,)) == 0
    with pytest.raises(InputError):
        pseudo_coefficient_trace(group, "nope", (2,), (2,))


def test_pseudo_coefficient_findim_target_with_hom_oracle():
    group = build_group_datum("B2", (0, 1))
    source = group.rho
    mu = hd_discrete_series(group, source).cohomology
    lam = (2, 0)
    got = pseudo_coefficient_trace(group, "findim", lam, source)
    # independent route: Weyl-integration Hom count on the compact group
    from liedirac.charring import weyl_character
    from liedirac.dirac import hd_finite_dim

    dk = weyl_denominator(group.compact)
    total = 0
    (mu_weight, _), = mu.plus.entries.items()
    chi_mu = weyl_character(group.compact, mu_weight)
    for ktype, mult in hd_finite_dim(group, lam).multiplicities().items():
        chi = weyl_character(group.compact, ktype)
        pairing = Fraction(
            torus_inner_product(chi * dk, chi_mu * dk), group.compact.weyl.order
        )
        assert pairing.denominator == 1
        total += mult * int(pairing)
    assert got == total


def test_pseudo_coefficient_delta_window():
    group = build_group_datum("B2", (1, 0))
    params = []
    for u in itertools.product(range(-6, 7), repeat=2):
        if sum(abs(c) for c in u) > 6:
            continue
        if group.is_ktilde_integral(tuple(a - b for a, b in zip(u, group.rho))) \
                and group.full.is_regular(u):
            params.append(u)
    for lam in params[:12]:
        orbit = {w.apply(lam) for w in group.compact.weyl.elements}
        for lam2 in params[:12]:
            expected = 1 if lam2 in orbit else 0
            assert pseudo_coefficient_trace(group, "ds", lam2, lam) == expected
