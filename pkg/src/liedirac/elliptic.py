"""Elliptic pairings of tempered characters on the compact torus.

Numerators of supertempered distributions are signed orbit sums over the
compact Weyl group; their elliptic inner product reduces to a coefficient
dot product divided by |W_K|.  Conjugation on the compact torus is weight
negation, and with integer coefficients the pairing integral is exactly the
dot product of coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charring import FormalChar, torus_inner_product
from .dirac import hd_discrete_series
from .rootsys import Coords, GroupData, InputError

__all__ = [
    "SupertemperedNumerator",
    "PairingReport",
    "supertempered_numerator",
    "elliptic_pairing",
    "is_elliptic",
    "cross_pairing_check",
    "pseudo_coefficient_trace",
]


@dataclass
class SupertemperedNumerator:
    """The exponential sum (Weyl denominator times distribution character)."""

    group: GroupData
    parameter: Coords
    numerator: FormalChar
    parity_exponent: int     # q(G): conjugating the numerator multiplies by (-1)^q


@dataclass
class PairingReport:
    value: Fraction
    left: str
    right: str

    def value_str(self) -> str:
        v = self.value
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)


def supertempered_numerator(group: GroupData, mu: Coords) -> SupertemperedNumerator:
    """Signed W_K-orbit sum at mu; identically zero when mu is W_K-singular.

    Accepts parameters in the root/rho_n lattice or its rho-shift, so that
    Harish-Chandra parameters of discrete series are always admitted.
    """
    from .rootsys import sub as _sub

    if not (group.is_ktilde_integral(mu)
            or group.is_ktilde_integral(_sub(mu, group.rho))):
        raise InputError(f"parameter {mu} is not integral for the spin double cover")
    out = FormalChar()
    for w in group.compact.weyl.elements:
        out = out + FormalChar.exp(w.apply(mu), w.sign)
    return SupertemperedNumerator(
        group=group, parameter=tuple(mu), numerator=out, parity_exponent=group.q,
    )


def elliptic_pairing(a: SupertemperedNumerator, b: SupertemperedNumerator) -> PairingReport:
    """Elliptic inner product of the two distributions.

    Equals the numerator dot product over the order of the real Weyl group,
    which for the connected equal-rank forms in scope is |W_K|.
    """
    if a.group is not b.group:
        raise InputError("numerators belong to different data")
    wk = a.group.compact.weyl.order
    value = Fraction(torus_inner_product(a.numerator, b.numerator), wk)
    desc = f"torus dot / |W_K|={wk} (real Weyl group of the connected form)"
    return PairingReport(
        value=value,
        left=f"numerator at {list(a.parameter)}; {desc}",
        right=f"numerator at {list(b.parameter)}; {desc}",
    )


def is_elliptic(index: FormalChar) -> bool:
    """A virtual character is elliptic exactly when its index is nonzero."""
    return not index.is_zero()


def cross_pairing_check(group: GroupData, lam: Coords, lam2: Coords) -> PairingReport:
    """Elliptic pairing versus the K-type pairing of discrete series indices.

    The left side pairs supertempered numerators on the torus; the right
    side pairs the Dirac-index K-types, with the orientation sign of each
    parameter tracking the skew parameterisation of the numerators.  The
    conjugation parities (-1)^q enter both factors of the right side and
    cancel.  Both sides are computed and must agree.
    """
    left = elliptic_pairing(
        supertempered_numerator(group, lam), supertempered_numerator(group, lam2)
    )
    ds_a = hd_discrete_series(group, lam)
    ds_b = hd_discrete_series(group, lam2)
    hom = ds_a.cohomology.hom_dimension(ds_b.cohomology)
    right_value = Fraction(ds_a.orientation * ds_b.orientation * hom)
    if left.value != right_value:
        raise InputError(
            f"elliptic and K-type pairings disagree: {left.value} vs {right_value}"
        )
    return PairingReport(
        value=left.value,
        left=left.left,
        right=(
            f"index K-type pairing, orientations {ds_a.orientation}*{ds_b.orientation}, "
            f"(-1)^q factors applied to both arguments cancel"
        ),
    )


def pseudo_coefficient_trace(group: GroupData, target_family: str,
                             target: Coords, source: Coords) -> int:
    """Trace of the pseudo-coefficient of the discrete series at ``source``.

    Realised as the K-type Hom count between the Dirac cohomologies: the
    Kronecker delta on discrete series, and the shared multiplicity against
    a finite-dimensional module.
    """
    from .dirac import hd_finite_dim

    source_hd = hd_discrete_series(group, source).cohomology
    if target_family == "ds":
        target_hd = hd_discrete_series(group, target).cohomology
    elif target_family == "findim":
        target_hd = hd_finite_dim(group, target)
    else:
        raise InputError(f"unknown target family {target_family!r}")
    return target_hd.hom_dimension(source_hd)
