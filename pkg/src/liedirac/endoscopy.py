"""Transfer factors and character transfer to equal-rank root subsystems.

The endoscopic group is realised concretely as a root subsystem sharing the
compact torus.  The transfer factor is the even/odd spin character
difference of the orthocomplement, which also equals the quotient of the
two Weyl numerators; both forms are computed and compared.  The parity
constant (-1)^(q(G)-q(H)) is reported separately rather than baked into the
factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charring import FormalChar, VirtualModule, divide_exact, weyl_character, weyl_numerator
from .rootsys import (
    Coords,
    GroupData,
    InputError,
    InternalError,
    Subsystem,
    add,
    chamber_coset_reps,
    sub,
)
from .spin import spin_character_difference

__all__ = [
    "TransferData",
    "transfer_factor_spin",
    "transfer_factor_quotient",
    "transfer_finite_dim",
    "transfer_discrete_series",
    "subgroup_compact_part",
]


@dataclass
class TransferData:
    subsystem: Subsystem
    factor: FormalChar
    sign_exponent: int      # q(G) - q(H)


def _noncompact_count(group: GroupData, subsystem: Subsystem) -> int:
    compact = set(group.compact.indices)
    return sum(1 for r in subsystem.positive if r.index not in compact)


def subgroup_compact_part(group: GroupData, subsystem: Subsystem) -> Subsystem:
    """The compact roots of the subsystem (the K of the endoscopic group)."""
    compact = set(group.compact.indices)
    return Subsystem(
        group.cartan,
        tuple(i for i in subsystem.indices if i in compact),
        subsystem.name + "-compact",
    )


def transfer_factor_spin(group: GroupData, subsystem: Subsystem) -> TransferData:
    """Transfer factor as the spin character difference of the orthocomplement.

    The factor times the subsystem Weyl numerator reproduces the ambient
    Weyl numerator exactly; this is asserted term by term.
    """
    factor = spin_character_difference(group.full, subsystem)
    ambient_num = weyl_numerator(group.full, group.full.rho)
    sub_num = weyl_numerator(subsystem, subsystem.rho)
    if factor * sub_num != ambient_num:
        raise InternalError("factor times subsystem numerator != ambient numerator")
    exponent = group.q - _noncompact_count(group, subsystem)
    return TransferData(subsystem=subsystem, factor=factor, sign_exponent=exponent)


def transfer_factor_quotient(group: GroupData, subsystem: Subsystem) -> FormalChar:
    """Transfer factor as the exact quotient of the two Weyl numerators.

    Requires rho - rho_H to be integral for the spin double cover (it then
    defines a character of the shared torus); the division must be exact and
    must agree with the spin form.
    """
    if not group.is_ktilde_integral(sub(group.rho, subsystem.rho)):
        raise InputError(
            "rho - rho_H does not define a character of the torus for this form"
        )
    numerator = weyl_numerator(group.full, group.full.rho)
    denominator = weyl_numerator(subsystem, subsystem.rho)
    quotient = divide_exact(numerator, denominator)
    spin_form = transfer_factor_spin(group, subsystem).factor
    if quotient != spin_form:
        raise InternalError("quotient and spin transfer factors disagree")
    return quotient


def transfer_finite_dim(group: GroupData, subsystem: Subsystem,
                        lam: Coords) -> VirtualModule:
    """Transfer of a finite-dimensional character to the subsystem.

    Signed subsystem types (w(lam+rho) - rho_H) over the chamber coset
    representatives; the signed character sum must reproduce factor times
    the ambient character.
    """
    if not all(c >= 0 and c % 2 == 0 for c in lam):
        raise InputError("highest weight must be dominant integral")
    data = transfer_factor_spin(group, subsystem)
    reps = chamber_coset_reps(group.full, subsystem)
    shifted = add(lam, group.full.rho)
    entries: dict[Coords, int] = {}
    for w in reps:
        key = sub(w.apply(shifted), subsystem.rho)
        entries[key] = entries.get(key, 0) + w.sign
    module = VirtualModule(subsystem, entries)
    lhs = module.to_character()
    rhs = data.factor * weyl_character(group.full, lam)
    if lhs != rhs:
        raise InternalError("finite-dimensional transfer identity failed")
    return module


@dataclass
class DiscreteSeriesTransfer:
    parameters: tuple[tuple[Coords, int], ...]   # (w lam, sign) per coset rep
    sign_exponent: int


def transfer_discrete_series(group: GroupData, subsystem: Subsystem,
                             lam: Coords) -> DiscreteSeriesTransfer:
    """Transfer of a discrete series index to the endoscopic subsystem.

    Returns the signed list of transferred parameters (w lam for w in the
    compact coset representatives).  The defining numerator identity - the
    ambient signed W_K-orbit sum at lam equals the signed combination of the
    subsystem W_{H cap K}-orbit sums at the w lam - is asserted exactly.
    """
    if not group.full.is_regular(lam):
        raise InputError(f"parameter {lam} is singular")
    if not group.is_ktilde_integral(sub(lam, group.rho)):
        raise InputError("parameter is not integral for the spin double cover")
    sub_compact = subgroup_compact_part(group, subsystem)
    reps = chamber_coset_reps(group.compact, sub_compact)
    params: list[tuple[Coords, int]] = []
    rhs = FormalChar()
    for w in reps:
        moved = w.apply(lam)
        if not subsystem.is_regular(moved):
            raise InputError(f"transferred parameter {moved} lies on a subsystem wall")
        params.append((moved, w.sign))
        orbit_sum = FormalChar()
        for u in sub_compact.weyl.elements:
            orbit_sum = orbit_sum + FormalChar.exp(u.apply(moved), u.sign)
        rhs = rhs + orbit_sum.scaled(w.sign)
    lhs = FormalChar()
    for v in group.compact.weyl.elements:
        lhs = lhs + FormalChar.exp(v.apply(lam), v.sign)
    if lhs != rhs:
        raise InternalError("discrete series transfer numerator identity failed")
    exponent = group.q - _noncompact_count(group, subsystem)
    return DiscreteSeriesTransfer(parameters=tuple(params), sign_exponent=exponent)
