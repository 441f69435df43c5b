"""Spin module K-type decompositions and even/odd spin character differences.

The difference ch S+ - ch S- is normalised as the product over the relevant
positive roots of (e(a/2) - e(-a/2)), which gives coefficient +1 on the
extreme weight.  The parity sign 2q is reported separately by callers that
need the conjugation behaviour.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .charring import FormalChar, VirtualModule
from .rootsys import (
    Coords,
    GroupData,
    InputError,
    InternalError,
    Subsystem,
    add,
    chamber_coset_reps,
    neg,
    sub,
)


@dataclass
class SpinDecomposition:
    """K-types of the spin module, graded by the coset-representative sign."""

    ktypes: VirtualModule
    plus: VirtualModule
    minus: VirtualModule
    difference: FormalChar   # ch S+ - ch S-


def spin_module_ktypes(group: GroupData) -> SpinDecomposition:
    """Decompose the spin module: one K-type e(w rho - rho_c) per coset rep.

    Requires an equal-rank datum; the multiplicity constant is then 1.  The
    total dimension is checked against 2**q, and the signed character sum is
    checked against the product form of ch S+ - ch S-.
    """
    if group.l0 != 0:
        raise InputError("unequal-rank data are not supported")
    reps = chamber_coset_reps(group.full, group.compact)
    plus: dict[Coords, int] = {}
    minus: dict[Coords, int] = {}
    for w in reps:
        mu = sub(w.apply(group.rho), group.rho_c)
        target = plus if w.sign == 1 else minus
        target[mu] = target.get(mu, 0) + 1
    plus_vm = VirtualModule(group.compact, plus)
    minus_vm = VirtualModule(group.compact, minus)
    all_types: dict[Coords, int] = dict(plus)
    for k, v in minus.items():
        all_types[k] = all_types.get(k, 0) + v
    ktypes = VirtualModule(group.compact, all_types)
    if ktypes.dimension() != 2 ** group.q:
        raise InternalError("spin module dimension is not 2**q")
    difference = spin_character_difference(group.full, group.compact)
    if plus_vm.to_character() - minus_vm.to_character() != difference:
        raise InternalError("graded spin K-types disagree with the product form")
    return SpinDecomposition(ktypes=ktypes, plus=plus_vm, minus=minus_vm,
                             difference=difference)


def spin_character_difference(ambient: Subsystem, inner: Subsystem) -> FormalChar:
    """ch S+ - ch S- for the orthocomplement of ``inner`` inside ``ambient``.

    Equals the product of (e(a/2) - e(-a/2)) over positive roots of the
    ambient system not in the subsystem; the coefficient of the extreme
    weight (half the sum of those roots) is +1.
    """
    if not ambient.contains(inner):
        raise InputError("subsystem is not contained in the ambient system")
    complement = [r for r in ambient.positive if r.index not in set(inner.indices)]
    if (2 * len(complement)) % 2:  # root-space count of s is twice this
        raise InputError("orthocomplement has odd root-space dimension")
    rank = ambient.cartan.rank
    out = FormalChar.one(rank)
    for r in complement:
        out = out * (FormalChar.exp(r.half) - FormalChar.exp(neg(r.half)))
    return out


def exterior_algebra_difference(group: GroupData) -> FormalChar:
    """Oracle form of ch S+ - ch S-: expand the exterior algebra of p+ directly.

    Sums (-1)^{|A|} e(sum A - rho_n) over all subsets A of the noncompact
    positive roots (the spin action shifts the adjoint weights by -rho_n),
    then applies the extreme-weight sign normalisation.
    """
    rank = group.cartan.rank
    total = FormalChar()
    roots = [r.doubled for r in group.noncompact]
    for bits in itertools.product((0, 1), repeat=len(roots)):
        w = (0,) * rank
        for b, r in zip(bits, roots):
            if b:
                w = add(w, r)
        w = sub(w, group.rho_n)
        total = total + FormalChar.exp(w, (-1) ** sum(bits))
    extreme = total.coeff(group.rho_n)
    if extreme not in (1, -1):
        raise InternalError("extreme spin weight does not have coefficient +-1")
    return total.scaled(extreme)


def exterior_algebra_full(group: GroupData) -> FormalChar:
    """Oracle for ch S: the full exterior algebra of p+ shifted by -rho_n."""
    rank = group.cartan.rank
    total = FormalChar()
    roots = [r.doubled for r in group.noncompact]
    for bits in itertools.product((0, 1), repeat=len(roots)):
        w = (0,) * rank
        for b, r in zip(bits, roots):
            if b:
                w = add(w, r)
        total = total + FormalChar.exp(sub(w, group.rho_n))
    return total
