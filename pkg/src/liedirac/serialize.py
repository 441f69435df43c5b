"""Canonical JSON-ready encodings: sorted term lists, exact rationals as strings."""

from __future__ import annotations

from fractions import Fraction

from .charring import FormalChar, VirtualModule
from .dirac import DiracCohomology
from .rootsys import GroupData, Subsystem


def fraction_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def char_terms(f: FormalChar) -> list[dict]:
    return [{"weight": list(k), "coeff": v} for k, v in f.sorted_items()]


def module_entries(vm: VirtualModule) -> list[dict]:
    return [{"weight": list(k), "multiplicity": v} for k, v in vm.sorted_items()]


def cohomology_payload(hd: DiracCohomology) -> dict:
    return {"plus": module_entries(hd.plus), "minus": module_entries(hd.minus)}


def subsystem_payload(s: Subsystem) -> dict:
    return {
        "name": s.name,
        "positive_root_indices": list(s.indices),
        "rho": list(s.rho),
        "weyl_order": s.weyl.order,
    }


def datum_payload(group: GroupData) -> dict:
    return {
        "type": group.cartan.label,
        "grading": list(group.grading),
        "rank": group.cartan.rank,
        "positive_roots": [list(r.root_coords) for r in group.cartan.positive_roots],
        "compact_indices": list(group.compact.indices),
        "rho": list(group.rho),
        "rho_c": list(group.rho_c),
        "rho_n": list(group.rho_n),
        "q_half_dim_p": group.q,
        "l0": group.l0,
        "weyl_order": group.full.weyl.order,
        "compact_weyl_order": group.compact.weyl.order,
    }
