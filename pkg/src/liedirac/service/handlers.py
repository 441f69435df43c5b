"""Computation handlers shared by the HTTP routes and the command line client."""

from __future__ import annotations

from .. import dirac, elliptic, endoscopy, klmod, verify
from ..charring import FormalChar, VirtualModule
from ..rootsys import (
    GroupData,
    InputError,
    Subsystem,
    build_group_datum,
    cartan_data,
)
from ..serialize import (
    char_terms,
    cohomology_payload,
    fraction_str,
    module_entries,
)
from . import schemas as s


def _group(spec: s.DatumSpec) -> GroupData:
    return build_group_datum(spec.type, tuple(spec.grading))


def _subsystem(spec: s.DatumSpec, selector: s.SubSelector) -> Subsystem:
    group = _group(spec)
    if (selector.name is None) == (selector.indices is None):
        raise InputError("specify a subsystem by name or by indices, not both")
    if selector.name is not None:
        if selector.name == "full":
            return group.full
        if selector.name == "torus":
            return Subsystem(group.cartan, (), "torus")
        if selector.name not in spec.subsystems:
            raise InputError(f"datum defines no subsystem named {selector.name!r}")
        indices = tuple(spec.subsystems[selector.name])
        return Subsystem(group.cartan, indices, selector.name)
    return Subsystem(group.cartan, tuple(selector.indices))


def _mult_entries(vm: VirtualModule) -> list[s.MultiplicityEntry]:
    return [s.MultiplicityEntry(**e) for e in module_entries(vm)]


def _terms(f: FormalChar) -> list[s.TermEntry]:
    return [s.TermEntry(**t) for t in char_terms(f)]


def describe_datum(req: s.DatumRequest) -> s.DatumResponse:
    group = _group(req.datum)
    subsystems = []
    for name, indices in sorted(req.datum.subsystems.items()):
        sub = Subsystem(group.cartan, tuple(indices), name)
        subsystems.append(s.SubsystemInfo(
            name=name,
            positive_root_indices=list(sub.indices),
            rho=list(sub.rho),
            weyl_order=sub.weyl.order,
        ))
    return s.DatumResponse(
        type=group.cartan.label,
        grading=list(group.grading),
        rank=group.cartan.rank,
        positive_roots=[list(r.root_coords) for r in group.cartan.positive_roots],
        compact_indices=list(group.compact.indices),
        rho=list(group.rho),
        rho_c=list(group.rho_c),
        rho_n=list(group.rho_n),
        q_half_dim_p=group.q,
        l0=group.l0,
        weyl_order=group.full.weyl.order,
        compact_weyl_order=group.compact.weyl.order,
        subsystems=subsystems,
    )


def hd_findim(req: s.HdFindimRequest) -> s.CohomologyResponse:
    hd = dirac.hd_finite_dim(_group(req.datum), tuple(req.highest_weight))
    return s.CohomologyResponse(**cohomology_payload(hd))


def hd_aq(req: s.HdAqRequest) -> s.HdAqResponse:
    group = _group(req.datum)
    parabolic = dirac.theta_stable_parabolic(group, tuple(req.defining_element))
    result = dirac.hd_aq(group, parabolic, tuple(req.character))
    return s.HdAqResponse(
        **cohomology_payload(result.cohomology),
        lowest_k_type=list(result.lowest_k_type),
    )


def hd_ds(req: s.HdDsRequest) -> s.HdDsResponse:
    result = dirac.hd_discrete_series(_group(req.datum), tuple(req.parameter))
    return s.HdDsResponse(
        **cohomology_payload(result.cohomology),
        dominant_parameter=list(result.parameter),
        orientation=result.orientation,
    )


def hd_hw(req: s.HdHwRequest) -> s.HdHwResponse:
    # the grading plays no role in the highest-weight category, but the
    # datum is still validated as a whole
    cartan = _group(req.datum).cartan
    result = klmod.hd_highest_weight(cartan, tuple(req.levi), tuple(req.highest_weight))
    return s.HdHwResponse(
        entries=_mult_entries(result.module),
        antidominant=list(result.antidominant),
        position_word=list(result.position_word),
        nilrad_half_sum=list(result.nilrad_half_sum),
    )


def dirac_index(req: s.IndexRequest) -> s.CharResponse:
    group = _group(req.datum)
    weight = tuple(req.weight)
    if req.family == "findim":
        char = dirac.dirac_index_finite_dim(group, weight)
    elif req.family == "ds":
        char = dirac.dirac_index_discrete_series(group, weight)
    else:
        if req.defining_element is None:
            raise InputError("the aq family needs a defining element")
        parabolic = dirac.theta_stable_parabolic(group, tuple(req.defining_element))
        char = dirac.dirac_index_aq(group, parabolic, weight)
    return s.CharResponse(terms=_terms(char))


def pairing_ell(req: s.PairingEllRequest) -> s.PairingResponse:
    group = _group(req.datum)
    report = elliptic.elliptic_pairing(
        elliptic.supertempered_numerator(group, tuple(req.mu)),
        elliptic.supertempered_numerator(group, tuple(req.mu2)),
    )
    return s.PairingResponse(value=fraction_str(report.value),
                             left=report.left, right=report.right)


def pairing_t81(req: s.PairingT81Request) -> s.PairingResponse:
    group = _group(req.datum)
    report = elliptic.cross_pairing_check(
        group, tuple(req.parameter), tuple(req.parameter2)
    )
    return s.PairingResponse(value=fraction_str(report.value),
                             left=report.left, right=report.right)


def _kl_rows(ctx: klmod.KLContext,
             table: dict[tuple[int, int], tuple[int, ...]]) -> list[s.KlRow]:
    rows = []
    for (x, w), poly in table.items():
        rows.append((ctx.length[w], ctx.length[x], ctx.word(w), ctx.word(x), poly))
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    return [
        s.KlRow(x=list(xw), w=list(ww), poly=list(poly))
        for (_, _, ww, xw, poly) in rows
    ]


def kl_table(req: s.KlTableRequest) -> s.KlTableResponse:
    ctx = klmod.kl_context(req.type)
    return s.KlTableResponse(type=req.type, rows=_kl_rows(ctx, ctx.kl_table()))


def kl_parabolic(req: s.KlParabolicRequest) -> s.KlTableResponse:
    ctx = klmod.kl_context(req.type)
    table = klmod.parabolic_klv(ctx, tuple(req.levi), tuple(req.singular))
    return s.KlTableResponse(type=req.type, rows=_kl_rows(ctx, table))


def transfer_factor(req: s.TransferFactorRequest) -> s.TransferFactorResponse:
    group = _group(req.datum)
    subsystem = _subsystem(req.datum, req.sub)
    data = endoscopy.transfer_factor_spin(group, subsystem)
    quotient_checked = True
    try:
        endoscopy.transfer_factor_quotient(group, subsystem)
    except InputError:
        quotient_checked = False
    return s.TransferFactorResponse(
        factor=_terms(data.factor),
        sign_exponent=data.sign_exponent,
        quotient_checked=quotient_checked,
    )


def transfer_findim(req: s.TransferFindimRequest) -> s.TransferFindimResponse:
    group = _group(req.datum)
    subsystem = _subsystem(req.datum, req.sub)
    module = endoscopy.transfer_finite_dim(group, subsystem, tuple(req.highest_weight))
    exponent = endoscopy.transfer_factor_spin(group, subsystem).sign_exponent
    return s.TransferFindimResponse(
        entries=_mult_entries(module), sign_exponent=exponent,
    )


def transfer_ds(req: s.TransferDsRequest) -> s.TransferDsResponse:
    group = _group(req.datum)
    subsystem = _subsystem(req.datum, req.sub)
    result = endoscopy.transfer_discrete_series(group, subsystem, tuple(req.parameter))
    return s.TransferDsResponse(
        parameters=[
            s.SignedParameter(parameter=list(p), sign=sign)
            for p, sign in result.parameters
        ],
        sign_exponent=result.sign_exponent,
    )


def run_verify(req: s.VerifyRequest) -> s.VerifyResponse:
    grading = tuple(req.grading) if req.grading is not None else None
    result = verify.run_suite(req.suite, bound=req.bound,
                              type_label=req.type, grading=grading)
    return s.VerifyResponse(
        suite=result.suite, passed=result.passed, checks=result.checks,
        counterexample=result.counterexample,
    )
