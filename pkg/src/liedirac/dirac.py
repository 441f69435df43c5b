"""Dirac cohomology and Dirac index of the standard module families.

Families covered: finite-dimensional modules, cohomologically induced
modules attached to a theta-stable parabolic, and discrete series.  The
plus/minus grading is by the sign of the indexing coset representative, so
that the Euler characteristic matches the character-level index
ch X * (ch S+ - ch S-).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charring import FormalChar, VirtualModule, weyl_character
from .rootsys import (
    Coords,
    GroupData,
    InputError,
    InternalError,
    PositiveRoot,
    Subsystem,
    WeylElem,
    add,
    chamber_coset_reps,
    sub,
)
from .spin import spin_character_difference


@dataclass
class DiracCohomology:
    """K-types of H_D split into even and odd parts."""

    plus: VirtualModule
    minus: VirtualModule

    def multiplicities(self) -> dict[Coords, int]:
        """Ungraded K-type multiplicities of H_D."""
        out = dict(self.plus.entries)
        for k, v in self.minus.entries.items():
            out[k] = out.get(k, 0) + v
        return out

    def hom_dimension(self, other: "DiracCohomology") -> int:
        mine = self.multiplicities()
        theirs = other.multiplicities()
        return sum(m * theirs.get(k, 0) for k, m in mine.items())

    def index_character(self) -> FormalChar:
        return self.plus.to_character() - self.minus.to_character()

    def ktype_count(self) -> int:
        return sum(self.multiplicities().values())


def parity_check(hd: DiracCohomology) -> bool:
    """True iff the even and odd parts share no K-type."""
    return not (set(hd.plus.entries) & set(hd.minus.entries))


def _is_g_integral_dominant(group: GroupData, u: Coords) -> bool:
    return all(c >= 0 and c % 2 == 0 for c in u)


def _graded_from_reps(group: GroupData, reps: tuple[WeylElem, ...],
                      shifted: Coords) -> DiracCohomology:
    plus: dict[Coords, int] = {}
    minus: dict[Coords, int] = {}
    for w in reps:
        mu = sub(w.apply(shifted), group.rho_c)
        if not group.compact.is_dominant(mu):
            raise InternalError("coset representative produced a non-dominant K-type")
        target = plus if w.sign == 1 else minus
        target[mu] = target.get(mu, 0) + 1
    return DiracCohomology(
        plus=VirtualModule(group.compact, plus),
        minus=VirtualModule(group.compact, minus),
    )


def hd_finite_dim(group: GroupData, lam: Coords) -> DiracCohomology:
    """H_D of the finite-dimensional module with highest weight lam.

    One K-type e(w(lam+rho) - rho_c) for each chamber coset representative w,
    graded by the sign of w.
    """
    if not _is_g_integral_dominant(group, lam):
        raise InputError(f"{lam} is not a dominant integral weight")
    reps = chamber_coset_reps(group.full, group.compact)
    return _graded_from_reps(group, reps, add(lam, group.rho))


@dataclass
class ThetaStableParabolic:
    """Levi and nilradical data cut out by a dominant defining coweight."""

    defining: tuple[int, ...]
    levi: Subsystem
    levi_compact: Subsystem
    nilrad: tuple[PositiveRoot, ...]
    rho_u: Coords
    rho_u_p: Coords   # half sum of the noncompact nilradical roots


def theta_stable_parabolic(group: GroupData, h: tuple[int, ...]) -> ThetaStableParabolic:
    """Build the parabolic whose Levi is the vanishing set of the coweight h."""
    cartan = group.cartan
    if len(h) != cartan.rank:
        raise InputError("defining coweight length does not match the rank")
    if any(x < 0 for x in h):
        raise InputError("defining coweight must be dominant (nonnegative)")
    levi_idx = []
    nilrad = []
    for r in cartan.positive_roots:
        value = sum(k * hx for k, hx in zip(r.root_coords, h))
        if value == 0:
            levi_idx.append(r.index)
        else:
            nilrad.append(r)
    levi = Subsystem(cartan, tuple(levi_idx), "levi")
    compact_set = set(group.compact.indices)
    levi_compact = Subsystem(
        cartan, tuple(i for i in levi_idx if i in compact_set), "levi-compact"
    )
    rho_u = _half_sum_doubled(cartan.rank, [r.doubled for r in nilrad])
    rho_u_p = _half_sum_doubled(
        cartan.rank, [r.doubled for r in nilrad if r.index not in compact_set]
    )
    return ThetaStableParabolic(
        defining=tuple(h), levi=levi, levi_compact=levi_compact,
        nilrad=tuple(nilrad), rho_u=rho_u, rho_u_p=rho_u_p,
    )


def _half_sum_doubled(rank: int, doubled: list[Coords]) -> Coords:
    total = [0] * rank
    for d in doubled:
        for i, c in enumerate(d):
            total[i] += c
    if any(c % 2 for c in total):
        raise InternalError("half sum has odd doubled coordinates")
    return tuple(c // 2 for c in total)


@dataclass
class AqResult:
    cohomology: DiracCohomology
    lowest_k_type: Coords
    coset_reps: tuple[WeylElem, ...]


def hd_aq(group: GroupData, parabolic: ThetaStableParabolic, lam: Coords) -> AqResult:
    """H_D of the unitary module attached to a theta-stable parabolic.

    ``lam`` must vanish on the Levi roots and pair nonnegatively with the
    nilradical roots; the K-types are e(w(lam+rho) - rho_c) over the Levi's
    chamber coset representatives, and the lowest K-type lam + 2 rho(u cap p)
    is reported alongside.
    """
    cartan = group.cartan
    for r in parabolic.levi.positive:
        if cartan.bilinear(lam, r.doubled) != 0:
            raise InputError("character is not orthogonal to the Levi roots")
    for r in parabolic.nilrad:
        if cartan.bilinear(lam, r.doubled) < 0:
            raise InputError("character is not admissible for the nilradical")
    shifted = add(lam, group.rho)
    for r in group.compact.positive:
        if cartan.coroot_pairing(shifted, r).denominator != 1:
            raise InputError("lam + rho is not integral on the compact coroots")
    reps = chamber_coset_reps(parabolic.levi, parabolic.levi_compact)
    hd = _graded_from_reps(group, reps, shifted)
    lowest = add(lam, add(parabolic.rho_u_p, parabolic.rho_u_p))
    if not group.compact.is_dominant(lowest):
        raise InternalError("lowest K-type is not dominant")
    return AqResult(cohomology=hd, lowest_k_type=lowest, coset_reps=reps)


@dataclass
class DiscreteSeriesResult:
    cohomology: DiracCohomology
    parameter: Coords      # the compact-dominant parameter in the same orbit
    orientation: int       # sign of the Weyl element used to normalise


def hd_discrete_series(group: GroupData, lam: Coords) -> DiscreteSeriesResult:
    """H_D of the discrete series with Harish-Chandra parameter lam.

    A single K-type e(lam_dom - rho_c), where lam_dom is the compact-dominant
    representative of lam.  The sign of the normalising Weyl element is
    reported for callers tracking the skew parameterisation of numerators.
    """
    if not group.full.is_regular(lam):
        raise InputError(f"parameter {lam} is singular")
    if not group.is_ktilde_integral(sub(lam, group.rho)):
        raise InputError("parameter is not integral for the spin double cover")
    lam_dom, w = group.compact.dominant_conjugate(lam)
    mu = sub(lam_dom, group.rho_c)
    if not group.compact.is_dominant(mu):
        raise InternalError("discrete series K-type is not dominant")
    hd = DiracCohomology(
        plus=VirtualModule(group.compact, {mu: 1}),
        minus=VirtualModule(group.compact, {}),
    )
    return DiscreteSeriesResult(cohomology=hd, parameter=lam_dom, orientation=w.sign)


def hd_in_stages(group: GroupData, lam: Coords) -> FormalChar:
    """Torus-level H_D of a discrete series, computed in two stages.

    Applies the compact-pair decomposition: first the single K-type of the
    discrete series, then the compact-group formula for that K-type, giving
    the unsigned sum of e(w lam) over the compact Weyl group.
    """
    ds = hd_discrete_series(group, lam)
    (mu, mult), = ds.cohomology.plus.entries.items()
    if mult != 1:
        raise InternalError("discrete series cohomology is not multiplicity one")
    shifted = add(mu, group.rho_c)
    out = FormalChar()
    for w in group.compact.weyl.elements:
        out = out + FormalChar.exp(w.apply(shifted))
    if len(out.terms) != group.compact.weyl.order:
        raise InternalError("stage-two orbit is not regular")
    return out


def dirac_index_finite_dim(group: GroupData, lam: Coords) -> FormalChar:
    """Index of a finite-dimensional module, verified through both routes.

    The K-type route sums signed irreducible characters of H_D; the
    character route convolves ch V with ch S+ - ch S-.  Both are computed
    and compared.
    """
    hd = hd_finite_dim(group, lam)
    ktype_route = hd.index_character()
    diff = spin_character_difference(group.full, group.compact)
    char_route = weyl_character(group.full, lam) * diff
    if ktype_route != char_route:
        raise InternalError("index routes disagree for a finite-dimensional module")
    return ktype_route


def dirac_index_aq(group: GroupData, parabolic: ThetaStableParabolic,
                   lam: Coords) -> FormalChar:
    return hd_aq(group, parabolic, lam).cohomology.index_character()


def dirac_index_discrete_series(group: GroupData, lam: Coords) -> FormalChar:
    return hd_discrete_series(group, lam).cohomology.index_character()


@dataclass
class InequalityReport:
    holds: bool
    lhs: Fraction           # squared norm of w(mu - rho_n) + rho_c
    rhs: Fraction           # squared norm of the infinitesimal character
    equality: bool
    equality_orbit: bool    # w(mu - rho_n) + rho_c lies in the W-orbit of Lambda
    witness: tuple[int, ...]


def dirac_inequality(group: GroupData, infl_char: Coords, mu: Coords) -> InequalityReport:
    """Evaluate the Dirac inequality for a K-type mu against a parameter.

    Both the norm comparison and the Weyl-orbit membership of the shifted
    weight are reported; for K-types of genuine modules with infinitesimal
    character Lambda they agree.
    """
    shifted = sub(mu, group.rho_n)
    dom, w = group.compact.dominant_conjugate(shifted)
    value = add(dom, group.rho_c)
    lhs = group.cartan.norm_sq(value)
    rhs = group.cartan.norm_sq(infl_char)
    in_orbit = value in group.full.orbit(infl_char)
    return InequalityReport(
        holds=lhs >= rhs, lhs=lhs, rhs=rhs,
        equality=lhs == rhs, equality_orbit=in_orbit, witness=w.word,
    )


@dataclass
class GkReport:
    dimension: int
    infinitesimal_match: bool
    coset_count: int


def gk_cohomology_dim(group: GroupData, parabolic: ThetaStableParabolic,
                      lam: Coords, finite_hw: Coords) -> GkReport:
    """Total relative Lie algebra cohomology dimension via Dirac cohomology.

    Counts shared K-types of the two cohomologies; zero (with a flag) when
    the infinitesimal characters differ.  The count is checked against the
    Weyl group index |W(levi)| / |W(levi cap k)|.
    """
    if not _is_g_integral_dominant(group, finite_hw):
        raise InputError("finite-dimensional highest weight must be dominant integral")
    coset = parabolic.levi.weyl.order // parabolic.levi_compact.weyl.order
    target = add(finite_hw, group.rho)
    if target not in group.full.orbit(add(lam, group.rho)):
        return GkReport(dimension=0, infinitesimal_match=False, coset_count=coset)
    hd_x = hd_aq(group, parabolic, lam).cohomology
    hd_f = hd_finite_dim(group, finite_hw)
    dim = hd_f.hom_dimension(hd_x)
    if dim != coset:
        raise InternalError("cohomology dimension disagrees with the coset count")
    return GkReport(dimension=dim, infinitesimal_match=True, coset_count=coset)
