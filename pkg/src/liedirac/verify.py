"""Acceptance suites: exact identity checks, one suite per criterion.

Every suite returns a SuiteResult with the number of checks performed and,
on failure, the first counterexample serialised as a plain dict.  All
checks are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .charring import FormalChar, VirtualModule, weyl_character
from .dirac import (
    DiracCohomology,
    dirac_index_finite_dim,
    dirac_inequality,
    gk_cohomology_dim,
    hd_aq,
    hd_discrete_series,
    hd_finite_dim,
    hd_in_stages,
    parity_check,
    theta_stable_parabolic,
)
from .elliptic import (
    cross_pairing_check,
    elliptic_pairing,
    pseudo_coefficient_trace,
    supertempered_numerator,
)
from .endoscopy import (
    transfer_discrete_series,
    transfer_factor_quotient,
    transfer_factor_spin,
    transfer_finite_dim,
)
from .klmod import (
    hd_highest_weight,
    kl_context,
    levi_subsystem,
    u_homology_euler,
)
from .rootsys import (
    Coords,
    GroupData,
    InputError,
    InternalError,
    Subsystem,
    add,
    build_group_datum,
    cartan_data,
    chamber_coset_reps,
    sub,
)
from .spin import exterior_algebra_difference, exterior_algebra_full, spin_module_ktypes


DEFAULT_TYPES = ("A1", "A2", "B2", "G2")

TRANSFER_PAIRS = (
    ("B2", (1, 3)),       # long-root A1 x A1
    ("G2", (0, 5)),       # short A1 x orthogonal long A1
)


@dataclass
class SuiteResult:
    suite: str
    passed: bool
    checks: int
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "passed": self.passed, "checks": self.checks}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _gradings(rank: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((0, 1), repeat=rank)


def _data_under_test(type_label: str | None,
                     grading: tuple[int, ...] | None) -> list[GroupData]:
    labels = (type_label,) if type_label else DEFAULT_TYPES
    out = []
    for label in labels:
        rank = cartan_data(label).rank
        gradings = (tuple(grading),) if grading is not None else _gradings(rank)
        for g in gradings:
            out.append(build_group_datum(label, g))
    return out


def _dominant_weights(rank: int, bound: int) -> Iterator[Coords]:
    for coefs in itertools.product(range(bound + 1), repeat=rank):
        if sum(coefs) <= bound:
            yield tuple(2 * c for c in coefs)


def _box(rank: int, bound: int) -> Iterator[Coords]:
    """All doubled coordinate vectors with coordinate height at most bound."""
    for u in itertools.product(range(-2 * bound, 2 * bound + 1), repeat=rank):
        if sum(abs(c) for c in u) <= 2 * bound:
            yield u


def _supertempered_params(group: GroupData, bound: int) -> list[Coords]:
    """Regular compact-dominant spin-integral parameters, one per W_K orbit."""
    out = []
    for u in _box(group.cartan.rank, bound):
        if not group.is_ktilde_integral(u):
            continue
        if not group.full.is_regular(u):
            continue
        if not group.compact.is_dominant(u):
            continue
        out.append(u)
    return sorted(out)


def _discrete_series_params(group: GroupData, bound: int,
                            dominant_only: bool = True) -> list[Coords]:
    """Regular parameters with lam - rho integral for the spin double cover."""
    out = []
    for u in _box(group.cartan.rank, bound):
        if not group.is_ktilde_integral(sub(u, group.rho)):
            continue
        if not group.full.is_regular(u):
            continue
        if dominant_only and not group.compact.is_dominant(u):
            continue
        out.append(u)
    return sorted(out)


def _aq_samples(group: GroupData) -> Iterator[tuple]:
    rank = group.cartan.rank
    for h in itertools.product((0, 1), repeat=rank):
        parabolic = theta_stable_parabolic(group, h)
        lams = [tuple(0 for _ in range(rank))]
        for k in (1, 2):
            lam = tuple(2 * k * bit for bit in h)
            if any(lam):
                lams.append(lam)
        for lam in lams:
            yield parabolic, lam


def _suite(fn: Callable) -> Callable:
    def wrapper(bound: int | None = None, type_label: str | None = None,
                grading: tuple[int, ...] | None = None) -> SuiteResult:
        name = fn.__name__.replace("_suite", "").replace("_", "-")
        case: dict = {}
        try:
            checks = fn(case, bound, type_label, grading)
            return SuiteResult(suite=name, passed=True, checks=checks)
        except (InputError, InternalError, AssertionError) as ex:
            case["error"] = str(ex) or ex.__class__.__name__
            return SuiteResult(suite=name, passed=False,
                               checks=case.pop("_checks", 0), counterexample=case)
    wrapper.__name__ = fn.__name__
    return wrapper


@_suite
def kostant_index_suite(case, bound, type_label, grading) -> int:
    """ch V * (ch S+ - ch S-) equals the signed coset-representative K-type sum."""
    bound = 4 if bound is None else bound
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        for lam in _dominant_weights(group.cartan.rank, bound):
            case["lambda"] = list(lam)
            case["_checks"] = checks
            dirac_index_finite_dim(group, lam)   # asserts both routes agree
            checks += 1
    return checks


@_suite
def spin_hd_trivial_suite(case, bound, type_label, grading) -> int:
    """The spin module equals the Dirac cohomology of the trivial module."""
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        case["_checks"] = checks
        decomp = spin_module_ktypes(group)
        hd = hd_finite_dim(group, (0,) * group.cartan.rank)
        assert decomp.plus == hd.plus and decomp.minus == hd.minus, \
            "spin module and H_D(trivial) differ"
        assert decomp.difference == exterior_algebra_difference(group), \
            "spin difference disagrees with the exterior algebra oracle"
        assert decomp.ktypes.to_character() == exterior_algebra_full(group), \
            "spin K-types disagree with the exterior algebra oracle"
        checks += 1
    return checks


def _computed_cohomologies(group: GroupData, bound: int):
    """All H_D outputs the acceptance sweeps look at, with their parameters."""
    for lam in _dominant_weights(group.cartan.rank, bound):
        yield ("findim", lam, add(lam, group.rho), hd_finite_dim(group, lam))
    for lam in _discrete_series_params(group, bound):
        yield ("ds", lam, lam, hd_discrete_series(group, lam).cohomology)
    for parabolic, lam in _aq_samples(group):
        yield ("aq", lam, add(lam, group.rho),
               hd_aq(group, parabolic, lam).cohomology)


@_suite
def infl_char_suite(case, bound, type_label, grading) -> int:
    """K-types of every computed H_D match the infinitesimal character orbit."""
    bound = 4 if bound is None else bound
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        for family, lam, infl, hd in _computed_cohomologies(group, bound):
            case.update(family=family, parameter=list(lam))
            case["_checks"] = checks
            orbit = group.full.orbit(infl)
            for mu in hd.multiplicities():
                case["ktype"] = list(mu)
                assert add(mu, group.rho_c) in orbit, \
                    "K-type + rho_c is not W-conjugate to the parameter"
                report = dirac_inequality(group, infl, add(mu, group.rho_n))
                assert report.holds and report.equality and report.equality_orbit, \
                    "Dirac inequality equality fails on an H_D K-type"
                checks += 1
            case.pop("ktype", None)
    return checks


@_suite
def gram_orthonormal_suite(case, bound, type_label, grading) -> int:
    """Supertempered numerators are orthonormal; both pairing routes agree."""
    bound = 4 if bound is None else bound
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        params = _supertempered_params(group, bound)
        numerators = [supertempered_numerator(group, u) for u in params]
        for i, a in enumerate(numerators):
            for j, b in enumerate(numerators):
                case.update(mu=list(params[i]), mu2=list(params[j]))
                case["_checks"] = checks
                value = elliptic_pairing(a, b).value
                assert value == (1 if i == j else 0), \
                    f"Gram matrix entry is {value}"
                checks += 1
        for lam in _discrete_series_params(group, bound):
            for lam2 in _discrete_series_params(group, bound):
                case.update(mu=list(lam), mu2=list(lam2))
                case["_checks"] = checks
                cross_pairing_check(group, lam, lam2)   # asserts equality
                checks += 1
    return checks


@_suite
def pseudo_coeff_suite(case, bound, type_label, grading) -> int:
    """Pseudo-coefficient traces form the Kronecker delta on discrete series."""
    bound = 4 if bound is None else bound
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        params = _discrete_series_params(group, bound, dominant_only=False)
        for lam in params:
            orbit = {w.apply(lam) for w in group.compact.weyl.elements}
            for lam2 in params:
                case.update(target=list(lam2), source=list(lam))
                case["_checks"] = checks
                expected = 1 if lam2 in orbit else 0
                got = pseudo_coefficient_trace(group, "ds", lam2, lam)
                assert got == expected, f"trace {got}, expected {expected}"
                checks += 1
    return checks


@_suite
def transfer_dual_suite(case, bound, type_label, grading) -> int:
    """Spin-difference and numerator-quotient transfer factors agree."""
    checks = 0
    pairs: list[tuple[str, tuple[int, ...] | str]] = list(TRANSFER_PAIRS)
    for label in DEFAULT_TYPES:
        pairs.append((label, "full"))
        pairs.append((label, "torus"))
    for label, indices in pairs:
        if type_label and label != type_label:
            continue
        cartan = cartan_data(label)
        if indices == "full":
            subsystem = Subsystem(cartan, tuple(range(len(cartan.positive_roots))))
        elif indices == "torus":
            subsystem = Subsystem(cartan, ())
        else:
            subsystem = Subsystem(cartan, indices)
        admissible = 0
        for g in _gradings(cartan.rank):
            if grading is not None and tuple(grading) != g:
                continue
            group = build_group_datum(label, g)
            case.update(type=label, grading=list(g), sub=list(subsystem.indices))
            case["_checks"] = checks
            spin_form = transfer_factor_spin(group, subsystem)   # asserts numerator identity
            try:
                quotient = transfer_factor_quotient(group, subsystem)
            except InputError:
                continue    # rho - rho_H not a character of this form's torus
            assert quotient == spin_form.factor
            admissible += 1
            checks += 1
        assert admissible > 0 or grading is not None, \
            "no grading admits the quotient transfer factor"
    return checks


@_suite
def transfer_findim_suite(case, bound, type_label, grading) -> int:
    """Finite-dimensional transfer identity over a height sweep."""
    bound = 5 if bound is None else bound
    checks = 0
    pairs = list(TRANSFER_PAIRS) + [("A1", "torus"), ("A2", "torus"),
                                    ("B2", "full"), ("G2", "full")]
    for label, indices in pairs:
        if type_label and label != type_label:
            continue
        cartan = cartan_data(label)
        if indices == "full":
            subsystem = Subsystem(cartan, tuple(range(len(cartan.positive_roots))))
        elif indices == "torus":
            subsystem = Subsystem(cartan, ())
        else:
            subsystem = Subsystem(cartan, indices)
        g = tuple(grading) if grading is not None else (0,) * cartan.rank
        group = build_group_datum(label, g)
        for lam in _dominant_weights(cartan.rank, bound):
            case.update(type=label, sub=list(subsystem.indices), **{"lambda": list(lam)})
            case["_checks"] = checks
            transfer_finite_dim(group, subsystem, lam)   # asserts the identity
            checks += 1
    return checks


@_suite
def transfer_ds_suite(case, bound, type_label, grading) -> int:
    """Discrete-series index transfer identity over regular parameters."""
    bound = 4 if bound is None else bound
    checks = 0
    for label, indices in TRANSFER_PAIRS:
        if type_label and label != type_label:
            continue
        cartan = cartan_data(label)
        subsystem = Subsystem(cartan, indices)
        for g in _gradings(cartan.rank):
            if grading is not None and tuple(grading) != g:
                continue
            group = build_group_datum(label, g)
            for lam in _discrete_series_params(group, bound):
                case.update(type=label, grading=list(g), parameter=list(lam))
                case["_checks"] = checks
                transfer_discrete_series(group, subsystem, lam)  # asserts identity
                checks += 1
    return checks


A3_NONTRIVIAL_KL = {
    ((), (1, 0, 2, 1)): (1, 1),
    ((), (0, 1, 2, 1, 0)): (1, 1),
    ((0,), (0, 1, 2, 1, 0)): (1, 1),
    ((1,), (1, 0, 2, 1)): (1, 1),
    ((2,), (0, 1, 2, 1, 0)): (1, 1),
    ((0, 2), (0, 1, 2, 1, 0)): (1, 1),
}


@_suite
def kl_core_suite(case, bound, type_label, grading) -> int:
    """KL tables against the inversion oracle; highest-weight H_D vs Kostant."""
    bound = 4 if bound is None else bound
    checks = 0
    case["stage"] = "A2 table"
    ctx2 = kl_context("A2")
    table2 = ctx2.kl_table()
    assert all(p == (1,) for p in table2.values()), "A2 table is not all ones"
    checks += len(table2)
    case["stage"] = "A3 table vs inversion oracle"
    case["_checks"] = checks
    ctx3 = kl_context("A3")
    table3 = ctx3.kl_table()
    assert table3 == ctx3.kl_table_by_inversion(), \
        "A3 production and R-inversion tables differ"
    nontrivial = {
        (ctx3.word(x), ctx3.word(w)): p for (x, w), p in table3.items() if p != (1,)
    }
    assert nontrivial == A3_NONTRIVIAL_KL, f"unexpected nontrivial entries {nontrivial}"
    checks += len(table3)
    for label in ("A1", "A2", "B2"):
        cartan = cartan_data(label)
        ctx = kl_context(label)
        full = ctx.full
        rank = cartan.rank
        for levi in itertools.chain.from_iterable(
            itertools.combinations(range(rank), k) for k in range(rank + 1)
        ):
            lsys = levi_subsystem(cartan, levi)
            rho_u = sub(full.rho, lsys.rho)
            reps = chamber_coset_reps(full, lsys)
            for lam in _dominant_weights(rank, bound):
                case.update(stage="highest-weight vs Kostant", type=label,
                            levi=list(levi), **{"lambda": list(lam)})
                case["_checks"] = checks
                result = hd_highest_weight(cartan, levi, lam)
                expected: dict[Coords, int] = {}
                for v in reps:
                    key = sub(v.apply(add(lam, full.rho)), lsys.rho)
                    expected[key] = expected.get(key, 0) + 1
                assert result.module.entries == expected, \
                    "highest-weight H_D differs from the Kostant formula"
                checks += 1
                case["stage"] = "u-homology Euler twist"
                euler = u_homology_euler(cartan, levi, lam)
                signed: FormalChar = FormalChar()
                for v in reps:
                    key = sub(v.apply(add(lam, full.rho)), lsys.rho)
                    signed = signed + weyl_character(lsys, key).scaled(v.sign)
                assert signed == euler * FormalChar.exp(rho_u), \
                    "Euler characteristic twist identity failed"
                checks += 1
    return checks


@_suite
def stages_suite(case, bound, type_label, grading) -> int:
    """Two-stage torus cohomology equals the direct compact orbit sum."""
    bound = 4 if bound is None else bound
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        for lam in _discrete_series_params(group, bound, dominant_only=False):
            case["parameter"] = list(lam)
            case["_checks"] = checks
            staged = hd_in_stages(group, lam)
            direct = FormalChar()
            for w in group.compact.weyl.elements:
                direct = direct + FormalChar.exp(w.apply(lam))
            assert staged == direct, "staged and direct orbit sums differ"
            checks += 1
    return checks


@_suite
def gk_dim_suite(case, bound, type_label, grading) -> int:
    """Relative cohomology dimension equals the Levi Weyl index."""
    checks = 0
    labels = (type_label,) if type_label else ("A2", "B2")
    for label in labels:
        rank = cartan_data(label).rank
        gradings = (tuple(grading),) if grading is not None else _gradings(rank)
        for g in gradings:
            group = build_group_datum(label, g)
            for parabolic, lam in _aq_samples(group):
                case.update(type=label, grading=list(g),
                            defining=list(parabolic.defining), **{"lambda": list(lam)})
                case["_checks"] = checks
                report = gk_cohomology_dim(group, parabolic, lam, lam)
                assert report.infinitesimal_match
                assert report.dimension == report.coset_count
                checks += 1
                mismatched = add(lam, tuple(4 if i == 0 else 0 for i in range(rank)))
                report0 = gk_cohomology_dim(group, parabolic, lam, mismatched)
                assert report0.dimension == 0 and not report0.infinitesimal_match
                checks += 1
    return checks


@_suite
def parity_suite(case, bound, type_label, grading) -> int:
    """Even and odd H_D parts never share a K-type at regular parameters."""
    bound = 3 if bound is None else bound
    checks = 0
    for group in _data_under_test(type_label, grading):
        case.update(type=group.cartan.label, grading=list(group.grading))
        for family, lam, _infl, hd in _computed_cohomologies(group, bound):
            case.update(family=family, parameter=list(lam))
            case["_checks"] = checks
            assert parity_check(hd), "plus and minus parts share a K-type"
            checks += 1
    case["family"] = "negative-control"
    group = build_group_datum("A1", (1,))
    shared = VirtualModule(group.compact, {(2,): 1})
    control = DiracCohomology(plus=shared, minus=shared)
    assert not parity_check(control), "negative control unexpectedly passed"
    return checks + 1


SUITES: dict[str, Callable] = {
    "kostant-index": kostant_index_suite,
    "spin-hd-trivial": spin_hd_trivial_suite,
    "infl-char": infl_char_suite,
    "gram-orthonormal": gram_orthonormal_suite,
    "pseudo-coeff": pseudo_coeff_suite,
    "transfer-dual": transfer_dual_suite,
    "transfer-findim": transfer_findim_suite,
    "transfer-ds": transfer_ds_suite,
    "kl-core": kl_core_suite,
    "stages": stages_suite,
    "gk-dim": gk_dim_suite,
    "parity": parity_suite,
}


def run_suite(name: str, bound: int | None = None, type_label: str | None = None,
              grading: tuple[int, ...] | None = None) -> SuiteResult:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](bound=bound, type_label=type_label, grading=grading)


def run_all(bound: int | None = None) -> list[SuiteResult]:
    return [run_suite(name, bound=bound) for name in SUITES]
