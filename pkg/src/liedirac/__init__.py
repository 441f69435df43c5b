"""Exact character-level computations for equal-rank real forms.

Root systems and Weyl groups, formal character rings, spin modules, Dirac
cohomology and index of the standard module families, Kazhdan-Lusztig
tables, elliptic pairings and endoscopic transfer, all in exact integer and
rational arithmetic.
"""

from .charring import (
    FormalChar,
    VirtualModule,
    convolve,
    decompose_into_irreducibles,
    torus_inner_product,
    weyl_character,
    weyl_denominator,
    weyl_numerator,
)
from .dirac import (
    DiracCohomology,
    dirac_index_aq,
    dirac_index_discrete_series,
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
    is_elliptic,
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
    parabolic_klv,
    u_homology_euler,
)
from .rootsys import (
    CartanData,
    GroupData,
    InputError,
    InternalError,
    Subsystem,
    WeylElem,
    build_group_datum,
    build_subsystem,
    cartan_data,
    chamber_coset_reps,
)
from .spin import spin_character_difference, spin_module_ktypes
from .verify import SUITES, run_all, run_suite

__version__ = "0.1.0"
