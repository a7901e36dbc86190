"""Exact computation of Kronecker, reduced Kronecker and column-stable
coefficients, with the linear quasipolynomials that govern their growth."""

from .characters import character_value, enumerate_partitions, z_order
from .coefficients import (
    ReducedMethod,
    kronecker,
    littlewood_richardson,
    reduced_kronecker,
    stabilization_profile,
)
from .partition import (
    conjugate,
    cut_hook,
    cut_row,
    ell_and_cone,
    hook_add,
    murnaghan_admissible,
    n0_bound,
    pad_to_weight,
    parse,
)
from .stability import (
    abc_coefficients,
    classify_direction,
    conj111_search,
    hook_bounds_k,
    hook_stab_verify,
    hook_stable_value,
    q_polynomial,
    quasipoly_eval,
    row_bounds_kprime,
)
from .symseries import (
    LaurentPoly,
    PowerSumSeries,
    extract_schur_coeff,
    sigma_coefficient,
    sigma_expand,
    straighten,
    vertex_term,
)

__version__ = "0.1.0"
