"""Exact closed-form Bergman kernels for Cartan-Hartogs domains
Y(q, Omega; k) and Cartan-egg domains E(p, q, Omega; k) built over the six
families of irreducible bounded symmetric domains, with Monte-Carlo and
truncated-series verification oracles.
"""

from .albert import AlbertElement, adet, apair, asharp
from .domains import (
    DomainSpec,
    JordanInvariants,
    catalog,
    describe,
    invariants,
    parse_domain,
)
from .elements import (
    coords_from_element,
    element_from_coords,
    frame_element,
    generic_min_poly_coeffs,
    generic_norm,
    linear_isometry,
    membership,
    membership_by_inequalities,
    sample_box,
    zero_element,
)
from .errors import (
    BasisError,
    DomainError,
    InvalidParams,
    LowAcceptanceWarning,
    NumericalDegeneracy,
    OutsideDomain,
    VolumeUnknown,
    WrongArity,
)
from .kernels import (
    KernelExpr,
    KernelTerm,
    e_kernel_core,
    emit,
    eval_e,
    eval_y,
    h_jm,
    inflate,
    kernel_expr,
    known_volume,
    mixed_partial,
    parse_expr,
    sum_poly_series,
    y_kernel_core,
)
from .oracle import (
    McEstimate,
    VerifyReport,
    coeff_e_exact,
    coeff_mc,
    coeff_y_exact,
    mc_norm_moment,
    mc_volume,
    reproducing_check,
    series_kernel_e,
    series_kernel_y,
)
from .ratpoly import (
    PochhammerForm,
    RatPoly,
    chi_poly,
    chi_table_form,
    pochhammer,
    poly_eval,
    selberg_F,
    selberg_F_ratio,
    to_binom_basis,
    to_shifted_pochhammer_basis,
)

__version__ = "0.1.0"
