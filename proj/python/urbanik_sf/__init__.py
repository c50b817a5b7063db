"""Urbanik product-convolution semigroup densities e_c(t)."""

from ._core import (
    CancellationError,
    ConsistencyError,
    DomainError,
    NoConvergence,
    UrbanikError,
    asympt_ratio_rows,
    bessel_k0,
    binet_mu,
    check_complete_monotonicity,
    check_fourier,
    check_hankel_inverse_gamma,
    check_malmsten,
    check_mellin,
    check_moment,
    check_negative_definite,
    check_semigroup,
    density,
    density_table,
    digamma,
    gamma_pow,
    krein_integral,
    large_t_ratio,
    log_gamma,
    run_suite,
)

__all__ = [
    "CancellationError",
    "ConsistencyError",
    "DomainError",
    "NoConvergence",
    "UrbanikError",
    "asympt_ratio_rows",
    "bessel_k0",
    "binet_mu",
    "check_complete_monotonicity",
    "check_fourier",
    "check_hankel_inverse_gamma",
    "check_malmsten",
    "check_mellin",
    "check_moment",
    "check_negative_definite",
    "check_semigroup",
    "density",
    "density_table",
    "digamma",
    "gamma_pow",
    "krein_integral",
    "large_t_ratio",
    "log_gamma",
    "run_suite",
]
