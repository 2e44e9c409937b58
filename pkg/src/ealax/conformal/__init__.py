"""Conformal algebras from i-product tables, their Lie algebras C^ and C~, the concrete C_g with
R_mu, covariant algebras, and generating-function annihilation checks."""

from .algebra import (DD, ConformalAlgebra, HatC, MutatedConformal, TildeC, conformal_aut_check,
                      conformal_axiom_check, hatC_bracket, iproduct, lift_aut, skew_table_check,
                      tildeC_bracket)
from .annihilation import (affine_root_p, annihilation_affine, annihilation_fixed, fixed_current_family,
                           twisted_affine_family, window_annihilation)
from .cg import (GD1, GK0, GK1, CgAlgebra, CovariantTildeC, RMu, covariant_bracket, covariant_cg,
                 iso_cov_check, iso_hat_check, r_mu, r_mu_checks, r_mu_order_check)

__all__ = [
    "DD", "ConformalAlgebra", "HatC", "MutatedConformal", "TildeC", "conformal_aut_check",
    "conformal_axiom_check", "hatC_bracket", "iproduct", "lift_aut", "skew_table_check",
    "tildeC_bracket", "affine_root_p", "annihilation_affine", "annihilation_fixed",
    "fixed_current_family", "twisted_affine_family", "window_annihilation", "GD1", "GK0", "GK1",
    "CgAlgebra", "CovariantTildeC", "RMu", "covariant_bracket", "covariant_cg", "iso_cov_check",
    "iso_hat_check", "r_mu", "r_mu_checks", "r_mu_order_check",
]
