"""Toroidal algebras t(g), their derivation extensions, the automorphisms mu^/mu~, folding and
the fixed-point algebras g~[mu]."""

from .algebra import (D0, FLAVORS, K0, TD0M1, OutsideAlgebra, ToroidalAlgebra, form_tilde_g, k_symbol,
                      reduce_k, reduce_k_raw, toroidal_bracket)
from .automorphisms import (ToroidalAutomorphism, eta_mu, mu_hat, mu_hat_apply, mu_tilde, mu_tilde_apply,
                            t0_degree)
from .fixed import TwistedFixedSpec, root_of, verify_root_spaces
from .folding import (FoldedDatum, TransitiveAutomorphism, folded_datum, is_affine_gcm, project_weight,
                      twisted_roots, weyl_orbit)

__all__ = [
    "D0", "FLAVORS", "K0", "TD0M1", "OutsideAlgebra", "ToroidalAlgebra", "form_tilde_g", "k_symbol",
    "reduce_k", "reduce_k_raw", "toroidal_bracket", "ToroidalAutomorphism", "eta_mu", "mu_hat",
    "mu_hat_apply", "mu_tilde", "mu_tilde_apply", "t0_degree", "TwistedFixedSpec", "root_of",
    "verify_root_spaces", "FoldedDatum", "TransitiveAutomorphism", "folded_datum", "is_affine_gcm",
    "project_weight", "twisted_roots", "weyl_orbit",
]
