"""The quantum torus C_q, sl_N(C_q) and its extensions, sl_inf with sigma_N, the covariant
affinization L^(sl_inf, G_N), and the bracket-level correspondence between them."""

from .correspondence import Correspondence, correspondence_check, correspondence_dump
from .glncq import (QD0, QD1, QK0, QK1, GlNCq, current_coefficient, ekey, glcq_bracket,
                    offdiag_commute_check, slncq_form)
from .slinf import (DT, KBAR_Q, LK, PD, CovariantSlInf, SlInfAffine, block, covariant_bracket_L,
                    covariant_normalize, grading_deg, p_derivation, sigma_affine, sigma_apply,
                    slinf_checks, slinf_form, slinf_lie)
from .torus import QtMonomial, associativity_check, qt_product

__all__ = [
    "Correspondence", "correspondence_check", "correspondence_dump", "QD0", "QD1", "QK0", "QK1",
    "GlNCq", "current_coefficient", "ekey", "glcq_bracket", "offdiag_commute_check", "slncq_form",
    "DT", "KBAR_Q", "LK", "PD", "CovariantSlInf", "SlInfAffine", "block", "covariant_bracket_L",
    "covariant_normalize", "grading_deg", "p_derivation", "sigma_affine", "sigma_apply",
    "slinf_checks", "slinf_form", "slinf_lie", "QtMonomial", "associativity_check", "qt_product",
]
