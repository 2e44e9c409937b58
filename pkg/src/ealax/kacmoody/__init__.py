"""Finite root systems, Chevalley bases, untwisted and twisted affine algebras, diagram automorphisms."""

from .affine import D1, K1, AffineAlgebra, ideal_generator_exponents, loop_shift
from .diagram import DiagramAutAffine, DiagramAutFinite, apply_mu_affine, diagram_aut_affine, eigenspace_component
from .rootsystem import RootSystemFinite, build_root_system
from .simple import ChevalleyData, SimpleLieAlgebra, chevalley_constants
from .twisted import KBAR, CovariantAffine, TwistedAffine, iso_twisted_affine_check

__all__ = [
    "D1", "K1", "AffineAlgebra", "ideal_generator_exponents", "loop_shift", "DiagramAutAffine",
    "DiagramAutFinite", "apply_mu_affine", "diagram_aut_affine", "eigenspace_component",
    "RootSystemFinite", "build_root_system", "ChevalleyData", "SimpleLieAlgebra",
    "chevalley_constants", "KBAR", "CovariantAffine", "TwistedAffine", "iso_twisted_affine_check",
]
