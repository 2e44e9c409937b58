"""Exact construction and verification of nullity-2 toroidal extended affine Lie algebras."""

__version__ = "0.1.0"
