from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ealax.exactcore import LieElement
from ealax.kacmoody import (AffineAlgebra, DiagramAutAffine, DiagramAutFinite, SimpleLieAlgebra,
                            build_root_system, chevalley_constants, eigenspace_component,
                            ideal_generator_exponents, iso_twisted_affine_check)
from ealax.verify import homomorphism_check, lie_axiom_suite, order_check

TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]


def test_root_counts():
    assert len(build_root_system("A", 1).roots) == 2
    assert len(build_root_system("A", 2).roots) == 6
    assert len(build_root_system("G", 2).roots) == 12
    assert len(build_root_system("D", 4).roots) == 24


def test_g2_lengths():
    rs = build_root_system("G", 2)
    lengths = sorted({rs.inner(r, r) for r in rs.roots})
    assert lengths == [Fraction(2, 3), 2]
    assert build_root_system("A", 1).inner((1,), (1,)) == 2


def test_sl2_relations():
    g = SimpleLieAlgebra("A", 1)
    e, f, h = (g.parse(s) for s in "efh")
    assert g.bracket(e, f) == h
    assert g.bracket(h, e) == e * 2
    assert g.bracket(h, f) == f * -2


def test_a2_constants_signs():
    cd = chevalley_constants("A", 2)
    assert abs(cd.const((1, 0), (0, 1))) == 1
    assert cd.const((1, 0), (0, 1)) * cd.const((-1, 0), (0, -1)) == -1


@pytest.mark.parametrize("typ,rank", TYPES)
def test_root_vector_triples(typ, rank):
    g = SimpleLieAlgebra(typ, rank)
    for r in g.rs.roots:
        br = g.bracket(LieElement.basis(("x", r)), LieElement.basis(("x", g.rs.neg(r))))
        assert br == g.coroot_element(r)


@pytest.mark.parametrize("typ,rank", TYPES)
def test_finite_lie_axioms(typ, rank):
    g = SimpleLieAlgebra(typ, rank)
    assert lie_axiom_suite(g, list(g.basis())).passed


def test_affine_examples():
    aff = AffineAlgebra(SimpleLieAlgebra("A", 1))
    assert aff.format(aff.bracket(aff.parse("t1*e"), aff.parse("t1^-1*f"))) == "k1 + h"
    assert not aff.bracket(aff.parse("k1"), aff.parse("t1^5*e"))
    assert aff.format(aff.bracket(aff.parse("d1"), aff.parse("t1^3*e"))) == "3*t1^3*e"


def test_affine_lie_axioms():
    aff = AffineAlgebra(SimpleLieAlgebra("A", 2))
    assert lie_axiom_suite(aff, aff.spanning_keys(1)).passed


def test_eigenspace_components():
    g = SimpleLieAlgebra("A", 2)
    nu = DiagramAutFinite(g, [1, 0])
    x = g.parse("x(1,0)")
    assert g.format(eigenspace_component(x, 1, nu)) == "-x(0,1) + x(1,0)"
    ident = DiagramAutFinite(g, [0, 1])
    assert eigenspace_component(x, 0, ident) == x


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 7), st.integers(-3, 3))
def test_eigenspace_is_eigenvector(idx, m):
    g = SimpleLieAlgebra("A", 2)
    nu = DiagramAutFinite(g, [1, 0])
    key = list(g.basis())[idx]
    v = eigenspace_component(LieElement.basis(key), m, nu)
    # N = 2, omega = -1
    assert nu.apply(v) == v * (-1) ** (m % 2)


def _aff3():
    return AffineAlgebra(SimpleLieAlgebra("A", 2))


def test_diagram_aut_identity_and_swap():
    aff = _aff3()
    for perm in ([0, 1, 2], [0, 2, 1]):
        mu = DiagramAutAffine(aff, perm)
        assert not mu.hvec
        assert all(v == 0 for v in mu.rho_simple.values())
        assert mu.apply(aff.parse("d1")) == aff.parse("d1")
        assert mu.apply(aff.parse("k1")) == aff.parse("k1")


def test_diagram_aut_rotation():
    aff = _aff3()
    mu = DiagramAutAffine(aff, [1, 2, 0])
    assert mu.T == 3
    assert mu.rho_simple == {1: 0, 2: 1}
    assert mu.hvec == {("h", 1): Fraction(2, 3), ("h", 2): Fraction(1, 3)}
    # <h, h>/2 = 1/3
    assert aff.format(mu.apply(aff.parse("d1"))) == "d1 - (1/3)*k1 + (2/3)*h(1) + (1/3)*h(2)"
    first, second = mu.h_identities()
    assert first and second


@pytest.mark.parametrize("perm", [[0, 2, 1], [1, 2, 0]])
def test_affine_automorphism_order_and_bracket(perm):
    aff = _aff3()
    mu = DiagramAutAffine(aff, perm)
    keys = aff.spanning_keys(2)
    assert order_check(aff, mu.apply, mu.T, keys).passed
    assert homomorphism_check(aff, mu.apply, keys, 200, 1).passed


def test_ideal_generator_exponents():
    a2 = SimpleLieAlgebra("A", 2)
    assert [e for _, e in ideal_generator_exponents(a2, 1)] == [2, 2, 2]
    assert [e for _, e in ideal_generator_exponents(a2, 0)] == [1, 1, 1]
    # C2: alpha_1 is the short node, eps = 2
    assert ideal_generator_exponents(SimpleLieAlgebra("C", 2), 3) == [(0, 4), (1, 7), (2, 4)]
    with pytest.raises(ValueError):
        ideal_generator_exponents(a2, -1)


def test_twisted_affine_iso():
    assert iso_twisted_affine_check(SimpleLieAlgebra("A", 2), [1, 0], window=2).passed
