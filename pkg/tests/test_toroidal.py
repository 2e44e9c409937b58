from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ealax.exactcore import LieElement, Scalar
from ealax.kacmoody import SimpleLieAlgebra
from ealax.toroidal import (OutsideAlgebra, ToroidalAlgebra, ToroidalAutomorphism, TwistedFixedSpec,
                            folded_datum, is_affine_gcm, reduce_k, twisted_roots, verify_root_spaces)
from ealax.toroidal.folding import TwistedRoot
from ealax.verify import form_invariance_check, lie_axiom_suite, order_check

SL2 = SimpleLieAlgebra("A", 1)
SL3 = SimpleLieAlgebra("A", 2)


def br(alg, x, y):
    return alg.format(alg.bracket(alg.parse(x), alg.parse(y)))


def test_reduce_k():
    assert reduce_k(0, 1, 0) == LieElement.basis(("k", 0, 1))
    assert not reduce_k(2, 0, 0)
    assert reduce_k(0, 0, 0) == LieElement.basis(("k0",))
    # t0^2 k1 is its own basis key; in k-symbols it is -2 k_{2,0}
    assert reduce_k(2, 0, 1) == LieElement.basis(("tk1", 2))
    G = ToroidalAlgebra(SL2, "tilde")
    assert G.parse("t0^2*k1") == G.parse("k_{2,0}") * -2


def test_toroidal_bracket_examples():
    T = ToroidalAlgebra(SL2, "t")
    G = ToroidalAlgebra(SL2, "tilde")
    H = ToroidalAlgebra(SL2, "hat")
    assert br(T, "t0*e", "t0^-1*f") == "h + k0"
    assert br(G, "d~_{1,0}", "d~_{0,1}") == "d~_{1,1}"
    assert br(G, "d~_{1,2}", "t0^3*t1^4*e") == "-2*t0^4*t1^6*e"
    assert br(H, "t0^-1*d0", "d^_{2,1}") == "3*d^_{1,1}"
    assert br(H, "d^_{0,1}", "d^_{0,-1}") == "-2*d1"
    assert br(G, "k0", "t0*t1^-1*e") == "0"


def test_tau_bracket():
    Ta = ToroidalAlgebra(SL2, "tau")
    assert br(Ta, "d~_{1,0}", "d~_{0,1}") == "d~_{1,1} + a*k_{1,1}"
    T0 = ToroidalAlgebra(SL2, "tau", a=0)
    G = ToroidalAlgebra(SL2, "tilde")
    for x, y in [("d~_{1,0}", "d~_{0,1}"), ("d~_{2,-1}", "d~_{-1,3}"), ("d~_{1,1}", "t0*e")]:
        assert br(T0, x, y) == br(G, x, y)


def test_tau_form_invariance():
    Ta = ToroidalAlgebra(SL2, "tau")
    keys = [k for k in Ta.spanning_keys(1) if k[0] in ("dt", "td1", "d0", "k", "tk1", "k0")]
    assert form_invariance_check(Ta, keys, 300, 3).passed


def test_form_values():
    G = ToroidalAlgebra(SL2, "tilde")
    assert G.form(G.parse("k0"), G.parse("d0")) == 1
    assert G.form(G.parse("d~_{1,2}"), G.parse("k_{-1,-2}")) == 1
    assert G.form(G.parse("k0"), G.parse("k0")) == 0


def test_hat_rejects_tilde_symbols():
    H = ToroidalAlgebra(SL2, "hat")
    with pytest.raises(ValueError):
        H.parse("d~_{1,0}")
    with pytest.raises(OutsideAlgebra):
        H.parse("t0*t1*d1")


@pytest.mark.parametrize("flavor", ["t", "tilde", "hat"])
def test_lie_axioms_window1(flavor):
    alg = ToroidalAlgebra(SL2, flavor)
    assert lie_axiom_suite(alg, alg.spanning_keys(1)).passed


def test_mu_tilde_values():
    G = ToroidalAlgebra(SL3, "tilde")
    mt = ToroidalAutomorphism(G, [1, 2, 0], twist=True)
    assert mt.apply(G.parse("k0")) == G.parse("k0")
    assert mt.apply(G.parse("d0")) == G.parse("d0")
    # omega^-1 = zeta_3^2 = -1 - zeta_3
    assert mt.apply(G.parse("k_{1,1}")) == G.parse("k_{1,1}") * Scalar.zeta(3, -1)
    assert order_check(G, mt.apply, 3, G.spanning_keys(1)).passed


def test_mu_hat_values():
    F = ToroidalAlgebra(SL3, "full")
    mh = ToroidalAutomorphism(F, [1, 2, 0], twist=False)
    got = mh.apply(F.parse("t0*t1*d1"))
    # d1 -> d1 + h - (<h,h>/2) k1 with <h,h>/2 = 1/3, times t0 t1
    want = (F.parse("t0*t1*d1") + F.parse("t0*t1*h(1)") * Fraction(2, 3)
            + F.parse("t0*t1*h(2)") * Fraction(1, 3) - F.parse("t0*t1*k1") * Fraction(1, 3))
    assert got == want
    for s in ("t0*t1*k0", "t0*t1*k1", "t0^-2*k1"):
        assert mh.apply(F.parse(s)) == F.parse(s)
    ident = ToroidalAutomorphism(F, [0, 1, 2], twist=False)
    for k in F.spanning_keys(1):
        assert ident.apply(LieElement.basis(k)) == LieElement.basis(k)


def test_eta():
    G = ToroidalAlgebra(SL3, "tilde")
    sw = TwistedFixedSpec(SL3, [0, 2, 1])
    assert sw.eta(G.parse("k0")) == G.parse("k0") * 2
    assert G.format(sw.eta(G.parse("t0^3*x(1,0)"))) == "-t0^3*x(0,1) + t0^3*x(1,0)"
    assert G.format(sw.eta(G.parse("t0^2*x(1,0)"))) == "t0^2*x(0,1) + t0^2*x(1,0)"
    ident = TwistedFixedSpec(SL3, [0, 1, 2])
    assert ident.eta(G.parse("t0*t1*x(1,1)")) == G.parse("t0*t1*x(1,1)")


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ToroidalAlgebra(SL3, "tilde").spanning_keys(1)))
def test_eta_image_is_fixed(key):
    sw = TwistedFixedSpec(SL3, [1, 2, 0])
    assert sw.is_fixed(sw.eta(LieElement.basis(key)))


def test_folded_identity():
    fd = folded_datum(SL3, [0, 1, 2])
    assert fd.to_json()["T_i"] == [1, 1, 1] and fd.to_json()["s_i"] == [1, 1, 1]
    assert fd.A_check == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]


def test_folded_a2_swap():
    fd = folded_datum(SL3, [0, 2, 1]).to_json()
    assert fd["reps"] == [0, 1]
    assert fd["T_i"] == [2, 1] and fd["s_i"] == [1, 2]
    assert fd["p_i"] == ["1", "1 + z"]
    assert fd["A_check"] == [[2, -1], [-4, 2]]
    assert is_affine_gcm(fd["A_check"])


def test_folded_a3_swap13():
    fd = folded_datum(SimpleLieAlgebra("A", 3), [0, 3, 2, 1]).to_json()
    assert fd["orbits"] == [[0], [1, 3], [2]]
    assert fd["T_i"] == [2, 1, 2] and fd["s_i"] == [1, 1, 1]
    assert is_affine_gcm(fd["A_check"])


def test_affine_gcm_predicate():
    assert is_affine_gcm([[2, -2], [-2, 2]])
    assert not is_affine_gcm([[2, -1], [-1, 2]])
    assert not is_affine_gcm([[2, -1], [-4, 1]])


def test_twisted_roots_identity():
    roots = twisted_roots(folded_datum(SL2, [0, 1]), 0, 1)
    F = Fraction
    want = {TwistedRoot((F(s),), F(n), m) for s, n in ((1, 0), (-1, 0), (-1, 1), (1, -1)) for m in (-1, 0, 1)}
    assert roots == want


def test_twisted_roots_swap():
    roots = twisted_roots(folded_datum(SL3, [0, 2, 1]), 6, 1)
    assert TwistedRoot((Fraction(1), Fraction(1)), Fraction(0), 1) in roots
    window = {r for r in roots if abs(r.m) <= 1 and abs(r.n) <= 2}
    assert all(TwistedRoot(tuple(-c for c in r.fin), -r.n, -r.m) in window for r in window)


def test_root_spaces_identity():
    rep = verify_root_spaces(TwistedFixedSpec(SL2, [0, 1]), 1)
    assert rep.passed
    assert rep.data["cartan_dim"] == 1 + 4


def test_root_spaces_swap():
    rep = verify_root_spaces(TwistedFixedSpec(SL3, [0, 2, 1]), 2, 6)
    assert rep.passed
    assert rep.data["nonisotropic_found"] == rep.data["nonisotropic_enumerated"] > 0
