import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ealax.conformal import (DD, GD1, GK0, GK1, CgAlgebra, ConformalAlgebra, HatC, MutatedConformal, RMu,
                             TildeC, conformal_axiom_check, covariant_cg, iproduct, iso_cov_check,
                             iso_hat_check, lift_aut, r_mu_checks, skew_table_check)
from ealax.conformal.cg import cov_image_key
from ealax.exactcore import LieElement
from ealax.kacmoody import SimpleLieAlgebra
from ealax.toroidal import D0, K0, TwistedFixedSpec
from ealax.verify import homomorphism_check, lie_axiom_suite

SL2 = SimpleLieAlgebra("A", 1)
SL3 = SimpleLieAlgebra("A", 2)
C2 = CgAlgebra(SL2)


def ip(C, a, i, b):
    P = C.parse_gen
    return C.format(iproduct(C, C.gen(P(a)), i, C.gen(P(b))))


def hb(A, x, y):
    return A.format(A.bracket(A.parse(x), A.parse(y)))


def test_table_entries():
    assert ip(C2, "t1*e", 1, "t1^-1*f") == "k0"
    assert ip(C2, "t1^2*e", 1, "t1*f") == "3*K_3"
    assert ip(C2, "D_1", 0, "D_2") == "d*D_3"
    assert ip(C2, "D_1", 0, "D_-1") == "-d^2*d1"
    assert ip(C2, "d1", 0, "K_2") == "2*K_2"
    assert ip(C2, "e", 2, "f") == "0"


def test_k1_d_products():
    # k1 acts like d K_0, which produces products up to i = 2
    assert ip(C2, "k1", 2, "D_3") == "-6*K_3"
    assert ip(C2, "D_3", 2, "k1") == "6*K_3"
    assert C2.max_i == 2


def test_products_vanish_above_max_i():
    gens = C2.generators(1)
    for a in gens:
        for b in gens:
            assert not iproduct(C2, C2.gen(a), 3, C2.gen(b))


def test_hat_brackets():
    H = HatC(C2)
    assert hb(H, "e(1)", "f(-1)") == "h(0) + k0(-1)"
    assert hb(H, "k0(-1)", "t1*e(2)") == "0"
    assert hb(H, "K_1(0)", "D_-1(0)") == "k1(0)"


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(C2.generators(1)), st.sampled_from(C2.generators(1)),
       st.integers(-3, 3), st.integers(-3, 3))
def test_partial_compatibility(u, v, m, n):
    # [(d u)(m), v(n)] = -m [u(m-1), v(n)]
    if u in C2.torsion or v in C2.torsion:
        return
    H = HatC(C2)
    lhs = H.bracket(H.embed(C2.partial(C2.gen(u)), m), H.embed(C2.gen(v), n))
    rhs = H.bracket(LieElement.basis(("u", u, m - 1)), LieElement.basis(("u", v, n))) * -m
    assert lhs == rhs


def test_tilde_brackets():
    Tl = TildeC(C2)
    assert hb(Tl, "e[0]", "f[3]") == "h[3]"
    assert hb(Tl, "d", "e[3]") == "-3*e[3]"
    assert hb(Tl, "t1*e[2]", "t1^-1*f[3]") == "h[5] + k1[5]"


def test_zero_conformal_algebra():
    assert conformal_axiom_check(ConformalAlgebra(), 2).passed


def test_conformal_axioms_small():
    assert conformal_axiom_check(C2, 1).passed
    assert skew_table_check(C2, 1).passed


@pytest.mark.parametrize("mut", [
    (("g", 1, ("x", (1,))), 1, ("g", -1, ("x", (-1,)))),
    (("g", 0, ("x", (1,))), 0, ("g", 0, ("x", (-1,)))),
    (GD1, 0, ("K", 1)),
    (("D", 1), 0, ("D", 1)),
    (GK1, 2, ("D", 1)),
])
def test_mutations_detected(mut):
    bad = MutatedConformal(C2, *mut)
    rep = conformal_axiom_check(bad, 1)
    assert not rep.passed
    assert rep.failures[0]["inputs"]


def test_mutating_zero_entry_rejected():
    with pytest.raises(ValueError):
        MutatedConformal(C2, ("g", 0, ("x", (1,))), 2, ("g", 0, ("x", (-1,))))


def test_lift_identity():
    H = HatC(C2)
    ident = lift_aut(C2, C2.gen)
    for k in H.spanning_keys(1):
        assert ident(LieElement.basis(k)) == LieElement.basis(k)


def test_lift_rejects_non_d_compatible():
    with pytest.raises(ValueError):
        lift_aut(C2, lambda g: C2.gen(GK1) if g == GK0 else C2.gen(g))


def test_r_mu_on_k():
    C3 = CgAlgebra(SL3)
    literal = RMu(C3, [0, 2, 1], literal=True)
    R = RMu(C3, [0, 2, 1])
    for n in (-2, 1, 3):
        x = C3.gen(("K", n), 2)
        assert literal.apply(x) == x
        # the default carries the t1 character that makes mu permute e_0, ..., e_r
        assert R.apply(x) == x * R.mu.t1_character(n)
    assert R.mu.t1_character(1) == -1


@pytest.mark.parametrize("perm", [[0, 2, 1], [1, 2, 0]])
def test_r_mu(perm):
    assert r_mu_checks(CgAlgebra(SL3), perm, 1).passed


def test_iso_hat_small():
    rep = iso_hat_check(SL2, 1)
    assert rep.passed


def test_iso_hat_k0_modes():
    from ealax.conformal.cg import hat_image_key
    for m in (-3, 0, 2):
        assert not hat_image_key(("u", GK0, m))


def test_iso_cov():
    assert iso_cov_check(SL2, [0, 1], 1).passed
    assert iso_cov_check(SL2, [1, 0], 1).passed


def test_cov_images():
    spec = TwistedFixedSpec(SL3, [0, 2, 1])
    assert cov_image_key(spec, ("c", GK0, 0)) == LieElement.basis(K0, 2)
    assert cov_image_key(spec, DD) == LieElement.basis(D0, -1)


def test_covariant_trivial_group_matches_tilde():
    cov = covariant_cg(SL2, [0, 1])
    assert cov.T == 1
    keys = cov.spanning_keys(1)
    for a in keys[::5]:
        for b in keys[::3]:
            assert cov.bracket_keys(a, b) == cov.tilde.bracket_keys(a, b)


def test_covariant_k0_central():
    cov = covariant_cg(SL3, [0, 2, 1])
    keys = cov.spanning_keys(1)
    k0 = [k for k in keys if k != DD and k[1] == GK0]
    assert k0
    for a in k0:
        for b in keys:
            assert not cov.bracket_keys(a, b)


def test_covariant_lie_axioms_window1():
    cov = covariant_cg(SL3, [0, 2, 1])
    assert lie_axiom_suite(cov, cov.spanning_keys(1)).passed
