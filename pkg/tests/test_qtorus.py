import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ealax.exactcore import LieElement, Scalar
from ealax.qtorus import (KBAR_Q, LK, QK0, QK1, Correspondence, CovariantSlInf, GlNCq, QtMonomial,
                          SlInfAffine, associativity_check, block, correspondence_check,
                          correspondence_dump, covariant_normalize, grading_deg, offdiag_commute_check,
                          p_derivation, qt_product, sigma_apply, slinf_checks, slinf_form, slinf_lie)
from ealax.verify import form_invariance_check, lie_axiom_suite

SL2Q = GlNCq(2)


def b(alg, x, y):
    return alg.format(alg.bracket(alg.parse(x), alg.parse(y)))


# -- the quantum torus ----------------------------------------------------------------------------
def test_monomial_product():
    assert QtMonomial(1, 0) * QtMonomial(0, 1) == (0, QtMonomial(1, 1))
    assert QtMonomial(0, 1) * QtMonomial(1, 0) == (1, QtMonomial(1, 1))
    assert str(QtMonomial(1, -1)) == "t0*t1^-1"
    assert qt_product(QtMonomial(1, 0), QtMonomial(0, 1), QtMonomial(1, 1)) == (1, QtMonomial(2, 2))


def test_associativity():
    assert associativity_check(3).passed


@settings(max_examples=60, deadline=None)
@given(*[st.integers(-5, 5)] * 6)
def test_associativity_property(a, b_, c, d, e, f):
    x, y, z = QtMonomial(a, b_), QtMonomial(c, d), QtMonomial(e, f)
    q1, xy = x * y
    q2, left = xy * z
    q3, yz = y * z
    q4, right = x * yz
    assert left == right and q1 + q2 == q3 + q4


# -- sl_N(C_q) -----------------------------------------------------------------------------------
def test_glcq_examples():
    assert b(SL2Q, "E12*t0", "E21*t0^-1") == "E11 - E22 + k0"
    assert b(SL2Q, "E12*t1", "E21*t0") == "q*E11*t0*t1 - E22*t0*t1"
    assert b(SL2Q, "k0", "E12*t1") == "0"


def test_opposite_torus_convention():
    inv = GlNCq(2, qsign=-1)
    assert b(inv, "E12*t1", "E21*t0") == "q^-1*E11*t0*t1 - E22*t0*t1"


def test_form_values():
    # the q power is the trace of t^m t^-m; the constant 1 is not invariant
    assert SL2Q.form(SL2Q.parse("E12*t0*t1"), SL2Q.parse("E21*t0^-1*t1^-1")) == Scalar.q(-1)
    assert SL2Q.form(SL2Q.parse("E12*t0"), SL2Q.parse("E21*t0^-1")) == 1
    assert SL2Q.form(SL2Q.parse("d0"), SL2Q.parse("k0")) == 1
    assert SL2Q.form(SL2Q.parse("E12"), SL2Q.parse("E12")) == 0


def test_constant_form_not_invariant():
    x, y, z = (SL2Q.parse(s) for s in ("E12*t0", "E21*t1", "E11*t0^-1*t1^-1 - E22*t0^-1*t1^-1"))

    def const_form(u, v):
        # the same pairing with every q power replaced by 1
        total = Scalar.of(0)
        for (ka, ma), ca in SL2Q.to_gl(u).data.items():
            for (kb, mb), cb in SL2Q.to_gl(v).data.items():
                if ka[0] == kb[0] == "E" and ka[1] == kb[2] and ka[2] == kb[1] \
                        and ka[3] + kb[3] == 0 and ka[4] + kb[4] == 0:
                    total = total + Scalar({ma + mb: ca * cb})
        return total

    assert const_form(SL2Q.bracket(x, y), z) != const_form(x, SL2Q.bracket(y, z))
    assert SL2Q.form(SL2Q.bracket(x, y), z) == SL2Q.form(x, SL2Q.bracket(y, z))


@pytest.mark.parametrize("N", [2, 3])
def test_form_invariance(N):
    alg = GlNCq(N)
    assert form_invariance_check(alg, alg.spanning_keys(1), 500, 11).passed


def test_nonzero_trace_rejected():
    with pytest.raises(ValueError):
        SL2Q.parse("E11")
    assert SL2Q.parse("E11 - E22") == SL2Q.parse("H1")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 2), st.integers(1, 2), st.integers(-2, 2), st.integers(-2, 2))
def test_key_text_roundtrip(i, j, m0, m1):
    key = ("E", i, j, m0, m1)
    if not SL2Q.is_key(key):
        return
    assert SL2Q.parse_key(SL2Q.format_key(key)) == key


def test_lie_axioms_window1():
    for N in (2, 3):
        alg = GlNCq(N)
        assert lie_axiom_suite(alg, alg.spanning_keys(1)).passed


def test_offdiag_commute():
    assert offdiag_commute_check(2, 1, 2, 0).passed
    assert offdiag_commute_check(3, 1, 3, 1).passed
    sanity = offdiag_commute_check(2, 1, 2, 0, other=(2, 1, 0))
    assert not sanity.passed and sanity.data["nonzero"] > 0


# -- sl_inf and sigma ------------------------------------------------------------------------------
def test_sigma_and_degree():
    assert sigma_apply(1, ("E", 1, 2), 2) == ("E", 3, 4)
    assert grading_deg(("E", 1, 2), 2) == 0
    assert grading_deg(("E", 1, 3), 2) == 1
    assert [block(r, 2) for r in (-1, 0, 1, 2, 3)] == [-1, -1, 0, 0, 1]


def test_p_derivation():
    assert p_derivation(LieElement.basis(("t", 3, ("E", 1, 3))), 2) == LieElement.basis(("t", 3, ("E", 1, 3)))
    assert not p_derivation(LieElement.basis(("t", 0, ("E", 1, 2))), 2)
    assert not p_derivation(LieElement.basis(LK), 2)


def test_slinf_brackets():
    S = SlInfAffine(2)
    x = LieElement.basis(("t", 1, ("E", 1, 2)))
    y = LieElement.basis(("t", -1, ("E", 2, 1)))
    assert S.format(S.bracket(x, y)) == "k + H_{1}"
    assert not slinf_lie(("E", 1, 2), ("E", 3, 4))
    assert slinf_form(("E", 1, 2), ("E", 2, 1)) == 1


def test_slinf_checks():
    assert slinf_checks(2, 2).passed


def test_covariant_normalize():
    assert covariant_normalize(2, ("E", 3, 4), 2) == (-2, ("E", 1, 2))
    assert covariant_normalize(0, ("E", -1, 0), 2) == (0, ("E", 1, 2))
    assert covariant_normalize(5, ("E", 1, 2), 2) == (0, ("E", 1, 2))


def test_covariant_brackets():
    C = CovariantSlInf(2)
    assert b(C, "cl(t^1*E_{1,2})", "cl(t^-1*E_{2,1})") == "cl(H_{1}) + kbar"
    assert b(C, "cl(t^2*E_{1,2})", "cl(t^-1*E_{2,1})") == "cl(t*H_{1})"
    assert b(C, "kbar", "cl(t*E_{1,2})") == "0"
    assert C.format(C.parse("cl(t^2*E_{3,4})")) == "q^-2*cl(t^2*E_{1,2})"


def test_covariant_support_scan():
    # brute force over sigma shifts: sum_n q^(n a) [t^a E_12, t^b sigma^n E_32] is zero
    S = SlInfAffine(2)
    C = CovariantSlInf(2)
    a, bb = 1, 2
    for n in range(-4, 5):
        assert not S.bracket(LieElement.basis(("t", a, ("E", 1, 2))),
                             LieElement.basis(("t", bb, sigma_apply(n, ("E", 3, 2), 2))))
    assert not C.bracket(C.parse("cl(t*E_{1,2})"), C.parse("cl(t^2*E_{3,2})"))
    # E_41 meets E_12 at two shifts
    assert b(C, "cl(t*E_{1,2})", "cl(t^2*E_{4,1})") != "0"


@pytest.mark.parametrize("N,window", [(2, 1), (3, 1)])
def test_covariant_lie_axioms(N, window):
    C = CovariantSlInf(N)
    assert lie_axiom_suite(C, C.spanning_keys(window)).passed


# -- the correspondence ------------------------------------------------------------------------------
def test_correspondence_values():
    phi = Correspondence(2)
    assert phi.image_key(KBAR_Q) == LieElement.basis(QK0)
    h2 = phi.image_key(("c", 0, ("H", 2)))
    assert h2 == LieElement.basis(("H", 1), -1) + LieElement.basis(QK1, -1)
    assert phi.target.format(h2) == "-E11 + E22 - k1"


@pytest.mark.parametrize("qsign", [1, -1])
def test_correspondence_window1(qsign):
    rep = correspondence_check(2, 1, qsign)
    assert rep.passed and rep.data["mismatches"] == 0


def test_literal_assignment_fails():
    rep = correspondence_check(2, 1, 1, literal=True)
    assert not rep.passed
    assert rep.data["mismatches"] == 576


def test_correspondence_dump():
    rows = correspondence_dump(2, 0)
    assert {"key": "kbar", "image": "k0"} in rows
    assert all(set(r) == {"key", "image"} for r in rows)
