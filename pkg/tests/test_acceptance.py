"""Acceptance battery: one PASS/FAIL line per criterion, exact arithmetic throughout.

Run with pytest (lines are echoed in the terminal summary) or directly:
    python tests/test_acceptance.py
"""

import time

import pytest

from ealax.conformal import (CgAlgebra, MutatedConformal, annihilation_affine, annihilation_fixed,
                             conformal_axiom_check, covariant_cg, iso_cov_check, iso_hat_check)
from ealax.kacmoody import SimpleLieAlgebra, iso_twisted_affine_check
from ealax.qtorus import CovariantSlInf, GlNCq, correspondence_check, offdiag_commute_check
from ealax.suites import automorphism_suite, form_suite
from ealax.toroidal import (ToroidalAlgebra, TwistedFixedSpec, folded_datum, is_affine_gcm,
                            verify_root_spaces)
from ealax.verify import VerificationReport, form_invariance_check, lie_axiom_suite

RESULTS = {}

A1 = SimpleLieAlgebra("A", 1)
A2 = SimpleLieAlgebra("A", 2)
A3 = SimpleLieAlgebra("A", 3)
CASES = [(A2, [0, 2, 1], 2), (A2, [1, 2, 0], 3), (A3, [0, 3, 2, 1], 2)]


def record(n, reports, note=""):
    """Fold sub-reports into one line for criterion n and assert it."""
    checks = sum(r.checks for r in reports)
    failed = [r for r in reports if not r.passed]
    state = "PASS" if not failed else "FAIL"
    parts = ["%d checks" % checks]
    if failed:
        parts.append("failing: " + ", ".join(r.suite for r in failed))
    if note:
        parts.append(note)
    line = "criterion %2d: %s (%s)" % (n, state, "; ".join(parts))
    RESULTS[n] = line
    print(line)
    return not failed, failed


def _fact(name, ok, expected=None, got=None):
    rep = VerificationReport(name)
    rep.check(ok, inputs=[name], expected=expected, got=got)
    return rep.finish()


def test_criterion_01_lie_axioms():
    algebras = [
        ToroidalAlgebra(A1, "t"), ToroidalAlgebra(A2, "t"), ToroidalAlgebra(A1, "tilde"),
        ToroidalAlgebra(A1, "hat"), ToroidalAlgebra(A1, "tau"),
        GlNCq(2, derivations=False), GlNCq(3, derivations=False),
    ]
    reps = [lie_axiom_suite(alg, alg.spanning_keys(2)) for alg in algebras]
    cov = covariant_cg(A2, [0, 2, 1])
    reps.append(lie_axiom_suite(cov, cov.spanning_keys(2), name="lie-axioms:C~_g[G_mu] A2 swap"))
    L = CovariantSlInf(2)
    reps.append(lie_axiom_suite(L, L.spanning_keys(2)))
    ok, failed = record(1, reps, "%d algebras, indices in [-2,2]" % len(reps))
    assert ok, failed


def test_criterion_02_automorphisms():
    reps = []
    for g, perm, T in CASES:
        rep = automorphism_suite(g, perm, window=3, count=500, seed=0)
        reps.append(rep)
        reps.append(_fact("order T for %s" % perm, rep.data["T"] == T, T, rep.data["T"]))
    ok, failed = record(2, reps, "mu, mu^, mu~ of order T on [-3,3]; 500 pairs each; both h identities")
    assert ok, failed


def test_criterion_03_forms():
    reps = [form_suite(g, perm, window=2, count=500, seed=1) for g, perm, _ in CASES]
    for N in (2, 3):
        alg = GlNCq(N)
        rep = VerificationReport("form-invariance:" + alg.name)
        form_invariance_check(alg, alg.spanning_keys(2), 500, 2, rep)
        reps.append(rep.finish())
    ok, failed = record(3, reps, "mu~ preserves the form on all pairs; invariance on 500 triples")
    assert ok, failed


def test_criterion_04_isomorphisms():
    reps = [iso_hat_check(A1, 2), iso_cov_check(A1, [0, 1], 2), iso_cov_check(A1, [1, 0], 2),
            iso_twisted_affine_check(A2, [1, 0], 3)]
    ok, failed = record(4, reps, "iso-hat, iso-cov id/swap on window 2; twisted affine map on window 3")
    assert ok, failed


def test_criterion_05_folding():
    fd = folded_datum(A2, [0, 2, 1]).to_json()
    reps = [
        _fact("T_i", fd["T_i"] == [2, 1], [2, 1], fd["T_i"]),
        _fact("s_i", fd["s_i"] == [1, 2], [1, 2], fd["s_i"]),
        _fact("p_1", fd["p_i"][1] == "1 + z", "1 + z", fd["p_i"][1]),
        _fact("A_check", fd["A_check"] == [[2, -1], [-4, 2]], [[2, -1], [-4, 2]], fd["A_check"]),
        _fact("A_check affine", is_affine_gcm(fd["A_check"])),
    ]
    fd3 = folded_datum(A3, [0, 3, 2, 1]).to_json()
    reps.append(_fact("A3 s_i", fd3["s_i"] == [1, 1, 1], [1, 1, 1], fd3["s_i"]))
    reps.append(_fact("A3 affine", is_affine_gcm(fd3["A_check"]), None, fd3["A_check"]))
    ok, failed = record(5, reps, "A2 swap: T=(2,1), s=(1,2), A=[[2,-1],[-4,2]]; A3 swap13 affine")
    assert ok, failed


def test_criterion_06_roots():
    rep = verify_root_spaces(TwistedFixedSpec(A2, [0, 2, 1]), 3, 6)
    ok, failed = record(6, [rep], "%s nonisotropic roots found = enumerated; zero root space = h~[mu]"
                        % rep.data.get("nonisotropic_found"))
    assert ok, failed


def test_criterion_07_annihilation():
    reps = []
    # roots of sl3 with <alpha, nu alpha> = -1
    for root in [(1, 0), (0, 1), (-1, 0), (0, -1)]:
        rep = annihilation_affine(A2, [1, 0], root, window=6)
        reps.append(rep)
        reps.append(_fact("p = 1 + z for %s" % (root,), rep.data["p"] == [1, 1], [1, 1], rep.data["p"]))
    reps.append(annihilation_fixed(A2, [0, 2, 1], 1, window=6))
    # degenerate p = 1
    for root in [(1, 1), (-1, -1)]:
        reps.append(annihilation_affine(A2, [1, 0], root, window=6, p=[1]))
    reps.append(annihilation_fixed(A2, [0, 2, 1], 0, window=6, p=[1]))
    ok, failed = record(7, reps, "window [-6,6]^2")
    assert ok, failed


def test_criterion_08_correspondence():
    reps = []
    for N in (2, 3):
        for qsign in (1, -1):
            reps.append(correspondence_check(N, 2, qsign))
        off = VerificationReport("offdiag-commute N=%d" % N)
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if i != j:
                    for m in range(-2, 3):
                        offdiag_commute_check(N, i, j, m, 2, report=off)
        reps.append(off.finish())
    mism = sum(r.data.get("mismatches", 0) for r in reps)
    ok, failed = record(8, reps, "N=2,3, |a|,|m| <= 2, both q conventions; %d bracket mismatches" % mism)
    assert ok, failed


def test_criterion_09_conformal():
    reps = [conformal_axiom_check(CgAlgebra(A1), 3), conformal_axiom_check(CgAlgebra(A2), 2)]
    C = CgAlgebra(A1)
    bad = conformal_axiom_check(MutatedConformal(C, ("g", 1, ("x", (1,))), 1, ("g", -1, ("x", (-1,)))), 2)
    reps.append(_fact("mutation detected", not bad.passed, "failure", "%d failures" % len(bad.failures)))
    ok, failed = record(9, reps, "C_g(sl2) window 3, C_g(sl3) window 2, sign mutation caught")
    assert ok, failed


def test_criterion_10_scope():
    # nothing to compute: record the boundary and point at the bracket-level shadows
    shadows = [n for n in (6, 7, 8) if n in RESULTS]
    bad = [n for n in shadows if "FAIL" in RESULTS[n]]
    line = ("criterion 10: %s (out of scope at desk scale: module-category isomorphisms, the vertex "
            "algebras V and L, integrability; bracket-level shadows are criteria 6-8%s)"
            % ("FAIL" if bad else "PASS", ", which did not all pass" if bad else ""))
    RESULTS[10] = line
    print(line)
    assert not bad


if __name__ == "__main__":
    start = time.time()
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("total %.1fs" % (time.time() - start))
