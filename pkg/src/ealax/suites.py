"""Composite verification suites shared by the CLI and the acceptance tests."""

from .kacmoody import AffineAlgebra, DiagramAutAffine
from .toroidal import ToroidalAlgebra, ToroidalAutomorphism
from .verify import (VerificationReport, form_invariance_check, form_preserved_check,
                     homomorphism_check, order_check)


def automorphism_suite(g, perm, window=3, count=500, seed=0, literal=False, report=None):
    """mu on the affine algebra, mu^ on g^ and mu~ on g~: order T on every spanning key,
    bracket preservation on seeded pairs, and the two identities for the h-vector."""
    rep = report or VerificationReport("automorphism")
    aff = AffineAlgebra(g)
    mu = DiagramAutAffine(aff, perm, literal)
    keys = aff.spanning_keys(window)
    order_check(aff, mu.apply, mu.T, keys, rep, name="mu-order")
    homomorphism_check(aff, mu.apply, keys, count, seed, rep, name="mu-bracket")
    for flavor, twist, tag in (("hat", False, "mu^"), ("tilde", True, "mu~")):
        alg = ToroidalAlgebra(aff.g, flavor)
        m = ToroidalAutomorphism(alg, perm, twist=twist, literal=literal)
        tkeys = alg.spanning_keys(window)
        order_check(alg, m.apply, m.T, tkeys, rep, name="%s-order" % tag)
        homomorphism_check(alg, m.apply, tkeys, count, seed, rep, name="%s-bracket" % tag)
    first, second = mu.h_identities()
    rep.check(first, inputs=["sum_p mu^p(h)"], expected="0", got="nonzero", kind="h-identity-sum")
    rep.check(second, inputs=["sum_p (T-p)<mu^p h, h> + T<h,h>/2"], expected="0", got="nonzero",
              kind="h-identity-form")
    rep.data.update({"perm": list(perm), "T": mu.T, "window": window, "pairs": count, "seed": seed,
                     "hvec": {aff.g.format_key(k): str(v) for k, v in sorted(mu.hvec.items())}})
    return rep.finish()


def form_suite(g, perm, window=2, count=500, seed=0, report=None):
    """<mu~ x, mu~ y> = <x, y> on all spanning pairs of g~, and invariance on seeded triples."""
    rep = report or VerificationReport("form")
    alg = ToroidalAlgebra(g, "tilde")
    m = ToroidalAutomorphism(alg, perm, twist=True)
    keys = alg.spanning_keys(window)
    form_preserved_check(alg, m.apply, keys, rep, name="mu~-form")
    form_invariance_check(alg, keys, count, seed, rep)
    rep.data.update({"perm": list(perm), "window": window, "triples": count, "seed": seed})
    return rep.finish()
