"""Bracket-level correspondence between L^(sl_inf, G_N) (with d and p) and sl~_N(C_q).

The map sends
    cl(t^a E_{mN+i,j})  ->  E_{i,j} t1^m t0^a
    cl(t^a H_k)         ->  (E_{k,k} - E_{k+1,k+1}) t0^a               k < N
    cl(t^a H_N)         ->  E_{N,N} t0^a - chi^-a E_{1,1} t0^a - delta_{a,0} k1
    kbar -> k0,   d -> d0,   p -> -d1
where chi = chi(sigma_N) is the character the covariant algebra is built
with.  For the torus t0 t1 = q t1 t0 this is chi = q; the displayed matrix
bracket (qsign = 1) realizes the inverse torus, so there chi = q^-1.

The current coefficient has to be ordered t1^m t0^a: in normal order it is
q^(qsign a m) E_{i,j} t0^a t1^m.  With ``literal=True`` the coefficient is
taken as E_{i,j} t0^a t1^m and chi = q regardless of the bracket, which is
the assignment as printed; that version does not preserve brackets.
"""

from fractions import Fraction

from ..exactcore import LieElement, exact_rank, mono
from ..verify import VerificationReport
from .glncq import QD0, QD1, QK0, QK1, GlNCq, ekey
from .slinf import DT, KBAR_Q, PD, CovariantSlInf, block


class Correspondence:
    def __init__(self, N, qsign=1, literal=False):
        self.N = N
        self.qsign = qsign
        self.literal = literal
        self.chi_sign = 1 if literal else -qsign
        self.cov = CovariantSlInf(N, chi_sign=self.chi_sign)
        self.target = GlNCq(N, special=True, derivations=True, qsign=qsign)

    def _diag(self, a, entries):
        """sum c q^e E_{k,k} t0^a from {k: [(c, e)]}, in the target's basis."""
        out = {}
        for k, terms in entries.items():
            for c, e in terms:
                kk = (ekey(k, k, a, 0), mono(e))
                out[kk] = out.get(kk, 0) + c
        if a == 0:
            out = self.target._compress(out)
        return LieElement(out)

    def image_key(self, key):
        N = self.N
        if key == KBAR_Q:
            return LieElement.basis(QK0)
        if key == DT:
            return LieElement.basis(QD0)
        if key == PD:
            return LieElement.basis(QD1, -1)
        a, x = key[1], key[2]
        if x[0] == "E":
            m = block(x[1], N)
            i, j = x[1] - m * N, x[2]
            e = 0 if self.literal else self.qsign * a * m
            return LieElement({(ekey(i, j, a, m), mono(e)): 1})
        k = x[1]
        if k < N:
            return self._diag(a, {k: [(1, 0)], k + 1: [(-1, 0)]})
        # E_{N+1,N+1} = sigma(E_{1,1}) and cl(t^a sigma x) = chi^-a cl(t^a x)
        img = self._diag(a, {N: [(1, 0)], 1: [(-1, -self.chi_sign * a)]})
        if a == 0:
            img = img + LieElement.basis(QK1, -1)
        return img

    def __call__(self, x):
        return x.map_keys(self.image_key)


def _eval_q(x, qv):
    """Substitute q = qv (a rational) into an element; used only for rank checks."""
    out = {}
    for (k, mo), c in x.data.items():
        out[(k, 0)] = out.get((k, 0), 0) + c * Fraction(qv) ** mo
    return LieElement(out)


def correspondence_check(N, window=2, qsign=1, literal=False, report=None):
    """map(covariant bracket) == bracket of images on all canonical key pairs with |a|, |m| <= window.

    Also: kbar -> k0, t^0 H_N -> E_NN - E_11 - k1, and injectivity of the map on
    the window (rank after substituting q = 2; independence there implies it
    for generic q).
    """
    rep = report or VerificationReport("qtorus-correspondence")
    phi = Correspondence(N, qsign, literal)
    cov, tgt = phi.cov, phi.target
    keys = cov.spanning_keys(window)
    imgs = {k: phi.image_key(k) for k in keys}
    rep.check(imgs[KBAR_Q] == LieElement.basis(QK0), inputs=["kbar"], expected="k0",
              got=tgt.format(imgs[KBAR_Q]), kind="level")
    want = LieElement({(("H", k), 0): -1 for k in range(1, N)}) + LieElement.basis(QK1, -1)
    got = imgs[("c", 0, ("H", N))]
    rep.check(got == want, inputs=["cl(H_{%d})" % N], expected=tgt.format(want), got=tgt.format(got),
              kind="H_N")
    vecs = [_eval_q(imgs[k], 2) for k in keys]
    r = exact_rank(vecs)
    rep.check(r == len(keys), inputs=["window %d" % window], expected=len(keys), got=r, kind="injective")
    mism = 0
    for a in keys:
        for b in keys:
            lhs = phi(cov.bracket_keys(a, b))
            rhs = tgt.bracket(imgs[a], imgs[b])
            ok = lhs == rhs
            mism += not ok
            rep.check(ok, inputs=[cov.format_key(a), cov.format_key(b)], expected=tgt.format(rhs),
                      got=tgt.format(lhs), kind="bracket")
    rep.data.update({"N": N, "window": window, "qsign": qsign, "literal": literal,
                     "keys": len(keys), "mismatches": mism})
    return rep.finish()


def correspondence_dump(N, window=1, qsign=1):
    """(covariant key -> sl_N(C_q) element) records."""
    phi = Correspondence(N, qsign)
    return [{"key": phi.cov.format_key(k), "image": phi.target.format(phi.image_key(k))}
            for k in phi.cov.spanning_keys(window)]
