"""sigma-twisted affine algebras of a simple Lie algebra and the covariant algebra L^(b, <sigma>).

The covariant algebra is the quotient of L^(b) by the span of
chi(g)^m t^m (x) g a - t^m (x) a with chi(sigma) = omega_N^-1.  A class is
stored through its canonical representative P_m(a) = (1/N) sum_p
omega^{-mp} sigma^p(a): P_m is idempotent with kernel the relation span, so
two raw elements are equal in the quotient exactly when their projections
agree.  Keys are ('c', m, gkey) for the class of t^m (x) gkey and ('kbar',).
"""

from fractions import Fraction

from ..algebra import Algebra
from ..exactcore import LieElement, exact_rank, normalize_coeff, omega_power, scale
from ..verify import VerificationReport
from .affine import K1, AffineAlgebra
from .diagram import DiagramAutFinite, eigenspace_component
from .simple import SimpleLieAlgebra

KBAR = ("kbar",)


def _as_simple(g):
    return g if isinstance(g, SimpleLieAlgebra) else SimpleLieAlgebra(*g)


def _on_keys(x):
    """Finite-algebra element -> {gkey: coeff}; x must carry no q/a monomials."""
    return {k: c for (k, _), c in x.data.items()}


class CovariantAffine(Algebra):
    """L^(g, <nu>) for a diagram automorphism nu of a simple Lie algebra g."""

    def __init__(self, g, perm):
        super().__init__()
        self.g = _as_simple(g)
        self.nu = DiagramAutFinite(self.g, perm)
        self.N = self.nu.T
        self.order = self.N
        self.name = "L^(%s, <nu %s>)" % (self.g.name, list(perm))
        self._proj = {}

    def chi_power(self, m):
        """chi(sigma)^m = omega^-m."""
        return omega_power(self.N, -m)

    def project(self, m, gkey):
        """P_m(gkey) as {gkey: coeff}."""
        hit = self._proj.get((m % self.N, gkey))
        if hit is None:
            comp = eigenspace_component(LieElement.basis(gkey), m, self.nu)
            hit = {k: normalize_coeff(c * Fraction(1, self.N)) for k, c in _on_keys(comp).items()}
            self._proj[(m % self.N, gkey)] = hit
        return hit

    def cls(self, m, gkey):
        """Canonical vector of the class of t^m (x) gkey."""
        return LieElement({(("c", m, k), 0): c for k, c in self.project(m, gkey).items()})

    def canonical(self, x):
        out = {}
        for (k, mo), c in x.data.items():
            if k == KBAR:
                out[(k, mo)] = out.get((k, mo), 0) + c
                continue
            for k2, c2 in self.project(k[1], k[2]).items():
                kk = (("c", k[1], k2), mo)
                out[kk] = out.get(kk, 0) + c * c2
        return LieElement(out)

    def is_key(self, key):
        if key == KBAR:
            return True
        return (isinstance(key, tuple) and len(key) == 3 and key[0] == "c"
                and isinstance(key[1], int) and self.g.is_key(key[2]))

    def _bracket_keys(self, a, b):
        if a == KBAR or b == KBAR:
            return {}
        m, n = a[1], b[1]
        g = self.g
        out = {}
        ga = LieElement.basis(a[2])
        for p in range(self.N):
            w = self.chi_power(m * p)
            for k, c in _on_keys(ga).items():
                cw = c * w
                for k2, c2 in g.lie(k, b[2]).items():
                    for k3, c3 in self.project(m + n, k2).items():
                        kk = (("c", m + n, k3), 0)
                        out[kk] = out.get(kk, 0) + cw * c2 * c3
                if m + n == 0 and m:
                    f = g.kform(k, b[2])
                    if f:
                        out[(KBAR, 0)] = out.get((KBAR, 0), 0) + cw * m * f
            ga = self.nu.apply(ga)
        return out

    def spanning_keys(self, window):
        keys = [("c", m, gk) for m in range(-window, window + 1) for gk in self.g.basis()]
        return keys + [KBAR]

    def format_key(self, key):
        if key == KBAR:
            return "kbar"
        return "cl(t^%d*%s)" % (key[1], self.g.format_key(key[2]))


class TwistedAffine:
    """L^(g, nu) realised inside the untwisted affine algebra over g (loop variable t1)."""

    def __init__(self, g, perm):
        self.g = _as_simple(g)
        self.nu = DiagramAutFinite(self.g, perm)
        self.N = self.nu.T
        self.aff = AffineAlgebra(self.g)

    def component(self, a, m):
        """a_(m) for a finite-algebra element a."""
        return eigenspace_component(a, m, self.nu)

    def current(self, a, m):
        """The coefficient of z^-m in a[z] = sum_m t^m (x) a_(m) z^-m."""
        comp = self.component(a, m)
        return LieElement({(("t1", m, k), mo): c for (k, mo), c in comp.data.items()})

    def in_eigenspace(self, x):
        """Each t1^m component of x is a nu-eigenvector of eigenvalue omega^m."""
        for m in {k[1] for (k, _) in x.data if k[0] == "t1"}:
            part = LieElement({(k[2], mo): c for (k, mo), c in x.data.items()
                               if k[0] == "t1" and k[1] == m})
            if self.nu.apply(part) != scale(part, omega_power(self.N, m)):
                return False
        return True


def iso_twisted_affine_check(g, perm, window=3, report=None):
    """class(t^m a) -> t^m (x) a_(m), kbar -> N k is a bracket isomorphism onto L^(g, nu).

    Checked on all key pairs with |m| <= window: bracket preservation, the
    relations mapping to zero, t-degree matching and landing in the right
    eigenspace, and injectivity degree by degree.
    """
    rep = report or VerificationReport("iso-twisted-affine")
    cov = CovariantAffine(g, perm)
    tw = TwistedAffine(cov.g, perm)
    aff = tw.aff
    N = cov.N

    def phi_key(key):
        if key == KBAR:
            return LieElement.basis(K1, N)
        return tw.current(LieElement.basis(key[2]), key[1])

    def phi(x):
        return x.map_keys(phi_key)

    keys = cov.spanning_keys(window)
    gb = cov.g.basis()
    rep.check(phi(LieElement.basis(KBAR)) == LieElement.basis(K1, N), inputs=["kbar"],
              expected="%d*k" % N, got=aff.format(phi(LieElement.basis(KBAR))), kind="kbar")
    for m in range(-window, window + 1):
        imgs = []
        for gk in gb:
            x = LieElement.basis(("c", m, gk))
            y = phi(x)
            degs = {k[1] for (k, _) in y.data}
            rep.check(degs <= {m}, inputs=[cov.format_key(("c", m, gk))], expected="degree %d" % m,
                      got=sorted(degs), kind="degree")
            rep.check(tw.in_eigenspace(y), inputs=[cov.format_key(("c", m, gk))],
                      expected="omega^m eigenvector", got=aff.format(y), kind="eigenspace")
            # relation omega^-m t^m (x) nu(a) - t^m (x) a maps to zero
            rel = scale(cov.nu.apply(LieElement.basis(gk)), cov.chi_power(m))
            rel_raw = LieElement({(("c", m, k), mo): c for (k, mo), c in rel.data.items()})
            diff = phi(rel_raw) - y
            rep.check(not diff, inputs=[cov.format_key(("c", m, gk))], expected="0",
                      got=aff.format(diff), kind="relation")
            # canonical representative maps to the same image
            rep.check(phi(cov.canonical(x)) == y, inputs=[cov.format_key(("c", m, gk))],
                      expected=aff.format(y), got=aff.format(phi(cov.canonical(x))), kind="canonical")
            imgs.append(y)
        dim_q = exact_rank([cov.canonical(LieElement.basis(("c", m, gk))) for gk in gb])
        rep.check(exact_rank(imgs) == dim_q, inputs=["degree %d" % m], expected=dim_q,
                  got=exact_rank(imgs), kind="injective")
    for a in keys:
        for b in keys:
            lhs = phi(cov.bracket_keys(a, b))
            rhs = aff.bracket(phi_key(a), phi_key(b))
            rep.check(lhs == rhs, inputs=[cov.format_key(a), cov.format_key(b)],
                      expected=aff.format(rhs), got=aff.format(lhs), kind="bracket")
    rep.data["N"] = N
    rep.data["keys"] = len(keys)
    return rep.finish()
