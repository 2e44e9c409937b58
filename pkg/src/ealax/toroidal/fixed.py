"""The mu~-fixed subalgebra g~[mu] and its root-space decomposition, computed on index windows."""

from fractions import Fraction

from ..exactcore import LieElement, exact_rank, normalize_coeff, solve
from ..verify import VerificationReport
from .algebra import D0, K0, ToroidalAlgebra
from .automorphisms import eta_mu, mu_tilde
from .folding import TransitiveAutomorphism, TwistedRoot, folded_datum, project_weight, twisted_roots


class TwistedFixedSpec:
    """g~[mu], spanned by eta_mu of the keys of g~ together with k0 and d0."""

    def __init__(self, g, perm, literal=False):
        self.base = ToroidalAlgebra(g, "tilde")
        self.g = self.base.g
        self.mu = mu_tilde(self.base, perm, literal)
        self.T = self.mu.T
        self.perm = list(perm)
        self.name = "g~[mu](%s, %s)" % (self.g.name, self.perm)

    def eta(self, x):
        return eta_mu(self.mu, x)

    def eta_key(self, key):
        return self.eta(LieElement.basis(key))

    def spanning_family(self, window, m1_window=None):
        fam = []
        for k in self.base.spanning_keys(window, m1_window=m1_window):
            v = self.eta_key(k)
            if v:
                fam.append((k, v))
        for k in (K0, D0):
            fam.append((k, LieElement.basis(k)))
        return fam

    def is_fixed(self, x):
        return self.mu.apply(x) == x

    def bracket(self, x, y):
        return self.base.bracket(x, y)

    def cartan_basis(self):
        """Spanning set of h~[mu]: eta(h_i), k0, eta(k1), d0, eta(d1) (dependent eta(h_i) dropped)."""
        out = []
        for i in range(1, self.g.rank + 1):
            v = self.eta_key(("L", 0, 0, ("h", i)))
            if v and exact_rank(out + [v]) > len(out):
                out.append(v)
        self.n_hfin = len(out)
        out += [LieElement.basis(K0), self.eta_key(("tk1", 0)), LieElement.basis(D0),
                self.eta_key(("td1", 0))]
        return out


def _eigen(alg, H, v):
    """c with [H, v] = c v, or None if v is not an eigenvector."""
    w = alg.bracket(H, v)
    if not w:
        return 0
    (k, mo), c0 = next(iter(v.data.items()))
    num = w.data.get((k, mo), 0)
    if isinstance(c0, int):
        c0 = Fraction(c0)
    c = normalize_coeff(num / c0 if num else 0)
    if w != v * c:
        return None
    if not isinstance(c, (int, Fraction)):
        raise ArithmeticError("irrational ad-eigenvalue")
    return c


def root_of(spec, v, hbasis=None):
    """Root of an ad h~[mu]-eigenvector v as (fin, n, m), or None if v is not an eigenvector."""
    alg = spec.base
    g = spec.g
    T = spec.T
    vals = []
    for i in range(1, g.rank + 1):
        c = _eigen(alg, spec.eta_key(("L", 0, 0, ("h", i))), v)
        if c is None:
            return None
        vals.append(Fraction(c) / T)
    cm = _eigen(alg, LieElement.basis(D0), v)
    cn = _eigen(alg, spec.eta_key(("td1", 0)), v)
    for H in (LieElement.basis(K0), spec.eta_key(("tk1", 0))):
        if _eigen(alg, H, v) != 0:
            return None
    if cm is None or cn is None:
        return None
    # lambda = sum_j c_j alpha_j with lambda(h_i) = vals[i]; alpha_j(h_i) = a_ij
    A = g.rs.cartan
    coeffs = solve([[A[i][j] for j in range(g.rank)] for i in range(g.rank)], vals)
    return TwistedRoot(tuple(Fraction(c) for c in coeffs), Fraction(cn) / T, int(cm))


def verify_root_spaces(spec, window, weyl_len=6, report=None):
    """Root vectors of g~[mu] on a window, the zero root space, and the comparison with the
    nonisotropic root enumeration (both directions inside the window)."""
    rep = report or VerificationReport("roots")
    g = spec.g
    alg = spec.base
    hb = spec.cartan_basis()
    # every Cartan element is fixed and ad-commuting
    for H in hb:
        rep.check(spec.is_fixed(H), inputs=[alg.format(H)], expected="fixed", got="moved", kind="cartan-fixed")
    try:
        fd = folded_datum(g, spec.perm)
    except TransitiveAutomorphism:
        fd = None
    found = set()
    zero_vectors = []
    shifts = max([abs(d) for d in spec.mu.mu.rho_simple.values()] + [0])
    m1w = window + 2 * shifts + 1
    for key, v in spec.spanning_family(window, m1_window=m1w):
        rep.check(spec.is_fixed(v), inputs=[alg.format_key(key)], expected="fixed",
                  got=alg.format(spec.mu.apply(v)), kind="eta-fixed")
        r = root_of(spec, v)
        if not rep.check(r is not None, inputs=[alg.format_key(key)], expected="eigenvector",
                         got=alg.format(v), kind="eigenvector"):
            continue
        if not any(r.fin) and not r.n and not r.m:
            zero_vectors.append(v)
            continue
        if key[0] == "L":
            # eta(t0^m u) sits in the root space of (projected affine root) + m delta0
            if key[3][0] == "x":
                wt = (tuple(Fraction(c) for c in key[3][1]), Fraction(key[2]))
            else:
                wt = (tuple(Fraction(0) for _ in range(g.rank)), Fraction(key[2]))
            exp = project_weight(spec.mu.mu.aff, spec.perm, wt)
            rep.check(r.fin == exp[0] and r.n == exp[1] and r.m == key[1],
                      inputs=[alg.format_key(key)], expected=str(exp), got=str(r), kind="root-vector")
        if key[0] in ("k", "dt", "tk1", "td1"):
            rep.check(not any(r.fin) and r.m == key[1], inputs=[alg.format_key(key)],
                      expected="isotropic", got=str(r), kind="isotropic")
        if any(r.fin) and _norm(g, r.fin) != 0:
            if abs(r.n) <= window and abs(r.m) <= window:
                found.add(r)
    # zero root space equals h~[mu]
    rh = exact_rank(hb)
    rz = exact_rank(zero_vectors)
    ru = exact_rank(hb + zero_vectors)
    rep.check(rz == rh == ru, inputs=["zero root space"], expected="rank %d" % rh,
              got="zero-space rank %d, union rank %d" % (rz, ru), kind="self-centralizing")
    rep.data["cartan_dim"] = rh
    rep.data["nonisotropic_found"] = len(found)
    if fd is None:
        rep.check(not found, inputs=["transitive"], expected="no nonisotropic roots",
                  got=len(found), kind="transitive")
        return rep.finish()
    enum = {r for r in twisted_roots(fd, weyl_len, window)
            if abs(r.n) <= window and abs(r.m) <= window}
    rep.data["nonisotropic_enumerated"] = len(enum)
    for r in sorted(found - enum):
        rep.check(False, inputs=[str(r)], expected="in enumeration", got="missing", kind="found-not-enumerated")
    for r in sorted(enum - found):
        rep.check(False, inputs=[str(r)], expected="found on window", got="missing", kind="enumerated-not-found")
    rep.check(found == enum, inputs=["root sets"], expected=len(enum), got=len(found), kind="root-sets")
    return rep.finish()


def _norm(g, fin):
    return g.rs.inner(fin, fin) if any(fin) else 0
