"""The conformal algebra C_g attached to the affine algebra g, its automorphism R_mu, the
covariant algebra C~_g[G_mu], and the two isomorphism checks onto g^ and g~[mu].

Generators of C_g:
    ('g', n, u)   t1^n (x) u,  u a Chevalley basis key of the simple algebra
    ('k1',), ('d1',)
    ('K', n), ('D', n)   n != 0   (K_0 = D_0 = 0 by convention)
    ('k0',)       central, killed by d
"""

import re
from fractions import Fraction

from ..algebra import Algebra
from ..exactcore import LieElement, omega_power
from ..kacmoody.affine import D1, K1, AffineAlgebra
from ..kacmoody.diagram import DiagramAutAffine
from ..kacmoody.simple import SimpleLieAlgebra
from ..toroidal.algebra import D0, K0, ToroidalAlgebra
from ..toroidal.fixed import TwistedFixedSpec
from ..verify import VerificationReport, homomorphism_check, order_check
from .algebra import DD, ConformalAlgebra, HatC, TildeC

GK1 = ("k1",)
GD1 = ("d1",)
GK0 = ("k0",)


class CgAlgebra(ConformalAlgebra):
    def __init__(self, g):
        if not isinstance(g, SimpleLieAlgebra):
            g = SimpleLieAlgebra(*g)
        self.g = g
        self.torsion = frozenset([GK0])
        self.max_i = 2
        self.name = "C_g(%s)" % g.name
        self._prod_cache = {}
        self._tab = {}

    # -- generators ------------------------------------------------------------------------
    def is_generator(self, gen):
        if gen in (GK1, GD1, GK0):
            return True
        if not isinstance(gen, tuple) or not gen:
            return False
        if gen[0] == "g":
            return len(gen) == 3 and isinstance(gen[1], int) and self.g.is_key(gen[2])
        if gen[0] in ("K", "D"):
            return len(gen) == 2 and isinstance(gen[1], int) and gen[1] != 0
        return False

    def generators(self, window):
        out = [("g", n, u) for n in range(-window, window + 1) for u in self.g.basis()]
        out += [GK1, GD1]
        out += [(t, n) for t in ("K", "D") for n in range(-window, window + 1) if n]
        return out + [GK0]

    def format_gen(self, gen):
        if gen in (GK1, GD1, GK0):
            return gen[0]
        if gen[0] in ("K", "D"):
            return "%s_%d" % gen
        n = gen[1]
        body = self.g.format_key(gen[2])
        if n == 0:
            return body
        return ("t1*" if n == 1 else "t1^%d*" % n) + body

    def parse_gen(self, text):
        t = text.replace(" ", "")
        if t in ("k0", "k1", "d1"):
            return (t,)
        m = re.fullmatch(r"([KD])_\{?(-?\d+)\}?", t)
        if m:
            n = int(m.group(2))
            if n == 0:
                raise ValueError("K_0 = D_0 = 0 by convention")
            return (m.group(1), n)
        n = 0
        m = re.match(r"t1(?:\^(-?\d+))?\*", t)
        if m:
            n = int(m.group(1)) if m.group(1) else 1
            t = t[m.end():]
        return ("g", n, self.g.parse_key(t))

    # -- the product table -------------------------------------------------------------------
    def table(self, a, i, b):
        key = (a, i, b)
        hit = self._tab.get(key)
        if hit is None:
            hit = self._table_entry(a, i, b)
            self._tab[key] = hit
        return hit

    def _table_entry(self, a, i, b):
        g = self.g
        out = {}

        def add(j, gen, c):
            if not c:
                return
            if gen[0] in ("K", "D") and gen[1] == 0:
                return
            out[(j, gen)] = out.get((j, gen), 0) + c

        ta, tb = a[0], b[0]
        if ta == "g" and tb == "g":
            m, n = a[1], b[1]
            f = g.kform(a[2], b[2])
            if i == 0:
                for w, c in g.lie(a[2], b[2]).items():
                    add(0, ("g", m + n, w), c)
                add(1, ("K", m + n), f * m)
                if m + n == 0:
                    add(0, GK1, f * m)
            elif i == 1:
                add(0, ("K", m + n), (m + n) * f)
                if m + n == 0:
                    add(0, GK0, f)
        elif ta == "D" and tb == "g":
            # the displayed table has the coefficients of these two 0-products
            # interchanged; this order is the one the isomorphism onto g^ forces
            r, m = a[1], b[1]
            if i == 0:
                add(1, ("g", r + m, b[2]), r)
            elif i == 1:
                add(0, ("g", r + m, b[2]), r + m)
        elif ta == "g" and tb == "D":
            m, r = a[1], b[1]
            if i == 0:
                add(1, ("g", r + m, a[2]), m)
            elif i == 1:
                add(0, ("g", r + m, a[2]), r + m)
        elif ta == "D" and tb == "K":
            r, s = a[1], b[1]
            if i == 0:
                add(1, ("K", r + s), r)
                if r + s == 0:
                    add(0, GK1, r)
            elif i == 1:
                add(0, ("K", r + s), r + s)
                if r + s == 0:
                    add(0, GK0, 1)
        elif ta == "K" and tb == "D":
            s, r = a[1], b[1]
            if i == 0:
                add(1, ("K", r + s), s)
                if r + s == 0:
                    add(0, GK1, -r)
                    add(1, GK0, 1)  # d k0 = 0, dropped downstream
            elif i == 1:
                add(0, ("K", r + s), r + s)
                if r + s == 0:
                    add(0, GK0, 1)
        elif a == GD1 and tb == "g":
            if i == 0:
                add(0, b, b[1])
        elif ta == "g" and b == GD1:
            if i == 0:
                add(0, a, -a[1])
        elif {a, b} == {GD1, GK1}:
            if i == 1:
                add(0, GK0, 1)
        elif a == GD1 and tb == "K":
            if i == 0:
                add(0, b, b[1])
        elif ta == "K" and b == GD1:
            if i == 0:
                add(0, a, -a[1])
        elif a == GD1 and tb == "D":
            # the displayed table gives D_r here; g^ forces r D_r like the other d1 products
            if i == 0:
                add(0, b, b[1])
        elif ta == "D" and b == GD1:
            if i == 0:
                add(0, a, -a[1])
        elif a == GK1 and tb == "D":
            # k1 behaves like d K_0, so (k1)_2 D_r = -2 (K_0)_1 D_r; absent from the displayed table
            if i == 2:
                add(0, ("K", b[1]), -2 * b[1])
        elif ta == "D" and b == GK1:
            r = a[1]
            if i == 0:
                add(2, ("K", r), r)
            elif i == 1:
                add(1, ("K", r), 2 * r)
            elif i == 2:
                add(0, ("K", r), 2 * r)
        elif ta == "D" and tb == "D":
            r, s = a[1], b[1]
            if i == 0:
                add(1, ("D", r + s), r)
                if r + s == 0:
                    add(2, GD1, -r)
            elif i == 1:
                add(0, ("D", r + s), r + s)
        return out

    def table_json(self, window):
        """The nonzero generator products as records (a, i, b -> element)."""
        rows = []
        gens = self.generators(window)
        for a in gens:
            for b in gens:
                for i in range(self.max_i + 1):
                    v = self.iproduct(self.gen(a), i, self.gen(b))
                    if v:
                        rows.append({"a": self.format_gen(a), "i": i, "b": self.format_gen(b),
                                     "value": self.format(v)})
        return rows


# -- R_mu -----------------------------------------------------------------------------------------

def _from_affine(x):
    out = {}
    for (k, mo), c in x.data.items():
        if k == K1:
            gen = GK1
        elif k == D1:
            gen = GD1
        else:
            gen = ("g", k[1], k[2])
        out[(("C", 0, gen), mo)] = c
    return LieElement(out)


class RMu:
    """R_mu on C_g, built from the affine diagram automorphism (same t1 normalisation as mu^)."""

    def __init__(self, C, perm, literal=False):
        self.C = C
        self.mu = DiagramAutAffine(AffineAlgebra(C.g), perm, literal)
        self.T = self.mu.T
        self._cache = {}

    def __call__(self, gen):
        hit = self._cache.get(gen)
        if hit is None:
            hit = self._image(gen)
            self._cache[gen] = hit
        return hit

    def _image(self, gen):
        C, mu = self.C, self.mu
        if gen in (GK0, GK1):
            return C.gen(gen)
        if gen == GD1:
            return _from_affine(mu.apply_key(D1))
        tag, n = gen[0], gen[1]
        chi = mu.t1_character(n)
        if tag == "K":
            return C.gen(gen, 0, chi)
        if tag == "D":
            h = _from_affine(mu.hvec_element(n))
            out = C.gen(gen) - C.partial(h)
            if mu.hh:
                out = out + C.gen(("K", n), 2, Fraction(mu.hh) / 2)
            return out * chi
        u = gen[2]
        img = _from_affine(mu.apply_key(("t1", n, u)))
        if u[0] == "h" and n != 0 and mu.central_img[u]:
            img = img + C.gen(("K", n), 1, mu.central_img[u] * chi)
        return img

    def apply(self, x):
        """R_mu on an element of C_g (commutes with d)."""
        out = LieElement.zero()
        for (k, mo), c in x.data.items():
            img = self(k[2])
            if k[1]:
                img = self.C.partial(img, k[1])
            out = out + img * c
        return out


def r_mu(C, perm, literal=False):
    return RMu(C, perm, literal)


def r_mu_checks(C, perm, window, report=None):
    """R_mu^T = id on generators, R_mu preserves all i-products, R^_mu is a C^ automorphism."""
    from .algebra import conformal_aut_check, lift_aut
    rep = report or VerificationReport("R_mu")
    R = RMu(C, perm)
    for gen in C.generators(window):
        x = C.gen(gen)
        y = x
        for _ in range(R.T):
            y = R.apply(y)
        rep.check(y == x, inputs=[C.format_gen(gen)], expected=C.format(x), got=C.format(y), kind="order")
    conformal_aut_check(C, R, window, rep, name="i-products")
    H = HatC(C)
    homomorphism_check(H, lift_aut(C, R), H.spanning_keys(window), count=500, seed=0, report=rep,
                       name="R^-homomorphism")
    rep.data["T"] = R.T
    return rep.finish()


# -- isomorphism onto g^ --------------------------------------------------------------------------

def hat_image_key(key):
    _, gen, m = key
    if gen == GK0:
        return {K0: 1} if m == -1 else {}
    if gen == GK1:
        return {("tk1", m): 1}
    if gen == GD1:
        return {("td1", m): 1}
    if gen[0] == "K":
        return {("k", m + 1, gen[1]): 1}
    if gen[0] == "D":
        return {("dh", m - 1, gen[1]): 1}
    return {("L", m, gen[1], gen[2]): 1}


def iso_hat_check(g, window=2, report=None):
    """i^: u(m) -> t0^m u, K_n(m) -> k_{m+1,n}, D_n(m) -> d^_{m-1,n}, k0(m) -> delta_{m,-1} k0
    intertwines the C^_g bracket with the g^ bracket on all key pairs in the window."""
    rep = report or VerificationReport("iso-hat")
    C = CgAlgebra(g)
    H = HatC(C)
    G = ToroidalAlgebra(C.g, "hat")

    def phi_key(k):
        return LieElement({(kk, 0): c for kk, c in hat_image_key(k).items()})

    def phi(x):
        return x.map_keys(phi_key)

    keys = H.spanning_keys(window)
    images = set()
    for k in keys:
        img = hat_image_key(k)
        rep.check(len(img) == 1 and all(G.is_key(kk) for kk in img), inputs=[H.format_key(k)],
                  expected="one g^ basis key", got=str(img), kind="basis")
        images.update(img)
    rep.check(len(images) == len(keys), inputs=["window"], expected=len(keys), got=len(images),
              kind="injective")
    for m in range(-window, window + 1):
        if m != -1:
            rep.check(not H.embed(C.gen(GK0), m), inputs=["k0(%d)" % m], expected="0",
                      got="nonzero", kind="k0")
    for a in keys:
        for b in keys:
            lhs = phi(H.bracket_keys(a, b))
            rhs = G.bracket(phi_key(a), phi_key(b))
            rep.check(lhs == rhs, inputs=[H.format_key(a), H.format_key(b)],
                      expected=G.format(rhs), got=G.format(lhs), kind="bracket")
    rep.data["keys"] = len(keys)
    return rep.finish()


# -- covariant algebra C~_g[G_mu] ------------------------------------------------------------------

class CovariantTildeC(Algebra):
    """C~[G] for G = <R> cyclic of order T and chi(R) = omega_T^-1.

    Classes are stored through P = (1/T) sum_p gbar^p, whose kernel is the
    relation span; gbar(u[m]) = chi(R)^m (R u)[m].
    """

    def __init__(self, C, R, T):
        super().__init__()
        self.C = C
        self.R = R
        self.T = T
        self.order = T
        self.tilde = TildeC(C)
        self.name = "C~[G](%s, T=%d)" % (C.name, T)
        self._gbar = {}
        self._proj = {}

    def gbar_key(self, key):
        hit = self._gbar.get(key)
        if hit is None:
            if key == DD:
                hit = LieElement.basis(DD)
            else:
                _, gen, m = key
                hit = self.tilde.embed(self.R.apply(self.C.gen(gen)), m) * omega_power(self.T, -m)
            self._gbar[key] = hit
        return hit

    def gbar(self, x):
        return x.map_keys(self.gbar_key)

    def project_key(self, key):
        hit = self._proj.get(key)
        if hit is None:
            total = LieElement.zero()
            cur = LieElement.basis(key)
            for _ in range(self.T):
                total = total + cur
                cur = self.gbar(cur)
            hit = total * Fraction(1, self.T)
            self._proj[key] = hit
        return hit

    def canonical(self, x):
        return x.map_keys(self.project_key)

    def is_key(self, key):
        return self.tilde.is_key(key)

    def _bracket_keys(self, a, b):
        if a == DD or b == DD:
            return self.canonical(self.tilde.bracket_keys(a, b))
        total = LieElement.zero()
        cur = LieElement.basis(a)
        y = LieElement.basis(b)
        for _ in range(self.T):
            total = total + self.tilde.bracket(cur, y)
            cur = self.gbar(cur)
        return self.canonical(total)

    def spanning_keys(self, window):
        return self.tilde.spanning_keys(window)

    def format_key(self, key):
        if key == DD:
            return "d"
        return "cl(%s)" % self.tilde.format_key(key)

    def parse_key(self, text):
        return self.tilde.parse_key(text)


def covariant_cg(g, perm, literal=False):
    C = g if isinstance(g, CgAlgebra) else CgAlgebra(g)
    R = RMu(C, perm, literal)
    return CovariantTildeC(C, R, R.T)


def covariant_bracket(cov, x, y):
    return cov.bracket(x, y)


def cov_image_key(spec, key):
    """The class-key assignment of the covariant isomorphism, as an element of g~[mu] inside g~."""
    if key == DD:
        return LieElement.basis(D0, -1)
    _, gen, m = key
    if gen == GK0:
        return LieElement.basis(K0, spec.T) if m == 0 else LieElement.zero()
    if gen == GK1:
        base = ("tk1", m)
    elif gen == GD1:
        base = ("td1", m)
    elif gen[0] == "K":
        base = ("k", m, gen[1])
    elif gen[0] == "D":
        base = ("dt", m, gen[1])
    else:
        base = ("L", m, gen[1], gen[2])
    return spec.eta_key(base)


def iso_cov_check(g, perm, window=2, report=None):
    """The class map onto g~[mu] intertwines the covariant bracket with the g~ bracket;
    it is well defined on classes and sends d to -d0."""
    rep = report or VerificationReport("iso-cov")
    cov = covariant_cg(g, perm)
    spec = TwistedFixedSpec(cov.C.g, perm)
    G = spec.base
    cache = {}

    def phi_key(k):
        hit = cache.get(k)
        if hit is None:
            hit = cov_image_key(spec, k)
            cache[k] = hit
        return hit

    def phi(x):
        return x.map_keys(phi_key)

    keys = cov.spanning_keys(window)
    for k in keys:
        x = LieElement.basis(k)
        y = phi(x)
        rep.check(spec.is_fixed(y), inputs=[cov.format_key(k)], expected="mu~-fixed",
                  got=G.format(y), kind="fixed")
        yc = phi(cov.canonical(x))
        rep.check(yc == y, inputs=[cov.format_key(k)], expected=G.format(y), got=G.format(yc),
                  kind="well-defined")
        gy = phi(cov.gbar(x))
        rep.check(gy == y, inputs=[cov.format_key(k)], expected=G.format(y), got=G.format(gy),
                  kind="relation")
    for a in keys:
        for b in keys:
            lhs = phi(cov.bracket_keys(a, b))
            rhs = G.bracket(phi_key(a), phi_key(b))
            rep.check(lhs == rhs, inputs=[cov.format_key(a), cov.format_key(b)],
                      expected=G.format(rhs), got=G.format(lhs), kind="bracket")
    rep.data["T"] = cov.T
    rep.data["keys"] = len(keys)
    return rep.finish()


def r_mu_order_check(C, perm, window):
    R = RMu(C, perm)
    H = HatC(C)
    from .algebra import lift_aut
    return order_check(H, lift_aut(C, R), R.T, H.spanning_keys(window), name="R^-order").finish()
