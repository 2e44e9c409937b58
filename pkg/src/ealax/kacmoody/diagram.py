"""Diagram automorphisms of simple and affine algebras.

Both kinds are built the same way: the images of the Chevalley generators
are prescribed, every root vector x_alpha is written as a normalized
bracket (1/N)[x_{alpha_i}, x_beta] and its image is the bracket of the
images.  The coroots follow from h_i = [e_i, f_i].
"""

from fractions import Fraction

from ..exactcore import LieElement, normalize_coeff, omega_power, scale, solve
from .affine import D1, K1, AffineAlgebra, loop_shift


def _perm_order(perm):
    n = len(perm)
    cur = list(range(n))
    for t in range(1, 10 * n + 2):
        cur = [perm[c] for c in cur]
        if cur == list(range(n)):
            return t
    raise ValueError("not a permutation")


def _check_perm(perm, cartan):
    n = len(cartan)
    if sorted(perm) != list(range(n)):
        raise ValueError("%r is not a permutation of 0..%d" % (perm, n - 1))
    for i in range(n):
        for j in range(n):
            if cartan[i][j] != cartan[perm[i]][perm[j]]:
                raise ValueError("permutation %r does not preserve the Cartan matrix" % (perm,))


def _root_vector_images(g, e_img, f_img, bracket):
    """Images of x_alpha (all roots) and h_i given images of x_{+-alpha_i}."""
    rs = g.rs
    img = {}
    for i in range(1, g.rank + 1):
        img[("x", rs.simple(i))] = e_img[i]
        img[("x", rs.neg(rs.simple(i)))] = f_img[i]
    for alpha in rs.positive:
        if sum(alpha) == 1:
            continue
        for i in range(1, g.rank + 1):
            beta = tuple(a - int(j == i - 1) for j, a in enumerate(alpha))
            if beta in rs.positive_set:
                break
        ai = rs.simple(i)
        n_pos = g.chev.const(ai, beta)
        n_neg = g.chev.const(rs.neg(ai), rs.neg(beta))
        img[("x", alpha)] = scale(bracket(img[("x", ai)], img[("x", beta)]), Fraction(1, n_pos))
        img[("x", rs.neg(alpha))] = scale(bracket(img[("x", rs.neg(ai))], img[("x", rs.neg(beta))]),
                                         Fraction(1, n_neg))
    for i in range(1, g.rank + 1):
        img[("h", i)] = bracket(e_img[i], f_img[i])
    return img


class DiagramAutFinite:
    """Diagram automorphism nu of a simple Lie algebra (perm of nodes 1..l, 0-based list)."""

    def __init__(self, g, perm):
        perm = list(perm)
        _check_perm(perm, g.rs.cartan)
        self.g = g
        self.perm = perm
        self.T = _perm_order(perm)
        rs = g.rs
        e_img = {i: LieElement.basis(("x", rs.simple(perm[i - 1] + 1))) for i in range(1, g.rank + 1)}
        f_img = {i: LieElement.basis(("x", rs.neg(rs.simple(perm[i - 1] + 1))))
                 for i in range(1, g.rank + 1)}
        self.images = _root_vector_images(g, e_img, f_img, g.bracket)

    @property
    def order(self):
        return self.T

    def apply(self, x):
        return x.map_keys(lambda k: self.images[k])

    def power(self, x, p):
        for _ in range(p % self.T):
            x = self.apply(x)
        return x


def eigenspace_component(a, m, nu):
    """a_(m) = sum_p omega_N^{-mp} nu^p(a)."""
    N = nu.order
    total = LieElement.zero()
    cur = a
    for p in range(N):
        total = total + scale(cur, omega_power(N, -m * p))
        cur = nu.apply(cur)
    return total


class DiagramAutAffine:
    """Diagram automorphism mu of X_l^(1) given by a permutation of {0..l}.

    The loop-extension table t1^n x -> t1^(n + rho) mu_dot(x) fixes e_1..e_l
    correctly but may send e_0 to eps * e_mu(0) with eps != 1 (eps = -1 for
    A_2l^(1) with node 0 fixed).  Unless ``literal`` is set, the table is
    composed with the t1-rescaling t1 -> t1/eps, which turns it into the
    automorphism sending every x_{+-alpha_i} to x_{+-alpha_mu(i)}.
    """

    def __init__(self, aff, perm, literal=False):
        if not isinstance(aff, AffineAlgebra):
            aff = AffineAlgebra(aff)
        perm = list(perm)
        _check_perm(perm, aff.cartan())
        self.aff = aff
        self.g = g = aff.g
        self.perm = perm
        self.T = _perm_order(perm)
        rs = g.rs
        l = g.rank
        # mu(alpha_i) = mu_dot(alpha_i) + rho(alpha_i) delta
        self.mu_dot_simple = {}
        self.rho_simple = {}
        for i in range(1, l + 1):
            fin, dl = aff.simple_affine_root(perm[i])
            self.mu_dot_simple[i] = fin
            self.rho_simple[i] = dl
        e_img = {i: aff.chevalley_e(perm[i]) for i in range(1, l + 1)}
        f_img = {i: aff.chevalley_f(perm[i]) for i in range(1, l + 1)}
        images = _root_vector_images(g, e_img, f_img, aff.bracket)
        # split each image into a loop part at degree 0 and a central k1 part
        self.loop_img = {}
        self.central_img = {}
        for gk, v in images.items():
            loop = {}
            cen = 0
            for (k, mo), c in v.data.items():
                if k == K1:
                    cen += c
                elif k[0] == "t1":
                    loop[(k, mo)] = c
                else:
                    raise ArithmeticError("unexpected term in automorphism image")
            self.loop_img[gk] = LieElement(loop)
            self.central_img[gk] = cen
        self._solve_hvec()
        self.literal = literal
        self.eps = 1
        e0 = self._table_key(("t1", 1, ("x", rs.neg(rs.theta))))
        target = aff.chevalley_e(perm[0])
        (tk, _), tc = next(iter(target.data.items()))
        eps = e0.data.get((tk, 0), 0) / Fraction(tc)
        if not eps or e0 != target * eps:
            raise ArithmeticError("image of e_0 is not a multiple of e_mu(0)")
        self.table_eps = normalize_coeff(eps)
        if not literal:
            self.eps = self.table_eps

    @property
    def order(self):
        return self.T

    def t1_character(self, n):
        """Scalar multiplying the image of a t1-degree n element (eps^-n)."""
        if self.eps == 1 or n == 0:
            return 1
        return normalize_coeff(Fraction(1) / self.eps) ** n if n > 0 else self.eps ** (-n)

    # -- derived data ------------------------------------------------------------
    def mu_dot_root(self, alpha):
        rs = self.g.rs
        out = [0] * self.g.rank
        for j, c in enumerate(alpha):
            if c:
                for t, v in enumerate(self.mu_dot_simple[j + 1]):
                    out[t] += c * v
        return tuple(out)

    def rho_root(self, alpha):
        return sum(c * self.rho_simple[j + 1] for j, c in enumerate(alpha))

    def rho_h(self, i):
        """rho_mu(h_i) through the identification h = h^*: 2 rho(alpha_i)/<alpha_i, alpha_i>."""
        rs = self.g.rs
        return Fraction(2 * self.rho_simple[i]) / rs.gram[i - 1][i - 1]

    def mu_dot_h(self, hkey):
        """mu_dot(h) as a dict of finite Cartan keys."""
        return {k[2]: c for (k, _), c in self.loop_img[hkey].data.items()}

    def _solve_hvec(self):
        g = self.g
        l = g.rank
        rows = []
        rhs = []
        for j in range(1, l + 1):
            gamma = self.mu_dot_simple[j]
            rows.append([g.rs.pairing(gamma, i - 1) for i in range(1, l + 1)])
            rhs.append(-self.rho_simple[j])
        coeffs = solve(rows, rhs)
        self.hvec = {("h", i): c for i, c in enumerate(coeffs, start=1) if c}
        hh = 0
        for a, ca in self.hvec.items():
            for b, cb in self.hvec.items():
                hh += ca * cb * g.kform(a, b)
        self.hh = hh

    def hvec_element(self, n=0):
        return LieElement({(("t1", n, k), 0): c for k, c in self.hvec.items()})

    # -- action ----------------------------------------------------------------------
    def apply_key(self, key):
        out = self._table_key(key)
        if key[0] == "t1" and key[1] and self.eps != 1:
            out = out * self.t1_character(key[1])
        return out

    def _table_key(self, key):
        if key == K1:
            return LieElement.basis(K1)
        if key == D1:
            return (LieElement.basis(D1) + self.hvec_element(0)
                    + LieElement.basis(K1, -Fraction(self.hh) / 2))
        _, n, gk = key
        out = loop_shift(self.loop_img[gk], n)
        if n == 0 and self.central_img[gk]:
            out = out + LieElement.basis(K1, self.central_img[gk])
        return out

    def apply(self, x):
        return x.map_keys(self.apply_key)

    def power(self, x, p):
        for _ in range(p % self.T):
            x = self.apply(x)
        return x

    # -- identities ------------------------------------------------------------------
    def h_identities(self):
        """The two displayed identities: sum_p mu_dot^p(h) = 0 and the weighted form sum."""
        g = self.g
        T = self.T
        cur = dict(self.hvec)
        powers = [dict(cur)]
        for _ in range(T - 1):
            nxt = {}
            for hk, c in cur.items():
                for k2, c2 in self.mu_dot_h(hk).items():
                    nxt[k2] = nxt.get(k2, 0) + c * c2
            cur = {k: v for k, v in nxt.items() if v}
            powers.append(dict(cur))
        total = {}
        for pw in powers:
            for k, v in pw.items():
                total[k] = total.get(k, 0) + v
        first = all(v == 0 for v in total.values())

        def ip(a, b):
            return sum(ca * cb * g.kform(ka, kb) for ka, ca in a.items() for kb, cb in b.items())

        s = sum((T - p) * ip(powers[p], self.hvec) for p in range(1, T)) + Fraction(T) * self.hh / 2
        return first, s == 0

    def to_json(self):
        return {
            "perm": self.perm,
            "order": self.T,
            "mu_dot_simple": {str(i): list(v) for i, v in self.mu_dot_simple.items()},
            "rho_simple": {str(i): v for i, v in self.rho_simple.items()},
            "hvec": {self.g.format_key(k): str(v) for k, v in sorted(self.hvec.items())},
            "hh": str(self.hh),
            "e0_table_factor": str(self.table_eps),
            "literal_table": self.literal,
        }


def diagram_aut_affine(aff, perm, literal=False):
    return DiagramAutAffine(aff, perm, literal)


def apply_mu_affine(mu, x):
    return mu.apply(x)
