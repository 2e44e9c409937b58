"""The automorphisms mu^ and mu~ = omega^{-d0} o mu^ induced by an affine diagram automorphism,
and the averaging projection eta_mu.

mu^ is the displayed assignment table composed with the t1-rescaling that
makes the affine part the genuine diagram automorphism (see DiagramAutAffine);
pass literal=True for the bare table.
"""

from fractions import Fraction

from ..exactcore import LieElement, omega_power
from ..kacmoody.affine import AffineAlgebra
from ..kacmoody.diagram import DiagramAutAffine
from .algebra import TD0M1, ToroidalAlgebra


def t0_degree(key):
    if key[0] in ("L", "tk1", "k", "td1", "dt", "dh", "D"):
        return key[1]
    if key == TD0M1:
        return -1
    return 0


class ToroidalAutomorphism:
    """mu^ (twist=False) or mu~ (twist=True) on a toroidal algebra of any flavor."""

    def __init__(self, alg, perm, twist=True, literal=False):
        if not isinstance(alg, ToroidalAlgebra):
            raise TypeError("expected a ToroidalAlgebra")
        self.alg = alg
        self.mu = DiagramAutAffine(AffineAlgebra(alg.g), perm, literal)
        self.T = self.mu.T
        self.twist = twist
        self._img = {}

    @property
    def order(self):
        return self.T

    def _raw_image(self, rk):
        """mu^ on one raw symbol, as a list of (raw key, coeff)."""
        chi = self.mu.t1_character(rk[2])
        out = self._table_image(rk)
        if chi != 1:
            out = [(k, c * chi) for k, c in out]
        return out

    def _table_image(self, rk):
        mu = self.mu
        tag, a, b = rk[0], rk[1], rk[2]
        if tag == "RK" or (tag == "RD" and rk[3] == 0):
            return [(rk, 1)]
        if tag == "RD":
            out = [(rk, 1)]
            out += [(("RL", a, b, hk), c) for hk, c in mu.hvec.items()]
            if mu.hh:
                out.append((("RK", a, b, 1), -Fraction(mu.hh) / 2))
            return out
        gk = rk[3]
        out = [(("RL", a, b + k[1], k[2]), c) for (k, _), c in mu.loop_img[gk].data.items()]
        cen = mu.central_img[gk]
        if cen:
            out.append((("RK", a, b, 1), cen))
        return out

    def apply_key(self, key):
        hit = self._img.get(key)
        if hit is not None:
            return hit
        raw = {}
        for rk, c in self.alg.expand(key):
            for rk2, c2 in self._raw_image(rk):
                kk = (rk2, 0)
                raw[kk] = raw.get(kk, 0) + c * c2
        img = self.alg.reduce_raw(raw)
        if self.twist:
            w = omega_power(self.T, -t0_degree(key))
            if w != 1:
                img = img * w
        self._img[key] = img
        return img

    def apply(self, x):
        return x.map_keys(self.apply_key)

    __call__ = apply

    def power(self, x, p):
        for _ in range(p % self.T):
            x = self.apply(x)
        return x


def mu_hat(alg, perm, literal=False):
    return ToroidalAutomorphism(alg, perm, twist=False, literal=literal)


def mu_tilde(alg, perm, literal=False):
    return ToroidalAutomorphism(alg, perm, twist=True, literal=literal)


def mu_hat_apply(mu_hat_aut, x):
    return mu_hat_aut.apply(x)


def mu_tilde_apply(mu_tilde_aut, x):
    return mu_tilde_aut.apply(x)


def eta_mu(mu, x):
    """sum_{p < T} mu~^p(x)."""
    total = LieElement.zero()
    cur = x
    for _ in range(mu.T):
        total = total + cur
        cur = mu.apply(cur)
    return total
