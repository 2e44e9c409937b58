"""Untwisted affine algebras  C[t1, t1^-1] (x) g  +  C k1  +  C d1.

Keys: ('t1', n, gkey), ('k1',), ('d1',).  The central term of the loop
bracket carries the loop degree of the left factor, m <a,b> delta_{m+n,0} k1;
without that factor the product is not antisymmetric.
"""

import re
from fractions import Fraction

from ..algebra import Algebra
from ..exactcore import LieElement
from .simple import SimpleLieAlgebra

K1 = ("k1",)
D1 = ("d1",)


class AffineAlgebra(Algebra):
    def __init__(self, g):
        super().__init__()
        if not isinstance(g, SimpleLieAlgebra):
            g = SimpleLieAlgebra(*g)
        self.g = g
        self.rank = g.rank
        self.name = "%s^(1)" % g.name

    # -- keys ------------------------------------------------------------------
    @staticmethod
    def loop(n, gkey):
        return ("t1", n, gkey)

    def is_key(self, key):
        if key in (K1, D1):
            return True
        return (isinstance(key, tuple) and len(key) == 3 and key[0] == "t1"
                and isinstance(key[1], int) and self.g.is_key(key[2]))

    def _bracket_keys(self, a, b):
        ta, tb = a[0], b[0]
        if ta == "t1" and tb == "t1":
            m, n = a[1], b[1]
            out = {}
            for k, c in self.g.lie(a[2], b[2]).items():
                out[(("t1", m + n, k), 0)] = c
            if m + n == 0 and m:
                f = self.g.kform(a[2], b[2])
                if f:
                    out[(K1, 0)] = m * f
            return out
        if ta == "d1" and tb == "t1":
            return {(b, 0): b[1]} if b[1] else {}
        if ta == "t1" and tb == "d1":
            return {(a, 0): -a[1]} if a[1] else {}
        return {}

    def form_keys(self, a, b):
        if a[0] == "t1" and b[0] == "t1":
            if a[1] + b[1] == 0:
                return self.g.kform(a[2], b[2])
            return 0
        if {a, b} == {K1, D1}:
            return 1
        return 0

    def spanning_keys(self, window):
        keys = [("t1", n, gk) for n in range(-window, window + 1) for gk in self.g.basis()]
        return keys + [K1, D1]

    # -- affine root data -----------------------------------------------------------
    def simple_affine_root(self, i):
        """alpha_i as (finite part, delta coefficient); alpha_0 = delta - theta."""
        rs = self.g.rs
        if i == 0:
            return rs.neg(rs.theta), 1
        return rs.simple(i), 0

    def affine_inner(self, i, j):
        rs = self.g.rs
        return rs.inner(self.simple_affine_root(i)[0], self.simple_affine_root(j)[0])

    def cartan(self):
        n = self.rank + 1
        return [[int(2 * self.affine_inner(i, j) / self.affine_inner(i, i)) for j in range(n)]
                for i in range(n)]

    def chevalley_e(self, i):
        g = self.g
        if i == 0:
            return LieElement.basis(("t1", 1, ("x", g.rs.neg(g.rs.theta))))
        return LieElement.basis(("t1", 0, ("x", g.rs.simple(i))))

    def chevalley_f(self, i):
        g = self.g
        if i == 0:
            return LieElement.basis(("t1", -1, ("x", g.rs.theta)))
        return LieElement.basis(("t1", 0, ("x", g.rs.neg(g.rs.simple(i)))))

    # -- text ------------------------------------------------------------------------
    def format_key(self, key):
        if key == K1:
            return "k1"
        if key == D1:
            return "d1"
        n = key[1]
        body = self.g.format_key(key[2])
        if n == 0:
            return body
        return "t1^%d*%s" % (n, body)

    def parse_key(self, text):
        t = text.replace(" ", "")
        if t in ("k1", "k"):
            return K1
        if t in ("d1", "d"):
            return D1
        n = 0
        parts = t.split("*")
        rest = []
        for p in parts:
            m = re.fullmatch(r"t1?(?:\^(-?\d+))?", p)
            if m:
                n += int(m.group(1)) if m.group(1) else 1
            else:
                rest.append(p)
        if len(rest) != 1:
            raise ValueError("cannot parse affine element %r" % text)
        return ("t1", n, self.g.parse_key(rest[0]))


def loop_shift(x, n):
    """t1^n times a loop element (central terms dropped unless n == 0)."""
    if n == 0:
        return x
    out = {}
    for (k, m), c in x.data.items():
        if k[0] == "t1":
            out[(("t1", k[1] + n, k[2]), m)] = c
    return LieElement(out)


def ideal_generator_exponents(g, level):
    """[(i, eps_i * level + 1)] over the nodes of the affine diagram.

    eps_i = 2/<alpha_i, alpha_i>, so the exponent is 1 + level for long
    simple roots, 2*level + 1 and 3*level + 1 for shorter ones.
    """
    if level < 0:
        raise ValueError("level must be a nonnegative integer")
    if isinstance(g, SimpleLieAlgebra):
        g = AffineAlgebra(g)
    out = []
    for i in range(g.rank + 1):
        eps = Fraction(2) / g.affine_inner(i, i)
        if eps.denominator != 1:
            raise ArithmeticError("unexpected root length")
        out.append((i, int(eps) * level + 1))
    return out
