"""Nullity-2 toroidal algebras t(g), g~ = t(g) x| S, g^ = t(g) x| S^ and the tau_a deformation.

Brackets are computed in the full toroidal algebra on "raw" symbols and then
rewritten in the basis of the chosen flavor:

  raw  ('RL', a, b, x)   t0^a t1^b (x) x
       ('RK', a, b, i)   t0^a t1^b k_i        (i = 0, 1)
       ('RD', a, b, i)   t0^a t1^b d_i

  flavor keys
       ('L', a, b, x)    loop elements
       ('k0',)           k0
       ('tk1', a)        t0^a k1
       ('k', a, b)       k_{a,b}, b != 0
       ('d0',)           d0                 (g~ only)
       ('td1', a)        t0^a d1            (g~ and g^)
       ('dt', a, b)      d~_{a,b}, b != 0   (g~ only)
       ('td0m1',)        t0^-1 d0           (g^ only)
       ('dh', n, m)      d^_{n,m}, m != 0   (g^ only)
       ('D', a, b, i)    t0^a t1^b d_i      ("full" flavor: every derivation of the torus)
"""

import re
from fractions import Fraction

from ..algebra import Algebra
from ..exactcore import LieElement, Scalar
from ..kacmoody.simple import SimpleLieAlgebra

FLAVORS = ("t", "tilde", "hat", "tau", "full")
K0 = ("k0",)
D0 = ("d0",)
TD0M1 = ("td0m1",)


class OutsideAlgebra(ValueError):
    """A computed element does not lie in the declared span."""


# -- raw symbols ---------------------------------------------------------------------

def reduce_k_raw(a, b, i):
    """t0^a t1^b k_i in the basis {k0, t0^a k1, k_{a,b} (b != 0)} as a dict key -> coeff."""
    if a == 0 and b == 0:
        return {K0: 1} if i == 0 else {("tk1", 0): 1}
    if b != 0:
        # a t^(a,b) k0 + b t^(a,b) k1 = 0 and k_{a,b} = (1/b) t^(a,b) k0
        return {("k", a, b): b} if i == 0 else {("k", a, b): -a}
    return {} if i == 0 else {("tk1", a): 1}


def reduce_k(m0, m1, i):
    """Public form of the K-reduction, returned as a LieElement."""
    return LieElement({(k, 0): c for k, c in reduce_k_raw(m0, m1, i).items()})


def k_symbol(a, b):
    """k_{a,b} in the KSymbol basis (k_{a,0} = -(1/a) t0^a k1, k_{0,0} = 0)."""
    if b != 0:
        return {("k", a, b): 1}
    if a == 0:
        return {}
    return {("tk1", a): Fraction(-1, a)}


class ToroidalAlgebra(Algebra):
    def __init__(self, g, flavor="tilde", a=None):
        super().__init__()
        if flavor not in FLAVORS:
            raise ValueError("unknown toroidal flavor %r" % (flavor,))
        if not isinstance(g, SimpleLieAlgebra):
            g = SimpleLieAlgebra(*g)
        self.g = g
        self.flavor = flavor
        if flavor == "tau":
            self.a = Scalar.a() if a is None else Scalar.of(a)
        else:
            self.a = None
        label = {"t": "t(%s)", "tilde": "g~(%s)", "hat": "g^(%s)", "tau": "g~_tau(%s)",
                 "full": "t(%s)+Der"}[flavor]
        self.name = label % g.name

    @property
    def has_s(self):
        return self.flavor in ("tilde", "tau")

    # -- grammar -----------------------------------------------------------------------
    def is_key(self, key):
        if not isinstance(key, tuple) or not key:
            return False
        tag = key[0]
        if tag == "L":
            return len(key) == 4 and _ints(key[1:3]) and self.g.is_key(key[3])
        if key == K0:
            return True
        if tag == "tk1":
            return len(key) == 2 and _ints(key[1:])
        if tag == "k":
            return len(key) == 3 and _ints(key[1:]) and key[2] != 0
        if self.flavor == "t":
            return False
        if self.flavor == "full":
            return tag == "D" and len(key) == 4 and _ints(key[1:3]) and key[3] in (0, 1)
        if tag == "td1":
            return len(key) == 2 and _ints(key[1:])
        if self.has_s:
            if key == D0:
                return True
            return tag == "dt" and len(key) == 3 and _ints(key[1:]) and key[2] != 0
        if key == TD0M1:
            return True
        return tag == "dh" and len(key) == 3 and _ints(key[1:]) and key[2] != 0

    def spanning_keys(self, window, m0_window=None, m1_window=None):
        W0 = window if m0_window is None else m0_window
        W1 = window if m1_window is None else m1_window
        r0 = range(-W0, W0 + 1)
        r1 = range(-W1, W1 + 1)
        keys = [("L", a, b, x) for a in r0 for b in r1 for x in self.g.basis()]
        keys.append(K0)
        keys += [("tk1", a) for a in r0]
        keys += [("k", a, b) for a in r0 for b in r1 if b]
        if self.has_s:
            keys.append(D0)
            keys += [("td1", a) for a in r0]
            keys += [("dt", a, b) for a in r0 for b in r1 if b]
        elif self.flavor == "full":
            keys += [("D", a, b, i) for a in r0 for b in r1 for i in (0, 1)]
        elif self.flavor == "hat":
            keys.append(TD0M1)
            keys += [("td1", a) for a in r0]
            keys += [("dh", a, b) for a in r0 for b in r1 if b]
        return keys

    # -- raw expansion and reduction ---------------------------------------------------
    def expand(self, key):
        """Flavor key -> list of (raw key, coeff)."""
        tag = key[0]
        if tag == "L":
            return [(("RL",) + key[1:], 1)]
        if key == K0:
            return [(("RK", 0, 0, 0), 1)]
        if tag == "tk1":
            return [(("RK", key[1], 0, 1), 1)]
        if tag == "k":
            return [(("RK", key[1], key[2], 0), Fraction(1, key[2]))]
        if key == D0:
            return [(("RD", 0, 0, 0), 1)]
        if tag == "td1":
            return [(("RD", key[1], 0, 1), 1)]
        if tag == "dt":
            a, b = key[1], key[2]
            out = [(("RD", a, b, 0), -b)]
            if a:
                out.append((("RD", a, b, 1), a))
            return out
        if key == TD0M1:
            return [(("RD", -1, 0, 0), 1)]
        if tag == "D":
            return [(("RD",) + key[1:], 1)]
        if tag == "dh":
            n, m = key[1], key[2]
            out = [(("RD", n, m, 0), -m)]
            if n + 1:
                out.append((("RD", n, m, 1), n + 1))
            return out
        raise ValueError("unknown key %r" % (key,))

    def reduce_raw(self, raw):
        """Rewrite a flat raw dict ((rawkey, mono) -> coeff) in flavor keys."""
        out = {}
        dparts = {}
        for (rk, mo), c in raw.items():
            if not c:
                continue
            tag = rk[0]
            if tag == "RL":
                kk = (("L",) + rk[1:], mo)
                out[kk] = out.get(kk, 0) + c
            elif tag == "RK":
                for k, v in reduce_k_raw(rk[1], rk[2], rk[3]).items():
                    kk = (k, mo)
                    out[kk] = out.get(kk, 0) + c * v
            else:
                slot = dparts.setdefault((rk[1], rk[2], mo), [0, 0])
                slot[rk[3]] += c
        for (a, b, mo), (c0, c1) in dparts.items():
            for k, v in self._collapse_d(a, b, c0, c1):
                kk = (k, mo)
                out[kk] = out.get(kk, 0) + v
        return LieElement(out)

    def _collapse_d(self, a, b, c0, c1):
        """c0 t^(a,b) d0 + c1 t^(a,b) d1 in the derivation basis of the flavor."""
        if not c0 and not c1:
            return []
        if self.flavor == "t":
            raise OutsideAlgebra("derivation term in t(g)")
        if self.flavor == "full":
            return [(("D", a, b, i), c) for i, c in ((0, c0), (1, c1)) if c]
        if self.has_s:
            if b != 0:
                lam = c0 * Fraction(-1, b)
                if c1 != a * lam:
                    raise OutsideAlgebra("derivation t^(%d,%d) not divergence free" % (a, b))
                return [(("dt", a, b), lam)]
            out = []
            if c0:
                if a != 0:
                    raise OutsideAlgebra("t0^%d d0 is not in S" % a)
                out.append((D0, c0))
            if c1:
                out.append((("td1", a), c1))
            return out
        # hat flavor
        if b != 0:
            lam = c0 * Fraction(-1, b)
            if c1 != (a + 1) * lam:
                raise OutsideAlgebra("derivation t^(%d,%d) not in S^" % (a, b))
            return [(("dh", a, b), lam)]
        out = []
        if c0:
            if a != -1:
                raise OutsideAlgebra("t0^%d d0 is not in S^" % a)
            out.append((TD0M1, c0))
        if c1:
            out.append((("td1", a), c1))
        return out

    def raw_bracket(self, r1, r2):
        """Bracket of two raw symbols in the full toroidal algebra, as a raw dict."""
        t1, t2 = r1[0], r2[0]
        a0, a1 = r1[1], r1[2]
        b0, b1 = r2[1], r2[2]
        s0, s1 = a0 + b0, a1 + b1
        out = {}
        if t1 == "RL" and t2 == "RL":
            for k, c in self.g.lie(r1[3], r2[3]).items():
                out[(("RL", s0, s1, k), 0)] = c
            f = self.g.kform(r1[3], r2[3])
            if f:
                if a0:
                    out[(("RK", s0, s1, 0), 0)] = a0 * f
                if a1:
                    out[(("RK", s0, s1, 1), 0)] = a1 * f
            return out
        if t1 in ("RL", "RK") and t2 in ("RL", "RK"):
            return out
        if t2 == "RD" and t1 != "RD":
            return {k: -v for k, v in self.raw_bracket(r2, r1).items()}
        # t1 == RD
        i = r1[3]
        n_i = (b0, b1)[i]
        if t2 == "RL":
            if n_i:
                out[(("RL", s0, s1, r2[3]), 0)] = n_i
            return out
        if t2 == "RK":
            j = r2[3]
            if n_i:
                out[(("RK", s0, s1, j), 0)] = n_i
            if i == j:
                for r, m_r in ((0, a0), (1, a1)):
                    if m_r:
                        kk = (("RK", s0, s1, r), 0)
                        out[kk] = out.get(kk, 0) + m_r
            return out
        # RD, RD
        j = r2[3]
        m_j = (a0, a1)[j]
        if n_i:
            out[(("RD", s0, s1, j), 0)] = n_i
        if m_j:
            kk = (("RD", s0, s1, i), 0)
            out[kk] = out.get(kk, 0) - m_j
        return out

    def _bracket_keys(self, a, b):
        raw = {}
        for ra, ca in self.expand(a):
            for rb, cb in self.expand(b):
                for k, v in self.raw_bracket(ra, rb).items():
                    raw[k] = raw.get(k, 0) + ca * cb * v
        res = self.reduce_raw(raw)
        if self.flavor == "tau":
            extra = self._tau(a, b)
            if extra:
                res = res + extra
        return res

    # -- tau_a cocycle -----------------------------------------------------------------
    def _dt_index(self, key):
        """(scale, (m0, m1)) with key = scale * d~_{m0,m1}, or None for d0 / d1 / non-S keys."""
        if key[0] == "dt":
            return 1, (key[1], key[2])
        if key[0] == "td1" and key[1] != 0:
            return Fraction(1, key[1]), (key[1], 0)
        return None

    def _tau(self, a, b):
        ia, ib = self._dt_index(a), self._dt_index(b)
        if ia is None or ib is None:
            return None
        (sa, (m0, m1)), (sb, (n0, n1)) = ia, ib
        cross = m0 * n1 - m1 * n0
        if not cross:
            return None
        coeff = sa * sb * cross ** 3
        out = {}
        for k, v in k_symbol(m0 + n0, m1 + n1).items():
            for mo, c in self.a.terms.items():
                out[(k, mo)] = coeff * v * c
        return LieElement(out)

    def tau_a_bracket(self, s1, s2):
        return self.bracket(s1, s2)

    # -- invariant form (g~) ------------------------------------------------------------
    def form_keys(self, a, b):
        if self.flavor not in ("tilde", "tau"):
            raise NotImplementedError("the invariant form is defined on g~ only")
        ta, tb = a[0], b[0]
        if ta == "L" and tb == "L":
            if a[1] + b[1] == 0 and a[2] + b[2] == 0:
                return self.g.kform(a[3], b[3])
            return 0
        if {a, b} == {K0, D0}:
            return 1
        if {ta, tb} == {"tk1", "td1"}:
            return 1 if a[1] + b[1] == 0 else 0
        if {ta, tb} == {"dt", "k"}:
            return 1 if a[1] + b[1] == 0 and a[2] + b[2] == 0 else 0
        return 0

    # -- text ------------------------------------------------------------------------------
    def format_key(self, key):
        tag = key[0]
        if tag == "L":
            return _mono_prefix(key[1], key[2]) + self.g.format_key(key[3])
        if key == K0:
            return "k0"
        if tag == "tk1":
            return _mono_prefix(key[1], 0) + "k1"
        if tag == "k":
            return "k_{%d,%d}" % (key[1], key[2])
        if key == D0:
            return "d0"
        if tag == "td1":
            return _mono_prefix(key[1], 0) + "d1"
        if tag == "dt":
            return "d~_{%d,%d}" % (key[1], key[2])
        if key == TD0M1:
            return "t0^-1*d0"
        if tag == "dh":
            return "d^_{%d,%d}" % (key[1], key[2])
        if tag == "D":
            return _mono_prefix(key[1], key[2]) + "d%d" % key[3]
        return repr(key)

    _SYM = re.compile(r"^(k|d~|d\^)_\{\s*(-?\d+)\s*,\s*(-?\d+)\s*\}$")

    def parse_key(self, text):
        t = text.replace(" ", "")
        m = self._SYM.match(t)
        if m:
            kind, x, y = m.group(1), int(m.group(2)), int(m.group(3))
            if kind == "k":
                return LieElement({(k, 0): v for k, v in k_symbol(x, y).items()})
            if kind == "d~":
                if not self.has_s:
                    raise ValueError("d~ symbols belong to g~")
                raw = {(rk, 0): c for rk, c in self.expand(("dt", x, y))}
                return self.reduce_raw(raw)
            if self.flavor != "hat":
                raise ValueError("d^ symbols belong to g^")
            raw = {(rk, 0): c for rk, c in self.expand(("dh", x, y))}
            return self.reduce_raw(raw)
        a = b = 0
        rest = []
        for p in t.split("*"):
            mm = re.fullmatch(r"t([01])(?:\^(-?\d+))?", p)
            if mm:
                e = int(mm.group(2)) if mm.group(2) else 1
                if mm.group(1) == "0":
                    a += e
                else:
                    b += e
            else:
                rest.append(p)
        if len(rest) != 1:
            raise ValueError("cannot parse toroidal element %r" % text)
        body = rest[0]
        if body in ("k0", "k1"):
            return self.reduce_raw({(("RK", a, b, int(body[1])), 0): 1})
        if body in ("d0", "d1"):
            return self.reduce_raw({(("RD", a, b, int(body[1])), 0): 1})
        return ("L", a, b, self.g.parse_key(body))


def _ints(xs):
    return all(isinstance(x, int) and not isinstance(x, bool) for x in xs)


def _mono_prefix(a, b):
    parts = []
    if a:
        parts.append("t0" if a == 1 else "t0^%d" % a)
    if b:
        parts.append("t1" if b == 1 else "t1^%d" % b)
    return "".join(p + "*" for p in parts)


def toroidal_bracket(spec, x, y):
    return spec.bracket(x, y)


def form_tilde_g(spec, x, y):
    return spec.form(x, y)
