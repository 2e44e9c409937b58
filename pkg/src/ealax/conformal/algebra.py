"""Conformal algebras given by an i-product table on generators, and their Lie algebras.

An element of the conformal algebra C is a LieElement over keys
('C', j, gen) standing for d^j (x) gen.  Generators listed in ``torsion``
are killed by d (only j = 0 occurs).  Products of d-shifted arguments are
derived from the generator table through

    (d a)_i b = -i a_{i-1} b,        a_i (d b) = d(a_i b) + i a_{i-1} b.

C^ has keys ('u', gen, m) for u(m); C~ has keys ('u', gen, m) for u[m] and
('dd',) for the degree derivation d.
"""

from fractions import Fraction
from math import comb, factorial

from ..algebra import Algebra
from ..exactcore import LieElement, scale
from ..verify import VerificationReport, jacobi_sweep, antisymmetry_sweep

DD = ("dd",)


def falling(x, k):
    out = 1
    for r in range(k):
        out *= x - r
    return out


def gen_binom(m, i):
    """binom(m, i) for any integer m."""
    return Fraction(falling(m, i), factorial(i))


class ConformalAlgebra:
    """A conformal algebra: generators, torsion (d-killed) generators and a product table.

    ``table(a, i, b)`` returns {(j, gen): coeff} for generators a, b, or {}.
    ``max_i`` bounds the nonzero products on generators.
    """

    name = "conformal"
    max_i = 1

    def __init__(self, generators=(), table=None, torsion=(), max_i=1, name="conformal"):
        self._gens = list(generators)
        self._table = table or {}
        self.torsion = frozenset(torsion)
        self.max_i = max_i
        self.name = name
        self._prod_cache = {}

    # -- to override -----------------------------------------------------------------
    def is_generator(self, gen):
        return gen in self._gens or gen in self.torsion

    def table(self, a, i, b):
        return self._table.get((a, i, b), {})

    def format_gen(self, gen):
        return str(gen)

    def generators(self, window):
        """Finite family of generators used by window sweeps."""
        return list(self._gens)

    # -- elements ------------------------------------------------------------------------
    def gen(self, g, j=0, coeff=1):
        if j and g in self.torsion:
            return LieElement.zero()
        return LieElement.basis(("C", j, g), coeff)

    def partial(self, x, times=1):
        if not times:
            return x
        out = {}
        for (k, mo), c in x.data.items():
            if k[2] in self.torsion:
                continue
            out[(("C", k[1] + times, k[2]), mo)] = c
        return LieElement(out)

    def format(self, x):
        from ..exactcore import format_element
        return format_element(x, self.format_ckey)

    def format_ckey(self, k):
        _, j, g = k
        body = self.format_gen(g)
        if j == 0:
            return body
        return ("d*" if j == 1 else "d^%d*" % j) + body

    # -- products ------------------------------------------------------------------------
    def _gen_product(self, a, i, b):
        """a_i b for generators, as {(j, gen): coeff} with torsion terms cleaned."""
        if i < 0 or i > self.max_i:
            return {}
        out = {}
        for (j, g), c in self.table(a, i, b).items():
            if not c or (j and g in self.torsion):
                continue
            out[(j, g)] = out.get((j, g), 0) + c
        return {k: v for k, v in out.items() if v}

    def _shifted_product(self, a, p, i, b, q):
        """(d^p a)_i (d^q b) as {(j, gen): coeff}."""
        key = (a, p, i, b, q)
        hit = self._prod_cache.get(key)
        if hit is not None:
            return hit
        out = {}
        if p > i:
            self._prod_cache[key] = out
            return out
        k = i - p
        pre = (-1) ** p * falling(i, p)
        if pre:
            # a_k d^q = sum_s binom(q, s) (k)_s d^(q-s) a_(k-s)
            for s in range(0, min(q, k) + 1):
                c = pre * comb(q, s) * falling(k, s)
                if not c:
                    continue
                for (j, g), v in self._gen_product(a, k - s, b).items():
                    jj = j + q - s
                    if jj and g in self.torsion:
                        continue
                    out[(jj, g)] = out.get((jj, g), 0) + c * v
        out = {kk: v for kk, v in out.items() if v}
        self._prod_cache[key] = out
        return out

    def iproduct(self, x, i, y):
        """x_i y for elements x, y of C."""
        out = {}
        for (ka, ma), ca in x.data.items():
            for (kb, mb), cb in y.data.items():
                for (j, g), v in self._shifted_product(ka[2], ka[1], i, kb[2], kb[1]).items():
                    kk = (("C", j, g), ma + mb)
                    out[kk] = out.get(kk, 0) + ca * cb * v
        return LieElement(out)

    # -- associated Lie algebras -----------------------------------------------------------
    def hat(self):
        return HatC(self)

    def tilde(self):
        return TildeC(self)


def iproduct(C, a, i, b):
    return C.iproduct(a, i, b)


class HatC(Algebra):
    """C^ = C[t, t^-1] (x) C / Im(d + d/dt); (d^j w)(p) = (-1)^j (p)_j w(p - j)."""

    def __init__(self, C):
        super().__init__()
        self.C = C
        self.name = "C^(%s)" % C.name

    def is_key(self, key):
        return (isinstance(key, tuple) and len(key) == 3 and key[0] == "u"
                and isinstance(key[2], int) and self.C.is_generator(key[1])
                and (key[1] not in self.C.torsion or key[2] == -1))

    def embed(self, x, p):
        """Image of t^p (x) x for x in C."""
        out = {}
        for (k, mo), c in x.data.items():
            _, j, g = k
            if g in self.C.torsion:
                if j == 0 and p == -1:
                    out[(("u", g, -1), mo)] = out.get((("u", g, -1), mo), 0) + c
                continue
            f = (-1) ** j * falling(p, j)
            if f:
                kk = (("u", g, p - j), mo)
                out[kk] = out.get(kk, 0) + c * f
        return LieElement(out)

    def key_of(self, gen, m):
        if gen in self.C.torsion and m != -1:
            return None
        return ("u", gen, m)

    def _bracket_keys(self, a, b):
        C = self.C
        _, u, m = a
        _, v, n = b
        out = LieElement.zero()
        for i in range(C.max_i + 1):
            bc = gen_binom(m, i)
            if not bc:
                continue
            prod = C._shifted_product(u, 0, i, v, 0)
            if not prod:
                continue
            elt = LieElement({(("C", j, g), 0): c for (j, g), c in prod.items()})
            out = out + self.embed(elt, m + n - i) * bc
        return out

    def spanning_keys(self, window):
        keys = []
        for g in self.C.generators(window):
            if g in self.C.torsion:
                keys.append(("u", g, -1))
            else:
                keys += [("u", g, m) for m in range(-window, window + 1)]
        return keys

    def format_key(self, key):
        return "%s(%d)" % (self.C.format_gen(key[1]), key[2])

    def parse_key(self, text):
        t = text.strip()
        if not t.endswith(")") or "(" not in t:
            raise ValueError("expected u(m), got %r" % text)
        head, _, m = t[:-1].rpartition("(")
        return ("u", self.C.parse_gen(head), int(m))


def hatC_bracket(Chat, x, y):
    return Chat.bracket(x, y)


class TildeC(Algebra):
    """C~ = C-bar x| C d with C-bar = C[t, t^-1] (x) C / Im(d + t d/dt); (d^j w)[p] = (-p)^j w[p]."""

    def __init__(self, C):
        super().__init__()
        self.C = C
        self.name = "C~(%s)" % C.name

    def is_key(self, key):
        if key == DD:
            return True
        return (isinstance(key, tuple) and len(key) == 3 and key[0] == "u"
                and isinstance(key[2], int) and self.C.is_generator(key[1])
                and (key[1] not in self.C.torsion or key[2] == 0))

    def embed(self, x, p):
        out = {}
        for (k, mo), c in x.data.items():
            _, j, g = k
            if g in self.C.torsion:
                if j == 0 and p == 0:
                    out[(("u", g, 0), mo)] = out.get((("u", g, 0), mo), 0) + c
                continue
            f = (-p) ** j
            if f:
                kk = (("u", g, p), mo)
                out[kk] = out.get(kk, 0) + c * f
        return LieElement(out)

    def _bracket_keys(self, a, b):
        if a == DD and b == DD:
            return {}
        if a == DD:
            return {(b, 0): -b[2]} if b[2] else {}
        if b == DD:
            return {(a, 0): a[2]} if a[2] else {}
        C = self.C
        _, u, m = a
        _, v, n = b
        out = LieElement.zero()
        for i in range(C.max_i + 1):
            coef = Fraction(m ** i, factorial(i))
            if not coef:
                continue
            prod = C._shifted_product(u, 0, i, v, 0)
            if not prod:
                continue
            elt = LieElement({(("C", j, g), 0): c for (j, g), c in prod.items()})
            out = out + self.embed(elt, m + n) * coef
        return out

    def spanning_keys(self, window):
        keys = []
        for g in self.C.generators(window):
            if g in self.C.torsion:
                keys.append(("u", g, 0))
            else:
                keys += [("u", g, m) for m in range(-window, window + 1)]
        return keys + [DD]

    def format_key(self, key):
        if key == DD:
            return "d"
        return "%s[%d]" % (self.C.format_gen(key[1]), key[2])

    def parse_key(self, text):
        t = text.strip()
        if t == "d":
            return DD
        if not t.endswith("]") or "[" not in t:
            raise ValueError("expected u[m], got %r" % text)
        head, _, m = t[:-1].rpartition("[")
        return ("u", self.C.parse_gen(head), int(m))


def tildeC_bracket(Ctilde, x, y):
    return Ctilde.bracket(x, y)


def conformal_axiom_check(C, window, report=None):
    """Antisymmetry and Jacobi of the C^ bracket on all generator modes |m| <= window."""
    rep = report or VerificationReport("conformal-axioms:%s" % C.name)
    H = HatC(C)
    keys = H.spanning_keys(window)
    antisymmetry_sweep(H, keys, rep)
    jacobi_sweep(H, keys, rep)
    rep.data["keys"] = len(keys)
    rep.data["window"] = window
    return rep.finish()


def skew_table_check(C, window, report=None):
    """Skew symmetry u_i v = sum_{n>=i} (-1)^(n+1) d^(n-i)/(n-i)! (v_n u) on generator pairs.

    For i = 0, 1 this is u_0 v = -v_0 u + d(v_1 u) - ... and u_1 v = v_1 u - ...;
    products past ``max_i`` must vanish.
    """
    rep = report or VerificationReport("skew-symmetry:%s" % C.name)
    gens = C.generators(window)
    top = C.max_i
    for a in gens:
        for b in gens:
            ua, vb = C.gen(a), C.gen(b)
            if not ua or not vb:
                continue
            rev = [C.iproduct(vb, n, ua) for n in range(top + 1)]
            for i in range(top + 1):
                lhs = C.iproduct(ua, i, vb)
                rhs = LieElement()
                for n in range(i, top + 1):
                    term = scale(C.partial(rev[n], n - i), Fraction((-1) ** (n + 1), factorial(n - i)))
                    rhs = rhs + term
                rep.check(lhs == rhs, inputs=[C.format_gen(a), str(i), C.format_gen(b)],
                          expected=C.format(rhs), got=C.format(lhs), kind="skew-%d" % i)
            for i in range(top + 1, top + 3):
                p = C.iproduct(ua, i, vb)
                rep.check(not p, inputs=[C.format_gen(a), str(i), C.format_gen(b)], expected="0",
                          got=C.format(p), kind="vanishing")
    return rep.finish()


class MutatedConformal(ConformalAlgebra):
    """A copy of C with one table entry a_i b multiplied by `factor` (default: sign flip)."""

    def __init__(self, C, a, i, b, factor=-1):
        self.base = C
        self.torsion = C.torsion
        self.max_i = C.max_i
        self.name = C.name + "[mutated]"
        self._prod_cache = {}
        if not C.table(a, i, b):
            raise ValueError("mutating a zero table entry changes nothing")
        self.mutation = (a, i, b, factor)

    def is_generator(self, gen):
        return self.base.is_generator(gen)

    def table(self, a, i, b):
        t = self.base.table(a, i, b)
        ma, mi, mb, f = self.mutation
        if (a, i, b) == (ma, mi, mb):
            return {k: v * f for k, v in t.items()}
        return t

    def format_gen(self, gen):
        return self.base.format_gen(gen)

    def parse_gen(self, text):
        return self.base.parse_gen(text)

    def generators(self, window):
        return self.base.generators(window)


def lift_aut(C, phi):
    """phi^ on C^: u(m) -> (phi u)(m); phi maps a generator to an element of C.

    phi is extended d-linearly, so it commutes with d unless it sends a
    torsion generator (d t = 0) to something d does not kill; that is rejected.
    """
    for t in sorted(C.torsion):
        if C.partial(phi(t)):
            raise ValueError("phi does not commute with d on %s" % C.format_gen(t))
    H = HatC(C)
    cache = {}

    def on_key(key):
        hit = cache.get(key)
        if hit is None:
            hit = H.embed(phi(key[1]), key[2])
            cache[key] = hit
        return hit

    def apply(x):
        return x.map_keys(on_key)

    return apply


def conformal_aut_check(C, phi, window, report=None, name="conformal-automorphism"):
    """phi(u_i v) == (phi u)_i (phi v) on generator pairs; phi commutes with d by construction."""
    rep = report or VerificationReport(name)
    gens = C.generators(window)

    def phi_elt(x):
        out = LieElement.zero()
        for (k, mo), c in x.data.items():
            img = phi(k[2])
            if k[1]:
                img = C.partial(img, k[1])
            out = out + img * c
        return out

    for a in gens:
        for b in gens:
            for i in range(C.max_i + 1):
                lhs = phi_elt(C.iproduct(C.gen(a), i, C.gen(b)))
                rhs = C.iproduct(phi(a), i, phi(b))
                rep.check(lhs == rhs, inputs=[C.format_gen(a), i, C.format_gen(b)],
                          expected=C.format(rhs), got=C.format(lhs), kind=name)
    return rep.finish()
