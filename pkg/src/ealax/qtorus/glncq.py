"""gl_N(C_q) with its two-dimensional central extension and the derivations d0, d1.

Keys:
    ('E', i, j, m0, m1)   E_{i,j} t0^m0 t1^m1,  1 <= i, j <= N
    ('H', k)              E_{k,k} - E_{k+1,k+1} at t^0, 1 <= k < N (special mode only)
    ('k0',), ('k1',), ('d0',), ('d1',)

``qsign`` = 1 gives the displayed bracket with q^(m1 n0), which is the
torus t1 t0 = q t0 t1; ``qsign`` = -1 gives q^(-m1 n0), the torus
t0 t1 = q t1 t0.  The two are exchanged by q <-> q^-1.

In special mode (sl_N(C_q)) the degree-zero diagonal units are not keys on
their own; brackets landing there are traceless and are rewritten in the H
basis.  The derivations are present only when ``derivations`` is set.
"""

import re

from ..algebra import Algebra
from ..exactcore import LieElement, mono
from ..verify import VerificationReport
from .torus import QtMonomial

QK0 = ("k0",)
QK1 = ("k1",)
QD0 = ("d0",)
QD1 = ("d1",)


def ekey(i, j, m0=0, m1=0):
    return ("E", i, j, m0, m1)


class GlNCq(Algebra):
    def __init__(self, N, special=True, derivations=True, qsign=1):
        super().__init__()
        if N < 2:
            raise ValueError("N must be at least 2")
        if qsign not in (1, -1):
            raise ValueError("qsign is 1 or -1")
        self.N = N
        self.qsign = qsign
        self.special = special
        self.derivations = derivations
        hat = "~" if derivations else "^"
        self.name = "%s%s_%d(C_q)" % ("sl" if special else "gl", hat, N)

    # -- keys ----------------------------------------------------------------------------
    def is_key(self, key):
        if not isinstance(key, tuple) or not key:
            return False
        if key in (QK0, QK1):
            return True
        if key in (QD0, QD1):
            return self.derivations
        N = self.N
        if key[0] == "H":
            return self.special and len(key) == 2 and isinstance(key[1], int) and 1 <= key[1] < N
        if key[0] == "E" and len(key) == 5:
            _, i, j, m0, m1 = key
            if not all(isinstance(v, int) for v in key[1:]):
                return False
            if not (1 <= i <= N and 1 <= j <= N):
                return False
            return not (self.special and i == j and m0 == 0 and m1 == 0)
        return False

    def _expand(self, key):
        """Key -> [(gl key, coeff)]; only H is not already a gl key."""
        if key[0] == "H":
            k = key[1]
            return [(ekey(k, k), 1), (ekey(k + 1, k + 1), -1)]
        return [(key, 1)]

    def _compress(self, out):
        """Rewrite degree-zero diagonal units in the H basis (special mode)."""
        if not self.special:
            return out
        diag = {}
        res = {}
        for (k, mo), c in out.items():
            if k[0] == "E" and k[1] == k[2] and k[3] == 0 and k[4] == 0:
                diag.setdefault(mo, [0] * (self.N + 1))[k[1]] += c
            else:
                res[(k, mo)] = res.get((k, mo), 0) + c
        for mo, cs in diag.items():
            run = 0
            for k in range(1, self.N):
                run += cs[k]
                if run:
                    res[(("H", k), mo)] = res.get((("H", k), mo), 0) + run
            if run + cs[self.N]:
                raise ArithmeticError("bracket left the traceless part")
        return res

    def _gl_bracket(self, a, b, out, c0):
        _, i, j, m0, m1 = a
        _, k, l, n0, n1 = b
        s0, s1 = m0 + n0, m1 + n1
        qs = self.qsign
        if j == k:
            kk = (ekey(i, l, s0, s1), mono(qs * m1 * n0))
            out[kk] = out.get(kk, 0) + c0
        if i == l:
            kk = (ekey(k, j, s0, s1), mono(qs * n1 * m0))
            out[kk] = out.get(kk, 0) - c0
        if j == k and i == l and s0 == 0 and s1 == 0:
            q = mono(qs * m1 * n0)
            if m0:
                out[(QK0, q)] = out.get((QK0, q), 0) + c0 * m0
            if m1:
                out[(QK1, q)] = out.get((QK1, q), 0) + c0 * m1

    def _bracket_keys(self, a, b):
        if a in (QK0, QK1) or b in (QK0, QK1):
            return {}
        if a in (QD0, QD1) or b in (QD0, QD1):
            if a in (QD0, QD1) and b in (QD0, QD1):
                return {}
            sign = 1
            if b in (QD0, QD1):
                a, b, sign = b, a, -1
            r = 3 if a == QD0 else 4
            out = {}
            for k, c in self._expand(b):
                if k[r]:
                    out[(k, 0)] = out.get((k, 0), 0) + sign * c * k[r]
            return self._compress(out)
        out = {}
        for ka, ca in self._expand(a):
            for kb, cb in self._expand(b):
                self._gl_bracket(ka, kb, out, ca * cb)
        return self._compress(out)

    def form_keys(self, a, b):
        """<E_ij t^m, E_ji t^-m> = q^(-m0 m1), <d_r, k_r> = 1.

        The q power is the trace of t^m t^-m; with it the form is invariant
        under the bracket above (with the constant 1 it is not).
        """
        if {a, b} in ({QD0, QK0}, {QD1, QK1}):
            return 1
        if a[0] in ("E", "H") and b[0] in ("E", "H"):
            total = {}
            for ka, ca in self._expand(a):
                for kb, cb in self._expand(b):
                    if ka[1] == kb[2] and ka[2] == kb[1] and ka[3] + kb[3] == 0 and ka[4] + kb[4] == 0:
                        e = self.qsign * QtMonomial(ka[3], ka[4]).trace_pairing()
                        total[e] = total.get(e, 0) + ca * cb
            total = {e: c for e, c in total.items() if c}
            if not total:
                return 0
            if list(total) == [0]:
                return total[0]
            from ..exactcore import Scalar
            return Scalar({mono(e): c for e, c in total.items()})
        return 0

    def spanning_keys(self, window):
        N = self.N
        rng = range(-window, window + 1)
        keys = []
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                for m0 in rng:
                    for m1 in rng:
                        key = ekey(i, j, m0, m1)
                        if self.is_key(key):
                            keys.append(key)
        if self.special:
            keys += [("H", k) for k in range(1, N)]
        keys += [QK0, QK1]
        if self.derivations:
            keys += [QD0, QD1]
        return keys

    # -- text ------------------------------------------------------------------------------
    @staticmethod
    def _unit(i, j):
        return "E%d%d" % (i, j) if i < 10 and j < 10 else "E{%d,%d}" % (i, j)

    def format_key(self, key):
        if key[0] in ("k0", "k1", "d0", "d1"):
            return key[0]
        if key[0] == "H":
            return "H%d" % key[1]
        _, i, j, m0, m1 = key
        body = self._unit(i, j)
        return body if (m0, m1) == (0, 0) else body + "*" + str(QtMonomial(m0, m1))

    def to_gl(self, x):
        """Rewrite H keys as differences of diagonal units."""
        out = {}
        for (k, mo), c in x.data.items():
            for k2, c2 in self._expand(k):
                out[(k2, mo)] = out.get((k2, mo), 0) + c * c2
        return LieElement(out)

    def format(self, x):
        """Matrix-unit form; H_k is shown as E_kk - E_(k+1)(k+1)."""
        from ..exactcore import format_element
        return format_element(self.to_gl(x), self.format_key)

    _UNIT = re.compile(r"E(?:_?\{(\d+),(\d+)\}|(\d)(\d))((?:\*t[01](?:\^-?\d+)?)*)")

    def _parse_gl_key(self, text):
        t = text.replace(" ", "")
        if t in ("k0", "k1", "d0", "d1"):
            return (t,)
        m = re.fullmatch(r"H_?\{?(\d+)\}?", t)
        if m:
            return ("H", int(m.group(1)))
        m = self._UNIT.fullmatch(t)
        if not m:
            raise ValueError("cannot parse %r as an element of %s" % (text, self.name))
        i, j = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
        e = [0, 0]
        for var, exp in re.findall(r"t([01])(?:\^(-?\d+))?", m.group(5)):
            e[int(var)] += int(exp) if exp else 1
        return ekey(int(i), int(j), e[0], e[1])

    def parse_key(self, text):
        key = self._parse_gl_key(text)
        if not self.is_key(key):
            raise ValueError("%r is not a basis element of %s" % (text, self.name))
        return key

    def parse(self, text):
        """Element text; in special mode degree-zero diagonal units may appear in traceless sums."""
        from ..exactcore import parse_element

        def one(t):
            key = self._parse_gl_key(t)
            gl_ok = key[0] == "E" and key[1] == key[2] and key[3] == key[4] == 0
            if not (gl_ok or self.is_key(key)):
                raise ValueError("%r is not a basis element of %s" % (t, self.name))
            return LieElement.basis(key)

        x = parse_element(text, one, self.order)
        try:
            return LieElement(self._compress(dict(x.data)))
        except ArithmeticError:
            raise ValueError("%r has a nonzero trace at t^0; not in sl_N(C_q)" % text) from None


def glcq_bracket(alg, x, y):
    return alg.bracket(x, y)


def slncq_form(alg, x, y):
    return alg.form(x, y)


def current_coefficient(N, i, j, m, n):
    """The z^-n coefficient of (E_{i,j} t1^m)[z]."""
    return LieElement.basis(ekey(i, j, n, m))


def offdiag_commute_check(N, i, j, m, window=2, other=None, report=None):
    """All coefficients of (E_ij t1^m)[z1] and (E_kl t1^m')[z2] commute, on |n|, |n'| <= window.

    ``other`` = (k, l, m') defaults to (i, j, m).  With other = (j, i, -m) the
    brackets are not all zero, which is the sanity direction.
    """
    if i == j:
        raise ValueError("need i != j")
    k, l, mm = other if other is not None else (i, j, m)
    alg = GlNCq(N, special=True, derivations=False)
    rep = report or VerificationReport("offdiag-commute")
    nonzero = 0
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            x = current_coefficient(N, i, j, m, a)
            y = current_coefficient(N, k, l, mm, b)
            br = alg.bracket(x, y)
            nonzero += bool(br)
            rep.check(not br, inputs=[alg.format(x), alg.format(y)], expected="0",
                      got=alg.format(br), kind="commute")
    rep.data.update({"N": N, "pair": [i, j, m], "other": [k, l, mm], "window": window,
                     "nonzero": nonzero})
    return rep.finish()
