"""sl_inf, the shift sigma_N, its Z-grading and the derivation P, the affine algebra
L^(sl_inf), and the covariant algebra L^(sl_inf, G_N) for G_N = <sigma_N>.

sl_inf keys: ('E', r, s) with r != s, and ('H', r) = E_{r,r} - E_{r+1,r+1}.
L^(sl_inf) keys: ('t', a, x) for t^a (x) x, and ('k',).
Covariant keys: ('c', a, x) for the class of t^a (x) x with x canonical (the
column of E_{r,s}, the row of H_r, in 1..N), ('kbar',), and the derivations
('d',) (t d/dt) and ('p',) (the lift of P).
"""

import re

from ..algebra import Algebra
from ..exactcore import LieElement, mono
from ..verify import VerificationReport

LK = ("k",)
KBAR_Q = ("kbar",)
DT = ("d",)
PD = ("p",)


def block(r, N):
    """r = block*N + i with 1 <= i <= N."""
    return (r - 1) // N


def _is_x(x):
    if not isinstance(x, tuple) or not x:
        return False
    if x[0] == "E":
        return len(x) == 3 and isinstance(x[1], int) and isinstance(x[2], int) and x[1] != x[2]
    return x[0] == "H" and len(x) == 2 and isinstance(x[1], int)


def _diag_to_h(r, s):
    """E_{r,r} - E_{s,s} as {('H', k): c}."""
    if r == s:
        return {}
    if r < s:
        return {("H", k): 1 for k in range(r, s)}
    return {("H", k): -1 for k in range(s, r)}


def slinf_lie(x, y):
    """[x, y] in sl_inf on basis keys, as {key: coeff}."""
    out = {}

    def add(k, c):
        out[k] = out.get(k, 0) + c
        if not out[k]:
            del out[k]

    if x[0] == "H" and y[0] == "H":
        return out
    if x[0] == "H" or y[0] == "H":
        sign = 1
        if y[0] == "H":
            x, y, sign = y, x, -1
        k = x[1]
        _, r, s = y
        c = (r == k) - (r == k + 1) - (s == k) + (s == k + 1)
        if c:
            add(y, sign * c)
        return out
    _, r, s = x
    _, u, v = y
    if s == u and r == v:
        for k, c in _diag_to_h(r, s).items():
            add(k, c)
        return out
    if s == u:
        add(("E", r, v), 1)
    if v == r:
        add(("E", u, s), -1)
    return out


def slinf_form(x, y):
    """<E_ij, E_kl> = delta_jk delta_il restricted to sl_inf."""
    if x[0] == "E" and y[0] == "E":
        return int(x[1] == y[2] and x[2] == y[1])
    if x[0] == "H" and y[0] == "H":
        d = abs(x[1] - y[1])
        return 2 if d == 0 else (-1 if d == 1 else 0)
    return 0


def sigma_apply(n, x, N):
    """sigma_N^n on a basis key (E_{r,s} -> E_{r+nN, s+nN})."""
    if x[0] == "E":
        return ("E", x[1] + n * N, x[2] + n * N)
    return ("H", x[1] + n * N)


def grading_deg(x, N):
    """deg E_{mN+i, nN+j} = n - m; H has degree 0."""
    if x[0] == "H":
        return 0
    return block(x[2], N) - block(x[1], N)


def _indices(x):
    return (x[1], x[2]) if x[0] == "E" else (x[1], x[1] + 1)


def format_x(x):
    if x[0] == "E":
        return "E_{%d,%d}" % (x[1], x[2])
    return "H_{%d}" % x[1]


def parse_x(text):
    t = text.replace(" ", "")
    m = re.fullmatch(r"E_\{?(-?\d+),(-?\d+)\}?", t)
    if m:
        r, s = int(m.group(1)), int(m.group(2))
        if r == s:
            raise ValueError("diagonal units are not in sl_inf; use H_{r}")
        return ("E", r, s)
    m = re.fullmatch(r"H_\{?(-?\d+)\}?", t)
    if m:
        return ("H", int(m.group(1)))
    raise ValueError("cannot parse %r as an sl_inf basis element" % text)


def _split_t(text):
    """'t^a*x' -> (a, x text)."""
    t = text.replace(" ", "")
    m = re.match(r"t(?:\^(-?\d+))?\*", t)
    if m:
        return (int(m.group(1)) if m.group(1) else 1), t[m.end():]
    return 0, t


def _fmt_t(a, body):
    if a == 0:
        return body
    return ("t*" if a == 1 else "t^%d*" % a) + body


class SlInfAffine(Algebra):
    """L^(sl_inf) = C[t, t^-1] (x) sl_inf + C k, central term a <x,y> delta_{a+b,0} k."""

    name = "L^(sl_inf)"

    def __init__(self, N=None):
        super().__init__()
        self.N = N

    def is_key(self, key):
        if key == LK:
            return True
        return (isinstance(key, tuple) and len(key) == 3 and key[0] == "t"
                and isinstance(key[1], int) and _is_x(key[2]))

    def _bracket_keys(self, a, b):
        if a == LK or b == LK:
            return {}
        out = {(("t", a[1] + b[1], k), 0): c for k, c in slinf_lie(a[2], b[2]).items()}
        if a[1] + b[1] == 0 and a[1]:
            f = slinf_form(a[2], b[2])
            if f:
                out[(LK, 0)] = a[1] * f
        return out

    def form_keys(self, a, b):
        if a == LK or b == LK:
            return 0
        return slinf_form(a[2], b[2]) if a[1] + b[1] == 0 else 0

    def spanning_keys(self, window, index_window=None):
        iw = index_window if index_window is not None else window
        xs = [("E", r, s) for r in range(-iw, iw + 1) for s in range(-iw, iw + 1) if r != s]
        xs += [("H", r) for r in range(-iw, iw)]
        return [("t", a, x) for a in range(-window, window + 1) for x in xs] + [LK]

    def format_key(self, key):
        if key == LK:
            return "k"
        return _fmt_t(key[1], format_x(key[2]))

    def parse_key(self, text):
        if text.strip() == "k":
            return LK
        a, rest = _split_t(text)
        return ("t", a, parse_x(rest))


def sigma_affine(n, x, N):
    """sigma_N^n on L^(sl_inf) elements (acting on the sl_inf factor)."""
    return x.map_keys(lambda k: LieElement.basis(k if k == LK else ("t", k[1], sigma_apply(n, k[2], N))))


def p_derivation(x, N):
    """P(t^n (x) a) = t^n (x) deg(a) a, P(k) = 0."""
    out = {}
    for (k, mo), c in x.data.items():
        if k == LK:
            continue
        d = grading_deg(k[2], N)
        if d:
            out[(k, mo)] = c * d
    return LieElement(out)


def covariant_normalize(a, x, N, chi_sign=1):
    """(q exponent e, canonical x0) with class(t^a (x) x) = q^e class(t^a (x) x0).

    The relation is chi(sigma^n)^a class(t^a (x) sigma^n x) = class(t^a (x) x)
    with chi(sigma) = q^chi_sign.
    """
    n = block(x[2] if x[0] == "E" else x[1], N)
    return -chi_sign * a * n, sigma_apply(-n, x, N)


class CovariantSlInf(Algebra):
    """L^(sl_inf, G_N) with chi(sigma_N) = q (chi_sign = 1), plus the derivations d and p.

    [cl(t^a x), cl(t^b y)] = sum_n q^(n a) (cl(t^(a+b) [sigma^n x, y]) + a delta_{a+b,0} <sigma^n x, y> kbar)
    The sum runs over the n for which sigma^n x and y share an index.
    """

    def __init__(self, N, chi_sign=1, derivations=True):
        super().__init__()
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.chi_sign = chi_sign
        self.derivations = derivations
        self.name = "L^(sl_inf, G_%d)" % N

    def is_canonical_x(self, x):
        if not _is_x(x):
            return False
        r = x[2] if x[0] == "E" else x[1]
        return 1 <= r <= self.N

    def is_key(self, key):
        if key == KBAR_Q:
            return True
        if key in (DT, PD):
            return self.derivations
        return (isinstance(key, tuple) and len(key) == 3 and key[0] == "c"
                and isinstance(key[1], int) and self.is_canonical_x(key[2]))

    def cls(self, a, x):
        """The class of t^a (x) x for any sl_inf basis key x, in canonical form."""
        e, x0 = covariant_normalize(a, x, self.N, self.chi_sign)
        return LieElement({(("c", a, x0), mono(e)): 1})

    def support(self, x, y):
        N = self.N
        ns = set()
        for i in _indices(x):
            for j in _indices(y):
                if (j - i) % N == 0:
                    ns.add((j - i) // N)
        return sorted(ns)

    def _bracket_keys(self, ka, kb):
        if KBAR_Q in (ka, kb):
            return {}
        if ka in (DT, PD) or kb in (DT, PD):
            if ka in (DT, PD) and kb in (DT, PD):
                return {}
            sign = 1
            if kb in (DT, PD):
                ka, kb, sign = kb, ka, -1
            w = kb[1] if ka == DT else grading_deg(kb[2], self.N)
            return {(kb, 0): sign * w} if w else {}
        a, x = ka[1], ka[2]
        b, y = kb[1], kb[2]
        out = {}
        for n in self.support(x, y):
            w = self.chi_sign * n * a
            sx = sigma_apply(n, x, self.N)
            for k, c in slinf_lie(sx, y).items():
                e, k0 = covariant_normalize(a + b, k, self.N, self.chi_sign)
                kk = (("c", a + b, k0), mono(w + e))
                out[kk] = out.get(kk, 0) + c
            if a + b == 0 and a:
                f = slinf_form(sx, y)
                if f:
                    out[(KBAR_Q, mono(w))] = out.get((KBAR_Q, mono(w)), 0) + a * f
        return out

    def spanning_keys(self, window, row_window=None):
        """Canonical keys with |a| <= window and row block |m| <= row_window (default window)."""
        N = self.N
        rw = window if row_window is None else row_window
        xs = []
        for j in range(1, N + 1):
            for m in range(-rw, rw + 1):
                for i in range(1, N + 1):
                    r = m * N + i
                    if r != j:
                        xs.append(("E", r, j))
        xs += [("H", k) for k in range(1, N + 1)]
        keys = [("c", a, x) for a in range(-window, window + 1) for x in xs] + [KBAR_Q]
        if self.derivations:
            keys += [DT, PD]
        return keys

    def format_key(self, key):
        if key == KBAR_Q:
            return "kbar"
        if key in (DT, PD):
            return key[0]
        return "cl(%s)" % _fmt_t(key[1], format_x(key[2]))

    def parse_key(self, text):
        t = text.replace(" ", "")
        if t == "kbar":
            return KBAR_Q
        if t in ("d", "p"):
            return (t,)
        m = re.fullmatch(r"cl\((.*)\)", t)
        if m:
            t = m.group(1)
        a, rest = _split_t(t)
        return self.cls(a, parse_x(rest))


def covariant_bracket_L(alg, x, y):
    return alg.bracket(x, y)


def slinf_checks(N, window=2, index_window=None, count=500, seed=0, report=None):
    """sigma_N preserves bracket and form on L^(sl_inf); P is a derivation with <Pa,b> + <a,Pb> = 0."""
    from ..verify import form_preserved_check, homomorphism_check, sample_pairs
    rep = report or VerificationReport("slinf-sigma-P")
    alg = SlInfAffine(N)
    keys = alg.spanning_keys(window, index_window)
    for n in (1, -1, 2):
        homomorphism_check(alg, lambda v, n=n: sigma_affine(n, v, N), keys, count, seed, rep,
                           name="sigma^%d-bracket" % n)
        form_preserved_check(alg, lambda v, n=n: sigma_affine(n, v, N), keys, rep, name="sigma^%d-form" % n)
    for a, b in sample_pairs(keys, count, seed):
        x, y = LieElement.basis(a), LieElement.basis(b)
        lhs = p_derivation(alg.bracket(x, y), N)
        rhs = alg.bracket(p_derivation(x, N), y) + alg.bracket(x, p_derivation(y, N))
        rep.check(lhs == rhs, inputs=[alg.format_key(a), alg.format_key(b)], expected=alg.format(rhs),
                  got=alg.format(lhs), kind="P-derivation")
        f = alg.form(p_derivation(x, N), y) + alg.form(x, p_derivation(y, N))
        rep.check(not f, inputs=[alg.format_key(a), alg.format_key(b)], expected="0", got=str(f),
                  kind="P-skew")
    return rep.finish()
