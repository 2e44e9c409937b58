"""Simple Lie algebras in a Chevalley basis.

Basis keys: ('x', root) for root vectors and ('h', i) for simple coroots,
i in 1..rank.  Structure constants follow the extraspecial-pair method: the
pair (alpha, beta) with alpha minimal among decompositions of each positive
non-simple root gets N = +(p+1); every other constant is forced by the
standard quadratic relations between Chevalley constants.
"""

import re
from fractions import Fraction

from ..algebra import Algebra
from ..exactcore import LieElement
from .rootsystem import build_root_system


def _as_int(v):
    v = Fraction(v)
    if v.denominator != 1:
        raise ArithmeticError("non-integral structure constant %s" % v)
    return v.numerator


class ChevalleyData:
    def __init__(self, rs):
        self.rs = rs
        order = {r: i for i, r in enumerate(rs.positive)}
        self._order = order
        self.N = {}
        self.extraspecial = {}
        for xi in rs.positive:
            if sum(xi) == 1:
                continue
            pairs = []
            for a in rs.positive:
                b = rs.add(xi, rs.neg(a))
                if b in rs.positive_set and order[a] < order[b]:
                    pairs.append((a, b))
            pairs.sort(key=lambda ab: order[ab[0]])
            a0, b0 = pairs[0]
            self.extraspecial[xi] = (a0, b0)
            self.N[(a0, b0)] = self._p(a0, b0) + 1
            self.N[(b0, a0)] = -(self._p(a0, b0) + 1)
            for a, b in pairs[1:]:
                val = self._special(a, b, a0, b0, xi)
                self.N[(a, b)] = val
                self.N[(b, a)] = -val

    def _p(self, a, b):
        """Largest p with b - p*a a root."""
        rs = self.rs
        p = 0
        cur = b
        while True:
            cur = rs.add(cur, rs.neg(a))
            if cur in rs.root_set:
                p += 1
            else:
                return p

    def _special(self, a, b, a0, b0, xi):
        rs = self.rs
        ip = rs.inner
        total = Fraction(0)
        # relation over the quadruple a + b + (-a0) + (-b0) = 0
        s1 = rs.add(b, rs.neg(a0))
        if s1 in rs.root_set:
            total += Fraction(self.const(b, rs.neg(a0)) * self.const(a, rs.neg(b0)), ip(s1, s1))
        s2 = rs.add(a, rs.neg(a0))
        if s2 in rs.root_set:
            total += Fraction(self.const(rs.neg(a0), a) * self.const(b, rs.neg(b0)), ip(s2, s2))
        return _as_int(ip(xi, xi) / Fraction(self.N[(a0, b0)]) * total)

    def const(self, a, b):
        """N_{a,b} for roots a, b with a + b a root (0 otherwise)."""
        rs = self.rs
        s = rs.add(a, b)
        if s not in rs.root_set:
            return 0
        pa = a in rs.positive_set
        pb = b in rs.positive_set
        if pa and pb:
            return self.N[(a, b)]
        if not pa and not pb:
            return -self.N[(rs.neg(a), rs.neg(b))]
        # mixed signs: rotate within the zero-sum triple (a, b, c), c = -(a+b)
        c = rs.neg(s)
        pc = c in rs.positive_set
        ip = rs.inner
        if pc == pb:
            # N_{a,b}/(c,c) = N_{b,c}/(a,a)
            return _as_int(ip(c, c) / ip(a, a) * self.const(b, c))
        # N_{a,b}/(c,c) = N_{c,a}/(b,b)
        return _as_int(ip(c, c) / ip(b, b) * self.const(c, a))


class SimpleLieAlgebra(Algebra):
    """The finite-dimensional simple Lie algebra of a given type."""

    def __init__(self, typ, rank):
        super().__init__()
        self.rs = build_root_system(typ, rank)
        self.chev = ChevalleyData(self.rs)
        self.rank = rank
        self.name = self.rs.name
        self._bracket_cache = {}
        self.basis_keys = ([("x", r) for r in self.rs.positive]
                           + [("x", self.rs.neg(r)) for r in self.rs.positive]
                           + [("h", i) for i in range(1, rank + 1)])

    # -- data ------------------------------------------------------------------
    def basis(self):
        return list(self.basis_keys)

    def weight(self, key):
        """Root of a basis key (zero tuple for Cartan keys)."""
        if key[0] == "x":
            return key[1]
        return (0,) * self.rank

    def coroot_coords(self, root):
        """alpha^vee in the basis h_1..h_l: coefficient c_j (a_j,a_j)/(a,a)."""
        rs = self.rs
        aa = rs.inner(root, root)
        return {j + 1: Fraction(root[j]) * rs.gram[j][j] / aa for j in range(self.rank) if root[j]}

    def root_on_h(self, root, i):
        """root(h_i)."""
        return self.rs.pairing(root, i - 1)

    # -- bracket and form --------------------------------------------------------
    def is_key(self, key):
        if not isinstance(key, tuple) or len(key) != 2:
            return False
        if key[0] == "x":
            return len(key) == 2 and key[1] in self.rs.root_set
        return key[0] == "h" and len(key) == 2 and 1 <= key[1] <= self.rank

    def _bracket_keys(self, a, b):
        return {(k, 0): c for k, c in self.lie(a, b).items()}

    def lie(self, a, b):
        """[a, b] as a dict key -> rational coefficient."""
        ck = (a, b)
        hit = self._bracket_cache.get(ck)
        if hit is not None:
            return hit
        res = self._bracket(a, b)
        self._bracket_cache[ck] = res
        return res

    def _bracket(self, a, b):
        if a[0] == "h" and b[0] == "h":
            return {}
        if a[0] == "h":
            c = self.root_on_h(b[1], a[1])
            return {b: c} if c else {}
        if b[0] == "h":
            c = self.root_on_h(a[1], b[1])
            return {a: -c} if c else {}
        ra, rb = a[1], b[1]
        s = self.rs.add(ra, rb)
        if not any(s):
            return {("h", j): c for j, c in self.coroot_coords(ra).items()}
        if s in self.rs.root_set:
            return {("x", s): self.chev.const(ra, rb)}
        return {}

    def form_keys(self, a, b):
        return self.kform(a, b)

    def kform(self, a, b):
        """Normalized invariant form on basis keys."""
        if a[0] == "x" and b[0] == "x":
            if not any(self.rs.add(a[1], b[1])):
                return Fraction(2) / self.rs.inner(a[1], a[1])
            return 0
        if a[0] == "h" and b[0] == "h":
            i, j = a[1] - 1, b[1] - 1
            g = self.rs.gram
            return 4 * g[i][j] / (g[i][i] * g[j][j])
        return 0

    def coroot_element(self, root):
        return LieElement.from_entries({("h", j): c for j, c in self.coroot_coords(root).items()})

    # -- text --------------------------------------------------------------------
    def format_key(self, key):
        if self.rs.rank == 1 and self.rs.type == "A":
            if key == ("x", (1,)):
                return "e"
            if key == ("x", (-1,)):
                return "f"
            if key == ("h", 1):
                return "h"
        if key[0] == "x":
            return "x(%s)" % ",".join(str(c) for c in key[1])
        return "h(%d)" % key[1]

    _KEY = re.compile(r"^\s*(x|h)\(([-\d,\s]+)\)\s*$")

    def parse_key(self, text):
        t = text.strip()
        if self.rank == 1 and self.rs.type == "A" and t in ("e", "f", "h"):
            return {"e": ("x", (1,)), "f": ("x", (-1,)), "h": ("h", 1)}[t]
        m = self._KEY.match(t)
        if not m:
            raise ValueError("cannot parse %s element %r" % (self.name, text))
        nums = tuple(int(v) for v in m.group(2).split(","))
        if m.group(1) == "h":
            if len(nums) != 1 or not 1 <= nums[0] <= self.rank:
                raise ValueError("coroot index out of range in %r" % text)
            return ("h", nums[0])
        if nums not in self.rs.root_set:
            raise ValueError("%r is not a root of %s" % (nums, self.name))
        return ("x", nums)


def chevalley_constants(rs_or_type, rank=None):
    """Chevalley data for a root system (or a type/rank pair)."""
    if rank is not None:
        rs_or_type = build_root_system(rs_or_type, rank)
    return ChevalleyData(rs_or_type)
