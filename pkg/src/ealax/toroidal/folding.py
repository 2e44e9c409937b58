"""Folded Cartan data of a diagram automorphism mu of X_l^(1) and the nonisotropic twisted roots.

An affine weight is stored as (fin, n): fin holds rational coordinates over
the simple roots of the finite algebra and n is the coefficient of delta_1.
Projections average over the mu-orbit, so both parts may be fractional.
"""

from collections import namedtuple
from fractions import Fraction

from ..kacmoody.affine import AffineAlgebra
from ..kacmoody.diagram import _check_perm, _perm_order
from ..kacmoody.simple import SimpleLieAlgebra

TwistedRoot = namedtuple("TwistedRoot", ["fin", "n", "m"])
TwistedRoot.__doc__ = "fin + n*delta_1 + m*delta_0 (fin over the finite simple roots)."


class TransitiveAutomorphism(ValueError):
    """A transitive mu has no nonisotropic twisted roots and no folded matrix."""


def _orbits(perm):
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen:
            continue
        orb = [i]
        j = perm[i]
        while j != i:
            orb.append(j)
            j = perm[j]
        seen.update(orb)
        out.append(sorted(orb))
    return out


def determinant(M):
    """Exact determinant by fraction Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                for k in range(c, n):
                    A[r][k] -= f * A[c][k]
    return det


def is_affine_gcm(A):
    """Integer entries, diagonal 2, off-diagonal <= 0 with symmetric zero pattern,
    indecomposable, det 0 and every proper principal minor positive."""
    n = len(A)
    for i in range(n):
        for j in range(n):
            v = Fraction(A[i][j])
            if v.denominator != 1:
                return False
            if i == j and v != 2:
                return False
            if i != j and (v > 0 or (v == 0) != (A[j][i] == 0)):
                return False
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if A[i][j] and j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        return False
    if determinant(A) != 0:
        return False
    for mask in range(1, (1 << n) - 1):
        idx = [i for i in range(n) if mask >> i & 1]
        if determinant([[A[i][j] for j in idx] for i in idx]) <= 0:
            return False
    return True


class FoldedDatum:
    def __init__(self, g, perm):
        if not isinstance(g, SimpleLieAlgebra):
            g = SimpleLieAlgebra(*g)
        self.g = g
        self.aff = AffineAlgebra(g)
        A = self.aff.cartan()
        perm = list(perm)
        _check_perm(perm, A)
        self.perm = perm
        self.A = A
        self.T = _perm_order(perm)
        self.orbits = _orbits(perm)
        if len(self.orbits) == 1 and len(perm) > 1:
            raise TransitiveAutomorphism(
                "mu is transitive: every alpha_i projects to delta_1, so there are no "
                "nonisotropic twisted roots")
        self.reps = [o[0] for o in self.orbits]
        self.orbit_of = {i: o for o in self.orbits for i in o}
        self.Ti = {i: self.T // len(self.orbit_of[i]) for i in range(len(perm))}
        self.si = {i: self._s(i) for i in range(len(perm))}
        self.alpha_check = {i: self.project(self.affine_simple(i)) for i in self.reps}
        self.A_check = [[self._cartan_entry(i, j) for j in self.reps] for i in self.reps]
        if not is_affine_gcm(self.A_check):
            raise ArithmeticError("folded matrix %r is not an affine GCM" % (self.A_check,))

    # -- orbit data --------------------------------------------------------------
    def _s(self, i):
        orb = self.orbit_of[i]
        A = self.A
        if all(A[p][q] == 0 for p in orb for q in orb if p != q):
            return 1
        j = self.perm[i]
        if len(orb) == 2 and A[i][j] == -1 == A[j][i]:
            return 2
        raise ArithmeticError("orbit %r satisfies neither alternative" % (orb,))

    def p_poly(self, i):
        """Coefficient list of p_i(z) = (1 - z^{s_i T_i}) / (1 - z^{T_i})."""
        Ti, si = self.Ti[i], self.si[i]
        coeffs = [0] * ((si - 1) * Ti + 1)
        for k in range(si):
            coeffs[k * Ti] = 1
        return coeffs

    def p_text(self, i):
        parts = []
        for k, c in enumerate(self.p_poly(i)):
            if c:
                parts.append("1" if k == 0 else ("z" if k == 1 else "z^%d" % k))
        return " + ".join(parts)

    # -- weights -------------------------------------------------------------------
    def affine_simple(self, i):
        fin, n = self.aff.simple_affine_root(i)
        return tuple(Fraction(c) for c in fin), Fraction(n)

    def project(self, wt):
        """pi_mu: average of mu^p over one period."""
        return project_weight(self.aff, self.perm, wt)

    def inner(self, a, b):
        ip = self.g.rs.inner
        return Fraction(ip(a[0], b[0])) if any(a[0]) and any(b[0]) else Fraction(0)

    def _cartan_entry(self, i, j):
        ai, aj = self.alpha_check[i], self.alpha_check[j]
        v = 2 * self.inner(ai, aj) / self.inner(ai, ai)
        if v.denominator != 1:
            raise ArithmeticError("non-integral folded Cartan entry")
        return int(v)

    def reflect(self, j, wt):
        aj = self.alpha_check[j]
        c = 2 * self.inner(wt, aj) / self.inner(aj, aj)
        if not c:
            return wt
        return (tuple(x - c * y for x, y in zip(wt[0], aj[0])), wt[1] - c * aj[1])

    def to_json(self):
        return {
            "perm": self.perm,
            "T": self.T,
            "orbits": self.orbits,
            "reps": self.reps,
            "T_i": [self.Ti[i] for i in self.reps],
            "s_i": [self.si[i] for i in self.reps],
            "p_i": [self.p_text(i) for i in self.reps],
            "A_check": self.A_check,
            "alpha_check": {str(i): {"fin": [str(c) for c in self.alpha_check[i][0]],
                                     "delta1": str(self.alpha_check[i][1])} for i in self.reps},
        }


def project_weight(aff, perm, wt):
    """pi_mu(fin + n delta_1): expand in affine simple roots, average each over its orbit."""
    fin, n = wt
    g = aff.g
    orbit_of = {i: o for o in _orbits(perm) for i in o}
    coeffs = {0: n}  # alpha_0 = delta_1 - theta
    for j in range(g.rank):
        coeffs[j + 1] = fin[j] + n * g.rs.theta[j]
    out_fin = [Fraction(0)] * g.rank
    out_n = Fraction(0)
    for i, c in coeffs.items():
        if not c:
            continue
        orb = orbit_of[i]
        w = Fraction(c) / len(orb)
        for p in orb:
            pf, pn = aff.simple_affine_root(p)
            for k in range(g.rank):
                out_fin[k] += w * pf[k]
            out_n += w * pn
    return tuple(out_fin), out_n


def folded_datum(g, perm):
    return FoldedDatum(g, perm)


def weyl_orbit(fd, weights, weyl_len):
    """All w(x) for x in weights and Weyl words of length <= weyl_len (breadth first)."""
    seen = set(weights)
    frontier = list(weights)
    for _ in range(weyl_len):
        nxt = []
        for wt in frontier:
            for j in fd.reps:
                r = fd.reflect(j, wt)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
        if not frontier:
            break
    return seen


def twisted_roots(fd, weyl_len, m_bound):
    """The two families of nonisotropic twisted roots over bounded words and |m| <= m_bound.

    Words act on +-alpha_i: since -w(alpha_i) = w r_i(alpha_i), this only fixes the
    sign asymmetry of a plain length bound and keeps the output negation-closed.
    """
    out = set()
    for i in fd.reps:
        Ti, si = fd.Ti[i], fd.si[i]
        fin0, n0 = fd.alpha_check[i]
        seeds = [(fin0, n0), (tuple(-c for c in fin0), -n0)]
        for fin, n in weyl_orbit(fd, seeds, weyl_len):
            for m in range(-m_bound, m_bound + 1):
                out.add(TwistedRoot(fin, n, Ti * m))
                if si == 2:
                    shift = Fraction(fd.T, 2) + m * fd.T
                    if shift.denominator != 1:
                        raise ArithmeticError("odd order with s_i = 2")
                    out.add(TwistedRoot(tuple(2 * c for c in fin), 2 * n, int(shift)))
    return out


def root_to_json(r):
    return {"fin": [str(c) for c in r.fin], "n": str(r.n), "m": r.m}
