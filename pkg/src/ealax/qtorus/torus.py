"""Monomials of the quantum torus C_q in normal order t0^m0 t1^m1.

Products follow the rule used by the matrix bracket below,
(t0^m0 t1^m1)(t0^n0 t1^n1) = q^(m1 n0) t0^(m0+n0) t1^(m1+n1).
"""

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class QtMonomial:
    m0: int = 0
    m1: int = 0

    def __mul__(self, other):
        """Return (q exponent, monomial) of the normalized product."""
        return self.m1 * other.m0, QtMonomial(self.m0 + other.m0, self.m1 + other.m1)

    def __neg__(self):
        return QtMonomial(-self.m0, -self.m1)

    def trace_pairing(self):
        """q exponent of the t^0 coefficient of self * self^-1 (the torus trace)."""
        return (self * -self)[0]

    def __str__(self):
        parts = []
        for name, e in (("t0", self.m0), ("t1", self.m1)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) or "1"


def qt_product(*monos):
    """Left-to-right product of monomials as (q exponent, monomial)."""
    e, out = 0, QtMonomial()
    for x in monos:
        de, out = out * x
        e += de
    return e, out


def associativity_check(bound=3, report=None):
    """(xy)z == x(yz) exactly on all monomials with |exponents| <= bound."""
    from ..verify import VerificationReport
    rep = report or VerificationReport("qtorus-associativity")
    rng = range(-bound, bound + 1)
    monos = [QtMonomial(a, b) for a in rng for b in rng]
    for x in monos:
        for y in monos:
            exy, xy = x * y
            for z in monos:
                e1, left = xy * z
                eyz, yz = y * z
                e2, right = x * yz
                rep.check(left == right and exy + e1 == eyz + e2, inputs=[str(x), str(y), str(z)],
                          expected="q^%d*%s" % (eyz + e2, right), got="q^%d*%s" % (exy + e1, left),
                          kind="associativity")
    return rep.finish()
