"""Exact arithmetic in the cyclotomic fields Q(zeta_T).

An element is stored as its coefficient vector in the power basis
1, zeta, ..., zeta^(phi(T)-1), reduced modulo the cyclotomic polynomial.
Only orders T <= 12 are supported; mixing two different orders is an error.
"""

from fractions import Fraction
from functools import lru_cache

MAX_ORDER = 12


def _poly_divmod(num, den):
    """Long division of integer-coefficient polynomials (lists, low degree first).

    `den` must be monic.
    """
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    dl = len(den) - 1
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i]
        if c:
            q[i - dl] = c
            for j, d in enumerate(den):
                num[i - dl + j] -= c * d
    rem = num[:dl] if dl else []
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first, by recursive division."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError("non-exact division computing Phi_%d" % n)
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(T):
    """zeta^k reduced mod Phi_T for k = 0..T-1, as tuples of ints."""
    phi = cyclotomic_polynomial(T)
    deg = len(phi) - 1
    table = []
    vec = [1] + [0] * (deg - 1)
    for _ in range(T):
        table.append(tuple(vec))
        # multiply by zeta: shift and reduce the overflowing coefficient
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(deg):
                vec[j] -= top * phi[j]
    return tuple(table)


def euler_phi(T):
    return len(cyclotomic_polynomial(T)) - 1


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Cyclotomic:
    """An element of Q(zeta_T)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError("cyclotomic order %r outside 1..%d" % (order, MAX_ORDER))
        deg = euler_phi(order)
        coeffs = tuple(_clean(Fraction(c)) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError("expected %d coefficients for order %d, got %d"
                             % (deg, order, len(coeffs)))
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, order, r):
        deg = euler_phi(order)
        return cls._raw(order, (_clean(Fraction(r)),) + (0,) * (deg - 1))

    @classmethod
    def zeta(cls, order, k=1):
        """zeta_T^k for any integer k."""
        return cls._raw(order, _power_table(order)[k % order])

    # -- queries ---------------------------------------------------------
    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_part(self):
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError("cannot combine cyclotomic orders %d and %d"
                                 % (self.order, other.order))
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic._raw(self.order, tuple(_clean(a + b) for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic._raw(self.order, tuple(_clean(a - b) for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.order, tuple(_clean(a * other) for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        deg = len(self.coeffs)
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        table = _power_table(self.order)
        out = prod[:deg]
        for k in range(deg, len(prod)):
            c = prod[k]
            if c:
                for j, t in enumerate(table[k % self.order]):
                    if t:
                        out[j] += c * t
        return Cyclotomic._raw(self.order, tuple(_clean(c) for c in out))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse, by solving the multiplication-matrix system."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        deg = len(self.coeffs)
        basis = [Cyclotomic._raw(self.order, _power_table(self.order)[j]) for j in range(deg)]
        cols = [(self * b).coeffs for b in basis]
        # augmented matrix rows: M x = e0 where M[:, j] = self * zeta^j
        rows = [[Fraction(cols[j][i]) for j in range(deg)] + [Fraction(int(i == 0))]
                for i in range(deg)]
        for c in range(deg):
            piv = next(r for r in range(c, deg) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            p = rows[c][c]
            rows[c] = [v / p for v in rows[c]]
            for r in range(deg):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return Cyclotomic._raw(self.order, tuple(_clean(rows[i][deg]) for i in range(deg)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.order,
                                   tuple(_clean(Fraction(a) / other) for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.from_rational(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self):
        return "Cyclotomic(%d, %r)" % (self.order, self.coeffs)

    def __str__(self):
        from .scalar import format_rational_poly
        return format_rational_poly([(c, k) for k, c in enumerate(self.coeffs)], "z")


def cyclotomic_arith(a, b, op):
    """Add or multiply two elements of the same cyclotomic field."""
    if not isinstance(a, Cyclotomic) or not isinstance(b, Cyclotomic):
        raise TypeError("both operands must be Cyclotomic")
    if a.order != b.order:
        raise ValueError("cannot combine cyclotomic orders %d and %d" % (a.order, b.order))
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError("unknown operation %r" % (op,))


def root_of_unity_sum(T, m):
    """sum_{p=0}^{T-1} zeta_T^(m p) as an element of Q(zeta_T)."""
    if T < 1:
        raise ValueError("T must be positive")
    total = Cyclotomic.from_rational(T, 0)
    for p in range(T):
        total = total + Cyclotomic.zeta(T, m * p)
    return total


def normalize_coeff(c):
    """Canonical coefficient: Cyclotomic values with no irrational part become rationals."""
    if isinstance(c, Cyclotomic):
        if c.is_rational():
            return c.coeffs[0]
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def omega_power(T, k):
    """zeta_T^k, returned as a plain integer when T <= 2."""
    if T == 1:
        return 1
    if T == 2:
        return -1 if k % 2 else 1
    return Cyclotomic.zeta(T, k)
