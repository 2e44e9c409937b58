"""Laurent polynomials in q (and an auxiliary parameter a) over Q(zeta_T).

A monomial q^e a^f is packed into a single integer ``e + f * MONO_BASE`` so
that multiplying monomials is integer addition and integer order is the lex
order on (f, e).  Exponents must stay below 2**62 in absolute value.
"""

import re
from fractions import Fraction

from .cyclotomic import Cyclotomic, normalize_coeff

MONO_BASE = 1 << 64
_HALF = 1 << 63
_LIMIT = 1 << 62


def mono(eq=0, ea=0):
    if abs(eq) >= _LIMIT or abs(ea) >= _LIMIT:
        raise OverflowError("monomial exponent out of supported range")
    return eq + ea * MONO_BASE


def mono_split(m):
    eq = ((m + _HALF) % MONO_BASE) - _HALF
    return eq, (m - eq) // MONO_BASE


def _is_coeff(x):
    return isinstance(x, (int, Fraction, Cyclotomic))


def format_rational_poly(terms, var):
    """Render [(coeff, exponent)] with rational coefficients, e.g. '1 - z'."""
    parts = []
    for c, k in terms:
        if c == 0:
            continue
        factors = [] if k == 0 else [_power(var, k)]
        parts.append(_signed_term(Fraction(c), factors))
    return _join(parts)


def _power(var, e):
    return var if e == 1 else "%s^%d" % (var, e)


def _rat_text(r):
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "(%d/%d)" % (r.numerator, r.denominator)


def _signed_term(c, factors):
    """Return (negative?, text) for coefficient c times the given factors."""
    neg = c < 0
    c = -c if neg else c
    if not factors:
        return neg, _rat_text(c)
    if c == 1:
        return neg, "*".join(factors)
    return neg, _rat_text(c) + "*" + "*".join(factors)


def _join(parts):
    if not parts:
        return "0"
    out = []
    for i, (neg, text) in enumerate(parts):
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


class Scalar:
    """Exact element of Q(zeta_T)[q^(+-1), a]; immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        # terms: mapping packed monomial -> nonzero normalized coefficient
        clean = {}
        if terms:
            for m, c in terms.items():
                c = normalize_coeff(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def of(cls, x):
        if isinstance(x, Scalar):
            return x
        if _is_coeff(x):
            return cls({0: x})
        raise TypeError("cannot interpret %r as a scalar" % (x,))

    @classmethod
    def q(cls, k=1):
        return cls({mono(k, 0): 1})

    @classmethod
    def a(cls, k=1):
        return cls({mono(0, k): 1})

    @classmethod
    def zeta(cls, T, k=1):
        return cls({0: Cyclotomic.zeta(T, k)})

    # -- queries -------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or list(self.terms) == [0]

    def constant(self):
        """The coefficient of the monomial 1."""
        return self.terms.get(0, 0)

    def as_coeff(self):
        """Return a plain coefficient if this scalar has no q/a dependence."""
        if not self.terms:
            return 0
        if list(self.terms) == [0]:
            return self.terms[0]
        return None

    def order(self):
        """Cyclotomic order used by the coefficients (1 when all rational)."""
        orders = {c.order for c in self.terms.values() if isinstance(c, Cyclotomic)}
        if len(orders) > 1:
            raise ValueError("mixed cyclotomic orders in one scalar")
        return orders.pop() if orders else 1

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not _is_coeff(other):
                return NotImplemented
            other = Scalar.of(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if not _is_coeff(other):
                return NotImplemented
            other = Scalar.of(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if not _is_coeff(other):
                return NotImplemented
            return Scalar({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (m, c), = self.terms.items()
            return Scalar({-m * (-n): Fraction(1) / c ** (-n) if not isinstance(c, Cyclotomic)
                           else c.inverse() ** (-n)})
        result = Scalar({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def _bounds(self):
        qs, as_ = [], []
        for m in self.terms:
            eq, ea = mono_split(m)
            qs.append(eq)
            as_.append(ea)
        return min(qs), max(qs), min(as_), max(as_)

    def exact_div(self, other):
        """Exact quotient self/other in the Laurent ring; ValueError if not exact."""
        other = Scalar.of(other)
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if not self:
            return Scalar()
        lm_b = max(other.terms)
        lc_b = other.terms[lm_b]
        inv_lc = lc_b.inverse() if isinstance(lc_b, Cyclotomic) else Fraction(1) / Fraction(lc_b)
        aq0, aq1, aa0, aa1 = self._bounds()
        bq0, bq1, ba0, ba1 = other._bounds()
        qlo, qhi = aq0 - bq0, aq1 - bq1
        alo, ahi = aa0 - ba0, aa1 - ba1
        rem = dict(self.terms)
        quot = {}
        while rem:
            lm = max(rem)
            t = lm - lm_b
            eq, ea = mono_split(t)
            if not (qlo <= eq <= qhi and alo <= ea <= ahi):
                raise ValueError("scalar division is not exact")
            c = normalize_coeff(rem[lm] * inv_lc)
            quot[t] = c
            for mb, cb in other.terms.items():
                k = t + mb
                v = normalize_coeff(rem.get(k, 0) - c * cb)
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Scalar(quot)

    def __truediv__(self, other):
        if _is_coeff(other):
            if isinstance(other, Cyclotomic):
                inv = other.inverse()
            else:
                inv = Fraction(1) / Fraction(other)
            return self * inv
        if isinstance(other, Scalar):
            return self.exact_div(other)
        return NotImplemented

    # -- comparison --------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.terms == other.terms
        if _is_coeff(other):
            return self.terms == Scalar.of(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return "Scalar(%s)" % self

    def __str__(self):
        rows = []
        for m, c in self.terms.items():
            eq, ea = mono_split(m)
            if isinstance(c, Cyclotomic):
                for k, r in enumerate(c.coeffs):
                    if r:
                        rows.append((k, eq, ea, r))
            else:
                rows.append((0, eq, ea, c))
        rows.sort(key=lambda r: (-r[0], r[2], r[1]))
        parts = []
        for k, eq, ea, r in rows:
            factors = []
            for var, e in (("z", k), ("q", eq), ("a", ea)):
                if e:
                    factors.append(_power(var, e))
            parts.append(_signed_term(Fraction(r), factors))
        return _join(parts)


_SCALAR_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\+)|(-)|(\*)|(/)|(\^)|(\d+)|([zqa]))")


def parse_scalar(text, order=1):
    """Parse the text form of a Scalar.

    ``z`` denotes the fixed primitive root of unity of the given order.
    Grammar: sums/differences of products of rationals, parenthesized groups
    and powers of z, q, a (integer, possibly negative, exponents).
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _SCALAR_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse scalar near %r" % text[pos:])
        pos = m.end()
        tokens.append(m.group(0).strip())
    parser = _ScalarParser(tokens, order)
    value = parser.expr()
    if parser.i != len(tokens):
        raise ValueError("trailing input in scalar %r" % text)
    return value


class _ScalarParser:
    def __init__(self, tokens, order):
        self.t = tokens
        self.i = 0
        self.order = order

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else None

    def take(self, tok=None):
        cur = self.peek()
        if cur is None or (tok is not None and cur != tok):
            raise ValueError("expected %r in scalar expression" % (tok,))
        self.i += 1
        return cur

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term() * sign
        while self.peek() in ("+", "-"):
            s = -1 if self.take() == "-" else 1
            value = value + self.term() * s
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                value = value / rhs
        return value

    def _exponent(self):
        if self.peek() != "^":
            return 1
        self.take("^")
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        return sign * int(self.take())

    def factor(self):
        tok = self.peek()
        if tok == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        if tok == "-":
            self.take()
            return -self.factor()
        if tok is not None and tok.isdigit():
            self.take()
            return Scalar.of(int(tok))
        if tok in ("z", "q", "a"):
            self.take()
            k = self._exponent()
            if tok == "z":
                if self.order <= 2:
                    return Scalar.of((-1) ** (k % 2) if self.order == 2 else 1)
                return Scalar.zeta(self.order, k)
            if tok == "q":
                return Scalar.q(k)
            return Scalar.a(k)
        raise ValueError("unexpected token %r in scalar expression" % (tok,))
