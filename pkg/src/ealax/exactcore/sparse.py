"""Sparse exact vectors indexed by basis keys.

Storage is flattened: a dict from ``(key, mono)`` to a nonzero coefficient,
where ``mono`` is a packed q/a monomial (see ``scalar.mono``).  The Scalar
coefficient of a key is reassembled on demand.  Keeping the flat form makes
bracket expansion a plain dict accumulation, which dominates every sweep.
"""

from fractions import Fraction

from .cyclotomic import Cyclotomic, normalize_coeff
from .scalar import Scalar, _is_coeff


def key_sort(key):
    """Total order on heterogeneous key tuples (ints before strings before tuples)."""
    if isinstance(key, tuple):
        return (2, tuple(key_sort(k) for k in key))
    if isinstance(key, str):
        return (1, key)
    return (0, key)


class LieElement:
    """Finite linear combination of basis keys with Scalar coefficients."""

    __slots__ = ("data", "_hash")

    def __init__(self, data=None, _clean=False):
        if _clean:
            self.data = data
        else:
            out = {}
            if data:
                for k, c in data.items():
                    c = normalize_coeff(c)
                    if c:
                        out[k] = c
            self.data = out
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls):
        return cls({}, _clean=True)

    @classmethod
    def basis(cls, key, coeff=1):
        return cls.from_entries({key: coeff})

    @classmethod
    def from_entries(cls, entries):
        """Build from a mapping key -> Scalar (or plain coefficient)."""
        data = {}
        for key, s in entries.items():
            if isinstance(s, Scalar):
                for m, c in s.terms.items():
                    data[(key, m)] = c
            elif s:
                data[(key, 0)] = s
        return cls(data)

    # -- views ---------------------------------------------------------------
    def __bool__(self):
        return bool(self.data)

    def entries(self):
        """Mapping key -> Scalar."""
        grouped = {}
        for (key, m), c in self.data.items():
            grouped.setdefault(key, {})[m] = c
        return {k: Scalar(v) for k, v in grouped.items()}

    def terms(self):
        """Sorted list of (key, Scalar) in canonical key order."""
        ent = self.entries()
        return [(k, ent[k]) for k in sorted(ent, key=key_sort)]

    def keys(self):
        return {k for k, _ in self.data}

    def coefficient(self, key):
        return Scalar({m: c for (k, m), c in self.data.items() if k == key})

    def is_rational(self):
        """True when no coefficient involves q, a or a root of unity."""
        return all(m == 0 and not isinstance(c, Cyclotomic) for (_, m), c in self.data.items())

    # -- linear structure ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return vec_combine(self, other, 1)

    def __sub__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return vec_combine(self, other, -1)

    def __neg__(self):
        return LieElement({k: -c for k, c in self.data.items()}, _clean=True)

    def __mul__(self, c):
        return scale(self, c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Cyclotomic):
            return scale(self, c.inverse())
        if isinstance(c, (int, Fraction)):
            return scale(self, Fraction(1) / Fraction(c))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, LieElement):
            return self.data == other.data
        if other == 0:
            return not self.data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.data.items()))
        return self._hash

    def map_keys(self, fn):
        """Apply a key -> LieElement map linearly (coefficients carried along)."""
        out = {}
        for (key, m), c in self.data.items():
            img = fn(key)
            for (k2, m2), c2 in img.data.items():
                kk = (k2, m + m2)
                out[kk] = out.get(kk, 0) + c * c2
        return LieElement(out)

    def __repr__(self):
        return "LieElement(%s)" % format_element(self)

    __str__ = lambda self: format_element(self)


def scale(v, c):
    """c * v for c a plain coefficient or a Scalar."""
    if isinstance(c, Scalar):
        out = {}
        for (k, m), x in v.data.items():
            for m2, y in c.terms.items():
                kk = (k, m + m2)
                out[kk] = out.get(kk, 0) + x * y
        return LieElement(out)
    if not _is_coeff(c):
        raise TypeError("cannot scale by %r" % (c,))
    c = normalize_coeff(c)
    if not c:
        return LieElement.zero()
    if c == 1:
        return v
    return LieElement({k: x * c for k, x in v.data.items()})


def vec_combine(v, w, c):
    """v + c*w in canonical form."""
    if isinstance(c, Scalar):
        if c.is_constant():
            c = c.constant()
        else:
            return vec_combine(v, scale(w, c), 1)
    c = normalize_coeff(c)
    if not c:
        return v
    out = dict(v.data)
    if c == 1:
        for k, x in w.data.items():
            y = out.get(k)
            if y is None:
                out[k] = x
            else:
                y = normalize_coeff(y + x)
                if y:
                    out[k] = y
                else:
                    del out[k]
    else:
        for k, x in w.data.items():
            y = normalize_coeff(out.get(k, 0) + c * x)
            if y:
                out[k] = y
            else:
                out.pop(k, None)
    return LieElement(out, _clean=True)


def accumulate(acc, v, c=1):
    """In-place acc += c*v on a raw dict; normalization happens in finalize()."""
    if c == 1:
        for k, x in v.data.items():
            acc[k] = acc.get(k, 0) + x
    else:
        for k, x in v.data.items():
            acc[k] = acc.get(k, 0) + c * x
    return acc


def finalize(acc):
    return LieElement(acc)


def default_key_format(key):
    return repr(key)


def _coeff_prefix(s):
    """Return (negative?, prefix) for multiplying a key by Scalar s."""
    c = s.as_coeff()
    if c is not None and not isinstance(c, Cyclotomic):
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if a == 1:
            return neg, ""
        if a.denominator == 1:
            return neg, "%d*" % a.numerator
        return neg, "(%d/%d)*" % (a.numerator, a.denominator)
    text = str(s)
    if len(s.terms) == 1 and " " not in text:
        if text.startswith("-"):
            return True, text[1:] + "*"
        return False, text + "*"
    return False, "(%s)*" % text


def format_element(v, key_format=None):
    """Text form: 'c1*key1 + c2*key2 - ...' with keys in canonical order."""
    key_format = key_format or default_key_format
    parts = []
    for key, s in v.terms():
        neg, pre = _coeff_prefix(s)
        parts.append((neg, pre + key_format(key)))
    if not parts:
        return "0"
    out = []
    for i, (neg, text) in enumerate(parts):
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


SparseVec = LieElement
