"""Common machinery for algebras given by key-level bracket and form rules.

Subclasses implement ``_bracket_keys`` (returning a LieElement or a flat
dict ``(key, mono) -> coeff``), ``is_key``, ``format_key`` and
``parse_key``; optionally ``form_keys``.  Key-pair brackets are cached,
which is what makes exhaustive sweeps affordable.
"""

from .exactcore import LieElement, Scalar, format_element, parse_element
from .exactcore.cyclotomic import normalize_coeff


class KeyError_(ValueError):
    """A key outside the algebra's grammar."""


class Algebra:
    name = "algebra"
    order = 1  # cyclotomic order used when parsing 'z'

    def __init__(self):
        self._cache = {}

    # -- to implement ------------------------------------------------------------
    def _bracket_keys(self, a, b):
        raise NotImplementedError

    def is_key(self, key):
        raise NotImplementedError

    def form_keys(self, a, b):
        raise NotImplementedError("%s carries no invariant form" % self.name)

    def format_key(self, key):
        return repr(key)

    def parse_key(self, text):
        raise NotImplementedError

    # -- derived -------------------------------------------------------------------
    def check_key(self, key):
        if not self.is_key(key):
            raise KeyError_("key %r does not belong to %s" % (key, self.name))

    def bracket_keys(self, a, b):
        hit = self._cache.get((a, b))
        if hit is None:
            self.check_key(a)
            self.check_key(b)
            hit = self._bracket_keys(a, b)
            if not isinstance(hit, LieElement):
                hit = LieElement(hit)
            self._cache[(a, b)] = hit
        return hit

    def bracket(self, x, y):
        out = {}
        for (ka, ma), ca in x.data.items():
            for (kb, mb), cb in y.data.items():
                r = self.bracket_keys(ka, kb)
                if not r.data:
                    continue
                c = ca * cb
                shift = ma + mb
                for (k, m), v in r.data.items():
                    kk = (k, m + shift)
                    out[kk] = out.get(kk, 0) + c * v
        return LieElement(out)

    def form(self, x, y):
        acc = {}
        for (ka, ma), ca in x.data.items():
            for (kb, mb), cb in y.data.items():
                f = self.form_keys(ka, kb)
                if not f:
                    continue
                c = ca * cb
                if isinstance(f, Scalar):
                    for m, v in f.terms.items():
                        acc[ma + mb + m] = acc.get(ma + mb + m, 0) + c * v
                else:
                    acc[ma + mb] = acc.get(ma + mb, 0) + c * f
        s = Scalar(acc)
        return s

    def element(self, key, coeff=1):
        self.check_key(key)
        return LieElement.basis(key, coeff)

    def parse(self, text):
        return parse_element(text, self._parse_key_element, self.order)

    def _parse_key_element(self, text):
        k = self.parse_key(text)
        if isinstance(k, LieElement):
            for key in k.keys():
                self.check_key(key)
            return k
        self.check_key(k)
        return LieElement.basis(k)

    def format(self, x):
        return format_element(x, self.format_key)


def scalar_value(s):
    """Collapse a Scalar with no q/a dependence to its plain coefficient."""
    if isinstance(s, Scalar):
        c = s.as_coeff()
        return s if c is None else normalize_coeff(c)
    return normalize_coeff(s)
