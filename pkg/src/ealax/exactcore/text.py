"""Parsing of element text 'c*key + c*key - ...' against an algebra key grammar."""

import re

from .scalar import Scalar, parse_scalar
from .sparse import LieElement, scale

_OPEN = "([{"
_CLOSE = ")]}"

_SCALAR_FACTOR = re.compile(r"^(?:\d+|\d+/\d+|[zqa](?:\^-?\d+)?)$")


def split_top(text, seps):
    """Split text at top-level separator characters, keeping the separators.

    A '-' immediately after '^' or at the start of a bracketed group is part of
    an exponent or index, never a separator.
    """
    pieces = []
    depth = 0
    cur = []
    prev = ""
    for ch in text:
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced brackets in %r" % text)
        if depth == 0 and ch in seps and prev not in ("^", "_"):
            pieces.append("".join(cur))
            pieces.append(ch)
            cur = []
        else:
            cur.append(ch)
        if not ch.isspace():
            prev = ch
    if depth != 0:
        raise ValueError("unbalanced brackets in %r" % text)
    pieces.append("".join(cur))
    return pieces


def _is_scalar_factor(f, order):
    if _SCALAR_FACTOR.match(f):
        return True
    if f.startswith("(") and f.endswith(")"):
        try:
            parse_scalar(f, order)
            return True
        except ValueError:
            return False
    return False


def parse_element(text, parse_key, order=1):
    """Parse element text; parse_key(str) returns a LieElement for one key text."""
    text = text.strip()
    if not text:
        raise ValueError("empty element text")
    pieces = split_top(text, "+-")
    total = LieElement.zero()
    sign = 1
    pending = False
    for idx, p in enumerate(pieces):
        if idx % 2 == 1:
            if p == "-":
                sign = -sign
            pending = True
            continue
        p = p.strip()
        if not p:
            if idx != 0 or pending:
                raise ValueError("dangling operator in %r" % text)
            continue
        total = total + scale(_parse_term(p, parse_key, order), sign)
        sign = 1
        pending = False
    return total


def _parse_term(term, parse_key, order):
    factors = [f.strip() for f in split_top(term, "*") if f != "*"]
    coeff = Scalar.of(1)
    key_parts = []
    for f in factors:
        if not f:
            raise ValueError("empty factor in %r" % term)
        if not key_parts and _is_scalar_factor(f, order):
            coeff = coeff * parse_scalar(f, order)
        else:
            key_parts.append(f)
    if not key_parts:
        if coeff == 0:
            return LieElement.zero()
        raise ValueError("term %r has no basis element" % term)
    return scale(parse_key("*".join(key_parts)), coeff)


def parse_bracket_pair(text):
    """'[A, B]' -> ('A', 'B')."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError("bracket expression must look like [A, B]")
    inner = text[1:-1]
    parts = split_top(inner, ",")
    if len(parts) != 3:
        raise ValueError("bracket expression needs exactly two operands")
    return parts[0].strip(), parts[2].strip()
