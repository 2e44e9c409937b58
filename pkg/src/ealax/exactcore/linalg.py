"""Exact linear algebra: fraction-free rank, field elimination, nullspaces."""

from fractions import Fraction

from .cyclotomic import Cyclotomic, normalize_coeff
from .scalar import Scalar
from .sparse import key_sort


def _inv(c):
    if isinstance(c, Cyclotomic):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def exact_rank(vs):
    """Rank of a list of LieElements over the fraction field of the scalar ring.

    Bareiss elimination: every intermediate entry is an exact quotient by the
    previous pivot, so no fractions in q appear.
    """
    vs = [v for v in vs if v]
    if not vs:
        return 0
    cols = sorted({k for v in vs for k in v.keys()}, key=key_sort)
    rows = []
    for v in vs:
        ent = v.entries()
        rows.append([ent.get(k, Scalar()) for k in cols])
    return bareiss_rank(rows)


def bareiss_rank(rows):
    """Rank of a matrix with Scalar (or coefficient) entries, fraction-free."""
    m = [[Scalar.of(x) for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = Scalar.of(1)
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            a = m[r][col]
            for c in range(col + 1, ncols):
                val = p * m[r][c] - a * m[rank][c]
                m[r][c] = val.exact_div(prev) if val else val
            m[r][col] = Scalar()
        prev = p
        rank += 1
        col += 1
    return rank


def rref(rows):
    """Reduced row echelon form over the coefficient field (no q).

    Returns (matrix, pivot_columns).  Entries are int/Fraction/Cyclotomic.
    """
    m = [[normalize_coeff(x) for x in r] for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c])
        m[r] = [normalize_coeff(x * inv) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [normalize_coeff(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def field_rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of {x : A x = 0} over the coefficient field."""
    if not rows:
        n = ncols or 0
        return [[int(i == j) for i in range(n)] for j in range(n)]
    m, pivots = rref(rows)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = normalize_coeff(-m[i][f])
        basis.append(x)
    return basis


def solve(rows, rhs):
    """A unique solution of A x = rhs over the coefficient field, or ValueError."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    n = len(rows[0])
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("linear system has no unique solution")
    x = [0] * n
    for i, pc in enumerate(pivots):
        x[pc] = m[i][n]
    return x
