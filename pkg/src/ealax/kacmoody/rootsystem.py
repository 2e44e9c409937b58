"""Finite root systems from Dynkin data, with the form normalized so long roots have length 2."""

from fractions import Fraction

_COUNTS = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n, "C": lambda n: 2 * n * n,
           "D": lambda n: 2 * n * (n - 1), "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
           "F": lambda n: 48, "G": lambda n: 12}


def _dynkin(typ, n):
    """Return (squared lengths of simple roots, edge list) in Bourbaki numbering (0-based)."""
    if typ == "A" and n >= 1:
        return [Fraction(2)] * n, [(i, i + 1) for i in range(n - 1)]
    if typ == "B" and n >= 2:
        return [Fraction(2)] * (n - 1) + [Fraction(1)], [(i, i + 1) for i in range(n - 1)]
    if typ == "C" and n >= 2:
        return [Fraction(1)] * (n - 1) + [Fraction(2)], [(i, i + 1) for i in range(n - 1)]
    if typ == "D" and n >= 3:
        return [Fraction(2)] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if typ == "E" and n in (6, 7, 8):
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        return [Fraction(2)] * n, edges
    if typ == "F" and n == 4:
        return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)], [(0, 1), (1, 2), (2, 3)]
    if typ == "G" and n == 2:
        return [Fraction(2, 3), Fraction(2)], [(0, 1)]
    raise ValueError("unsupported finite type %s%s" % (typ, n))


class RootSystemFinite:
    """Roots are integer coordinate tuples in the basis of simple roots."""

    def __init__(self, typ, rank):
        self.type = typ
        self.rank = rank
        lengths, edges = _dynkin(typ, rank)
        n = rank
        self.gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            self.gram[i][i] = lengths[i]
        for i, j in edges:
            v = -max(lengths[i], lengths[j]) / 2
            self.gram[i][j] = self.gram[j][i] = v
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(n)]
                       for i in range(n)]
        self.positive = self._positive_roots()
        self.positive_set = set(self.positive)
        self.roots = self.positive + [tuple(-c for c in r) for r in self.positive]
        self.root_set = set(self.roots)
        self.theta = max(self.positive, key=lambda r: (sum(r), r))
        if len(self.roots) != _COUNTS[typ](rank):
            raise AssertionError("root count mismatch for %s%d" % (typ, rank))

    @property
    def name(self):
        return "%s%d" % (self.type, self.rank)

    def simple(self, i):
        """Simple root alpha_i, i in 1..rank."""
        return tuple(int(j == i - 1) for j in range(self.rank))

    def inner(self, a, b):
        g = self.gram
        return sum(a[i] * b[j] * g[i][j] for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def pairing(self, root, i):
        """<alpha_i^vee, root> = 2(root, alpha_i)/(alpha_i, alpha_i) as an integer."""
        return sum(root[j] * self.cartan[i][j] for j in range(self.rank))

    def height(self, r):
        return sum(r)

    def is_root(self, r):
        return r in self.root_set

    def _positive_roots(self):
        n = self.rank
        simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for r in layer:
                for i in range(n):
                    # alpha_i string through r: r - p a_i, ..., r + q a_i with p - q = <r, a_i^vee>
                    p = 0
                    s = list(r)
                    while True:
                        s[i] -= 1
                        if tuple(s) in found:
                            p += 1
                        else:
                            break
                    ci = sum(r[j] * self.cartan[i][j] for j in range(n))
                    q = p - ci
                    if q > 0:
                        up = list(r)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        return sorted(found, key=lambda r: (sum(r), tuple(-c for c in r)))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def to_json(self):
        return {
            "type": self.name,
            "cartan": self.cartan,
            "gram": [[str(x) for x in row] for row in self.gram],
            "positive_roots": [list(r) for r in self.positive],
            "highest_root": list(self.theta),
        }


def build_root_system(typ, rank):
    typ = str(typ).upper()
    if typ not in _COUNTS:
        raise ValueError("invalid Lie type %r" % (typ,))
    return RootSystemFinite(typ, int(rank))
