"""Verification reports and generic property sweeps (exact, zero tolerance)."""

import itertools
import json
import random
import time

from .exactcore import LieElement, Scalar


class VerificationReport:
    def __init__(self, suite, data=None):
        self.suite = suite
        self.checks = 0
        self.failures = []
        self.data = dict(data or {})
        self._start = time.perf_counter()
        self.wall_time = 0.0

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, inputs=None, expected=None, got=None, kind=None, limit=20):
        """Record one check; keep at most `limit` failure payloads."""
        self.checks += 1
        if not ok:
            if len(self.failures) < limit:
                self.failures.append({"kind": kind or self.suite, "inputs": _jsonable(inputs),
                                      "expected": _jsonable(expected), "got": _jsonable(got)})
            else:
                self.data["truncated_failures"] = self.data.get("truncated_failures", 0) + 1
        return ok

    def merge(self, other):
        self.checks += other.checks
        self.failures.extend(other.failures)
        for k, v in other.data.items():
            self.data.setdefault(other.suite + "." + k, v)
        return self

    def finish(self):
        self.wall_time = time.perf_counter() - self._start
        return self

    def to_json(self, timing=True):
        out = {"suite": self.suite, "passed": self.passed, "checks": self.checks,
               "failures": self.failures, "data": _jsonable(self.data)}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, timing=True):
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2)

    def summary(self):
        state = "PASS" if self.passed else "FAIL"
        return "%s %s: %d checks, %d failures" % (state, self.suite, self.checks,
                                                 len(self.failures) + self.data.get("truncated_failures", 0))


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _fmt(alg, x):
    if isinstance(x, LieElement):
        return alg.format(x)
    return str(x)


def _acc_bracket(alg, acc, data, key, sign):
    """acc += sign * [data, key] for a flat element dict `data`."""
    br = alg.bracket_keys
    for (k, m), c in data.items():
        r = br(k, key).data
        if not r:
            continue
        c = c * sign
        for (k2, m2), v in r.items():
            kk = (k2, m + m2)
            acc[kk] = acc.get(kk, 0) + c * v


def _acc_bracket_left(alg, acc, key, data, sign):
    br = alg.bracket_keys
    for (k, m), c in data.items():
        r = br(key, k).data
        if not r:
            continue
        c = c * sign
        for (k2, m2), v in r.items():
            kk = (k2, m + m2)
            acc[kk] = acc.get(kk, 0) + c * v


def _nonzero(acc):
    return any(LieElement(acc).data)


def antisymmetry_sweep(alg, keys, report=None):
    report = report or VerificationReport("antisymmetry")
    for i, a in enumerate(keys):
        for b in keys[i:]:
            x = alg.bracket_keys(a, b)
            y = alg.bracket_keys(b, a)
            ok = (x + y) == LieElement.zero() if a != b else not x
            report.check(ok, inputs=[alg.format_key(a), alg.format_key(b)],
                         expected="0", got=_fmt(alg, x + y), kind="antisymmetry")
    return report


def jacobi_sweep(alg, keys, report=None):
    """Exhaustive Jacobi identity on unordered distinct triples of basis keys."""
    report = report or VerificationReport("jacobi")
    n = len(keys)
    br = alg.bracket_keys
    pair = {}
    for i in range(n):
        for j in range(i + 1, n):
            pair[(i, j)] = br(keys[i], keys[j]).data
    for i in range(n):
        a = keys[i]
        for j in range(i + 1, n):
            b = keys[j]
            pab = pair[(i, j)]
            for k in range(j + 1, n):
                pbc = pair[(j, k)]
                pac = pair[(i, k)]
                report.checks += 1
                if not (pab or pbc or pac):
                    continue
                c = keys[k]
                acc = {}
                if pab:
                    _acc_bracket(alg, acc, pab, c, 1)      # [[a,b],c]
                if pbc:
                    _acc_bracket(alg, acc, pbc, a, 1)      # [[b,c],a]
                if pac:
                    _acc_bracket(alg, acc, pac, b, -1)     # [[c,a],b] = -[[a,c],b]
                if acc and _nonzero(acc):
                    report.checks -= 1
                    report.check(False, inputs=[alg.format_key(a), alg.format_key(b), alg.format_key(c)],
                                 expected="0", got=_fmt(alg, LieElement(acc)), kind="jacobi")
    return report


def lie_axiom_suite(alg, keys, name=None):
    rep = VerificationReport(name or ("lie-axioms:" + alg.name))
    antisymmetry_sweep(alg, keys, rep)
    jacobi_sweep(alg, keys, rep)
    rep.data["keys"] = len(keys)
    return rep.finish()


def sample_pairs(keys, count, seed):
    rnd = random.Random(seed)
    return [(rnd.choice(keys), rnd.choice(keys)) for _ in range(count)]


def sample_triples(keys, count, seed):
    rnd = random.Random(seed)
    return [(rnd.choice(keys), rnd.choice(keys), rnd.choice(keys)) for _ in range(count)]


def homomorphism_check(alg, phi, keys, count=500, seed=0, report=None, target=None, name="homomorphism"):
    """phi([x,y]) == [phi x, phi y] on seeded random key pairs (target defaults to alg)."""
    target = target or alg
    report = report or VerificationReport(name)
    for a, b in sample_pairs(keys, count, seed):
        x, y = LieElement.basis(a), LieElement.basis(b)
        lhs = phi(alg.bracket(x, y))
        rhs = target.bracket(phi(x), phi(y))
        report.check(lhs == rhs, inputs=[alg.format_key(a), alg.format_key(b)],
                     expected=_fmt(target, rhs), got=_fmt(target, lhs), kind=name)
    return report


def form_invariance_check(alg, keys, count=500, seed=0, report=None, triples=None):
    """<[x,y],z> == <x,[y,z]> on seeded triples."""
    report = report or VerificationReport("form-invariance")
    for a, b, c in (triples or sample_triples(keys, count, seed)):
        x, y, z = LieElement.basis(a), LieElement.basis(b), LieElement.basis(c)
        lhs = alg.form(alg.bracket(x, y), z)
        rhs = alg.form(x, alg.bracket(y, z))
        report.check(lhs == rhs, inputs=[alg.format_key(a), alg.format_key(b), alg.format_key(c)],
                     expected=str(rhs), got=str(lhs), kind="form-invariance")
    return report


def form_preserved_check(alg, phi, keys, report=None, name="form-preserved"):
    """<phi x, phi y> == <x, y> on all key pairs."""
    report = report or VerificationReport(name)
    imgs = {k: phi(LieElement.basis(k)) for k in keys}
    for a, b in itertools.product(keys, keys):
        lhs = alg.form(imgs[a], imgs[b])
        rhs = alg.form(LieElement.basis(a), LieElement.basis(b))
        report.check(lhs == rhs, inputs=[alg.format_key(a), alg.format_key(b)],
                     expected=str(rhs), got=str(lhs), kind=name)
    return report


def order_check(alg, phi, T, keys, report=None, name="order"):
    """phi^T == id on keys."""
    report = report or VerificationReport(name)
    for k in keys:
        x = LieElement.basis(k)
        y = x
        for _ in range(T):
            y = phi(y)
        report.check(y == x, inputs=[alg.format_key(k)], expected=alg.format(x), got=_fmt(alg, y),
                     kind=name)
    return report


def scalar_zero(s):
    return (isinstance(s, Scalar) and not s) or s == 0
