"""Config-driven command line: define, bracket, verify, export.

A config is a JSON or TOML document (a path, or inline JSON starting with
'{').  The algebra descriptor lives under "algebra"; run parameters
(window, weyl_len, seed, count, suite, out) sit at the top level and can be
overridden by flags.  Exit codes: 0 pass, 1 verification failures, 2 bad
config, unparsable input or a suite the algebra does not support.
"""

import argparse
import json
import sys

from .exactcore import LieElement, parse_bracket_pair
from .verify import VerificationReport, form_invariance_check, lie_axiom_suite

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib


class ConfigError(ValueError):
    """Anything that should end in exit code 2."""


KIND_ALIASES = {
    "finite": "finite",
    "affine": "affine",
    "toroidal-t": "toroidal-t",
    "toroidal-g~": "toroidal-tilde", "toroidal-g̃": "toroidal-tilde", "toroidal-tilde": "toroidal-tilde",
    "toroidal-g^": "toroidal-hat", "toroidal-ĝ": "toroidal-hat", "toroidal-hat": "toroidal-hat",
    "g~-tau": "tau", "g̃-tau": "tau", "tau": "tau", "toroidal-tau": "tau",
    "twisted-fixed": "twisted-fixed",
    "conformal-cg": "conformal-Cg", "conformal-Cg": "conformal-Cg",
    "covariant": "covariant",
    "slncq": "slncq",
    "slinf-covariant": "slinf-covariant",
}

SUITES = ("jacobi", "automorphism", "form", "iso-hat", "iso-cov", "annihilation", "folded",
          "roots", "correspondence", "conformal", "skew", "offdiag")
EXPORTS = ("constants", "roots", "iproducts", "correspondence")
DEFAULTS = {"window": 2, "weyl_len": 6, "seed": 0, "count": 500}


# -- config -------------------------------------------------------------------------------------
def load_config(text_or_path):
    if text_or_path is None:
        raise ConfigError("--config is required")
    src = text_or_path.strip()
    try:
        if src.startswith("{"):
            return json.loads(src)
        with open(text_or_path, "rb") as fh:
            raw = fh.read()
    except json.JSONDecodeError as exc:
        raise ConfigError("inline config is not valid JSON: %s" % exc) from None
    except OSError as exc:
        raise ConfigError("cannot read config: %s" % exc) from None
    if text_or_path.endswith(".toml"):
        try:
            return tomllib.loads(raw.decode("utf-8"))
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError("bad TOML: %s" % exc) from None
    try:
        return json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError:
        try:
            return tomllib.loads(raw.decode("utf-8"))
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError("config is neither JSON nor TOML: %s" % exc) from None


def _int(v, name):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError("%s must be an integer" % name)
    return v


class Job:
    """A validated config: the algebra descriptor plus run parameters."""

    def __init__(self, cfg, overrides=None):
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a mapping")
        desc = cfg.get("algebra", cfg)
        if not isinstance(desc, dict) or "kind" not in desc:
            raise ConfigError("config needs an algebra descriptor with a 'kind'")
        kind = KIND_ALIASES.get(str(desc["kind"]))
        if kind is None:
            raise ConfigError("unknown algebra kind %r" % (desc["kind"],))
        self.kind = kind
        self.desc = dict(desc)
        params = dict(DEFAULTS)
        for k in DEFAULTS:
            if k in cfg:
                params[k] = cfg[k]
        for k, v in (overrides or {}).items():
            if v is not None:
                params[k] = v
        for k in DEFAULTS:
            params[k] = _int(params[k], k)
        if params["count"] < 0 or params["weyl_len"] < 0:
            raise ConfigError("count and weyl_len must be nonnegative")
        self.window = params["window"]
        self.weyl_len = params["weyl_len"]
        self.seed = params["seed"]
        self.count = params["count"]
        self.suite = (overrides or {}).get("suite") or cfg.get("suite")
        self.out = (overrides or {}).get("out") or cfg.get("out")
        self.annihilation = dict(cfg.get("annihilation", {}))
        self.literal = bool(cfg.get("literal", desc.get("literal", False)))
        self._validate()

    # descriptor fields
    def _validate(self):
        d = self.desc
        self.finite_perm = self.kind == "affine" or (self.kind == "covariant"
                                                    and d.get("variant") == "affine")
        needs_g = self.kind not in ("slncq", "slinf-covariant")
        if needs_g:
            typ = d.get("type")
            if not isinstance(typ, str) or typ.upper() not in "ABCDEFG" or len(typ) != 1:
                raise ConfigError("'type' must be one of A..G")
            self.type = typ.upper()
            self.rank = _int(d.get("rank"), "rank")
            from .kacmoody import SimpleLieAlgebra
            try:
                self.g = SimpleLieAlgebra(self.type, self.rank)
            except (ValueError, KeyError) as exc:
                raise ConfigError("no simple Lie algebra %s%s: %s" % (self.type, self.rank, exc)) from None
            # loop-algebra kinds twist by a finite diagram automorphism, the rest by an affine one
            size = self.rank if self.finite_perm else self.rank + 1
            perm = d.get("perm", d.get("mu"))
            if perm is None:
                perm = list(range(size))
            if not isinstance(perm, list) or sorted(perm) != list(range(size)):
                raise ConfigError("perm must be a permutation of 0..%d" % (size - 1))
            self.perm = [_int(p, "perm entry") for p in perm]
            if "T" in d and _int(d["T"], "T") != _perm_order(self.perm):
                raise ConfigError("T=%s does not match the order %d of perm" % (d["T"], _perm_order(self.perm)))
        else:
            self.N = _int(d.get("N", 2), "N")
            if self.N < 2:
                raise ConfigError("N must be at least 2")
            self.qsign = _int(d.get("qsign", 1), "qsign")
            if self.qsign not in (1, -1):
                raise ConfigError("qsign is 1 or -1")
        if self.kind == "tau":
            a = d.get("a", "a")
            if a != "a" and (isinstance(a, bool) or not isinstance(a, int)):
                raise ConfigError("a must be an integer or the symbol 'a'")
            self.a = None if a == "a" else a
        if self.kind == "conformal-Cg":
            self.flavor = d.get("flavor", "hat")
            if self.flavor not in ("hat", "tilde"):
                raise ConfigError("conformal-Cg flavor is 'hat' or 'tilde'")
        if self.kind == "covariant":
            self.variant = d.get("variant", "conformal")
            if self.variant not in ("conformal", "affine"):
                raise ConfigError("covariant variant is 'conformal' or 'affine'")

    def describe(self):
        out = {"kind": self.kind}
        for k in ("type", "rank", "perm", "N", "qsign", "flavor", "variant"):
            if hasattr(self, k):
                out[k] = getattr(self, k)
        if self.kind == "tau":
            out["a"] = "a" if self.a is None else self.a
        if hasattr(self, "perm"):
            out["T"] = _perm_order(self.perm)
        return out

    # algebra factory
    def algebra(self):
        k = self.kind
        if k == "finite":
            return self.g
        if k == "affine":
            from .kacmoody import AffineAlgebra
            return AffineAlgebra(self.g)
        if k.startswith("toroidal-") or k == "tau":
            from .toroidal import ToroidalAlgebra
            flavor = {"toroidal-t": "t", "toroidal-tilde": "tilde", "toroidal-hat": "hat", "tau": "tau"}[k]
            return ToroidalAlgebra(self.g, flavor, a=getattr(self, "a", None))
        if k == "twisted-fixed":
            return self.fixed_spec().base
        if k == "conformal-Cg":
            from .conformal import CgAlgebra, HatC, TildeC
            C = CgAlgebra(self.g)
            return HatC(C) if self.flavor == "hat" else TildeC(C)
        if k == "covariant":
            if self.variant == "affine":
                from .kacmoody import CovariantAffine
                return CovariantAffine(self.g, self.perm)
            from .conformal import covariant_cg
            return covariant_cg(self.g, self.perm, self.literal)
        if k == "slncq":
            from .qtorus import GlNCq
            return GlNCq(self.N, special=True, derivations=bool(self.desc.get("derivations", True)),
                         qsign=self.qsign)
        from .qtorus import CovariantSlInf
        return CovariantSlInf(self.N, chi_sign=-self.qsign)

    def fixed_spec(self):
        from .toroidal import TwistedFixedSpec
        return TwistedFixedSpec(self.g, self.perm, self.literal)

    def spanning(self, alg):
        if self.window < 0:
            return []
        if self.kind == "finite":
            return list(alg.basis())
        return list(alg.spanning_keys(self.window))


def _perm_order(perm):
    T, cur = 1, list(perm)
    while cur != list(range(len(perm))):
        cur = [perm[c] for c in cur]
        T += 1
    return T


# -- commands -----------------------------------------------------------------------------------
def _emit(obj, out):
    text = obj if isinstance(obj, str) else json.dumps(obj, sort_keys=True, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_define(job, args):
    alg = job.algebra()
    info = job.describe()
    info["name"] = alg.name
    info["window"] = job.window
    if hasattr(alg, "spanning_keys") or job.kind == "finite":
        keys = job.spanning(alg)
        info["spanning_keys"] = len(keys)
        info["sample_keys"] = [alg.format_key(k) for k in keys[:12]]
    if job.kind == "twisted-fixed" or (job.kind in ("toroidal-tilde", "covariant") and info.get("T", 1) > 1):
        from .toroidal import TransitiveAutomorphism, folded_datum
        try:
            info["folded"] = folded_datum(job.g, job.perm).to_json()
        except TransitiveAutomorphism:
            info["folded"] = None
    _emit(info, job.out)
    return 0


def cmd_bracket(job, args):
    alg = job.algebra()
    if len(args.operands) == 1:
        left, right = parse_bracket_pair(args.operands[0])
    elif len(args.operands) == 2:
        left, right = args.operands
    else:
        raise ConfigError("bracket takes '[A, B]' or two operands")
    if not hasattr(alg, "parse_key") or type(alg).parse_key is _base_parse_key():
        raise ConfigError("%s has no text grammar" % alg.name)
    x, y = alg.parse(left), alg.parse(right)
    text = alg.format(alg.bracket(x, y))
    _emit(text, job.out)
    return 0


def _base_parse_key():
    from .algebra import Algebra
    return Algebra.parse_key


def _incompatible(suite, job):
    raise ConfigError("suite %r does not apply to kind %r" % (suite, job.kind))


def run_suite(job, suite):
    k = job.kind
    w = job.window
    if suite == "jacobi":
        if k == "conformal-Cg":
            from .conformal import conformal_axiom_check
            return conformal_axiom_check(CgFromJob(job), w)
        if k == "twisted-fixed":
            _incompatible(suite, job)
        alg = job.algebra()
        return lie_axiom_suite(alg, job.spanning(alg), name="jacobi:" + alg.name)
    if suite == "automorphism":
        if not hasattr(job, "perm") or job.finite_perm:
            _incompatible(suite, job)
        from .suites import automorphism_suite
        return automorphism_suite(job.g, job.perm, w, job.count, job.seed, job.literal)
    if suite == "form":
        if k == "slncq":
            alg = job.algebra()
            rep = VerificationReport("form:" + alg.name)
            form_invariance_check(alg, job.spanning(alg), job.count, job.seed, rep)
            return rep.finish()
        if not hasattr(job, "perm") or job.finite_perm:
            _incompatible(suite, job)
        from .suites import form_suite
        return form_suite(job.g, job.perm, w, job.count, job.seed)
    if suite == "iso-hat":
        if k not in ("conformal-Cg", "toroidal-hat"):
            _incompatible(suite, job)
        from .conformal import iso_hat_check
        return iso_hat_check(job.g, w)
    if suite == "iso-cov":
        if k == "covariant" and job.variant == "affine":
            from .kacmoody import iso_twisted_affine_check
            return iso_twisted_affine_check(job.g, job.perm, w)
        if k not in ("covariant", "conformal-Cg", "twisted-fixed"):
            _incompatible(suite, job)
        from .conformal import iso_cov_check
        return iso_cov_check(job.g, job.perm, w)
    if suite == "annihilation":
        return _annihilation(job)
    if suite == "folded":
        if not hasattr(job, "perm") or job.finite_perm:
            _incompatible(suite, job)
        from .toroidal import TransitiveAutomorphism, folded_datum, is_affine_gcm
        rep = VerificationReport("folded")
        try:
            fd = folded_datum(job.g, job.perm)
        except TransitiveAutomorphism as exc:
            rep.check(False, inputs=[job.perm], expected="non-transitive mu", got=str(exc), kind="transitive")
            return rep.finish()
        rep.check(is_affine_gcm(fd.A_check), inputs=[fd.A_check], expected="affine GCM",
                  got="not affine", kind="affine-gcm")
        rep.data.update(fd.to_json())
        return rep.finish()
    if suite == "roots":
        if k not in ("twisted-fixed", "toroidal-tilde"):
            _incompatible(suite, job)
        from .toroidal import verify_root_spaces
        return verify_root_spaces(job.fixed_spec(), w, job.weyl_len)
    if suite == "correspondence":
        if k not in ("slncq", "slinf-covariant"):
            _incompatible(suite, job)
        from .qtorus import correspondence_check
        return correspondence_check(job.N, w, job.qsign, job.literal)
    if suite == "offdiag":
        if k != "slncq":
            _incompatible(suite, job)
        from .qtorus import offdiag_commute_check
        rep = VerificationReport("offdiag-commute")
        for i in range(1, job.N + 1):
            for j in range(1, job.N + 1):
                if i != j:
                    for m in range(-1, 2):
                        offdiag_commute_check(job.N, i, j, m, w, report=rep)
        rep.data = {"N": job.N, "window": w}
        return rep.finish()
    if suite == "conformal":
        if k != "conformal-Cg":
            _incompatible(suite, job)
        from .conformal import conformal_axiom_check
        return conformal_axiom_check(CgFromJob(job), w)
    if suite == "skew":
        if k != "conformal-Cg":
            _incompatible(suite, job)
        from .conformal import skew_table_check
        return skew_table_check(CgFromJob(job), w)
    raise ConfigError("unknown suite %r (choose from %s)" % (suite, ", ".join(SUITES)))


def CgFromJob(job):
    from .conformal import CgAlgebra
    return CgAlgebra(job.g)


def _annihilation(job):
    spec = job.annihilation
    p = spec.get("p")
    if p is not None and (not isinstance(p, list) or not all(isinstance(c, int) for c in p)):
        raise ConfigError("annihilation.p must be a list of integer coefficients")
    window = job.window
    if job.kind in ("affine",) or (job.kind == "covariant" and job.variant == "affine"):
        root = spec.get("root")
        if not isinstance(root, list):
            raise ConfigError("annihilation.root (simple-root coordinates) is required")
        if tuple(root) not in job.g.rs.root_set:
            raise ConfigError("%r is not a root of %s" % (root, job.g.name))
        from .conformal import annihilation_affine
        return annihilation_affine(job.g, job.perm, root, window, p)
    if job.kind in ("twisted-fixed", "toroidal-tilde"):
        node = spec.get("node", 1)
        if not isinstance(node, int) or not 0 <= node <= job.rank:
            raise ConfigError("annihilation.node must be a node index 0..%d" % job.rank)
        from .conformal import annihilation_fixed
        return annihilation_fixed(job.g, job.perm, node, window, p, spec.get("sign", 1))
    _incompatible("annihilation", job)


def cmd_verify(job, args):
    if not job.suite:
        raise ConfigError("no suite given (use --suite)")
    rep = run_suite(job, job.suite)
    rep.data.setdefault("config", job.describe())
    if job.out:
        with open(job.out, "w", encoding="utf-8") as fh:
            fh.write(rep.dumps() + "\n")
        print(rep.summary())
    else:
        print(rep.dumps())
    return 0 if rep.passed else 1


def export_records(job, what):
    if what == "constants":
        alg = job.algebra()
        keys = job.spanning(alg)
        rows = []
        for i, a in enumerate(keys):
            for b in keys[i + 1:]:
                br = alg.bracket_keys(a, b)
                if br:
                    rows.append({"a": alg.format_key(a), "b": alg.format_key(b), "bracket": alg.format(br)})
        return rows
    if what == "roots":
        if not hasattr(job, "perm") or job.finite_perm:
            raise ConfigError("roots need type, rank and an affine-diagram perm")
        from .toroidal import TransitiveAutomorphism, folded_datum, twisted_roots
        from .toroidal.folding import root_to_json
        try:
            fd = folded_datum(job.g, job.perm)
        except TransitiveAutomorphism as exc:
            raise ConfigError(str(exc)) from None
        w = max(job.window, 0)
        roots = [r for r in twisted_roots(fd, job.weyl_len, w) if abs(r.n) <= w and abs(r.m) <= w]
        return [root_to_json(r) for r in sorted(roots)] if job.window >= 0 else []
    if what == "iproducts":
        if job.kind != "conformal-Cg":
            raise ConfigError("iproducts export needs kind conformal-Cg")
        return CgFromJob(job).table_json(job.window) if job.window >= 0 else []
    if what == "correspondence":
        if job.kind not in ("slncq", "slinf-covariant"):
            raise ConfigError("correspondence export needs kind slncq or slinf-covariant")
        from .qtorus import correspondence_dump
        return correspondence_dump(job.N, job.window, job.qsign) if job.window >= 0 else []
    raise ConfigError("unknown export %r (choose from %s)" % (what, ", ".join(EXPORTS)))


def cmd_export(job, args):
    records = export_records(job, args.what)
    _emit({"export": args.what, "config": job.describe(), "window": job.window,
           "weyl_len": job.weyl_len, "records": records}, job.out)
    return 0


# -- entry point --------------------------------------------------------------------------------
def build_parser():
    p = argparse.ArgumentParser(prog="ealax", description="Exact toroidal/EALA computations and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", required=True, help="config path (JSON/TOML) or inline JSON")
        sp.add_argument("--window", type=int)
        sp.add_argument("--weyl-len", dest="weyl_len", type=int)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--count", type=int, help="sampled pairs/triples")
        sp.add_argument("--out", help="write output here instead of stdout")

    common(sub.add_parser("define", help="validate a config and describe the algebra"))
    sp = sub.add_parser("bracket", help="bracket two elements: '[A, B]' or A B")
    common(sp)
    sp.add_argument("operands", nargs="+")
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=SUITES)
    sp = sub.add_parser("export", help="export data as JSON")
    common(sp)
    sp.add_argument("what", choices=EXPORTS)
    return p


COMMANDS = {"define": cmd_define, "bracket": cmd_bracket, "verify": cmd_verify, "export": cmd_export}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    overrides = {k: getattr(args, k, None) for k in ("window", "weyl_len", "seed", "count", "suite", "out")}
    try:
        job = Job(load_config(args.config), overrides)
        return COMMANDS[args.command](job, args)
    except (ConfigError, ValueError, KeyError, ArithmeticError) as exc:
        print("ealax: error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("ealax: I/O error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
