import json

import pytest

from ealax.cli import main

SL2_TILDE = '{"algebra": {"kind": "toroidal-g~", "type": "A", "rank": 1}}'
SLNCQ = '{"algebra": {"kind": "slncq", "N": 2}}'
A2_SWAP = '{"algebra": {"kind": "twisted-fixed", "type": "A", "rank": 2, "perm": [0, 2, 1]}}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_bracket_examples(capsys):
    assert run(capsys, "bracket", "--config", SLNCQ, "[E12*t0, E21*t0^-1]")[:2] == (0, "E11 - E22 + k0")
    assert run(capsys, "bracket", "--config", SL2_TILDE, "[d~_{1,0}, d~_{0,1}]")[:2] == (0, "d~_{1,1}")
    assert run(capsys, "bracket", "--config", SL2_TILDE, "k0", "t0*t1^-1*e")[:2] == (0, "0")
    assert run(capsys, "bracket", "--config", SLNCQ, "[k0, E12*t1^3]")[:2] == (0, "0")


def test_bracket_parse_error(capsys):
    code, _, err = run(capsys, "bracket", "--config", SL2_TILDE, "[k0, nonsense]")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("cfg", [
    "{not json",
    '{"algebra": {"kind": "bogus"}}',
    '{"algebra": {"kind": "affine", "type": "A", "rank": 2, "perm": [0, 2, 1]}}',
    '{"algebra": {"kind": "twisted-fixed", "type": "A", "rank": 2, "perm": [1, 2, 0], "T": 2}}',
    '{"algebra": {"kind": "slncq", "N": 1}}',
    '{"algebra": {"kind": "slncq", "N": 2}, "window": "two"}',
])
def test_bad_configs_exit_2(capsys, cfg):
    assert run(capsys, "define", "--config", cfg)[0] == 2


def test_missing_config_file(capsys, tmp_path):
    assert run(capsys, "define", "--config", str(tmp_path / "none.json"))[0] == 2


def test_incompatible_suite(capsys):
    assert run(capsys, "verify", "--config", SLNCQ, "--suite", "automorphism")[0] == 2
    assert run(capsys, "verify", "--config", SL2_TILDE, "--suite", "correspondence")[0] == 2


def test_toml_config(capsys, tmp_path):
    path = tmp_path / "job.toml"
    path.write_text('window = 1\n[algebra]\nkind = "slncq"\nN = 2\n')
    assert run(capsys, "bracket", "--config", str(path), "[E12*t0, E21*t0^-1]")[:2] == (0, "E11 - E22 + k0")


def test_define(capsys):
    code, out, _ = run(capsys, "define", "--config", A2_SWAP, "--window", "1")
    info = json.loads(out)
    assert code == 0
    assert info["T"] == 2 and info["folded"]["A_check"] == [[2, -1], [-4, 2]]


def test_verify_folded(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code, summary, _ = run(capsys, "verify", "--config", A2_SWAP, "--suite", "folded", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == 0 and summary.startswith("PASS")
    assert rep["data"]["A_check"] == [[2, -1], [-4, 2]]
    assert rep["passed"] and rep["failures"] == []


def test_verify_jacobi_sl2(capsys, tmp_path):
    cfg = '{"algebra": {"kind": "toroidal-t", "type": "A", "rank": 1}, "window": 1}'
    assert run(capsys, "verify", "--config", cfg, "--suite", "jacobi", "--out", str(tmp_path / "r"))[0] == 0


def test_verify_iso_cov_identity(capsys, tmp_path):
    cfg = '{"algebra": {"kind": "covariant", "type": "A", "rank": 1}}'
    assert run(capsys, "verify", "--config", cfg, "--suite", "iso-cov", "--window", "1",
               "--out", str(tmp_path / "r"))[0] == 0


def test_verify_failure_exit_1(capsys, tmp_path):
    cfg = '{"algebra": {"kind": "slncq", "N": 2}, "literal": true}'
    code, summary, _ = run(capsys, "verify", "--config", cfg, "--suite", "correspondence", "--window", "1",
                           "--out", str(tmp_path / "r"))
    assert code == 1 and summary.startswith("FAIL")
    assert json.loads((tmp_path / "r").read_text())["failures"]


def test_verify_annihilation(capsys, tmp_path):
    cfg = ('{"algebra": {"kind": "affine", "type": "A", "rank": 2, "perm": [1, 0]},'
           ' "annihilation": {"root": [1, 0]}}')
    assert run(capsys, "verify", "--config", cfg, "--suite", "annihilation", "--window", "3",
               "--out", str(tmp_path / "r"))[0] == 0
    bad = cfg.replace('"root": [1, 0]', '"root": [1, 0], "p": [1]')
    assert run(capsys, "verify", "--config", bad, "--suite", "annihilation", "--window", "3",
               "--out", str(tmp_path / "r"))[0] == 1


def test_export_iproducts(capsys):
    cfg = '{"algebra": {"kind": "conformal-Cg", "type": "A", "rank": 1}}'
    code, out, _ = run(capsys, "export", "--config", cfg, "iproducts", "--window", "0")
    rows = json.loads(out)["records"]
    assert code == 0
    assert {"a": "e", "b": "f", "i": 0, "value": "h"} in rows


def test_export_roots_identity(capsys):
    cfg = '{"algebra": {"kind": "twisted-fixed", "type": "A", "rank": 1}}'
    code, out, _ = run(capsys, "export", "--config", cfg, "roots", "--window", "1")
    recs = json.loads(out)["records"]
    assert code == 0 and recs
    assert {"fin": ["1"], "n": "0", "m": 0} in recs and {"fin": ["-1"], "n": "1", "m": 1} in recs


def test_export_constants_empty(capsys):
    code, out, _ = run(capsys, "export", "--config", SLNCQ, "constants", "--window", "-1")
    assert code == 0 and json.loads(out)["records"] == []


def test_export_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(capsys, "export", "--config", SLNCQ, "correspondence", "--window", "1", "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    for p in (a, b):
        assert run(capsys, "export", "--config", SLNCQ, "constants", "--window", "1", "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_reports_deterministic(capsys, tmp_path):
    reps = []
    for name in ("a", "b"):
        p = tmp_path / name
        cfg = '{"algebra": {"kind": "toroidal-g~", "type": "A", "rank": 2, "perm": [0, 2, 1]}, "count": 50}'
        assert run(capsys, "verify", "--config", cfg, "--suite", "form", "--window", "1", "--seed", "7",
                   "--out", str(p))[0] == 0
        rep = json.loads(p.read_text())
        rep.pop("wall_time")
        reps.append(rep)
    assert reps[0] == reps[1]
