import json
import subprocess
import sys
from pathlib import Path

import pytest

from ccomplex import parse
from ccomplex.cli import main

from conftest import BORROMEAN

DATA = Path(__file__).parent / "data"
B, B2, U3, H, H3 = (str(DATA / f) for f in ("borromean.cc", "doubled_borromean.cc", "unlink3.cc",
                                            "hopf.cc", "hopf3.cc"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", B)
    assert code == 0 and out.strip() == "valid: components=3 clasps=4 genus=0 0 0"
    code, data = run_json(capsys, "validate", B)
    assert data == {"valid": True, "components": 3, "clasps": 4, "genus": [0, 0, 0]}


def test_validate_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.cc"
    bad.write_text("ccomplex v1\ncomponents 2\nword 1: c1*\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "line 3, column 9" in err
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.cc"))
    assert code == 2


def test_lk(capsys):
    code, out, _ = run(capsys, "lk", H, "1", "2")
    assert code == 0 and out.strip() == "lk(1,2) = 1"
    code, data = run_json(capsys, "lk", B)
    assert data == {"matrix": [[0, 0, 0]] * 3}
    code, _, err = run(capsys, "lk", H, "1", "1")
    assert code == 2


def test_mu3(capsys):
    code, out, _ = run(capsys, "mu3", B)
    assert out.strip() == "mu(1,2,3) = 1"
    code, data = run_json(capsys, "mu3", B2, "--triples", "1,2,3")
    assert data["triples"] == [{"triple": [1, 2, 3], "value": 2, "modulus": 0}]
    code, _, _ = run(capsys, "mu3", B, "--triples", "2,1,3")
    assert code == 2


def test_magnus(capsys):
    code, out, _ = run(capsys, "magnus", B, "-k", "1")
    assert out.splitlines() == ["u1 = x2^-1 x3^-1 x2^+1 x3^+1", "M1 = 1 + h2h3 - h3h2"]
    code, data = run_json(capsys, "magnus", B, "-k", "2", "--scope", "1,2,3")
    assert data["word"] == [[1, -1], [1, 1]]


def test_equiv(capsys, tmp_path):
    code, out, _ = run(capsys, "equiv", B, B)
    assert code == 0 and out.startswith("YES\nshift 1=0")
    code, out, _ = run(capsys, "equiv", B, U3)
    assert code == 1 and "refuted: clasp counts differ" in out
    code, data = run_json(capsys, "equiv", B, B, "--bruteforce")
    assert data["result"] == "YES"
    code, _, err = run(capsys, "equiv", B2, B2, "--bruteforce", "--bound", "4")
    assert code == 2 and "bound" in err


def test_obstruct_borromean_vs_unlink(capsys):
    code, out, _ = run(capsys, "obstruct", B, U3)
    assert code == 1
    lines = out.splitlines()
    assert "result=NO" in lines and "check=triple-linking" in lines
    assert "mismatch=(1,2,3):1!=0" in lines
    assert lines[-1] == "NO: triple linking differs at (1,2,3): 1 ≠ 0"


def test_obstruct_other_cases(capsys, tmp_path):
    code, data = run_json(capsys, "obstruct", B, B)
    assert code == 0 and data["result"] == "YES"
    code, data = run_json(capsys, "obstruct", H, H3)
    assert code == 0 and data["check"] == "linking-number" and "witness" in data
    assert parse(data["witness"]["first"]).n == 2
    code, out, _ = run(capsys, "obstruct", B, H)
    assert code == 2 and "INVALID" in out
    linked = tmp_path / "linked.cc"
    linked.write_text("ccomplex v1\ncomponents 3\nword 1: a+\nword 2: a+\n")
    code, data = run_json(capsys, "obstruct", str(linked), str(linked))
    assert code == 0 and data["result"] == "NO-OBSTRUCTION"
    code, data = run_json(capsys, "obstruct", str(linked), B)
    assert code == 1 and data["check"] == "necessary-conditions"


def test_canon(capsys, tmp_path):
    prefix = str(tmp_path / "pair")
    code, out, _ = run(capsys, "canon", H, H3, "--out", prefix)
    assert code == 0 and out.startswith("YES")
    first = parse((tmp_path / "pair1.cc").read_text())
    second = parse((tmp_path / "pair2.cc").read_text())
    assert first.genus == second.genus
    assert "cancel_pair" in (tmp_path / "pair1.moves").read_text()
    code, data = run_json(capsys, "canon", H, H3)
    assert data["result"] == "YES"
    unlink2 = tmp_path / "u2.cc"
    unlink2.write_text("ccomplex v1\ncomponents 2\n")
    code, out, _ = run(capsys, "canon", H, str(unlink2))
    assert code == 1 and "linking numbers differ" in out


def test_move(capsys):
    code, out, _ = run(capsys, "move", H3, "--transpose", "1,1")
    assert code == 0
    assert out.startswith("# move transpose")
    assert "word 1: b+ a+ c-" in out and "genus 0 1" in out
    code, data = run_json(capsys, "move", B, "--cancel-pair", "1,2,0,0")
    assert parse(data["descriptor"]).word_str(1).startswith("d1+ d2-")
    assert data["move"]["kind"] == "cancel_pair"
    code, out, _ = run(capsys, "move", B, "--stabilize", "2")
    assert "genus 0 1 0" in out
    code, _, err = run(capsys, "move", B, "--transpose", "1,2")
    assert code == 2 and "partner" in err


def test_sub(capsys):
    code, out, _ = run(capsys, "sub", B, "1", "2")
    assert parse(out).word_str(1) == "c1- c2+"
    code, data = run_json(capsys, "sub", B, "3", "1")
    assert parse(data["descriptor"]).n == 2


def test_rand(capsys):
    code, out, _ = run(capsys, "rand", "--components", "3", "--clasps", "5", "--seed", "4")
    code2, out2, _ = run(capsys, "rand", "--components", "3", "--clasps", "5", "--seed", "4")
    assert out == out2 and len(parse(out).clasps) == 5
    code, data = run_json(capsys, "rand", "--components", "3", "--clasps", "4", "--zero-linking")
    assert parse(data["descriptor"]).n == 3


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["lk", B, "1"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ccomplex", "obstruct", B, U3],
                          capture_output=True, text=True, encoding="utf-8")
    assert proc.returncode == 1
    assert "(1,2,3): 1 ≠ 0" in proc.stdout


def test_data_file_matches_fixture():
    assert parse(Path(B).read_text()) == parse(BORROMEAN)
