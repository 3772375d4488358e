import json
import subprocess
import sys

import pytest

from vltwist import cli
from vltwist.report import FAIL, Check, Report


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "vltwist", *args], capture_output=True, text=True)


def test_list_suites():
    out = run_cli("list-suites")
    assert out.returncode == 0
    names = [line.split()[0] for line in out.stdout.splitlines()]
    assert names == sorted([
        "lemma2_3", "lemma3_1", "lemma3_2", "lemma3_3_coproduct",
        "lemma3_3_twist", "lemma3_4", "theorem2_6", "hopf_axioms",
    ])


def test_eval_modes(capsys):
    assert cli.main(["eval", "--expr", "L(1,0)*L(0,1)"]) == 0
    assert capsys.readouterr().out == "L(1,1) + L(0,1)*L(1,0)\n"
    assert cli.main(["eval", "--expr", "L(0,0)"]) == 0
    assert capsys.readouterr().out == "0\n"
    assert cli.main(["eval", "--expr", "d1*L(1,0)", "--antipode"]) == 0
    assert capsys.readouterr().out == "-L(1,0) + d1*L(1,0)\n"
    assert cli.main(["eval", "--expr", "L(1,0)", "--coproduct"]) == 0
    assert capsys.readouterr().out == "t^0 · 1 ⊗ L(1,0) : 1\nt^0 · L(1,0) ⊗ 1 : 1\n"
    assert cli.main(["eval", "--expr", "L(1,0)", "--twist-coproduct", "--order", "1"]) == 0
    assert "t^1 · L(1,0) ⊗ L(1,0) : -1" in capsys.readouterr().out


def test_eval_syntax_error_exit_code(capsys):
    assert cli.main(["eval", "--expr", "d1 +* 2"]) == 2
    assert "column 5" in capsys.readouterr().err


def test_verify_passing_exit_zero(tmp_path):
    out_file = tmp_path / "r.json"
    res = run_cli("verify", "--suite", "lemma3_3_twist", "--order", "2", "--format", "json", "--out", str(out_file))
    assert res.returncode == 0
    assert res.stdout == ""
    d = json.loads(out_file.read_text(encoding="utf-8"))
    assert d["suite"] == "lemma3_3_twist" and d["params"]["order"] == 2


def test_negative_values_and_lists(capsys):
    code = cli.main([
        "verify", "--suite", "lemma3_4", "--order", "2", "--a", "-1/3",
        "--beta", "-1,2;1/2,3", "--format", "json",
    ])
    assert code == 0
    d = json.loads(capsys.readouterr().out)
    assert d["params"]["a"] == ["-1/3"]
    assert d["params"]["beta"] == ["(-1, 2)", "(1/2, 3)"]


def test_any_failure_gives_nonzero(monkeypatch, capsys):
    def fake(name, ctx, extras):
        r = Report(name, {})
        r.add(Check("broken", FAIL))
        return r

    monkeypatch.setattr(cli, "run_suite", fake)
    assert cli.main(["verify", "--suite", "lemma3_1"]) == 1
    assert "broken" in capsys.readouterr().out


def test_inadmissible_context_rejected(capsys):
    assert cli.main(["verify", "--suite", "theorem2_6", "--T", "1,1", "--alpha", "1,1"]) == 2
    assert "inadmissible" in capsys.readouterr().err


def test_unknown_suite_rejected():
    res = run_cli("verify", "--suite", "lemma9_9")
    assert res.returncode == 2


def test_bad_rational_rejected():
    with pytest.raises(SystemExit):
        cli.main(["verify", "--suite", "lemma2_3", "--a", "1/0"])


def test_determinism_byte_identical():
    a = run_cli("verify", "--suite", "theorem2_6", "--seed", "7", "--format", "json")
    b = run_cli("verify", "--suite", "theorem2_6", "--seed", "7", "--format", "json")
    assert a.returncode == b.returncode == 0
    assert a.stdout.encode() == b.stdout.encode()
    assert json.loads(a.stdout)["params"]["seed"] == 7
