import io
import json
import subprocess
import sys

import pytest

from regkt.workbench import main

from conftest import GOLDEN, NEGATIVE


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_kj2_prints_structure():
    assert run("kj2", str(GOLDEN / "c2xc2.grp")) == (0, "Z/2\n")
    assert run("kj2", str(GOLDEN / "trivial.grp")) == (0, "0\n")
    assert run("kj2", str(GOLDEN / "c6.grp")) == (0, "0\n")


def test_kj2_normal_and_extended():
    code, out = run("kj2", str(GOLDEN / "d4.grp"), "--normal", "(1 3)(2 4)")
    assert code == 0 and out == "Z/2 x Z/2\n"
    code, out = run("kj2", str(GOLDEN / "a4.grp"), "--normal", "(1 2)(3 4)", "--extended")
    assert code == 0 and out == "Z/2 x Z/2 x Z/2\n"


def test_kj2_json():
    code, out = run("--json", "kj2", str(GOLDEN / "a4.grp"))
    doc = json.loads(out)
    assert code == 0 and doc["structure"]["text"] == "Z/2" and doc["format"] == "regkt-format 1"
    assert doc["commutator_route"] == doc["structure"]


def test_parse_errors_exit_2(tmp_path):
    assert run("kj2", str(tmp_path / "missing.grp"))[0] == 2
    bad = tmp_path / "bad.grp"
    bad.write_text("regkt-format 1\nperm 3\n(1 2 4)\n")
    assert run("kj2", str(bad))[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("kj2", str(GOLDEN / "s3.grp"), "--normal", "(1 9)")[0] == 2
    assert run("excise", "extended", str(GOLDEN / "c4.grp"), str(GOLDEN / "c2.grp"))[0] == 2


def test_refused_computation_exits_1():
    assert run("extension", str(GOLDEN / "c2.grp"), "--universal")[0] == 1
    assert run("--cap", "4", "kj2", str(GOLDEN / "a4.grp"))[0] == 1


def test_group_check():
    code, out = run("group", "check", str(GOLDEN / "q8.grp"))
    assert code == 0 and "order=8" in out and "normal-subgroups=6" in out


def test_verify_commands():
    for lemma in ("lemma2", "lemma134", "lemma4", "lemma7"):
        code, out = run("verify", lemma, str(GOLDEN / "a4.grp"), "--normal", "(1 2)(3 4)", "--samples", "30")
        assert code == 0 and out.startswith("PASS"), out


def test_excise_commands():
    code, _ = run("excise", "product", str(GOLDEN / "c2xc2.grp"), str(GOLDEN / "c2.grp"))
    assert code == 0
    code, _ = run("excise", "extended", str(GOLDEN / "s3.grp"), str(GOLDEN / "c2.grp"), "--normal", "(1 2 3)")
    assert code == 0


def test_extension_canonical():
    code, out = run("extension", str(GOLDEN / "c2.grp"))
    assert code == 0 and "A=Z" in out


def test_splitcheck_short_seeds():
    code, out = run("splitcheck", str(GOLDEN / "c2.grp"), str(GOLDEN / "c2.grp"), "--depth", "5", "--seed-length", "1")
    assert code == 0 and "Converged" in out


def test_negative_corpus_exit_1():
    code, out = run("--seed", "3", "corpus", "run", str(NEGATIVE), "--samples", "10")
    assert code == 1
    assert out.count("FAIL") == 2


def test_json_byte_identical():
    args = ("--json", "--seed", "5", "verify", "lemma134", str(GOLDEN / "d4.grp"), "--normal", "(1 3)", "--samples", "40")
    first, second = run(*args), run(*args)
    assert first == second
    assert json.loads(first[1])["reports"][0]["seed"] == 5


def test_golden_corpus_exit_zero():
    code, out = run("corpus", "run", str(GOLDEN), "--samples", "200")
    assert code == 0, [ln for ln in out.splitlines() if ln.startswith("FAIL")]


def test_console_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "regkt.workbench", "kj2", str(GOLDEN / "c2xc2.grp")], capture_output=True, text=True
    )
    assert p.returncode == 0 and p.stdout == "Z/2\n"
