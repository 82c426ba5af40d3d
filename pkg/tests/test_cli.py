from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hopfcat.cli import main
from hopfcat.fileio import dumps_hopf, loads_hopf


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    for name in ("C2", "S3", "Q8", "D4"):
        assert name in out


def test_dump_and_check(capsys, tmp_path):
    path = tmp_path / "s3.json"
    assert run(capsys, "dump", "--group", "S3", "--field", "Fp:5", "-o", str(path))[0] == 0
    assert loads_hopf(path.read_text()).dim == 6
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0


def test_check_reports_axiom_failure(capsys, tmp_path, alg):
    d = json.loads(dumps_hopf(alg("C2")))
    d["counit"][0] = [0, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(d))
    code, out, err = run(capsys, "check", str(path))
    assert code == 1
    assert "counit-unit" in out + err


@pytest.mark.parametrize("argv,code,needle", [
    (["kernel", "--group", "S3", "--target", "C2", "--hom", "1"], 0, "dim=3"),
    (["cokernel", "--group", "C3", "--target", "S3", "--hom", "1"], 0, "dim=2"),
    (["factorize", "--group", "S3", "--target", "C2", "--hom", "1"], 0, "dim=2"),
    (["pullback", "--group", "S3", "--target", "C2", "--hom", "1", "--hom2", "1"], 0, "dim=18"),
    (["equalizer", "--group", "S3", "--target", "C2", "--hom", "1", "--hom2", "0"], 0, "dim=3"),
    (["hinv", "--group", "S3", "--target", "C2", "--hom", "1", "--sub", "e"], 0, "dim=3"),
    (["newman", "phi", "--group", "S3", "--sub", "(123)"], 0, "dim=4"),
    (["newman", "psi", "--group", "S3", "--sub", "(12)"], 0, "round trip=yes"),
    (["normal", "--group", "S3", "--sub", "(123)"], 0, "normal"),
    (["normal", "--group", "S3", "--sub", "(12)"], 1, "not normal"),
    (["commutator", "--group", "Q8"], 0, "dim=2"),
    (["commutator", "--group", "S3"], 0, "dim=3"),
    (["abelianize", "--group", "Q8"], 0, "dim=4"),
    (["smash", "--group", "C3", "--acting", "C2", "--action", "1"], 0, "commutative=no"),
    (["dual", "--group", "S3"], 0, ""),
    (["xmod", "check", "--group", "S3", "--sub", "(123)"], 0, ""),
    (["xmod", "check", "--group", "C2", "--carrier", "S3"], 1, "peiffer"),
    (["xmod", "to-cat1", "--group", "S3", "--sub", "(123)"], 0, "A1 dim=18"),
    (["xmod", "to-cat1", "--group", "C2", "--carrier", "S3", "--no-verify"], 1, "m:algebra-mult"),
    (["xmod", "from-cat1", "--group", "S3", "--graph", "pair"], 0, "crossed module"),
    (["xmod", "roundtrip", "--group", "S3", "--sub", "(123)"], 0, "round trip"),
])
def test_subcommands(capsys, argv, code, needle):
    got, out, err = run(capsys, *argv)
    assert got == code, out + err
    assert needle in out + err


def test_kernel_hom_images_form(capsys):
    code, out, _ = run(capsys, "kernel", "--group", "C4", "--target", "C2", "--images", "0,1,0,1")
    assert code == 0 and "dim=2" in out


def test_not_cat1_exits_one(capsys):
    code, _, err = run(capsys, "xmod", "from-cat1", "--group", "S3", "--graph", "over-K")
    assert code == 1 and "NotCat1Error" in err


@pytest.mark.parametrize("argv", [
    ["check", "--group", "S7"],
    ["check", "--group", "S3", "--field", "Fp:4"],
    ["check", "--group", "S3", "--field", "R"],
    ["kernel", "--group", "S3", "--target", "C2", "--hom", "99"],
    ["kernel", "--group", "C3", "--target", "C2", "--images", "0,1,1"],
    ["normal", "--group", "S3", "--sub", "(1234)"],
    ["check", "/nonexistent/file.json"],
])
def test_input_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_file_exit_two(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{ not json")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "line 1" in err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_suite_subcommand(capsys, tmp_path):
    out = tmp_path / "r.txt"
    code, _, _ = run(capsys, "suite", "--groups", "C2", "--fields", "Q", "--only", "hopf-axioms,normality-oracle",
                     "-o", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("SUITE seed=")
    assert [l.split()[1] for l in lines[1:]] == ["hopf-axioms", "normality-oracle"]


def test_suite_injection_exit_one(capsys):
    code, out, _ = run(capsys, "suite", "--groups", "S3", "--fields", "Q", "--only", "hopf-axioms",
                       "--inject", "mutated-antipode")
    assert code == 1 and "WITNESS" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfcat", "normal", "--group", "S3", "--sub", "(12)"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "not normal" in proc.stdout
