import json
import subprocess
import sys

import pytest

from thompson.cli import main
from thompson.plmap import PLMap
from thompson.words import Word, realize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "word, point, want",
    [("x[1]", "3/2^2", "5/2^3"), ("G[0]", "0", "-1/2^1"), ("", "1/2^1", "1/2^1")],
)
def test_eval(capsys, word, point, want):
    assert run(capsys, "eval", word, point) == (0, want + "\n", "")


@pytest.mark.parametrize(
    "a, b, code, verdict",
    [
        ("x[1]*x[0]", "x[0]*x[2]", 0, "equal"),
        ("G[0]*G[1]", "G[1]*G[0]", 1, "not equal"),
        ("x[0]*x[0]^-1", "", 0, "equal"),
        ("", "G[2]*G[2]^-1", 0, "equal"),
    ],
)
def test_eq(capsys, a, b, code, verdict):
    got, out, _ = run(capsys, "eq", a, b)
    assert (got, out.strip()) == (code, verdict)


def test_errors_exit_2(capsys):
    for argv in (
        ["eval", "q[0]", "0"],
        ["eval", "x[0]", "3"],
        ["eval", "x[0]", "1/3"],
        ["eq", "x[0]", "G[0]"],
        ["member", "G[0]", "F(a,b)"],
        ["convert", "G[0]", "--family", "g", "--n", "5"],
        ["convert", "x[0]", "--family", "g"],
        ["verify", "nope"],
        ["rho", "1", "x[0]"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 2, argv
        assert "error" in err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_convert(capsys):
    assert run(capsys, "convert", "x[2]", "--family", "g", "--n", "5")[1] == "g[2]@5*g[3]@5*g[4]@5*g[5]@5\n"
    assert run(capsys, "convert", "g[2]@5", "--family", "x")[1] == "x[2]*x[3]^-1\n"
    _, gw, _ = run(capsys, "convert", "x[3]", "--family", "g", "--n", "6")
    assert run(capsys, "convert", gw.strip(), "--family", "x")[1] == "x[3]\n"
    assert run(capsys, "convert", "g[0]@5*g[2]@5^-1", "--family", "G")[1] == "G[0]*G[2]^-1\n"
    _, text, _ = run(capsys, "convert", "x[0]", "--family", "map")
    assert PLMap.from_text(text) == realize(Word.parse("x[0]"))


def test_plot(capsys):
    assert run(capsys, "plot", "xt[0]")[1] == "# domain\treal\n# tails\t-1\t-1\nx\ty\n"
    assert run(capsys, "plot", "G[0]")[1] == (
        "# domain\treal\n# tails\t0\t0\nx\ty\n-1\t-1\n0\t-1/2^1\n1/2^1\t0\n1\t1\n"
    )
    assert run(capsys, "plot", "")[1] == "# domain\treal\n# tails\t0\t0\nx\ty\n"
    data = json.loads(run(capsys, "plot", "x[0]", "--format", "json")[1])
    assert data == {"domain": "unit", "points": [["1/2^1", "1/2^2"], ["3/2^2", "1/2^1"]]}


def test_mul_inv_member_support(capsys):
    _, text, _ = run(capsys, "mul", "G[0]", "G[1]")
    assert PLMap.from_text(text) == realize(Word.parse("G[0]*G[1]"))
    assert run(capsys, "mul", "G[0]", "G[0]^-1", "--format", "word")[1] == "\n"
    _, text, _ = run(capsys, "inv", "x[1]")
    assert PLMap.from_text(text) == realize(Word.parse("x[1]^-1"))
    assert run(capsys, "inv", "G[0]*G[1]", "--format", "word")[1] == "G[1]^-1*G[0]^-1\n"
    assert run(capsys, "member", "G[0]", "Ft'")[0] == 0
    assert run(capsys, "member", "xt[0]", "Ft'")[:2] == (1, "not a member\n")
    assert run(capsys, "member", "G[2]", "F(a,b)", "--interval", "1", "3")[0] == 0
    assert run(capsys, "support", "G[3]")[1] == "[2, 4]\n"
    assert run(capsys, "support", "")[1] == "empty\n"


def test_rho_sigma_make_h(capsys):
    assert run(capsys, "rho", "3", "G[0]*G[1]^-1")[1] == "G[3]*G[4]^-1\n"
    assert run(capsys, "sigma", "1", "G[1]", "--format", "word")[1] == "G[5]\n"
    _, text, _ = run(capsys, "sigma", "1", "G[1]")
    assert PLMap.from_text(text) == realize(Word.parse("G[5]"))
    _, text, _ = run(capsys, "make-h", "1", "4")
    assert PLMap.from_text(text)(4).format() == "0"


def test_map_file_roundtrip(capsys, tmp_path):
    _, text, _ = run(capsys, "mul", "G[0]*G[3]", "G[1]^-1")
    path = tmp_path / "f.map"
    path.write_text(text)
    assert run(capsys, "eq", str(path), "G[0]*G[3]*G[1]^-1")[0] == 0
    _, again, _ = run(capsys, "mul", str(path), "")
    assert again == text
    _, inv, _ = run(capsys, "inv", str(path))
    path2 = tmp_path / "g.map"
    path2.write_text(inv)
    assert run(capsys, "eq", str(path2), "G[1]*G[3]^-1*G[0]^-1")[0] == 0
    bad = tmp_path / "bad.map"
    bad.write_text("domain: real\nbp: 0\n")
    assert run(capsys, "eval", str(bad), "0")[0] == 2


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "presentations", "--g-window=-8..8")
    assert code == 0 and out.startswith("[PASS] presentations") and "ALL PASS" in out
    code, out, _ = run(capsys, "verify", "lemma41", "--k=3", "--samples=40")
    assert code == 0 and "note: k=3" in out
    assert run(capsys, "verify", "remark-identity")[0] == 0
    out_file = tmp_path / "r.csv"
    assert run(capsys, "verify", "cost", "--format", "records", "--output", str(out_file))[0] == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "check,params,instance,verdict"
    assert all(ln.endswith(",pass") for ln in lines[1:])
    _, timed, _ = run(capsys, "verify", "cost", "--timing")
    assert "s\n" in timed.splitlines()[0] + "\n"


def test_verify_output_deterministic(capsys):
    a = run(capsys, "verify", "lemma41", "--k=2", "--samples=20", "--seed=7", "--verbose")
    b = run(capsys, "verify", "lemma41", "--k=2", "--samples=20", "--seed=7", "--verbose")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "thompson", "eval", "x[1]", "3/2^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5/2^3\n"
