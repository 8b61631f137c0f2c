import subprocess
import sys

import pytest

from partbase.acceptance import fixture_path
from partbase.cli import cycle_notation, main, table_rows


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_size(capsys):
    assert run(["size", "7", "3"], capsys)[:2] == (0, "4 (Thm1(4) exception (7,3))\n")
    assert run(["size", "8", "3", "--alt"], capsys)[:2] == (0, "3 (Thm2(3) a=b^k-1)\n")
    assert run(["size", "2", "2"], capsys)[:2] == (3, "undefined (action unfaithful)\n")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["size", "x", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["size", "1", "3"])
    assert exc.value.code == 2


def test_witness_then_verify(tmp_path, capsys):
    out = tmp_path / "w.txt"
    code, stdout, _ = run(["witness", "11", "4", "--out", str(out), "--workers", "1"], capsys)
    assert code == 0 and "complement(a'=5,kappa=3" in stdout
    assert "size: 3" in out.read_text()
    assert run(["verify", str(out)], capsys)[:2] == (0, "BASE\n")


def test_alt_witness_is_the_triple(tmp_path, capsys):
    out = tmp_path / "w.txt"
    assert run(["witness", "8", "3", "--alt", "--out", str(out)], capsys)[0] == 0
    assert out.read_text() == fixture_path().read_text()
    assert run(["verify", str(out), "--alt"], capsys)[0] == 0


def test_witness_unfaithful(capsys):
    assert run(["witness", "2", "2"], capsys)[0] == 3


def test_witness_exhausted(monkeypatch, capsys):
    from partbase import cli
    from partbase.core import UNAVAILABLE, Params, Provenance, WitnessCertificate

    def unavailable(a, b, group, **kw):
        return WitnessCertificate(Params(a, b), group, (), Provenance("search_fallback"), UNAVAILABLE,
                                  expected_size=3, detail="no base found among 1 candidates")

    monkeypatch.setattr(cli, "dispatch_witness", unavailable)
    code, _, err = run(["witness", "5", "3", "--budget", "1"], capsys)
    assert code == 4 and "witness unavailable" in err


def test_verify_fixture(capsys):
    assert run(["verify", str(fixture_path()), "--alt"], capsys)[:2] == (0, "BASE\n")
    code, out, _ = run(["verify", str(fixture_path())], capsys)
    assert code == 1 and out.startswith("NOT A BASE") and "witness: (0 7)" in out


def test_verify_one_based(capsys):
    path = fixture_path().parent / "alt_8_3_onebased.witness"
    assert run(["verify", str(path), "--alt", "--index-base", "1"], capsys)[0] == 0
    assert run(["verify", str(path), "--alt"], capsys)[0] == 2


def test_verify_identical_partitions(tmp_path, capsys):
    text = ("# partbase witness\na: 2\nb: 3\ngroup: sym\nsize: 2\nprovenance: manual\n"
            "status: unverified\nverifier: partbase 1\npartitions:\n"
            "0 1 | 2 3 | 4 5\n0 1 | 2 3 | 4 5\nend\n")
    path = tmp_path / "dup.txt"
    path.write_text(text)
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1 and "NOT A BASE" in out and "witness: (0 1)" in out


def test_verify_bare_codeset(tmp_path, capsys):
    path = tmp_path / "code.txt"
    path.write_text("0\n1\n")
    assert run(["verify", str(path), "--alt"], capsys)[0] == 0
    assert run(["verify", str(path)], capsys)[0] == 1


def test_verify_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("# partbase witness\na: 2\n")
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 2 and "line 3" in err


def test_table(capsys):
    rows = table_rows(8, 3, alt=False)
    b3 = dict(zip(rows[0][1:], rows[2][1:]))
    assert (b3["2"], b3["7"], b3["5"]) == ("4", "4", "3")
    rows = table_rows(8, 2, alt=True)
    b2 = dict(zip(rows[0][1:], rows[1][1:]))
    assert (b2["2"], b2["7"], b2["8"]) == ("-", "4", "5")
    code, out, _ = run(["table", "--amax", "1", "--bmax", "1"], capsys)
    assert code == 0 and out == "b/a\n"
    code, out, _ = run(["table", "--amax", "3", "--bmax", "2", "--format", "tsv"], capsys)
    assert out == "b/a\t2\t3\n2\t-\t4\n"


def test_cycle_notation():
    assert cycle_notation([1, 0, 2, 4, 5, 3]) == "(0 1)(3 4 5)"
    assert cycle_notation([0, 1]) == "()"


def test_selftest_detects_tampering(tmp_path, capsys):
    text = fixture_path().read_text().replace(
        "0 1 2 3 4 5 6 7 | 8 9 10 11 12 13 14 15 |", "0 1 2 3 4 5 6 8 | 7 9 10 11 12 13 14 15 |")
    bad = tmp_path / "tampered.witness"
    bad.write_text(text)
    code, out, _ = run(["selftest", "--fixture", str(bad)], capsys)
    assert code == 1 and "[FAIL] criterion 6" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partbase", "size", "5", "7", "--alt"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2 (Thm2(2) b=a+2)\n"
