import subprocess
import sys

import pytest

from topocode import __version__
from topocode.cli import run
from topocode.families import optimal_toric
from topocode.surface import format_embedding, parse_embedding


def cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "topocode", *argv], input=stdin, capture_output=True, text=True
    )


@pytest.fixture
def opt3(tmp_path):
    p = tmp_path / "opt3.emb"
    p.write_text(format_embedding(optimal_toric(3)))
    return str(p)


def test_family_pipe_inspect():
    fam = cli("family", "optimal-toric", "--d", "3")
    assert fam.returncode == 0
    out = cli("inspect", "-", stdin=fam.stdout)
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert "surface: torus" in lines
    assert "code: [[10,2,3 (formula→verified)]]" in lines
    assert "connectivity c: 4" in lines
    assert "ground degeneracy: 4" in lines


def test_stdin_and_file_agree(opt3):
    with open(opt3) as fh:
        text = fh.read()
    assert cli("inspect", opt3).stdout == cli("inspect", "-", stdin=text).stdout


def test_inspect_distance_flag(opt3, capsys):
    assert run(["inspect", opt3, "--distance"]) == 0
    assert "code: [[10,2,3]]" in capsys.readouterr().out


def test_family_out_file(tmp_path, capsys):
    out = tmp_path / "k.emb"
    assert run(["family", "complete", "--s", "5", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert parse_embedding(out.read_text()).E == 10


def test_family_missing_parameter():
    assert cli("family", "planar", "--d", "3").returncode == 2


def test_distance_oracle(opt3, capsys):
    assert run(["distance", opt3, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "d: 3" in out and "agree" in out


def test_distance_oracle_refuses_large(tmp_path, capsys):
    assert run(["family", "kitaev-toric", "--d", "5", "--out", str(tmp_path / "k5")]) == 0
    assert run(["distance", str(tmp_path / "k5"), "--oracle"]) == 1
    assert "error:" in capsys.readouterr().err


def test_detect(opt3, capsys):
    assert run(["detect", opt3, "--pauli", "Z" + "I" * 9]) == 0
    out = capsys.readouterr().out
    assert "detectable: yes" in out and "weight: 1" in out
    assert run(["detect", opt3, "--pauli", "ZZ"]) == 1


def test_export(opt3, capsys):
    assert run(["export-check", opt3]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "n 10 rx 5 rz 5"


def test_connect_sum(opt3, capsys):
    assert run(["connect-sum", opt3, "0", opt3, "0"]) == 0
    c = parse_embedding(capsys.readouterr().out)
    assert c.E == 20 and c.info().chi == -2


def test_rates(capsys):
    assert run(["rates", "--figure1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("family,n,k,d,verified,t_over_n,k_over_n")
    assert lines[1].startswith("complete_selfdual:s=5,10,2,3,verified,0.100000,0.200000")


def test_hamming_bound(capsys):
    assert run(["hamming-bound", "--from", "0.01", "--to", "0.18", "--samples", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,rate" and len(lines) == 6
    assert run(["hamming-bound", "--from", "0", "--to", "0.18", "--samples", "5"]) == 1


def test_exit_codes(tmp_path):
    assert cli("inspect", str(tmp_path / "missing")).returncode == 1
    bad = tmp_path / "bad"
    bad.write_text("vertices 1\nedge 0 0 5\n")
    r = cli("inspect", str(bad))
    assert r.returncode == 1 and "line 2" in r.stderr
    assert cli("nonsense").returncode == 2
    assert cli().returncode == 2


def test_version():
    r = cli("--version")
    assert r.returncode == 0 and r.stdout.startswith(f"topocode {__version__} (")
