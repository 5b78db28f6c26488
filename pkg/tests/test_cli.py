import csv
import io

import pytest

from molqubit.classifier import classify
from molqubit.cli import fmt, main
from molqubit.couplings import XxzCouplings


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_fmt():
    assert fmt(0.0) == "0.000000000000"
    assert fmt(-0.0) == "0.000000000000"
    assert fmt(-1e-17) == "0.000000000000"
    assert fmt(1 / 5**0.5) == "0.447213595500"
    assert fmt(-1.5) == "-1.500000000000"


def test_stark_map(capsys):
    code, out, _ = run(capsys, "stark-map", "--eta-range", "0:6:13", "--label-max", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "eta,N_label,M_N,energy_Be"
    assert lines[1] == "0.000000000000,0,0,0.000000000000"
    data = rows(out)
    assert len(data) == 13 * 9
    first = [r for r in data if r["eta"] == "0.000000000000"]
    assert {(r["N_label"], r["M_N"]): r["energy_Be"] for r in first}[("1", "0")] == "2.000000000000"
    keys = [(float(r["eta"]), int(r["N_label"]), int(r["M_N"])) for r in data]
    assert keys == sorted(keys)


def test_elements(capsys):
    code, out, _ = run(capsys, "elements", "--encoding", "0,0:2,0", "--eta", "0")
    assert code == 0
    r = rows(out)[0]
    assert all(float(r[k]) == 0 for k in r if k != "eta")
    code, out, _ = run(capsys, "elements", "--kind", "quadrupole", "--encoding", "0,0:2,0", "--eta", "0")
    assert rows(out)[0]["trans_0"] == "0.447213595500"
    code, out, _ = run(capsys, "elements", "--encoding", "0,0:2,2", "--eta-range", "0:6:7")
    for r in rows(out):
        assert all(float(r[k]) == 0 for k in r if k.startswith("trans"))


def test_couplings(capsys):
    code, out, _ = run(capsys, "couplings", "--encoding", "0,0:2,0", "--eta", "0")
    r = rows(out)[0]
    assert [float(r[k]) for k in ("J_z", "J_perp", "W", "V")] == [0, 0, 0, 0]
    assert r["class"] == "0/0"
    code, out, _ = run(capsys, "couplings", "--kind", "quadrupole", "--encoding", "0,0:2,0", "--eta", "0")
    r = rows(out)[0]
    assert r["J_perp"] == "2.400000000000" and r["J_z"] == "0.081632653061"
    code, out, _ = run(capsys, "couplings", "--encoding", "0,0:2,1", "--eta-range", "0:6:25")
    data = rows(out)
    assert len(data) == 25
    for r in data:
        c = XxzCouplings("dipole", float(r["J_z"]), float(r["J_perp"]), float(r["W"]), float(r["V"]))
        assert classify(c).code == r["class"]
        if float(r["eta"]) > 0:
            assert float(r["J_perp"]) < 0


def test_couplings_default_grid(capsys):
    code, out, _ = run(capsys, "couplings", "--kind", "quadrupole")
    assert code == 0 and len(rows(out)) == 201


@pytest.mark.parametrize(
    "encoding, eta, expected",
    [
        ("0,0,A:0,0,B", "1", "0/0 interactionless"),
        ("0,0:1,0", "0", "0/1 spin-exchange"),
        ("0,0,A:1,0,B", "0", "0/0 interactionless"),
        ("0,0,A:1,0,B", "1", "1/0 Ising"),
    ],
)
def test_classify_report(capsys, encoding, eta, expected):
    code, out, _ = run(capsys, "classify", "--encoding", encoding, "--eta", eta)
    assert code == 0
    assert f"class: {expected}" in out
    stanza = out.split("[classification]\n", 1)[1]
    kv = dict(line.split(" = ", 1) for line in stanza.splitlines())
    assert f"{kv['class']} {kv['name']}" == expected
    assert kv["encoding"] == encoding


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "--encoding", "0,0:1,0", "--eta", "0", "--chain", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8 and all(len(l.split(",")) == 8 for l in lines)
    code, out2, _ = run(capsys, "lattice", "--encoding", "0,0:1,0", "--eta", "0",
                        "--positions", "0,0,0;1,0,0;2,0,0")
    assert out2 == out


def test_convert_field(capsys, tmp_path):
    code, out, _ = run(capsys, "convert-field", "--d", "1", "--be", "503.4", "--field", "1")
    assert code == 0 and abs(float(out) - 1.0) < 1e-4
    cfg = tmp_path / "m.cfg"
    cfg.write_text("name = X\nB_e = 1006.8 MHz\nd = 1 Debye\n")
    code, out, _ = run(capsys, "convert-field", "--config", str(cfg), "--field", "1")
    assert abs(float(out) - 0.5) < 1e-4


def test_out_file(capsys, tmp_path):
    path = tmp_path / "o.csv"
    code, out, _ = run(capsys, "stark-map", "--eta", "0", "--label-max", "1", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_bytes().startswith(b"eta,N_label,M_N,energy_Be\n0.000000000000,0,0,")


@pytest.mark.parametrize(
    "argv",
    [
        ["stark-map", "--eta", "-1"],
        ["stark-map", "--eta-range", "3:1:5"],
        ["stark-map", "--eta-range", "0:1"],
        ["couplings", "--encoding", "0,0"],
        ["couplings", "--tol", "0"],
        ["classify", "--encoding", "0,0:1,0"],
        ["lattice", "--eta", "0"],
        ["convert-field", "--field", "1"],
        ["stark-map", "--config", "/nonexistent/file"],
        ["nonsense"],
        ["couplings", "--kind", "octupole"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_convergence_failure_exit_3(capsys):
    assert main(["stark-map", "--eta", "10", "--label-max", "2", "--nmax", "4"]) == 3
    assert main(["classify", "--eta", "10", "--nmax", "3"]) == 3


def test_config_nmax_used(capsys, tmp_path):
    cfg = tmp_path / "m.cfg"
    cfg.write_text("nmax = 4\n")
    assert main(["stark-map", "--eta", "10", "--config", str(cfg)]) == 3
