import json
import subprocess
import sys

import pytest

from qrichardson import cli
from qrichardson.degeneration import extract_graded
from qrichardson.grassmann import plucker_poset, straightening_table
from qrichardson.lattice import diamond


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_grass_table_counts(capsys):
    code, out, _ = run(capsys, "grass", "table", "--m", "2", "--n", "4")
    data = json.loads(out)
    assert code == 0
    assert len(data["straightening"]) == 2 and len(data["commutation"]) == 36
    assert data["straightening"]["1,4|2,3"] == {"1,2|3,4": "-q^-2", "1,3|2,4": "q^-1"}


def test_table_round_trip(capsys):
    for q in ("symbolic", "2"):
        _, out, _ = run(capsys, "grass", "table", "--m", "2", "--n", "5", "--q", q)
        table = cli.table_from_json(json.loads(out))
        assert table == straightening_table(2, 5, None if q == "symbolic" else 2)


def test_determinism(capsys):
    first = run(capsys, "degenerate", "--m", "2", "--n", "4")[1]
    second = run(capsys, "degenerate", "--m", "2", "--n", "4")[1]
    assert first == second


def test_richardson_gk(capsys):
    code, out, _ = run(capsys, "richardson", "gk", "--alpha", "1,3", "--beta", "2,4")
    assert code == 0 and json.loads(out)["gk_dim"] == 3


def test_richardson_hilbert_and_gorenstein(capsys):
    code, out, _ = run(capsys, "richardson", "gorenstein", "--m", "2", "--n", "4",
                       "--alpha", "1,3", "--beta", "2,4", "--degree", "6")
    data = json.loads(out)
    assert code == 0 and data["h"] == [1, 4, 9, 16, 25, 36, 49]
    assert data["numerator"] == [1, 1] and data["gorenstein_indicator"] is True


def test_lattice_analyze_chain_file(tmp_path, capsys):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({"elements": [1, 2, 3, 4], "covers": [[1, 2], [2, 3], [3, 4]]}))
    code, out, _ = run(capsys, "lattice", "analyze", "--input", str(path))
    data = json.loads(out)
    assert code == 0 and data["rank"] == 3 == data["size"] - 1
    L, _ = cli.lattice_from_json(data["lattice"])
    assert [x for x in L.elements] == [1, 2, 3, 4]


def test_lattice_analyze_chain_product_format(tmp_path, capsys):
    path = tmp_path / "pi.json"
    members = [list(x) for x in plucker_poset(2, 4)[0].elements]
    path.write_text(json.dumps({"chain_product": {"sizes": [4, 4]}, "members": members}))
    code, out, _ = run(capsys, "lattice", "analyze", "--input", str(path))
    data = json.loads(out)
    assert data["irr"] == ["1,3", "1,4", "2,3", "3,4"]
    assert data["omega"]["1,4"] == 13


def test_lattice_round_trip():
    L = diamond()
    back, _ = cli.lattice_from_json(json.loads(cli.dumps(cli.lattice_to_json(L))))
    assert back == L


def test_presentation_round_trip():
    P = extract_graded(straightening_table(2, 4)).presentation
    back = cli.presentation_from_json(json.loads(cli.dumps(cli.presentation_to_json(P))))
    assert back.qmap == P.qmap and back.cmap == P.cmap and back.lattice == P.lattice


def test_toric_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "toric", "nf", "--m", "2", "--n", "4", "--word", "2,3;1,4")
    assert code == 0 and json.loads(out) == {"monomial": ["1,3", "2,4"], "scalar": "q^-1"}
    code, out, _ = run(capsys, "toric", "certify", "--m", "2", "--n", "4")
    assert json.loads(out)["confluent"] is True
    code, out, _ = run(capsys, "toric", "torus", "--m", "2", "--n", "4")
    data = json.loads(out)
    assert data["failures"] == [] and data["gk_dim"] == 5
    path = tmp_path / "p.json"
    path.write_text(cli.dumps(cli.presentation_to_json(extract_graded(straightening_table(2, 4)).presentation)))
    code, out2, _ = run(capsys, "toric", "torus", "--input", str(path))
    assert code == 0 and json.loads(out2)["images"] == data["images"]


def test_symbolic_nf_from_lattice_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps(cli.lattice_to_json(diamond())))
    code, out, _ = run(capsys, "toric", "nf", "--input", str(path), "--word", "b;c")
    assert json.loads(out) == {"monomial": ["a", "d"], "scalar": "C[b;c]"}


def test_grass_verify(capsys):
    code, out, _ = run(capsys, "grass", "verify", "--m", "2", "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["standard_monomials"]["2"] == 20


def test_text_format(capsys):
    code, out, _ = run(capsys, "richardson", "gk", "--alpha", "1,2", "--beta", "3,4", "--format", "text")
    assert code == 0 and "gk_dim: 5" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "o.json"
    code, out, _ = run(capsys, "richardson", "gk", "--alpha", "1,2", "--beta", "3,4", "--out", str(path))
    assert out == "" and json.loads(path.read_text())["gk_dim"] == 5


@pytest.mark.parametrize("argv,code,name", [
    (["richardson", "gk", "--alpha", "1,4", "--beta", "2,3"], 2, "NotComparable"),
    (["richardson", "gk", "--alpha", "x", "--beta", "2,3"], 2, "ParseError"),
    (["grass", "table", "--m", "3", "--n", "2"], 2, "BadShape"),
    (["grass", "table", "--m", "2", "--n", "4", "--q", "0"], 2, "ParseError"),
    (["richardson", "hilbert", "--alpha", "1,2", "--beta", "3,4", "--degree", "2"], 4, "ReconstructionFailed"),
    (["lattice", "analyze", "--input", "/nonexistent.json"], 2, "InvalidInput"),
])
def test_error_exit_codes(capsys, argv, code, name):
    got, out, err = run(capsys, *argv)
    assert got == code and out == ""
    assert json.loads(err)["error"] == name


def test_invariant_violation_exit_code(tmp_path, capsys):
    path = tmp_path / "m3.json"
    path.write_text(json.dumps({"elements": ["0", "x", "y", "z", "1"],
                                "covers": [["0", "x"], ["0", "y"], ["0", "z"], ["x", "1"], ["y", "1"], ["z", "1"]]}))
    code, _, err = run(capsys, "toric", "certify", "--input", str(path))
    assert code == 3 and json.loads(err)["error"] == "NotDistributive"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qrichardson", "richardson", "gk",
                           "--alpha", "1,3", "--beta", "2,4"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["gk_dim"] == 3
