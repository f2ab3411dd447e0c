import io
import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from symicis.cli import main

GOLDEN = Path(__file__).parent / "golden"
SCHEMA = json.loads(resources.files("symicis").joinpath("table.schema.json").read_text())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_qh_check():
    code, out, _ = run("qh-check", "--vars", "y,z", "--ideal", "y^2+z^4, y*z^2")
    assert code == 0 and out.strip() == "weights (2,1), degrees (4,4)"
    code, out, _ = run("qh-check", "--vars", "y,z", "--ideal", "y*z, y^3+z^2")
    assert code == 0 and out.strip() == "weights (2,3), degrees (5,6)"
    code, out, _ = run("qh-check", "--vars", "y,z", "--ideal", "y+y^2")
    assert code == 0 and out.strip() == "not quasi-homogeneous in given coordinates"


def test_restrict_basis():
    code, out, _ = run("restrict-basis", "--vars", "y,z", "--ideal", "y^2, z^4")
    assert code == 0 and out.strip() == "dim 3: dy^dz, z*dy^dz, z^2*dy^dz"
    code, out, _ = run("restrict-basis", "--vars", "y,z", "--ideal", "y^2, z^4", "--p", "2", "--closed", "--json")
    assert json.loads(out)["basis"] == ["dy^dz", "z*dy^dz", "z^2*dy^dz"]


def test_reduce_and_primitive():
    code, out, _ = run("reduce", "--vars", "y,z", "--ideal", "y^2, z^4", "--form", "dy^dz + z^3*dy^dz", "--json")
    assert code == 0 and json.loads(out)["coords"] == [1, 0, 0]
    code, out, _ = run("primitive", "--vars", "y,z", "--ideal", "y^2, z^4", "--form", "y^2*dy^dz")
    assert code == 0 and out.strip() == "alpha = -1/7*y^2*z*dy + 2/7*y^3*dz"
    code, _, err = run("primitive", "--vars", "y,z", "--ideal", "y^2, z^4", "--form", "2*y*dy^dz")
    assert code == 2 and "in_ideal" in err
    code, _, _ = run("primitive", "--vars", "y,z", "--ideal", "y^2, z^4", "--form", "2*y*dy^dz",
                     "--allow-outside-ideal")
    assert code == 0


def test_invariants():
    code, out, _ = run("invariants", "--vars", "y,z", "--ideal", "y^2, z^4", "--form", "z^2*dy^dz", "--n", "1",
                       "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["mu"], data["iota"], data["zero_restriction"], data["realizable"]) == (2, 2, False, False)
    code, out, _ = run("invariants", "--vars", "y,z", "--ideal", "y^2, z^4", "--form", "z^2*dy^dz", "--n", "2")
    assert out.splitlines()[-1] == "realizable on C^4: yes"
    code, out, _ = run("invariants", "--n", "2", "--ideal", "p1^2, p2^4, q1, q2", "--json")
    data = json.loads(out)
    assert (data["mu"], data["iota"], data["zero_restriction"], data["realizable"]) == (3, "inf", True, True)


def test_classify():
    code, out, _ = run("classify", "--family", "I10star", "--n", "2", "--ideal", "p1^2, p2^4, q1, q2+p1*p2")
    assert code == 0
    assert out.splitlines()[0] == "I*_10^1: cod = 1, mu = 1, i = 1"
    code, out, _ = run("classify", "--n", "2", "--ideal", "p1^2, p2^4, q1, q2+p1*p2", "--json")
    assert json.loads(out)["coords"] == [0, 1, 0]


def test_input_file(tmp_path):
    f = tmp_path / "germ.txt"
    f.write_text("# I10* class 2\nvars: p1,p2,q1,q2\nideal: p1^2, p2^4, q1, q2+p1*p2^2\n")
    code, out, _ = run("classify", "--n", "2", "--input", str(f), "--json")
    assert code == 0 and json.loads(out)["index"] == 2


@pytest.mark.parametrize("argv,code", [
    (["restrict-basis", "--vars", "y,z", "--ideal", "y^2"], 2),
    (["restrict-basis", "--vars", "y,z", "--ideal", "y^^2"], 1),
    (["restrict-basis", "--vars", "y,z"], 1),
    (["table", "--family", "Iab", "--a", "2", "--b", "3", "--n", "2"], 2),
    (["table", "--family", "E6", "--n", "2"], 2),
    (["table", "--n", "2"], 1),
    (["bogus"], 1),
    ([], 1),
    (["classify", "--n", "1", "--ideal", "p1^3, q1^3"], 2),
    (["restrict-basis", "--vars", "y,z", "--ideal", "y^2,z^4", "--p", "3"], 2),
    (["classify", "--n", "2", "--input", "/nonexistent/file"], 1),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code


def test_domain_errors_name_precondition():
    _, _, err = run("restrict-basis", "--vars", "y,z", "--ideal", "y^2")
    assert "zero_dimensional" in err
    _, _, err = run("table", "--family", "Ia+5", "--a", "3", "--n", "2")
    assert "parameters" in err


GOLDEN_CASES = {
    "Iab_2_2_n1": ["--family", "Iab", "--a", "2", "--b", "2", "--n", "1"],
    "Iab_2_2_n2": ["--family", "Iab", "--a", "2", "--b", "2", "--n", "2"],
    "I2a+1_3_n2": ["--family", "I2a+1", "--a", "3", "--n", "2"],
    "I2a+4_2_n2": ["--family", "I2a+4", "--a", "2", "--n", "2"],
    "Ia+5_4_n2": ["--family", "Ia+5", "--a", "4", "--n", "2"],
    "I10star_n1": ["--family", "I10star", "--n", "1"],
    "I10star_n2": ["--family", "I10star", "--n", "2"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_table_golden(name):
    code, out, _ = run("table", *GOLDEN_CASES[name], "--json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()
    jsonschema.validate(json.loads(out), SCHEMA)


def test_table_text():
    code, out, _ = run("table", "--family", "I10star", "--n", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "I*_10, n = 2"
    assert "i=inf" in lines[4]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symicis", "qh-check", "--vars", "y,z", "--ideal", "y^2, z^4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "weights (2,1), degrees (4,4)"
