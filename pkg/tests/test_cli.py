import json
import subprocess
import sys

import pytest

from forestsym.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_x(capsys):
    code, out, _ = call(capsys, "compute", "X", "--m", "2,4,4,4", "--y", "rho")
    assert code == 0
    data = json.loads(out)
    terms = {tuple(t["partition"]): t["coeff"] for t in data["result"]["terms"]}
    assert terms[(4,)] == ["1", "1"]


def test_json_and_table_agree(capsys):
    _, js, _ = call(capsys, "compute", "rho", "--n", "3", "--basis", "h")
    _, tab, _ = call(capsys, "compute", "rho", "--n", "3", "--basis", "h", "--format", "table")
    data = json.loads(js)["result"]["terms"]
    assert [t["partition"] for t in data] == [[3], [2, 1], [1, 1, 1]]
    assert tab.splitlines()[0].split() == ["h(3)", "q^2", "+", "q", "+", "1"]


def test_byte_stable(capsys):
    runs = [call(capsys, "verify", "remark", "--max-n", "4", "--format", "json")[1] for _ in range(2)]
    assert runs[0] == runs[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "X", "--m", "2,1"],
        ["compute", "X", "--m", "2,2", "--decoration", "2"],
        ["compute", "llt", "--graph", "edges:1-3", "--n", "3"],
        ["compute", "csf", "--graph", "edges:1-3,2-3"],
        ["compute", "csf"],
        ["verify", "thm1", "--max-n", "-1"],
        ["verify", "stirling", "--seed", "1"],
        ["verify", "nothing"],
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_verify_exit_codes(capsys):
    assert call(capsys, "verify", "thm1", "--max-n", "4")[0] == 0
    assert call(capsys, "verify", "orientations", "--max-n", "4", "--seed", "5")[0] == 1


def test_other_computations(capsys):
    assert call(capsys, "compute", "stirling", "--n", "4")[0] == 0
    assert call(capsys, "compute", "csf", "--graph", "edges:1-2,1-3,1-4,2-3")[0] == 0
    assert call(capsys, "compute", "orientation-sum", "--m", "2,3,3")[0] == 0
    code, out, _ = call(capsys, "compute", "decorated-forests", "--m", "3,4,4,4", "--decoration", "1,2")
    assert code == 0
    flags = {tuple(c["partition"]): c["in_Nq"] for c in json.loads(out)["coefficients"]}
    assert flags[(3, 1)] is False


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "forestsym", "verify", "stirling", "--max-n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS stirling")
