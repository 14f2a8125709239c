import json
import subprocess
import sys

import pytest

from parahecke import cli
from parahecke.symgroup import from_word


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_klbasis_plus_table_22(capsys):
    code, out, _ = run(capsys, "klbasis", "--mu", "2,2", "--kind", "plus", "--format", "table")
    assert code == 0
    assert out.splitlines() == [
        "C_{13} = T_[13]",
        "C_{12321} = T_[12321] + (q^{-1}+q^{-3})T_[13]",
        "C_{121321} = T_[121321] + (q^{-1})T_[12321] + (q^{-4})T_[13]",
    ]


def test_klbasis_dagger_json_22(capsys):
    code, out, _ = run(capsys, "klbasis", "--mu", "2,2", "--kind", "dagger")
    data = json.loads(out)
    assert code == 0 and data["basis"] == "KLdagger" and len(data["elements"]) == 3


def test_rsk_labels_follow_length_then_word(capsys):
    code, out, _ = run(capsys, "rsk", "--mu", "2,1,1")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["label"] for r in rows] == ["D%d" % i for i in range(1, 8)]
    assert [r["rmin"] for r in rows][:3] == [[1, 2, 3, 4], [1, 3, 2, 4], [1, 2, 4, 3]]
    assert tuple(rows[6]["rmin"]) == from_word([2, 1, 3, 2], 4)


def test_cells_report_agreement(capsys):
    code, out, _ = run(capsys, "cells", "--mu", "2,1,1", "--kind", "plus")
    data = json.loads(out)
    assert code == 0 and all(data["matchesRSK"].values())
    code, out, _ = run(capsys, "cells", "--n", "4", "--side", "LR", "--format", "table")
    assert code == 0 and out.startswith("LR: ")


def test_cellmod_dimensions_222(capsys):
    code, out, _ = run(capsys, "cellmod", "--mu", "2,2,2")
    mods = json.loads(out)["modules"]
    assert code == 0 and sorted(m["dim"] for m in mods) == sorted(
        [1] + [2] * 2 + [3] * 3 + [1] + [1] + [2] * 2 + [1])


def test_cellular_round_trip(capsys):
    code, out, _ = run(capsys, "cellular", "--mu", "1,2,1", "--kind", "dagger")
    assert code == 0 and all(r["roundTrip"] for r in json.loads(out)["rows"])


def test_ideal_and_conjecture_222(capsys):
    code, out, _ = run(capsys, "ideal", "--mu", "2,2,2", "--N", "2")
    assert code == 0 and json.loads(out)["idealDim"] == 6
    code, out, _ = run(capsys, "conjecture", "--mu", "2,2,2", "--N", "2")
    rep = json.loads(out)
    assert code == 0 and rep["xyEqual"] and rep["idealDim"] == 6
    assert "elapsedMs" not in rep
    code, out, _ = run(capsys, "conjecture", "--mu", "2,2", "--N", "1", "--timing")
    assert code == 0 and "elapsedMs" in json.loads(out)


@pytest.mark.parametrize("argv", [
    ["klbasis"],
    ["bogus"],
    ["cosets", "--mu", "2,x"],
    ["cosets", "--mu", "8,1"],
    ["conjecture", "--mu", "2,2,1", "--N", "1"],
    ["conjecture", "--mu", "2,2"],
    ["rsk", "--mu", "2,2", "--kind", "nope"],
    ["cellmod", "--mu", "2,2", "--side", "LR"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_bound_flag_lifts_the_cap(capsys):
    code, out, _ = run(capsys, "cosets", "--mu", "8,1", "--bound", "9")
    assert code == 0 and json.loads(out)["count"] == 2


def test_refuted_check_exits_1(capsys, monkeypatch):
    def fake(spec, **kw):
        return {"mu": list(spec.mu), "N": spec.N, "idealDim": 1, "xyEqual": False,
                "barInvariantX": True, "xGenerates": True, "yGenerates": True,
                "xInIdeal": True, "yInIdeal": True, "rankMode": "exact", "elapsedMs": 0}
    monkeypatch.setattr(cli, "check_conjectures", fake)
    code, out, _ = run(capsys, "conjecture", "--mu", "2,2", "--N", "1")
    assert code == 1 and json.loads(out)["xyEqual"] is False


def test_failed_computation_exits_3(capsys, monkeypatch):
    def boom(spec, **kw):
        raise ArithmeticError("inconsistent ranks")
    monkeypatch.setattr(cli, "check_conjectures", boom)
    code, _, err = run(capsys, "conjecture", "--mu", "2,2", "--N", "1")
    assert code == 3 and "could not compute" in err


@pytest.mark.parametrize("argv", [
    ["klbasis", "--mu", "1,2,1", "--kind", "dagger"],
    ["rsk", "--mu", "2,2,1"],
    ["cells", "--mu", "2,2,1"],
    ["cellmod", "--mu", "2,1,1", "--kind", "plus"],
    ["conjecture", "--mu", "3,1,1", "--N", "2"],
])
def test_output_is_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "parahecke.cli"] + argv
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    results = json.loads(out)["results"]
    assert code == 0 and len(results) >= 20 and all(r["ok"] for r in results)
