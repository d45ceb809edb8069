import json
import subprocess
import sys

import pytest

from stablegroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)


@pytest.mark.parametrize("group,subset,lower,upper", [
    ("cyclic:9", "0,1", 3, 4),
    ("ut3_3", "paper", 3, 6),
    ("cyclic:5", "0", 5, 5),
    ("alt4", "e,b,t", 2, 3),
])
def test_indices(capsys, group, subset, lower, upper):
    code, out, _ = run(capsys, "indices", "--group", group, "--subset", subset)
    f = fields(out)
    assert code == 0 and (int(f["lower"]), int(f["upper"])) == (lower, upper)
    code, out, _ = run(capsys, "indices", "--group", group, "--subset", subset, "--output", "structured")
    data = json.loads(out)
    assert (data["lower"], data["upper"]) == (lower, upper)
    assert data["components"] == int(f["components"])


def test_indices_components(capsys):
    _, out, _ = run(capsys, "indices", "--group", "cyclic:6", "--subset", "0,2")
    assert fields(out)["components"] == "2"


def test_indices_left(capsys):
    code, out, _ = run(capsys, "indices", "--group", "dihedral:4", "--subset", "e,a,b", "--side", "left")
    assert code == 0 and fields(out)["lower"] == "2"


def test_stable(capsys):
    assert run(capsys, "stable", "--group", "quaternion8")[0] == 0
    code, out, _ = run(capsys, "stable", "--group", "cyclic:6")
    assert code == 1 and fields(out)["witness"] == "{0, 1}"
    assert run(capsys, "stable", "--group", "dihedral:8")[0] == 1
    code, out, _ = run(capsys, "stable", "--group", "c7_rtimes_c3", "--output", "structured")
    assert code == 1 and json.loads(out)["upper"] == 6
    assert run(capsys, "stable", "--group", "quaternion8xcyclic:3")[0] == 3


def test_classify(capsys):
    code, out, _ = run(capsys, "classify")
    assert code == 0 and out.rstrip().endswith("all_pass: yes")
    code, out, _ = run(capsys, "classify", "--output", "structured")
    assert code == 0 and len(json.loads(out)["catalog"]) == 14
    assert run(capsys, "classify", "--budget-nodes", "10")[0] == 3


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--group", "cyclic:12")
    assert code == 0 and fields(out)["subset"] == "{0, 3, 8}"
    code, out, _ = run(capsys, "witness", "--group", "cyclic:12", "--normal", "0,4,8", "--g", "3", "--h", "8",
                       "--output", "structured")
    data = json.loads(out)
    assert code == 0 and data["lower"] < data["upper"]
    code, _, err = run(capsys, "witness", "--group", "cyclic:12", "--normal", "0,4,8", "--g", "1")
    assert code == 2 and "g-power" in err
    assert run(capsys, "witness", "--group", "cyclic:7")[0] == 2


def test_export(capsys):
    code, out, _ = run(capsys, "export", "--group", "cyclic:5", "--subset", "0,1")
    assert code == 0 and out.count(" -- ") == 5
    code, out, _ = run(capsys, "export", "--group", "alt4", "--subset", "paper", "--highlight", "witness-small")
    assert out.count(" -- ") == 30 and out.count("palegreen") == 2
    code, out, _ = run(capsys, "export", "--group", "dihedral:6", "--subset", "paper")
    assert out.count("[label=") == 12 and out.count(" -- ") == 24
    _, again, _ = run(capsys, "export", "--group", "dihedral:6", "--subset", "paper")
    assert again == out
    _, out, _ = run(capsys, "export", "--group", "cyclic:5", "--subset", "0,1", "--highlight", "0,2")
    assert out.count("palegreen") == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--group", "cyclic:8", "--subset", "0,1")
    assert code == 0 and "agree" in out
    code, out, _ = run(capsys, "oracle", "--group", "dihedral:3", "--all-subsets")
    assert code == 0 and fields(out)["checked"] == "32"
    assert run(capsys, "oracle", "--group", "cyclic:20", "--subset", "0,1")[0] == 2


@pytest.mark.parametrize("argv", [
    [],
    ["indices", "--group", "cyclic:5"],
    ["indices", "--group", "nosuch:3", "--subset", "0"],
    ["indices", "--group", "cyclic:5", "--subset", "7"],
    ["indices", "--group", "quaternion8", "--subset", "paper"],
    ["stable", "--group", "cyclic:4", "--side", "up"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_budget_exit(capsys):
    argv = ["indices", "--group", "ut3_3", "--subset", "paper", "--budget-nodes", "1"]
    assert run(capsys, *argv)[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stablegroups", "indices", "--group", "cyclic:9", "--subset", "0,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "lower: 3" in proc.stdout
