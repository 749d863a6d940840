import json
import subprocess
import sys

import pytest

from bndegen import cli
from bndegen.bn_analyzer import dumps, report_from_json


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wrd_json_point_count(capsys):
    code, out, _ = run(capsys, "wrd", "--genus", "4", "--degree", "3", "--rank", "1", "--json")
    assert code == 0
    assert json.loads(out)["point_count"] == 2


def test_ess_node(capsys):
    assert run(capsys, "ess", "--dots", "0:0,1:2,2:1") == (0, "(0,0) (1,1)\n", "")


def test_reduced_words_count(capsys):
    assert run(capsys, "reduced-words", "--perm", "2,1,0", "--count-only")[:2] == (0, "2\n")


def test_reduced_words_list(capsys):
    assert run(capsys, "reduced-words", "--perm", "2,1,0")[1] == "0 1 0\n1 0 1\n"


def test_schubert(capsys):
    assert run(capsys, "schubert", "--perm", "2,0,1")[1] == "x1^2\n"
    assert run(capsys, "schubert", "--perm", "0,1,2")[1] == "1\n"


def test_smooth(capsys):
    assert run(capsys, "smooth", "--perm", "0,2,1")[1] == "smooth\n"
    assert run(capsys, "smooth", "--perm", "2,3,0,1")[1] == \
        "singular: pattern 3412 at positions 0,1,2,3\n"


def test_confine_three_dots(capsys):
    code, out, _ = run(capsys, "confine", "--dots", "0:1,2:0,3:3", "--genus", "12", "--degree", "12")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "tail: n -> 0 - n"
    assert lines[1:] == ["-3\t2", "-2\t-1", "-1\t-2", "0\t1", "1\t-3", "2\t0", "3\t3"]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--genus", "12", "--degree", "12", "--dots", "0:1,2:0,3:3")
    assert code == 0
    assert "rho: 1" in out.splitlines()
    assert "chow: 1/40320 Theta^11" in out.splitlines()


def test_analyze_json_round_trips(capsys):
    _, out, _ = run(capsys, "analyze", "--genus", "3", "--degree", "4", "--dots", "0:1,1:0,3:2",
                    "--json")
    assert dumps(report_from_json(out)) + "\n" == out
    data = json.loads(out)
    assert list(data) == sorted(data)
    assert {"input", "valid", "rho", "codim", "nonempty", "chow", "confined_perm",
            "essential_set", "pi_prime", "schubert_smooth", "dim_coupled_tensors"} <= set(data)


def test_invalid_input_exit_code(capsys):
    code, out, err = run(capsys, "analyze", "--genus", "5", "--degree", "12", "--dots", "0:1")
    assert code == 2 and out == ""
    assert "d+1-g" in err


def test_invalid_input_json_report(capsys):
    code, out, err = run(capsys, "wrd", "--genus", "2", "--degree", "5", "--rank", "0", "--json")
    assert code == 2
    assert json.loads(out)["valid"] is False
    assert "invalid input" in err


def test_bad_dots_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["ess", "--dots", "0:1,0:2"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_bad_perm_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["smooth", "--perm", "0,0"])
    assert exc.value.code == 2


def test_flags_requires_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["flags", "--perm", "1,0"])
    assert exc.value.code == 2


@pytest.mark.parametrize("field", ["q", "prime 101", "5"])
def test_flags_round_trip(capsys, field):
    code, out, _ = run(capsys, "flags", "--perm", "2,0,3,1", "--field", field, "--seed", "4")
    data = json.loads(out)
    assert code == 0 and data["round_trip"] and data["recovered"] == [2, 0, 3, 1]


def test_flags_bad_field(capsys):
    code, _, err = run(capsys, "flags", "--perm", "1,0", "--field", "6", "--seed", "1")
    assert code == 2 and "prime" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bndegen", "ess", "--dots", "0:2,1:1,2:0"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "(0,0)\n"


def test_library_does_not_depend_on_cli():
    import pathlib
    src = pathlib.Path(cli.__file__).parent
    for path in src.glob("*.py"):
        if path.name in ("cli.py", "__main__.py"):
            continue
        imports = [line for line in path.read_text().splitlines()
                   if line.startswith(("from ", "import "))]
        assert not [line for line in imports if ".cli" in line], path.name
