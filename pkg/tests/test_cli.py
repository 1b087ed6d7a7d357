import json
import subprocess
import sys

import pytest

from uvbraid.cli import run_command


def ok(*argv):
    code, out = run_command(list(argv))
    assert code == 0, (argv, out)
    return out


def test_nf():
    assert ok("nf", "s1") == "pure: [1,2]: l1,2^-1; perm: [2,1]"
    data = json.loads(ok("nf", "s1 s1", "--json"))
    assert data == {"n": 2, "perm": [1, 2], "pure": [{"pair": [1, 2], "word": [[1, 2, -1], [2, 1, -1]]}]}


def test_nf_json_is_byte_stable():
    a = ok("nf", "s1 S2 r3 s2", "--json")
    b = ok("nf", "s1 S2 r3 s2", "--json")
    assert a == b
    assert a == json.dumps(json.loads(a), sort_keys=True, separators=(",", ":"))


def test_explicit_n():
    assert json.loads(ok("nf", "s1", "--n", "4", "--json"))["perm"] == [2, 1, 3, 4]


def test_order():
    assert ok("order", "r1 r2") == "3"
    assert ok("order", "s1") == "infinite"
    assert json.loads(ok("order", "s1", "--json")) == {"order": None}
    assert json.loads(ok("order", "r1 S1 r1 s1 r1", "--json")) == {"order": 2}


def test_one_line_permutation_argument():
    assert ok("order", "[2,3,1]") == "3"
    assert ok("eq", "[2,1,3]", "r1") == "true"


def test_conjugate_to_perm():
    data = json.loads(ok("conjugate-to-perm", "r1 S1 r1 s1 r1", "--json"))
    assert data["perm"] == [2, 1]
    assert set(data) == {"conjugator", "perm"}
    text = ok("conjugate-to-perm", "r1 r2")
    assert text == "conjugator: 1\nperm: [2,3,1]"


def test_conjugate_to_perm_rejects_infinite_order():
    assert run_command(["conjugate-to-perm", "s1"]) == (3, "")


def test_equalities():
    assert ok("eq", "r2 s1 s2", "s1 s2 r1") == "true"
    assert ok("eq", "s1 s2", "s2 s1") == "false"
    assert ok("crystal-eq", "s1 s1 s2 s2", "s2 s2 s1 s1") == "true"
    assert ok("crystal-eq", "s1", "S1") == "false"
    assert run_command(["crystal-eq", "s1 r1", "s1"])[0] == 3


def test_crystal_commands():
    assert ok("in-im-eta", "s1 s2") == "true"
    assert ok("in-im-eta", "r1") == "false"
    assert ok("in-cn", "r1 r2") == "true"
    assert ok("in-cn", "s1") == "false"
    assert json.loads(ok("project", "s1 s1", "--json")) == {"perm": [1, 2], "vector": [{"coeff": -2, "pair": [1, 2]}]}
    assert ok("writhe", "s1 s2 S1 r1") == "1"


def test_parse_error_exit_code(capsys):
    assert run_command(["nf", "s1 x2"]) == (2, "")
    assert "parse error" in capsys.readouterr().err
    assert run_command(["nf", "s3", "--n", "3"])[0] == 2
    assert run_command(["order", "[1,1]"])[0] == 2


def test_check_relations():
    out = ok("check-relations", "--n", "3")
    assert out.splitlines()[-1] == "7/7 instances pass"
    data = json.loads(ok("check-relations", "--json"))
    assert len(data) == 1 + 7 + 17 + 31 + 49
    assert all(item["passed"] for item in data)
    assert run_command(["check-relations", "--n", "1"])[0] == 3


def test_usage_errors():
    assert run_command([])[0] == 2
    assert run_command(["--help"])[0] == 0


def test_selftest_subcommand(monkeypatch):
    from uvbraid import cli, selftest

    monkeypatch.setattr(cli, "run_selftest", lambda seed: selftest.run_selftest(seed, scale=0.02))
    code, out = run_command(["selftest", "--seed", "3", "--json"])
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["seed"] == 3
    assert len(data["properties"]) == 10


@pytest.mark.parametrize("argv, code", [(["order", "r1"], 0), (["nf", "q1"], 2)])
def test_module_entry_point(argv, code):
    proc = subprocess.run([sys.executable, "-m", "uvbraid", *argv], capture_output=True, text=True)
    assert proc.returncode == code
