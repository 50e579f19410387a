import json
from pathlib import Path

import pytest

from antiramsey.cli import FIXTURES, main


def fx(name):
    return str(Path(str(FIXTURES / name)))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_chi_eval(capsys):
    assert run(capsys, "chi", "--complex", fx("tri-boundary.json"), "--eval", "2") == (0, "6", "")


def test_ramsey(capsys):
    assert run(capsys, "graph", "ramsey", "--forbid", "clique:3", "--colors", "2", "--max-n", "8")[:2] == (0, "6")
    code, out, _ = run(capsys, "graph", "ramsey", "--forbid", "clique:3", "--colors", "2", "--max-n", "5")
    assert out == "not_found"


def test_polytope_delta(capsys):
    assert run(capsys, "polytope", "delta", "--polytope", fx("sq2.json"))[:2] == (0, "[1,6,1]")


def test_other_commands(capsys):
    assert run(capsys, "hvec", "--complex", fx("cycle8.json"))[1] == "[1,6,1]"
    assert run(capsys, "nonfaces", "--complex", fx("path.json"))[1] == "[[0,2]]"
    assert run(capsys, "graph", "anti-ramsey", "--graph", fx("k5.json"), "--forbid", "clique:3", "--colors", "2")[1] == "12"
    assert run(capsys, "polytope", "count", "--polytope", fx("seg02.json"), "--m", "3")[1] == "7"
    assert run(capsys, "polytope", "count", "--polytope", fx("sq2.json"), "--interior")[1] == "1"
    assert run(capsys, "polytope", "ehrhart", "--polytope", fx("simplex2x.json"))[1] == "2*m^2 + 3*m + 1"
    assert run(capsys, "polytope", "dual", "--polytope", fx("sq2.json"))[1] == "[[-1,0],[0,-1],[0,1],[1,0]]"
    assert run(capsys, "hodge", "--polytope", fx("simplex2x.json"))[1] == "primitive [0,3]\nfull [0,5]"


def test_subgraph_pattern_relative_to_cwd(capsys, monkeypatch):
    monkeypatch.chdir(fx(""))
    code, out, _ = run(capsys, "graph", "anti-ramsey", "--graph", "k5.json", "--forbid", "subgraph:@h-path2.json", "--colors", "2")
    assert (code, out) == (0, "0")


def test_tri_check(capsys):
    code, out, _ = run(capsys, "tri", "check", "--polytope", fx("sq2.json"), "--tri", fx("sq2-ring8.json"), "--boundary")
    assert code == 0 and out.startswith("valid") and "compressed: true" in out
    code, out, _ = run(capsys, "tri", "check", "--polytope", fx("cube01.json"), "--tri", fx("cube01-staircase.json"))
    assert code == 0 and "unimodular: true" in out and "PASS" in out
    code, out, _ = run(capsys, "--strict", "tri", "check", "--polytope", fx("sq01.json"), "--tri", fx("sq2-corners.json"))
    assert code == 2 and out.startswith("invalid")


@pytest.mark.parametrize("kind,bundle", [
    ("part1", "bundle-part1-tri.json"),
    ("part2", "bundle-part2-cycle8.json"),
    ("part2", "bundle-part2-explicit.json"),
    ("compressed-chain", "bundle-chain-sq2.json"),
    ("lattice-coh", "bundle-coh-seg02.json"),
    ("reciprocity", "bundle-reciprocity-sq2.json"),
])
def test_verify_bundles(capsys, kind, bundle):
    code, out, _ = run(capsys, "verify", kind, "--bundle", fx(bundle), "--strict")
    assert code == 0 and "FAIL" not in out


def test_verify_second_part1_fixture(capsys):
    code, out, _ = run(capsys, "verify", "part1", "--bundle", fx("bundle-part1-two-nonfaces.json"))
    assert code == 0 and out.startswith("PASS")


def test_strict_fails_on_hypothesis_failure(capsys, tmp_path):
    (tmp_path / "b.json").write_text(json.dumps({"complex": {"n": 4, "minimal_nonfaces": [[0, 1], [2, 3]]}}))
    code, out, _ = run(capsys, "verify", "part1", "--bundle", str(tmp_path / "b.json"), "--strict")
    assert code == 2 and out.startswith("FAIL")
    code, _, _ = run(capsys, "verify", "part1", "--bundle", str(tmp_path / "b.json"))
    assert code == 0


def test_json_envelope_is_deterministic(capsys):
    argv = ["--json", "verify", "compressed-chain", "--bundle", fx("bundle-chain-seg11.json")]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    env = json.loads(first)
    assert list(env) == ["command", "result", "reports"]
    assert env["command"] == "verify compressed-chain"
    assert all(r["pass"] for r in env["reports"])
    assert env["reports"][0]["details"]["displayed_form"]["pass"] is False
    # flags are accepted after the subcommand too
    assert run(capsys, "chi", "--complex", fx("tri-boundary.json"), "--json")[1] == \
        run(capsys, "--json", "chi", "--complex", fx("tri-boundary.json"))[1]


def test_errors_name_path_and_field(capsys, tmp_path):
    code, _, err = run(capsys, "chi", "--complex", str(tmp_path / "missing.json"))
    assert code == 1 and "missing.json" in err
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "minimal_nonfaces": [[0, 5]]}))
    code, _, err = run(capsys, "chi", "--complex", str(bad))
    assert code == 1 and "bad.json" in err and "complex" in err
    bundle = tmp_path / "bundle.json"
    bundle.write_text(json.dumps({"polytope": {"verts": [[0]]}}))
    code, _, err = run(capsys, "verify", "reciprocity", "--bundle", str(bundle))
    assert code == 1 and "bundle.json" in err and "vertices" in err
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    code, _, err = run(capsys, "hvec", "--complex", str(broken))
    assert code == 1 and "invalid JSON" in err
    assert run(capsys, "chi")[0] == 1
    assert run(capsys, "graph", "ramsey", "--forbid", "star:3", "--colors", "2", "--max-n", "3")[0] == 1


def test_suite(capsys):
    code, out, _ = run(capsys, "suite", "--strict")
    assert code == 0
    assert "FAIL" not in out and out.endswith("passed")
