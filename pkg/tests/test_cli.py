"""Command-line surface: every subcommand, every exit code."""

import json

import pytest

from neutrolab.cli import main

G421 = {"kind": "param_groupoid", "n": 4, "t": 2, "u": 1}
G1032 = {"kind": "param_groupoid", "n": 10, "t": 3, "u": 2}
RING4 = {"kind": "neutro_ring", "n": 4}
GR256 = {"kind": "group_ring", "r": 2, "basis": {"kind": "cyclic_neutro_group", "m": 4}}
COLL = {"kind": "ncollection", "components": [
    {"spec": {"kind": "mult_magma", "n": 3},
     "kind_tag": {"alg": "semigroup", "neutrosophic": True}},
    {"spec": {"kind": "sym_group", "k": 3},
     "kind_tag": {"alg": "group", "neutrosophic": False}},
]}


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_build_each_universe_shape(tmp_path, capsys):
    for doc, needle in [(G421, "strongest verified kind"),
                        (RING4, "tables validated"),
                        (GR256, "formal sums"),
                        (COLL, "collection of 2 components")]:
        assert main(["build", write(tmp_path, "s.json", doc)]) == 0
        assert needle in capsys.readouterr().out


def test_build_missing_file_is_usage_error(tmp_path, capsys):
    assert main(["build", str(tmp_path / "absent.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2
    assert main(["not-a-command"]) == 2
    capsys.readouterr()


def test_check_sub_loose_strict_and_unknown(tmp_path, capsys):
    spec = write(tmp_path, "g.json", G421)
    base = ["check-sub", "--structure", spec, "--subset", "0,2",
            "--predicate", "subgroupoid"]
    assert main(base) == 0
    assert "holds: loose-subgroupoid" in capsys.readouterr().out
    assert main(base + ["--strict"]) == 1
    assert "fails:" in capsys.readouterr().out
    assert main(["check-sub", "--structure", spec, "--subset", "0",
                 "--predicate", "mystery"]) == 2
    capsys.readouterr()


def test_check_sub_collection_parts(tmp_path, capsys):
    spec = write(tmp_path, "c.json", COLL)
    assert main(["check-sub", "--structure", spec, "--subset", "0,I ; e",
                 "--predicate", "n-sub", "--strict"]) == 0
    capsys.readouterr()


def test_enumerate_matches_library_count(tmp_path, capsys):
    from neutrolab.io import load_structure
    from neutrolab.subsets import enumerate_subs
    spec = write(tmp_path, "g.json", G421)
    assert main(["enumerate", "--structure", spec,
                 "--predicate", "subgroupoid"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    want = enumerate_subs(load_structure(G421), "subgroupoid")
    assert out[-1] == "-- %d subsets satisfy subgroupoid" % len(want)
    assert len(out) == len(want) + 1


def test_classify_magma_and_collection(tmp_path, capsys):
    assert main(["classify", "--structure", write(tmp_path, "g.json", G421)]) == 0
    out = capsys.readouterr().out
    assert "divisibility class: WeaklyLagrange" in out
    assert main(["classify", "--structure", write(tmp_path, "c.json", COLL)]) == 0
    assert "mixed profile:" in capsys.readouterr().out


def test_soft_op_writes_result(tmp_path, capsys):
    lhs = write(tmp_path, "f.json",
                {"universe": G421, "assign": {"a1": ["0", "2I"], "a2": ["0"]}})
    rhs = write(tmp_path, "k.json",
                {"universe": G421, "assign": {"a1": ["0", "2+2I"], "a3": ["0"]}})
    out = str(tmp_path / "u.json")
    assert main(["soft-op", "--op", "restricted-union",
                 "--lhs", lhs, "--rhs", rhs, "-o", out]) == 0
    doc = json.loads((tmp_path / "u.json").read_text())
    assert doc["params"] == ["a1"]
    assert doc["assign"]["a1"] == ["0", "2+2I", "2I"]
    assert main(["soft-op", "--op", "restricted-union", "--union-all-params",
                 "--lhs", lhs, "--rhs", rhs, "-o", out]) == 0
    doc = json.loads((tmp_path / "u.json").read_text())
    assert doc["params"] == ["a1", "a2", "a3"]
    capsys.readouterr()


def test_soft_op_flag_misuse_and_missing_share(tmp_path, capsys):
    lhs = write(tmp_path, "f.json", {"universe": G421, "assign": {"a1": ["0"]}})
    rhs = write(tmp_path, "k.json", {"universe": G421, "assign": {"a2": ["0"]}})
    out = str(tmp_path / "u.json")
    assert main(["soft-op", "--op", "and", "--union-all-params",
                 "--lhs", lhs, "--rhs", rhs, "-o", out]) == 2
    assert main(["soft-op", "--op", "restricted-union",
                 "--lhs", lhs, "--rhs", rhs, "-o", out]) == 2
    assert main(["soft-op", "--op", "nonsense",
                 "--lhs", lhs, "--rhs", rhs, "-o", out]) == 2
    capsys.readouterr()


def test_soft_check(tmp_path, capsys):
    good = write(tmp_path, "f.json",
                 {"universe": G421,
                  "assign": {"a1": ["0", "2", "2I", "2+2I"], "a2": ["0", "2I"]}})
    assert main(["soft-check", "--file", good, "--predicate", "subgroupoid"]) == 0
    bad = write(tmp_path, "b.json",
                {"universe": G421, "assign": {"a1": ["0", "1"]}})
    assert main(["soft-check", "--file", bad, "--predicate", "subgroupoid"]) == 1
    out = capsys.readouterr().out
    assert "fails:" in out and "a1" in out


def test_verify_filter_text_and_json(capsys):
    assert main(["verify", "--filter", "ch1", "--seed", "0"]) == 0
    out = capsys.readouterr().out
    assert "example-1.1.3" in out and "ok" in out
    assert main(["verify", "--filter", "prop-2.1.*", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert {d["claim_id"] for d in data} == {"prop-2.1.1", "prop-2.1.2",
                                             "prop-2.1.3"}
    assert all(d["status"] == "Holds" for d in data)


def test_verify_bad_filter(capsys):
    assert main(["verify", "--filter", "ch9"]) == 2
    assert "error:" in capsys.readouterr().err


def test_hunt_counterexample(tmp_path, capsys):
    spec = write(tmp_path, "g.json", G421)
    assert main(["hunt", "--template", "extended-union:subgroupoid",
                 "--universe", spec]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "CounterexampleFound"
    assert doc["witness"]["kind"] == "union-violation"


def test_hunt_budget_starvation(tmp_path, capsys):
    spec = write(tmp_path, "g.json", G421)
    assert main(["hunt", "--template", "extended-union:subgroupoid",
                 "--universe", spec, "--budget", "1"]) == 3
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "Skipped(budget)"


def test_hunt_resource_cap(tmp_path, capsys):
    spec = write(tmp_path, "g.json", G1032)
    assert main(["hunt", "--template", "extended-union:subgroupoid",
                 "--universe", spec]) == 3
    assert "resource cap" in capsys.readouterr().err


def test_hunt_usage_errors(tmp_path, capsys):
    spec = write(tmp_path, "g.json", G421)
    assert main(["hunt", "--template", "no-colon", "--universe", spec]) == 2
    assert main(["hunt", "--template", "sideways-union:subgroupoid",
                 "--universe", spec]) == 2
    capsys.readouterr()
