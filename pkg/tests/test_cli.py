import json

import pytest

from spinbundles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_clifford_n3(capsys):
    code, out, _ = run(capsys, "clifford", "3", "--output", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "pass"
    assert doc["steps"][0]["witness"]["count"] == 2
    assert doc["steps"][0]["witness"]["field"] == "quaternionic"


def test_clifford_n1_and_guard(capsys):
    code, out, _ = run(capsys, "clifford", "1", "--output", "json")
    assert code == 0 and json.loads(out)["steps"][0]["witness"]["count"] == 1
    assert run(capsys, "clifford", "0")[0] == 2
    assert run(capsys, "clifford", "13")[0] == 2


def test_stabilizer(capsys):
    code, out, _ = run(capsys, "stabilizer", "1,2,6", "--samples", "3", "--output", "json")
    doc = json.loads(out)
    assert code == 0
    assert any("Spin3" in s["claim"] and s["verdict"] == "pass" for s in doc["steps"])
    code, out, _ = run(capsys, "stabilizer", "1", "--samples", "2", "--output", "json")
    assert json.loads(out)["steps"][0]["witness"]["dimension"] == 16
    assert run(capsys, "stabilizer", "7")[0] == 2
    assert run(capsys, "stabilizer", "a,b")[0] == 2


def test_lemma_cohomo(capsys):
    code, out, _ = run(capsys, "lemma-cohomo", "4")
    assert code == 0 and "sign" in out
    code, out, _ = run(capsys, "lemma-cohomo", "6")
    assert code == 0 and "-x1 - x2" in out and "repeats" in out
    assert run(capsys, "lemma-cohomo", "7")[0] == 2
    assert run(capsys, "lemma-cohomo", "6", "--printed-weights")[0] == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "5", "2", "--output", "json")
    assert code == 0 and json.loads(out)["steps"][0]["witness"]["count"] == 2
    code, out, _ = run(capsys, "classify", "6", "2", "--euler", "2", "--output", "json")
    assert code == 0 and json.loads(out)["steps"][0]["witness"]["count"] == 1
    code, _, err = run(capsys, "classify", "3", "2")
    assert code == 2 and "divisible by 4" in err


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "--output", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "pass"
    assert set(doc) == {"command", "inputs", "seed", "steps", "verdict"}
    for s in doc["steps"]:
        assert set(s) == {"claim", "citation", "verdict", "witness"} and s["citation"]
    code, out, _ = run(capsys, "embed", "--tamper", "other-candidate", "--output", "json")
    doc = json.loads(out)
    assert code == 1
    failed = [s["claim"] for s in doc["steps"] if s["verdict"] == "fail"]
    assert failed[0].startswith("(iii)")


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "clifford", "3", "--samples", "-1")[0] == 2


def test_all_deterministic_and_typo_flag(capsys):
    code1, out1, _ = run(capsys, "all", "--seed", "7", "--samples", "2", "--output", "json")
    code2, out2, _ = run(capsys, "all", "--seed", "7", "--samples", "2", "--output", "json")
    assert out1 == out2
    doc = json.loads(out1)
    assert all(s["citation"] for s in doc["steps"])
    assert code1 == (0 if doc["verdict"] == "pass" else 1)
    code, out, _ = run(capsys, "all", "--seed", "7", "--samples", "2", "--typo-weights", "--output", "json")
    bad = [s["claim"] for s in json.loads(out)["steps"] if s["verdict"] == "fail"]
    assert code == 1 and any(c.startswith("lemma-cohomo n=6") for c in bad)
