import csv
import io
import json
from itertools import product

import pytest

from divmat import cli, serialize
from divmat.core import make_instance
from divmat.feasible import Box, TotalCap
from divmat.indices import constant, tabular


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--no-timing")
    assert code == 0, err
    return json.loads(out)


def write(tmp_path, doc, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def zero_index_doc(n=3):
    ids = [f"k{i}" for i in range(n)]
    inst = make_instance(["c"], ["t", "u"], [(k, "c", "s" + k, "tu"[i % 2]) for i, k in enumerate(ids)], ids)
    return serialize.to_document(inst, constant(0, TotalCap(inst.grid, 2)))


def test_choose_example1_goldens(capsys):
    assert run_json(capsys, "choose", "example1_n5")["outputs"]["chosen"] == ["x", "z"]
    out = run_json(capsys, "choose", "example1_n6")["outputs"]
    assert out["chosen"] == ["z"] and out["diversity"] == "6"


def test_choose_empty_pool(capsys, tmp_path):
    doc = zero_index_doc(0)
    assert run_json(capsys, "choose", write(tmp_path, doc))["outputs"]["chosen"] == []


def test_frontier_example7_csv(capsys):
    code, out, _ = run(capsys, "frontier", "example7", "--format", "csv", "--verify")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out), delimiter=";"))
    assert rows == [["set", "diversity", "lambda"], ["x y", "1", "0"], ["x z", "5", "2"], ["z", "6", "6"]]


def test_frontier_zero_index_single_row(capsys, tmp_path):
    out = run_json(capsys, "frontier", write(tmp_path, zero_index_doc()))["outputs"]
    assert len(out["points"]) == 1


def test_frontier_non_integer_exit_2(capsys, tmp_path):
    inst = make_instance(["c"], ["t"], [("a", "c", "s", "t")], ["a"])
    f = tabular({(0,): 0, (1,): "1/2"}, Box(inst.grid, (1,)))
    code, _, err = run(capsys, "frontier", write(tmp_path, serialize.to_document(inst, f)))
    assert code == 2 and "rescale" in err


def test_check_example5(capsys):
    assert run_json(capsys, "check", "example5", "--property", "ordinal")["outputs"]["holds"]
    rep = run_json(capsys, "check", "example5", "--property", "ordinal", "--lambda", "1")
    assert rep["outputs"]["holds"] is False and rep["outputs"]["lambda"] == "1"
    w = rep["witnesses"][0]
    assert (w["xi"], w["xi_tilde"]) == ([1, 1], [0, 0])


def test_check_example6_and_claim2(capsys):
    assert run_json(capsys, "check", "example6", "--property", "pseudo")["outputs"]["holds"]
    assert not run_json(capsys, "check", "claim2_counterexample",
                        "--property", "pseudo")["outputs"]["holds"]


def test_check_lad_witness_example1_n6(capsys):
    rep = run_json(capsys, "check", "example1_n6", "--property", "lad")
    assert rep["witnesses"][0]["sets"] == [["x", "y"], ["x", "y", "z"]]


@pytest.mark.parametrize("prop", cli.PROPERTIES)
def test_zero_index_every_property_holds(capsys, tmp_path, prop):
    doc = zero_index_doc()
    doc["feasible"] = {"kind": "box", "upper": [2, 1]}
    if prop == "m":
        # the M exchange needs all domain points at one size, so only {0} qualifies
        doc["feasible"] = {"kind": "explicit", "members": [[0, 0]]}
    rep = run_json(capsys, "check", write(tmp_path, doc), "--property", prop)
    assert rep["outputs"]["holds"], prop


def test_check_csv(capsys):
    code, out, _ = run(capsys, "check", "example5", "--property", "ordinal", "--lambda", "0",
                       "--format", "csv")
    assert code == 0 and out.splitlines() == ["property;verdict;lambda", "ordinal;holds;0"]


def test_oracle_command(capsys):
    out = run_json(capsys, "oracle", "example7")["outputs"]
    assert out["choice"] == ["z"]
    assert [p["set"] for p in out["pareto"]] == [["x", "y"], ["x", "z"], ["z"]]


def test_output_is_deterministic(capsys):
    a = run(capsys, "oracle", "claim2_counterexample", "--no-timing")
    b = run(capsys, "oracle", "claim2_counterexample", "--no-timing")
    assert a == b
    code, out, _ = run(capsys, "choose", "example1_n5")
    rep = json.loads(out)
    assert rep["timing"]["seconds"] >= 0
    del rep["timing"]
    assert serialize.dumps(rep) == run(capsys, "choose", "example1_n5", "--no-timing")[1].rstrip("\n")


def test_digest_tracks_input(capsys, tmp_path):
    a = run_json(capsys, "choose", "example1_n5")["input_digest"]
    b = run_json(capsys, "choose", "example1_n6")["input_digest"]
    assert a != b and a.startswith("sha256:")


def test_schema_violation_exit_2(capsys, tmp_path):
    doc = zero_index_doc()
    del doc["feasible"]
    code, _, err = run(capsys, "choose", write(tmp_path, doc))
    assert code == 2 and "schema" in err


def test_missing_file_and_bad_json(capsys, tmp_path):
    assert run(capsys, "choose", str(tmp_path / "none.json"))[0] == 2
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert run(capsys, "choose", str(p))[0] == 2


def test_unenumerable_domain_exit_2(capsys, tmp_path):
    doc = zero_index_doc()
    doc["feasible"] = {"kind": "box", "upper": [5000, 5000]}
    code, _, err = run(capsys, "check", write(tmp_path, doc), "--property", "ordinal")
    assert code == 2


def test_verification_mismatch_exit_3(capsys, tmp_path):
    inst = make_instance(["c"], list("pqrs"),
                         [(k, "c", "s" + k, t) for k, t in zip("wxyz", "pqrs")], list("wxyz"))
    top = {(1, 0, 0, 1), (0, 1, 1, 0)}
    f = tabular({v: int(v in top) for v in product((0, 1), repeat=4)}, Box(inst.grid, (1,) * 4))
    code, _, err = run(capsys, "choose", write(tmp_path, serialize.to_document(inst, f)), "--verify")
    assert code == 3 and "mismatch" in err


def test_budget_exit_4(capsys, monkeypatch):
    assert run(capsys, "oracle", "example7", "--budget", "2")[0] == 4
    monkeypatch.setenv("DIVMAT_BUDGET", "2")
    assert run(capsys, "oracle", "example7")[0] == 4


def test_seed_instances(capsys):
    a = run_json(capsys, "choose", "--seed", "11", "--verify")
    b = run_json(capsys, "choose", "--seed", "11")
    assert a["input_digest"] == b["input_digest"]
    assert a["outputs"]["verified"]


def test_no_instance_is_input_error(capsys):
    assert run(capsys, "choose")[0] == 2


def test_examples_listing(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0 and out.split() == list(serialize.BUNDLED)


def test_bad_lambda(capsys):
    assert run(capsys, "choose", "example7", "--lambda", "half")[0] == 2
    out = run_json(capsys, "choose", "example7", "--lambda", "0.5")["outputs"]
    assert out["lambda"] == "1/2"
