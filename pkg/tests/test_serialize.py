import json
from fractions import Fraction

import pytest

from divmat import InvalidInputError, catalog, generate, serialize
from divmat.concavity import check_pseudo_mnat
from divmat.solver import diversity_choice, trace_frontier


@pytest.mark.parametrize("name", serialize.BUNDLED)
def test_bundled_files_validate(name):
    p = serialize.load_path(name)
    assert p.inst.grid == p.f.grid


def test_bundled_goldens():
    p = serialize.load_path("example1_n5")
    assert diversity_choice(p.inst.ids, p.f, p.inst).chosen == ("x", "z")
    p = serialize.load_path("example1_n6")
    assert diversity_choice(p.inst.ids, p.f, p.inst).chosen == ("z",)
    p = serialize.load_path("example7")
    assert [q.lam for q in trace_frontier(p.inst.ids, p.f, p.inst)] == [0, 2, 6]
    p = serialize.load_path("claim2_counterexample")
    assert not check_pseudo_mnat(p.f).holds
    assert p.f(catalog.CLAIM2_XI) == 2


def test_merit_list_and_ranks_are_equivalent():
    doc = serialize.resolve("example7")
    assert "merit" in doc
    p = serialize.load(doc)
    doc2 = serialize.to_document(p.inst, p.f)
    assert "merit" not in doc2
    q = serialize.load(doc2)
    assert q.inst.ids == p.inst.ids


def test_merit_errors():
    doc = serialize.resolve("example7")
    doc["merit"] = ["x", "y"]
    with pytest.raises(InvalidInputError):
        serialize.load(doc)
    doc = serialize.resolve("example5")
    del doc["contracts"][0]["merit_rank"]
    with pytest.raises(InvalidInputError):
        serialize.load(doc)


@pytest.mark.parametrize("seed", range(60))
def test_round_trip(seed):
    case = generate.random_case(seed)
    doc = serialize.to_document(case.inst, case.f, {"lambda": Fraction(5, 2)})
    p = serialize.load(json.loads(json.dumps(doc)))
    assert p.options["lambda"] == Fraction(5, 2)
    assert p.f.table() == case.f.table()
    assert serialize.to_document(p.inst, p.f, {"lambda": Fraction(5, 2)}) == doc


def test_rationals_become_strings():
    assert json.loads(serialize.dumps({"v": Fraction(5, 2), "w": [Fraction(3)]})) == \
        {"v": "5/2", "w": ["3"]}


def test_shipped_schema_matches_docs_copy():
    from pathlib import Path
    docs = Path(__file__).resolve().parents[1] / "docs" / "instance.schema.json"
    assert json.loads(docs.read_text()) == serialize.schema()
