"""Instance files: loading, validation, bundled examples and JSON output."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from . import feasible as feasible_mod
from . import indices as indices_mod
from .concavity import DiversityIndex, as_fraction
from .core import Contract, Instance, MeritRanking
from .errors import InvalidInputError

BUNDLED = ("example1_n5", "example1_n6", "example5", "example6", "example7",
           "claim2_counterexample")


def schema() -> dict:
    return json.loads(resources.files("divmat").joinpath("data/instance.schema.json").read_text())


@dataclass
class Problem:
    inst: Instance
    f: DiversityIndex
    options: dict = field(default_factory=dict)
    document: dict = field(default_factory=dict)

    @property
    def digest(self) -> str:
        return digest(self.document)


def digest(document: dict) -> str:
    raw = json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "sha256:" + hashlib.sha256(raw.encode()).hexdigest()


def resolve(path_or_name: str) -> dict:
    """Read an instance file, or a bundled example by bare name."""
    if path_or_name in BUNDLED:
        text = resources.files("divmat").joinpath(f"data/{path_or_name}.json").read_text()
    else:
        try:
            text = Path(path_or_name).read_text()
        except OSError as exc:
            raise InvalidInputError(f"cannot read {path_or_name}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path_or_name} is not valid JSON: {exc}") from None


def _merit(doc) -> MeritRanking:
    ids = [c["id"] for c in doc["contracts"]]
    if "merit" in doc:
        if sorted(doc["merit"]) != sorted(ids):
            raise InvalidInputError("merit list must name every contract exactly once")
        return MeritRanking.from_order(doc["merit"])
    ranks = [c.get("merit_rank") for c in doc["contracts"]]
    if any(r is None for r in ranks):
        raise InvalidInputError("give either a merit list or a merit_rank on every contract")
    return MeritRanking(dict(zip(ids, ranks)))


def load(document: dict) -> Problem:
    try:
        jsonschema.validate(document, schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InvalidInputError(f"schema violation at {where}: {exc.message}") from None
    contracts = [Contract(c["id"], c["school"], c["student"], c["type"])
                 for c in document["contracts"]]
    inst = Instance(tuple(document["schools"]), tuple(document["types"]),
                    tuple(contracts), _merit(document))
    options = dict(document.get("options", {}))
    domain = feasible_mod.from_json(inst.grid, document["feasible"])
    f = indices_mod.from_json(domain, document["index"], options)
    if "lambda" in options:
        options["lambda"] = as_fraction(options["lambda"])
    return Problem(inst, f, options, document)


def load_path(path_or_name: str) -> Problem:
    return load(resolve(path_or_name))


def to_document(inst: Instance, f: DiversityIndex, options: dict | None = None,
                description: str | None = None) -> dict:
    doc = {}
    if description:
        doc["description"] = description
    doc["schools"] = list(inst.schools)
    doc["types"] = list(inst.types)
    doc["contracts"] = [
        {"id": c.id, "school": c.school, "student": c.student, "type": c.type,
         "merit_rank": inst.rank(c.id)} for c in inst.contracts]
    doc["feasible"] = f.domain.to_json()
    doc["index"] = f.to_json()
    if options:
        doc["options"] = {k: (str(v) if isinstance(v, Fraction) else v)
                          for k, v in options.items()}
    return doc


def jsonable(obj):
    """Convert results to JSON types; rationals become ``"p/q"`` strings."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((jsonable(v) for v in obj), key=str)
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)
