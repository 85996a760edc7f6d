"""Seeded random instances for property sweeps and the CLI's ``--seed``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .concavity import DiversityIndex
from .core import Instance, make_instance
from .feasible import Box, Explicit, FeasibleSet, PerSchoolCaps, TotalCap
from .indices import MarginalIndex, SaturatedIndex, TabularIndex, UniversityIndex

SHAPES = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 2), (4, 1)]


@dataclass(frozen=True)
class RandomCase:
    inst: Instance
    f: DiversityIndex
    seed: int | None = None


def concave_seq(rng: random.Random, length: int, increasing: bool = False) -> list:
    """Integer concave values of the given length, all non-negative."""
    lo = 0 if increasing else -2
    steps = sorted((rng.randint(lo, 4) for _ in range(length - 1)), reverse=True)
    vals = [0]
    for s in steps:
        vals.append(vals[-1] + s)
    shift = -min(vals) + rng.randint(0, 2)
    return [v + shift for v in vals]


def _contracts(rng, schools, types, n):
    out = []
    for k in range(n):
        out.append((f"x{k}", rng.choice(schools), f"s{k}", rng.choice(types)))
    order = [c[0] for c in out]
    rng.shuffle(order)
    return out, order


def random_feasible(rng: random.Random, grid) -> FeasibleSet:
    kind = rng.choice(["total_cap", "per_school_caps", "box"])
    if kind == "total_cap":
        return TotalCap(grid, rng.randint(1, 5))
    if kind == "per_school_caps":
        return PerSchoolCaps(grid, [rng.randint(1, 4) for _ in grid.schools])
    return Box(grid, [rng.randint(1, 3) for _ in range(grid.dim)])


def random_index(rng: random.Random, domain: FeasibleSet, kind: str | None = None,
                 monotone: bool | None = None) -> DiversityIndex:
    grid = domain.grid
    box = domain.box
    kind = kind or rng.choice(["saturated", "marginally_decreasing", "university"])
    inc = rng.random() < 0.5 if monotone is None else monotone
    if kind == "saturated":
        return SaturatedIndex([rng.randint(0, 3) for _ in range(grid.dim)], domain)
    g = [concave_seq(rng, b + 1, inc) for b in box]
    if kind == "marginally_decreasing":
        return MarginalIndex(g, domain)
    minority = [t for t in grid.types if rng.random() < 0.5]
    span = sum(b for i, b in enumerate(box) if grid.cell(i)[1] in minority)
    return UniversityIndex(minority, concave_seq(rng, span + 1, inc), g, domain)


def random_case(seed: int, max_contracts: int = 8, kind: str | None = None,
                monotone: bool | None = None) -> RandomCase:
    rng = random.Random(seed)
    ns, nt = rng.choice(SHAPES)
    schools = [f"c{i}" for i in range(ns)]
    types = [f"t{i}" for i in range(nt)]
    n = rng.randint(0, max_contracts)
    contracts, order = _contracts(rng, schools, types, n)
    inst = make_instance(schools, types, contracts, order)
    domain = random_feasible(rng, inst.grid)
    return RandomCase(inst, random_index(rng, domain, kind, monotone), seed)


def random_tabular(seed: int, max_points: int = 20, max_value: int = 3) -> TabularIndex:
    """Integer table on a random domain of at most ``max_points`` points."""
    rng = random.Random(seed)
    ns, nt = rng.choice([(1, 1), (1, 2), (2, 1), (1, 3), (2, 2)])
    inst = make_instance([f"c{i}" for i in range(ns)], [f"t{i}" for i in range(nt)], [], [])
    grid = inst.grid
    box = [rng.randint(1, 3) for _ in range(grid.dim)]
    pts = [p for p in product(*[range(b + 1) for b in box]) if any(p)]
    rng.shuffle(pts)
    keep = rng.randint(1, min(max_points - 1, len(pts)))
    domain = Explicit(grid, [grid.zero()] + pts[:keep])
    table = {p: rng.randint(0, max_value) for p in domain.members}
    return TabularIndex(table, domain)
