"""Built-in diversity indices: reserve saturation, per-cell concave sums,
a university-level minority term, lookup tables and constants."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .concavity import DiversityIndex, as_fraction
from .core import Grid
from .errors import BudgetExceededError, InvalidInputError
from .feasible import FeasibleSet


class ConcaveSeq:
    """Values ``v_0 .. v_K`` of a univariate concave function on ``0..K``."""

    def __init__(self, values: Sequence):
        vals = tuple(as_fraction(v) for v in values)
        if not vals:
            raise InvalidInputError("concave sequence needs at least one value")
        for k in range(len(vals) - 2):
            if vals[k + 2] - vals[k + 1] > vals[k + 1] - vals[k]:
                raise InvalidInputError(f"sequence is not concave at {k + 1}: {list(map(str, vals))}")
        self.values = vals

    def __len__(self):
        return len(self.values)

    def __call__(self, k: int) -> Fraction:
        if k >= len(self.values):
            raise InvalidInputError(f"argument {k} beyond the sequence's {len(self.values)} values")
        return self.values[k]

    @property
    def increasing(self) -> bool:
        return all(b >= a for a, b in zip(self.values, self.values[1:]))

    def to_json(self):
        return [str(v) for v in self.values]

    def __repr__(self):
        return f"ConcaveSeq({[str(v) for v in self.values]})"


def _seq(s) -> ConcaveSeq:
    return s if isinstance(s, ConcaveSeq) else ConcaveSeq(s)


def _per_cell(grid: Grid, spec, what: str) -> tuple:
    """Accept a list in cell order or a mapping ``(school, type) -> value``."""
    if isinstance(spec, Mapping):
        out = [None] * grid.dim
        for (s, t), v in spec.items():
            out[grid.index(s, t)] = v
        if any(v is None for v in out):
            raise InvalidInputError(f"{what} must cover every (school, type) cell")
        return tuple(out)
    spec = tuple(spec)
    if len(spec) != grid.dim:
        raise InvalidInputError(f"{what} has {len(spec)} entries, grid has {grid.dim}")
    return spec


class SaturatedIndex(DiversityIndex):
    """Sum over cells of ``min(xi, reserve)``."""

    kind = "saturated"
    integer_valued = True

    def __init__(self, reserves, domain: FeasibleSet):
        super().__init__(domain)
        r = _per_cell(domain.grid, reserves, "reserves")
        if any(not isinstance(v, int) or v < 0 for v in r):
            raise InvalidInputError("reserves must be non-negative ints")
        self.reserves = r

    def value(self, xi):
        return Fraction(sum(min(a, b) for a, b in zip(xi, self.reserves)))

    def to_json(self):
        return {"kind": self.kind, "reserves": list(self.reserves)}


class MarginalIndex(DiversityIndex):
    """Sum over cells of a concave function of the cell count."""

    kind = "marginally_decreasing"

    def __init__(self, g, domain: FeasibleSet):
        super().__init__(domain)
        self.g = tuple(_seq(s) for s in _per_cell(domain.grid, g, "g"))
        self.integer_valued = all(v.denominator == 1 for s in self.g for v in s.values)

    def value(self, xi):
        return sum((g(k) for g, k in zip(self.g, xi)), Fraction(0))

    def to_json(self):
        return {"kind": self.kind, "g": [s.to_json() for s in self.g]}


class UniversityIndex(DiversityIndex):
    """``h`` of the total minority count plus per-cell concave terms."""

    kind = "university"

    def __init__(self, minority, h, g, domain: FeasibleSet):
        super().__init__(domain)
        grid = domain.grid
        minority = frozenset(minority)
        unknown = minority - set(grid.types)
        if unknown:
            raise InvalidInputError(f"unknown minority types {sorted(unknown)}")
        self.minority = minority
        self.h = _seq(h)
        self.g = tuple(_seq(s) for s in _per_cell(grid, g, "g"))
        self._mcells = tuple(i for i in range(grid.dim) if grid.cell(i)[1] in minority)
        self.integer_valued = all(
            v.denominator == 1 for s in (self.h, *self.g) for v in s.values)

    def value(self, xi):
        total = self.h(sum(xi[i] for i in self._mcells))
        return total + sum((g(k) for g, k in zip(self.g, xi)), Fraction(0))

    def to_json(self):
        order = [t for t in self.grid.types if t in self.minority]
        return {"kind": self.kind, "minority": order, "h": self.h.to_json(),
                "g": [s.to_json() for s in self.g]}


class TabularIndex(DiversityIndex):
    """Explicit value table; it must cover exactly the feasible set."""

    kind = "tabular"

    def __init__(self, table: Mapping, domain: FeasibleSet, limit: int = 100_000):
        super().__init__(domain)
        grid = domain.grid
        tab = {}
        for xi, v in table.items():
            xi = grid.check(xi)
            if not domain.contains(xi):
                raise InvalidInputError(f"table entry {xi} lies outside the feasible set")
            v = as_fraction(v)
            if v < 0:
                raise InvalidInputError("index values must be non-negative")
            tab[xi] = v
        try:
            members = domain.enumerate(limit=limit)
        except BudgetExceededError:
            members = None
        if members is not None:
            missing = [m for m in members if m not in tab]
            if missing:
                raise InvalidInputError(f"table has no entry for {missing[0]}")
        self._table = tab
        self.integer_valued = all(v.denominator == 1 for v in tab.values())

    def value(self, xi):
        try:
            return self._table[tuple(xi)]
        except KeyError:
            raise InvalidInputError(f"table has no entry for {tuple(xi)}") from None

    def to_json(self):
        return {"kind": self.kind,
                "table": [{"xi": list(k), "value": str(v)} for k, v in sorted(self._table.items())]}


class ConstantIndex(DiversityIndex):
    kind = "constant"

    def __init__(self, value, domain: FeasibleSet):
        super().__init__(domain)
        self.constant = as_fraction(value)
        if self.constant < 0:
            raise InvalidInputError("index values must be non-negative")
        self.integer_valued = self.constant.denominator == 1

    def value(self, xi):
        return self.constant

    def to_json(self):
        return {"kind": self.kind, "value": str(self.constant)}


class ScaledIndex(DiversityIndex):
    """``factor * f``; used to clear denominators before tracing a frontier."""

    def __init__(self, base: DiversityIndex, factor):
        super().__init__(base.domain)
        self.base = base
        self.factor = as_fraction(factor)
        if self.factor <= 0:
            raise InvalidInputError("scale factor must be positive")
        self.kind = base.kind

    def value(self, xi):
        return self.base.value(xi) * self.factor


def saturated(reserves, domain: FeasibleSet) -> SaturatedIndex:
    return SaturatedIndex(reserves, domain)


def marginally_decreasing(g, domain: FeasibleSet) -> MarginalIndex:
    return MarginalIndex(g, domain)


def university(minority, h, g, domain: FeasibleSet) -> UniversityIndex:
    return UniversityIndex(minority, h, g, domain)


def tabular(table: Mapping, domain: FeasibleSet) -> TabularIndex:
    return TabularIndex(table, domain)


def constant(value, domain: FeasibleSet) -> ConstantIndex:
    return ConstantIndex(value, domain)


def rescale_to_integers(f: DiversityIndex, limit: int = 100_000) -> tuple:
    """Multiply ``f`` by the lcm of its value denominators.

    Returns ``(scaled_index, factor)``; the scaled index is integer valued and
    orders distributions exactly like ``f``.
    """
    from math import lcm
    den = lcm(*(v.denominator for v in f.table(limit).values()))
    g = ScaledIndex(f, den)
    g.integer_valued = True
    return g, den


def from_json(domain: FeasibleSet, spec: dict, options: Mapping | None = None) -> DiversityIndex:
    from . import catalog
    options = options or {}
    try:
        kind = spec["kind"]
        if kind == "saturated":
            return SaturatedIndex(spec["reserves"], domain)
        if kind == "marginally_decreasing":
            return MarginalIndex(spec["g"], domain)
        if kind == "university":
            return UniversityIndex(spec["minority"], spec["h"], spec["g"], domain)
        if kind == "tabular":
            return TabularIndex({tuple(e["xi"]): e["value"] for e in spec["table"]}, domain)
        if kind == "constant":
            return ConstantIndex(spec.get("value", 0), domain)
        if kind == "example1":
            return catalog.example1_index(spec.get("n", options.get("n", 5)), domain)
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"bad index spec: {exc}") from None
    raise InvalidInputError(f"unknown index kind {spec.get('kind')!r}")
