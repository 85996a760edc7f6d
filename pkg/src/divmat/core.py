"""Domain model: contracts, merit ranking, distributions and merit domination.

A distribution is a plain tuple of non-negative ints indexed by the cells of a
:class:`Grid`, in lexicographic (school, type) order.  Contract sets are
handled as iterables of contract ids and returned as tuples sorted best-first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInputError

Distribution = tuple  # tuple[int, ...] in canonical cell order


@dataclass(frozen=True)
class Grid:
    """The (school, type) index set of distributions."""

    schools: tuple
    types: tuple

    def __post_init__(self):
        object.__setattr__(self, "schools", tuple(self.schools))
        object.__setattr__(self, "types", tuple(self.types))
        if len(set(self.schools)) != len(self.schools):
            raise InvalidInputError("duplicate school id")
        if len(set(self.types)) != len(self.types):
            raise InvalidInputError("duplicate type id")

    @property
    def dim(self) -> int:
        return len(self.schools) * len(self.types)

    @property
    def cells(self) -> tuple:
        return tuple((s, t) for s in self.schools for t in self.types)

    def index(self, school, type_) -> int:
        try:
            return self.schools.index(school) * len(self.types) + self.types.index(type_)
        except ValueError:
            raise InvalidInputError(f"unknown cell ({school!r}, {type_!r})") from None

    def cell(self, i: int) -> tuple:
        return self.schools[i // len(self.types)], self.types[i % len(self.types)]

    def label(self, i: int) -> str:
        s, t = self.cell(i)
        return f"{s}/{t}"

    def zero(self) -> Distribution:
        return (0,) * self.dim

    def unit(self, i: int) -> Distribution:
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def check(self, xi) -> Distribution:
        """Validate ``xi`` against this grid and return it as a tuple."""
        xi = tuple(xi)
        if len(xi) != self.dim:
            raise InvalidInputError(f"distribution has {len(xi)} entries, grid has {self.dim}")
        for v in xi:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidInputError(f"distribution entries must be non-negative ints: {xi}")
        return xi

    def to_mapping(self, xi) -> dict:
        return {cell: v for cell, v in zip(self.cells, xi)}

    def from_mapping(self, counts: Mapping) -> Distribution:
        v = [0] * self.dim
        for (s, t), k in counts.items():
            v[self.index(s, t)] = k
        return self.check(v)


@dataclass(frozen=True)
class Contract:
    id: str
    school: str
    student: str
    type: str


@dataclass(frozen=True)
class MeritRanking:
    """Strict merit order; ``rank[id] == 0`` is the best contract."""

    rank: Mapping

    def __post_init__(self):
        rank = dict(self.rank)
        if sorted(rank.values()) != list(range(len(rank))):
            raise InvalidInputError("merit ranks must be a permutation of 0..n-1")
        object.__setattr__(self, "rank", rank)

    @classmethod
    def from_order(cls, ids: Sequence) -> "MeritRanking":
        ids = list(ids)
        if len(set(ids)) != len(ids):
            raise InvalidInputError("merit order lists a contract twice")
        return cls({cid: i for i, cid in enumerate(ids)})

    def order(self) -> tuple:
        return tuple(sorted(self.rank, key=self.rank.__getitem__))


@dataclass(frozen=True)
class Instance:
    schools: tuple
    types: tuple
    contracts: tuple
    merit: MeritRanking
    grid: Grid = field(init=False, repr=False, compare=False)
    _cell: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "contracts", tuple(self.contracts))
        grid = Grid(self.schools, self.types)
        object.__setattr__(self, "schools", grid.schools)
        object.__setattr__(self, "types", grid.types)
        object.__setattr__(self, "grid", grid)
        cell = {}
        student_type = {}
        for c in self.contracts:
            if c.id in cell:
                raise InvalidInputError(f"duplicate contract id {c.id!r}")
            if student_type.setdefault(c.student, c.type) != c.type:
                raise InvalidInputError(f"student {c.student!r} has more than one type")
            cell[c.id] = grid.index(c.school, c.type)
        if set(self.merit.rank) != set(cell):
            raise InvalidInputError("merit ranking must cover exactly the contract ids")
        object.__setattr__(self, "_cell", cell)

    @property
    def ids(self) -> tuple:
        """All contract ids, best-first."""
        return self.merit.order()

    def cell_of(self, cid) -> int:
        try:
            return self._cell[cid]
        except KeyError:
            raise InvalidInputError(f"unknown contract id {cid!r}") from None

    def rank(self, cid) -> int:
        try:
            return self.merit.rank[cid]
        except KeyError:
            raise InvalidInputError(f"unknown contract id {cid!r}") from None

    def sort(self, ids: Iterable) -> tuple:
        """Canonical form of a contract set: unique ids, best merit first."""
        ids = set(ids)
        for cid in ids:
            self.rank(cid)
        return tuple(sorted(ids, key=self.merit.rank.__getitem__))

    def with_merit(self, order: Sequence) -> "Instance":
        return Instance(self.schools, self.types, self.contracts, MeritRanking.from_order(order))


def distribution_of(contracts: Iterable, inst: Instance) -> Distribution:
    """Count the contracts of a set in each (school, type) cell."""
    v = [0] * inst.grid.dim
    for cid in set(contracts):
        v[inst.cell_of(cid)] += 1
    return tuple(v)


def norm(xi) -> int:
    return sum(xi)


def add(xi, eta) -> Distribution:
    return tuple(a + b for a, b in zip(xi, eta))


def leq(xi, eta) -> bool:
    """Coordinatewise ``xi <= eta``."""
    return all(a <= b for a, b in zip(xi, eta))


def merit_dominates(X: Iterable, Y: Iterable, inst: Instance) -> bool:
    """True when X is at least as large as Y and beats it position by position."""
    xr = sorted(inst.rank(c) for c in set(X))
    yr = sorted(inst.rank(c) for c in set(Y))
    if len(xr) < len(yr):
        return False
    return all(a <= b for a, b in zip(xr, yr))


def make_instance(schools, types, contracts, merit) -> Instance:
    """Convenience constructor.

    ``contracts`` is a sequence of ``(id, school, student, type)`` tuples or
    :class:`Contract` objects; ``merit`` is either an id list ordered best-first
    or a mapping id -> rank.
    """
    cs = tuple(c if isinstance(c, Contract) else Contract(*c) for c in contracts)
    if isinstance(merit, Mapping):
        ranking = MeritRanking(merit)
    else:
        ranking = MeritRanking.from_order(merit)
    return Instance(tuple(schools), tuple(types), cs, ranking)
