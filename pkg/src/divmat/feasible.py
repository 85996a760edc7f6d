"""Feasible sets of distributions.

Every kind answers ``contains`` and exposes a finite bounding ``box``; the
structured kinds also enumerate their members below a cap without scanning the
whole box.
"""
from __future__ import annotations

import itertools
from math import comb, prod
from typing import Callable, Iterable

from .core import Grid
from .errors import BudgetExceededError, InvalidInputError

DEFAULT_ENUM_LIMIT = 200_000


class FeasibleSet:
    kind = "abstract"

    def __init__(self, grid: Grid):
        self.grid = grid

    @property
    def box(self) -> tuple:
        raise NotImplementedError

    def _contains(self, xi) -> bool:
        raise NotImplementedError

    def contains(self, xi) -> bool:
        if len(xi) != self.grid.dim:
            raise InvalidInputError(
                f"distribution has {len(xi)} entries, grid has {self.grid.dim}")
        if any(v < 0 for v in xi):
            return False
        return self._contains(xi)

    __contains__ = contains

    def _bound(self, cap) -> tuple:
        if cap is None:
            return self.box
        cap = tuple(cap)
        if len(cap) != self.grid.dim:
            raise InvalidInputError("cap does not match the grid")
        return tuple(min(a, b) for a, b in zip(cap, self.box))

    def _generate(self, bound) -> Iterable:
        ranges = [range(b + 1) for b in bound]
        return (xi for xi in itertools.product(*ranges) if self._contains(xi))

    def enumerate(self, cap=None, limit: int = DEFAULT_ENUM_LIMIT) -> list:
        """All members ``xi`` with ``0 <= xi <= cap``, in lexicographic order."""
        out = []
        for xi in self._generate(self._bound(cap)):
            out.append(tuple(xi))
            if len(out) > limit:
                raise BudgetExceededError(
                    f"feasible set has more than {limit} members under the cap")
        return out

    def to_json(self) -> dict:
        raise InvalidInputError(f"{self.kind} feasible sets have no JSON form")

    def __repr__(self):
        return f"{type(self).__name__}({self.to_json() if self.kind != 'predicate' else '...'})"


def _check_scan(bound, limit):
    size = prod(b + 1 for b in bound)
    if size > 64 * limit:
        raise BudgetExceededError(f"bounding box has {size} points; scan limit exceeded")


class TotalCap(FeasibleSet):
    """All distributions with at most ``q`` contracts in total."""

    kind = "total_cap"

    def __init__(self, grid: Grid, q: int):
        super().__init__(grid)
        if not isinstance(q, int) or q < 0:
            raise InvalidInputError("total capacity must be a non-negative int")
        self.q = q

    @property
    def box(self):
        return (self.q,) * self.grid.dim

    def _contains(self, xi):
        return sum(xi) <= self.q

    def _generate(self, bound):
        return _bounded_compositions(bound, self.q)

    def count(self) -> int:
        d = self.grid.dim
        return sum(comb(d + k - 1, k) for k in range(self.q + 1)) if d else 1

    def to_json(self):
        return {"kind": self.kind, "q": self.q}


def _bounded_compositions(bound, total):
    """Vectors ``0 <= v <= bound`` with sum at most ``total``, lexicographic."""
    if not bound:
        yield ()
        return
    head, rest = bound[0], bound[1:]
    for v in range(min(head, total) + 1):
        for tail in _bounded_compositions(rest, total - v):
            yield (v,) + tail


class PerSchoolCaps(FeasibleSet):
    """Each school admits at most its own capacity across all types."""

    kind = "per_school_caps"

    def __init__(self, grid: Grid, caps):
        super().__init__(grid)
        if isinstance(caps, dict):
            missing = set(grid.schools) - set(caps)
            if missing or set(caps) - set(grid.schools):
                raise InvalidInputError("capacities must name every school exactly")
            caps = [caps[s] for s in grid.schools]
        caps = tuple(caps)
        if len(caps) != len(grid.schools) or any(
                not isinstance(q, int) or q < 0 for q in caps):
            raise InvalidInputError("one non-negative int capacity per school")
        self.caps = caps

    @property
    def box(self):
        k = len(self.grid.types)
        return tuple(q for q in self.caps for _ in range(k))

    def _contains(self, xi):
        k = len(self.grid.types)
        return all(sum(xi[i * k:(i + 1) * k]) <= q for i, q in enumerate(self.caps))

    def _generate(self, bound):
        k = len(self.grid.types)
        blocks = [list(_bounded_compositions(bound[i * k:(i + 1) * k], q))
                  for i, q in enumerate(self.caps)]
        for parts in itertools.product(*blocks):
            yield sum(parts, ())

    def to_json(self):
        return {"kind": self.kind, "caps": list(self.caps)}


class Box(FeasibleSet):
    kind = "box"

    def __init__(self, grid: Grid, upper):
        super().__init__(grid)
        self.upper = grid.check(upper)

    @property
    def box(self):
        return self.upper

    def _contains(self, xi):
        return all(a <= b for a, b in zip(xi, self.upper))

    def _generate(self, bound):
        return itertools.product(*[range(b + 1) for b in bound])

    def to_json(self):
        return {"kind": self.kind, "upper": list(self.upper)}


class Explicit(FeasibleSet):
    """A finite list of distributions; must contain the zero vector."""

    kind = "explicit"

    def __init__(self, grid: Grid, members):
        super().__init__(grid)
        ms = sorted({grid.check(m) for m in members})
        if grid.zero() not in ms:
            raise InvalidInputError("feasible set must contain the zero vector")
        self.members = tuple(ms)
        self._set = frozenset(ms)
        self._box = tuple(max(col) for col in zip(*ms)) if grid.dim else ()

    @property
    def box(self):
        return self._box

    def _contains(self, xi):
        return tuple(xi) in self._set

    def _generate(self, bound):
        return (m for m in self.members if all(a <= b for a, b in zip(m, bound)))

    def to_json(self):
        return {"kind": self.kind, "members": [list(m) for m in self.members]}


class Predicate(FeasibleSet):
    """Membership given by a pure function, restricted to a finite box."""

    kind = "predicate"

    def __init__(self, grid: Grid, fn: Callable, box):
        super().__init__(grid)
        self.fn = fn
        self._box = grid.check(box)
        if not fn(grid.zero()):
            raise InvalidInputError("feasible set must contain the zero vector")

    @property
    def box(self):
        return self._box

    def _contains(self, xi):
        return all(a <= b for a, b in zip(xi, self._box)) and bool(self.fn(tuple(xi)))

    def enumerate(self, cap=None, limit: int = DEFAULT_ENUM_LIMIT):
        _check_scan(self._bound(cap), limit)
        return super().enumerate(cap, limit)


class Restricted(FeasibleSet):
    """Members of ``base`` lying below ``cap``."""

    kind = "restricted"

    def __init__(self, base: FeasibleSet, cap):
        super().__init__(base.grid)
        self.base = base
        self.cap = base.grid.check(cap)

    @property
    def box(self):
        return tuple(min(a, b) for a, b in zip(self.base.box, self.cap))

    def _contains(self, xi):
        return all(a <= b for a, b in zip(xi, self.cap)) and self.base._contains(xi)

    def _generate(self, bound):
        return self.base._generate(bound)

    def enumerate(self, cap=None, limit: int = DEFAULT_ENUM_LIMIT):
        return self.base.enumerate(self._bound(cap), limit)

    def to_json(self):
        return {"kind": "restricted", "base": self.base.to_json(), "cap": list(self.cap)}


def from_json(grid: Grid, spec: dict) -> FeasibleSet:
    try:
        kind = spec["kind"]
        if kind == "total_cap":
            return TotalCap(grid, spec["q"])
        if kind == "per_school_caps":
            return PerSchoolCaps(grid, spec["caps"])
        if kind == "box":
            return Box(grid, spec["upper"])
        if kind == "explicit":
            return Explicit(grid, spec["members"])
        if kind == "restricted":
            return Restricted(from_json(grid, spec["base"]), spec["cap"])
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"bad feasible-set spec: {exc}") from None
    raise InvalidInputError(f"unknown feasible-set kind {spec.get('kind')!r}")
