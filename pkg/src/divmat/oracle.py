"""Brute-force baselines that enumerate every subset or every distribution.

Nothing here calls into the solver.  Subsets of ``X`` are bitmasks over the
merit-sorted contract list, so bit 0 is the best contract.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .concavity import DiversityIndex
from .core import Instance
from .errors import BudgetExceededError, InvalidInputError
from .feasible import FeasibleSet
from .matroid import SetFamily


@dataclass(frozen=True)
class OracleBudget:
    max_subsets: int = 1 << 12
    max_domain: int = 4096

    def __post_init__(self):
        if self.max_subsets <= 0 or self.max_domain <= 0:
            raise InvalidInputError("oracle budgets must be positive")

    @classmethod
    def default(cls) -> "OracleBudget":
        """Defaults, overridden by ``DIVMAT_BUDGET`` (applies to both limits)."""
        raw = os.environ.get("DIVMAT_BUDGET")
        if not raw:
            return cls()
        try:
            n = int(raw)
        except ValueError:
            raise InvalidInputError(f"DIVMAT_BUDGET must be an integer, got {raw!r}") from None
        return cls(n, n)


@dataclass(frozen=True)
class OracleChoice:
    """Merit-dominant maximiser, or ``chosen=None`` with the incomparable maximisers."""

    chosen: tuple | None
    value: Fraction | None
    maximizers: tuple


def _budget(budget):
    return OracleBudget.default() if budget is None else budget


def _cells(X, inst: Instance):
    ids = inst.sort(X)
    return ids, [inst.cell_of(c) for c in ids]


def _subset_table(X, f, inst, feasible, budget):
    """Every feasible subset of ``X`` with its value, by mask."""
    ids, cells = _cells(X, inst)
    n = len(ids)
    if (1 << n) > budget.max_subsets:
        raise BudgetExceededError(f"2^{n} subsets exceed the oracle budget of {budget.max_subsets}")
    feasible = f.domain if feasible is None else feasible
    d = inst.grid.dim
    rows = []
    for mask in range(1 << n):
        xi = [0] * d
        for k in range(n):
            if mask >> k & 1:
                xi[cells[k]] += 1
        xi = tuple(xi)
        if feasible.contains(xi):
            rows.append((mask, xi, f(xi)))
    return ids, rows


def _padded_ranks(masks, n):
    """Sorted member positions per subset, padded with ``n`` (worse than any)."""
    out = np.full((len(masks), max(n, 1)), n, dtype=np.int64)
    for r, m in enumerate(masks):
        pos = [k for k in range(n) if m >> k & 1]
        out[r, :len(pos)] = pos
    return out


def _decode(ids, mask):
    return tuple(c for k, c in enumerate(ids) if mask >> k & 1)


def brute_force_opt_distributions(X, f: DiversityIndex, inst: Instance,
                                  feasible: FeasibleSet | None = None,
                                  budget: OracleBudget | None = None,
                                  reverse: bool = False) -> list:
    """Argmax of ``f`` over feasible ``0 <= xi <= xi(X)``, lexicographically sorted."""
    budget = _budget(budget)
    ids, cells = _cells(X, inst)
    cap = [0] * inst.grid.dim
    for c in cells:
        cap[c] += 1
    size = 1
    for v in cap:
        size *= v + 1
    if size > budget.max_domain:
        raise BudgetExceededError(f"{size} candidate distributions exceed the oracle budget")
    feasible = f.domain if feasible is None else feasible
    pts = list(product(*[range(v + 1) for v in cap]))
    if reverse:
        pts.reverse()
    best, arg = None, []
    for xi in pts:
        if not feasible.contains(xi):
            continue
        v = f(xi)
        if best is None or v > best:
            best, arg = v, [xi]
        elif v == best:
            arg.append(xi)
    return sorted(arg)


def brute_force_choice(X, f: DiversityIndex, inst: Instance,
                       feasible: FeasibleSet | None = None,
                       budget: OracleBudget | None = None) -> OracleChoice:
    budget = _budget(budget)
    ids, rows = _subset_table(X, f, inst, feasible, budget)
    best = max(v for _, _, v in rows)
    masks = [m for m, _, v in rows if v == best]
    P = _padded_ranks(masks, len(ids))
    # a dominant maximiser is coordinatewise <= every other, so it is lex-least
    lead = min(range(len(masks)), key=lambda r: tuple(P[r]))
    if bool((P[lead] <= P).all()):
        return OracleChoice(_decode(ids, masks[lead]), best, tuple(_decode(ids, m) for m in masks))
    return OracleChoice(None, best, tuple(_decode(ids, m) for m in masks))


def brute_force_pareto(X, f: DiversityIndex, inst: Instance,
                       feasible: FeasibleSet | None = None,
                       budget: OracleBudget | None = None) -> list:
    """Feasible ``Y`` not beaten by any other ``Z`` that merit-dominates it and
    has at least its diversity.  Sorted by diversity, then merit."""
    budget = _budget(budget)
    ids, rows = _subset_table(X, f, inst, feasible, budget)
    masks = np.array([m for m, _, _ in rows], dtype=np.int64)
    vals = [v for _, _, v in rows]
    order = sorted(set(vals))
    vrank = np.array([order.index(v) for v in vals], dtype=np.int64)
    P = _padded_ranks([int(m) for m in masks], len(ids))
    out = []
    for r in range(len(rows)):
        dom = (P <= P[r]).all(axis=1) & (vrank >= vrank[r]) & (masks != masks[r])
        if not dom.any():
            out.append((vals[r], _decode(ids, int(masks[r]))))
    out.sort(key=lambda t: (t[0], [inst.rank(c) for c in t[1]]))
    return [(s, v) for v, s in out]


def build_family(X, f: DiversityIndex, inst: Instance,
                 feasible: FeasibleSet | None = None,
                 budget: OracleBudget | None = None) -> SetFamily:
    """Subsets of ``X`` whose distribution sits below some optimal distribution."""
    budget = _budget(budget)
    opt = brute_force_opt_distributions(X, f, inst, feasible, budget)
    ids, cells = _cells(X, inst)
    n = len(ids)
    if (1 << n) > budget.max_subsets:
        raise BudgetExceededError(f"2^{n} subsets exceed the oracle budget")
    members = []
    d = inst.grid.dim
    for mask in range(1 << n):
        xi = [0] * d
        for k in range(n):
            if mask >> k & 1:
                xi[cells[k]] += 1
        if any(all(a <= b for a, b in zip(xi, o)) for o in opt):
            members.append(_decode(ids, mask))
    return SetFamily(ids, members)
