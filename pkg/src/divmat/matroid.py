"""Set families, matroid and base axioms, the greedy rule, and quantified
checks of choice-rule properties over every subset of a small universe.

Choice rules are plain callables mapping a frozenset to a frozenset.
Quantified checks tabulate the rule once per subset (bitmask encoded, bit
``k`` is the ``k``-th element of the sorted universe) and then compare
tables with numpy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import BudgetExceededError, InvalidInputError

MAX_UNIVERSE = 14


@dataclass(frozen=True)
class Report:
    holds: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _canon(S) -> tuple:
    return tuple(sorted(S, key=str))


class SetFamily:
    """A ground set with a collection of its subsets."""

    def __init__(self, ground: Iterable, members: Iterable[Iterable]):
        self.ground = frozenset(ground)
        ms = {frozenset(m) for m in members}
        for m in ms:
            if not m <= self.ground:
                raise InvalidInputError(f"member {sorted(m, key=str)} is not inside the ground set")
        self.members = frozenset(ms)
        self._maximal = None

    def ordered(self) -> list:
        """Members sorted by size, then by sorted element list."""
        return sorted(self.members, key=lambda m: (len(m), [str(x) for x in _canon(m)]))

    def maximal(self) -> list:
        if self._maximal is None:
            self._maximal = [m for m in self.ordered()
                             if not any(m < other for other in self.members)]
        return self._maximal

    def covers(self, S) -> bool:
        """Whether ``S`` is contained in some member."""
        S = frozenset(S)
        return any(S <= m for m in self.maximal())

    def __contains__(self, S):
        return frozenset(S) in self.members

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"SetFamily({[_canon(m) for m in self.ordered()]})"


def is_matroid(F: SetFamily) -> Report:
    if frozenset() not in F.members:
        return Report(False, "I1", (frozenset(),))
    for X in F.ordered():
        for x in _canon(X):
            if X - {x} not in F.members:
                return Report(False, "I2", (X, X - {x}))
    ordered = F.ordered()
    for X1 in ordered:
        for X2 in ordered:
            if len(X1) < len(X2) and not any(X1 | {x} in F.members for x in X2 - X1):
                return Report(False, "I3", (X1, X2))
    return Report(True)


def check_base_axioms(B: SetFamily, variant: str = "B2") -> Report:
    """B1 (non-empty) together with one of the exchange axioms.

    ``B2``: ``X1 - x1 + x2`` is a member; ``B2prime``: it is contained in a
    member; ``B2strong``: additionally ``X2 - x2 + x1`` is a member.
    """
    if variant not in ("B2", "B2prime", "B2strong"):
        raise InvalidInputError(f"unknown base-axiom variant {variant!r}")
    if not B.members:
        return Report(False, "B1", ())
    ordered = B.ordered()
    for X1 in ordered:
        for X2 in ordered:
            for x1 in _canon(X1 - X2):
                ok = False
                for x2 in _canon(X2 - X1):
                    Y = (X1 - {x1}) | {x2}
                    if variant == "B2":
                        ok = Y in B.members
                    elif variant == "B2prime":
                        ok = B.covers(Y)
                    else:
                        ok = Y in B.members and (X2 - {x2}) | {x1} in B.members
                    if ok:
                        break
                if not ok:
                    return Report(False, variant, (X1, X2, x1))
    return Report(True)


def _weights(X, weights: Mapping) -> dict:
    w = {}
    for x in X:
        try:
            v = Fraction(weights[x])
        except KeyError:
            raise InvalidInputError(f"no weight for {x!r}") from None
        if v < 0:
            raise InvalidInputError("weights must be non-negative")
        w[x] = v
    if len(set(w.values())) != len(w):
        raise InvalidInputError("weights must be distinct")
    return w


def greedy(X: Iterable, F, weights: Mapping) -> frozenset:
    """Repeatedly add the heaviest remaining element keeping the set inside
    some member of ``F``; return the accumulated set.

    ``F`` is a :class:`SetFamily` or a callable ``covers(S) -> bool``.
    """
    covers = F.covers if isinstance(F, SetFamily) else F
    X = frozenset(X)
    w = _weights(X, weights)
    order = sorted(X, key=w.__getitem__, reverse=True)
    chosen = frozenset()
    while True:
        pick = next((x for x in order if x not in chosen and covers(chosen | {x})), None)
        if pick is None:
            return chosen
        chosen = chosen | {pick}


class GreedyRule:
    """The greedy rule as a choice rule over a fixed family and weights."""

    def __init__(self, F, weights: Mapping):
        self.F = F
        self.weights = dict(weights)

    def __call__(self, X) -> frozenset:
        return greedy(X, self.F, self.weights)


class _Tabulated:
    def __init__(self, C: Callable, universe: Iterable):
        elems = _canon(set(universe))
        if len(elems) > MAX_UNIVERSE:
            raise BudgetExceededError(
                f"universe of {len(elems)} elements exceeds the {MAX_UNIVERSE}-element limit")
        self.elems = elems
        bit = {x: 1 << k for k, x in enumerate(elems)}
        n = 1 << len(elems)
        table = np.empty(n, dtype=np.int64)
        for mask in range(n):
            X = frozenset(e for k, e in enumerate(elems) if mask >> k & 1)
            out = frozenset(C(X))
            if not out <= X:
                raise InvalidInputError(f"choice from {_canon(X)} is not a subset of it")
            table[mask] = sum(bit[x] for x in out)
        self.table = table
        self.size = np.array([bin(m).count("1") for m in range(n)], dtype=np.int64)
        self.masks = np.arange(n, dtype=np.int64)

    def decode(self, mask) -> frozenset:
        return frozenset(e for k, e in enumerate(self.elems) if int(mask) >> k & 1)


def check_path_independence(C: Callable, universe: Iterable) -> Report:
    """``C(X' | X) == C(C(X') | X)`` for all pairs; first failure in mask order."""
    T = _Tabulated(C, universe)
    t, m = T.table, T.masks
    for a in range(len(t)):  # a encodes X, m ranges over X'
        bad = t[a | m] != t[t[m] | a]
        if bad.any():
            b = int(np.argmax(bad))
            return Report(False, "path independence", (T.decode(a), T.decode(b)))
    return Report(True)


def check_lad(C: Callable, universe: Iterable) -> Report:
    """``X <= X'`` implies ``|C(X')| >= |C(X)|``; witness ``(X, X')``."""
    T = _Tabulated(C, universe)
    sz = T.size[T.table]
    m = T.masks
    for a in range(len(sz)):
        bad = ((m & a) == a) & (sz < sz[a])
        if bad.any():
            b = int(np.argmax(bad))
            return Report(False, "law of aggregate demand", (T.decode(a), T.decode(b)))
    return Report(True)


def _single_additions(T: _Tabulated):
    for a in range(len(T.table)):
        for k in range(len(T.elems)):
            if not a >> k & 1:
                yield a, k, a | 1 << k


def check_irc(C: Callable, universe: Iterable) -> Report:
    """Rejected additions leave the choice unchanged."""
    T = _Tabulated(C, universe)
    t = T.table
    for a, k, ax in _single_additions(T):
        if not t[ax] >> k & 1 and t[ax] != t[a]:
            return Report(False, "irrelevance of rejected contracts", (T.decode(a), T.elems[k]))
    return Report(True)


def check_substitutes(C: Callable, universe: Iterable) -> Report:
    """``C(X) >= C(X + x) & X``."""
    T = _Tabulated(C, universe)
    t = T.table
    for a, k, ax in _single_additions(T):
        if (t[ax] & a) & ~t[a]:
            return Report(False, "substitutes", (T.decode(a), T.elems[k]))
    return Report(True)


def subsets(ground: Iterable) -> list:
    g = _canon(set(ground))
    return [frozenset(c) for r in range(len(g) + 1) for c in combinations(g, r)]
