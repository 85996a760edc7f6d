"""Choice rules that maximise diversity first and merit second.

``maximize_diversity`` climbs from the zero distribution one unit at a time
and returns a maximal maximiser below the cap.  ``diversity_choice`` then
admits contracts best-first, keeping their distribution under an optimal
anchor that may be moved by a single unit exchange.  ``trace_frontier``
sweeps truncation levels to list every diversity/merit trade-off.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .concavity import DiversityIndex, as_fraction, check_ordinal_concavity, truncate
from .core import Instance, distribution_of
from .errors import HypothesisViolation, InvalidInputError
from .feasible import FeasibleSet


@dataclass(frozen=True)
class ChoiceResult:
    chosen: tuple
    diversity: Fraction
    anchor: tuple
    lam: Fraction | None = None
    operations: int = 0


@dataclass(frozen=True)
class FrontierPoint:
    set: tuple
    diversity: Fraction
    lam: Fraction


class _Oracle:
    """Counted, memoised access to ``f`` and the feasible set."""

    def __init__(self, f: DiversityIndex, feasible: FeasibleSet | None, integer=False):
        self.f = f
        self.feasible = f.domain if feasible is None else feasible
        self.direct = self.feasible is f.domain
        self.integer = integer
        self.cache = {}
        self.ops = 0

    def member(self, xi) -> bool:
        self.ops += 1
        return self.feasible.contains(xi)

    def __call__(self, xi) -> Fraction:
        self.ops += 1
        v = self.cache.get(xi)
        if v is None:
            v = self.f.value(xi) if self.direct else self.f(xi)
            if self.integer and v.denominator != 1:
                raise InvalidInputError(
                    f"index value {v} at {xi} is not an integer; "
                    "rescale with indices.rescale_to_integers first")
            self.cache[xi] = v
        return v


def _climb(ev: _Oracle, cap) -> tuple:
    xi = tuple(0 for _ in cap)
    if not ev.member(xi):
        raise InvalidInputError("the zero distribution must be feasible")
    val = ev(xi)
    d = len(cap)
    while True:
        best = best_val = None
        for a in range(d):
            if xi[a] >= cap[a]:
                continue
            cand = xi[:a] + (xi[a] + 1,) + xi[a + 1:]
            if not ev.member(cand):
                continue
            v = ev(cand)
            if best is None or v > best_val:
                best, best_val = cand, v
        if best is None or best_val < val:
            return xi
        xi, val = best, best_val


def maximize_diversity(f: DiversityIndex, cap, feasible: FeasibleSet | None = None) -> tuple:
    """A maximal element of ``argmax f`` over feasible ``xi <= cap``.

    Guaranteed for ordinally concave ``f``; for other indices the climb still
    terminates but the result may be suboptimal.
    """
    cap = f.grid.check(cap)
    return _climb(_Oracle(f, feasible), cap)


def _verify(f: DiversityIndex, cap):
    verdict = check_ordinal_concavity(f.restrict(cap))
    if not verdict.holds:
        raise HypothesisViolation("index is not ordinally concave below the cap", verdict)


def _choose(X, f, inst, feasible, strategy, ev: _Oracle, verify=False):
    if inst.grid != f.grid:
        raise InvalidInputError("instance grid and index grid differ")
    ids = inst.sort(X)
    cap = distribution_of(ids, inst)
    if verify:
        _verify(f, cap)
    anchor = list(_climb(ev, cap))
    target = ev(tuple(anchor))
    height = sum(anchor)
    d = len(cap)
    counts = [0] * d

    def optimal(p):
        return ev.member(p) and ev(p) == target

    def admit(x):
        a = inst.cell_of(x)
        if counts[a] < anchor[a]:
            return True
        for b in range(d):
            if b == a or counts[b] >= anchor[b]:
                continue
            p = anchor[:]
            p[a] += 1
            p[b] -= 1
            if p[a] <= cap[a] and optimal(tuple(p)):
                anchor[:] = p
                return True
        return False

    chosen = []
    if strategy == "scan":
        for x in ids:
            if admit(x):
                chosen.append(x)
                counts[inst.cell_of(x)] += 1
    elif strategy == "restart":
        remaining = list(ids)
        while True:
            pick = next((x for x in remaining if admit(x)), None)
            if pick is None:
                break
            remaining.remove(pick)
            chosen.append(pick)
            counts[inst.cell_of(pick)] += 1
    else:
        raise InvalidInputError(f"unknown strategy {strategy!r}")
    assert sum(anchor) == height, "anchor exchanges must keep its size"
    return tuple(chosen), tuple(anchor)


def diversity_choice(X: Iterable, f: DiversityIndex, inst: Instance, *,
                     feasible: FeasibleSet | None = None, strategy: str = "scan",
                     verify: bool = False) -> ChoiceResult:
    """Most diverse feasible subset of ``X``; among those, the merit-best.

    ``strategy="scan"`` makes one best-first pass; ``"restart"`` re-scans
    from the top after every admission, as the rule is usually stated.  The
    two agree whenever ``f`` is ordinally concave.
    """
    ev = _Oracle(f, feasible)
    chosen, anchor = _choose(X, f, inst, feasible, strategy, ev, verify)
    div = ev(distribution_of(chosen, inst))
    return ChoiceResult(chosen, div, anchor, None, ev.ops)


def diversity_choice_lambda(X: Iterable, f: DiversityIndex, lam, inst: Instance, *,
                            feasible: FeasibleSet | None = None, strategy: str = "scan",
                            verify: bool = False) -> ChoiceResult:
    """:func:`diversity_choice` under ``min(f, lam)``; reports the untruncated value."""
    lam = as_fraction(lam)
    ft = truncate(f, lam)
    ev = _Oracle(ft, feasible)
    chosen, anchor = _choose(X, ft, inst, feasible, strategy, ev, verify)
    xi = distribution_of(chosen, inst)
    return ChoiceResult(chosen, f.value(xi) if ev.direct else f(xi), anchor, lam, ev.ops)


def trace_frontier(X: Iterable, f: DiversityIndex, inst: Instance, *,
                   feasible: FeasibleSet | None = None,
                   strategy: str = "scan") -> list:
    """Diversity/merit frontier of ``X`` for an integer-valued index.

    Starts at level 0 and raises the level to one above the diversity just
    reached until the untruncated choice is hit.  The number of points is at
    most ``max f + 1``.
    """
    if f.integer_valued is False:
        raise InvalidInputError(
            "trace_frontier needs an integer-valued index; "
            "rescale with indices.rescale_to_integers first")
    full_ev = _Oracle(f, feasible, integer=True)
    full, _ = _choose(X, f, inst, feasible, strategy, full_ev)
    points = []
    lam = Fraction(0)
    while True:
        ft = truncate(f, lam)
        ev = _Oracle(ft, feasible, integer=True)
        chosen, _ = _choose(X, ft, inst, feasible, strategy, ev)
        div = full_ev(distribution_of(chosen, inst))
        points.append(FrontierPoint(chosen, div, lam))
        if chosen == full:
            break
        nxt = div + 1
        if nxt <= lam:  # only possible without concavity; stop rather than loop
            break
        lam = nxt
    return sorted(points, key=lambda p: (p.diversity, p.lam))


def best_exchange(f: DiversityIndex, xi, feasible: FeasibleSet | None = None) -> tuple:
    """Best single step ``xi + e_gain - e_drop`` (either side may be ``None``).

    Returns ``(value, moves)`` where ``moves`` lists every maximising
    ``(gain, drop)`` pair other than ``(None, None)``, in lexicographic order
    with ``None`` first.
    """
    feasible = f.domain if feasible is None else feasible
    xi = tuple(xi)
    d = len(xi)
    best, moves = None, []
    opts = [None] + list(range(d))
    for g in opts:
        for r in opts:
            if g is None and r is None:
                continue
            if g is not None and g == r:
                continue
            p = list(xi)
            if g is not None:
                p[g] += 1
            if r is not None:
                p[r] -= 1
            p = tuple(p)
            if min(p) < 0 or not feasible.contains(p):
                continue
            v = f(p)
            if best is None or v > best:
                best, moves = v, [(g, r)]
            elif v == best:
                moves.append((g, r))
    return best, moves


def in_cut_region(candidate, xi, gain, drop) -> bool:
    """Whether ``candidate`` lies beyond the cut certified by ``(gain, drop)``."""
    ok = True
    if gain is not None:
        ok = ok and candidate[gain] >= xi[gain] + 1
    if drop is not None:
        ok = ok and candidate[drop] <= xi[drop] - 1
    return ok


class DiversityChoiceRule:
    """``X -> chosen set`` for use with the matroid module's property checks."""

    def __init__(self, f: DiversityIndex, inst: Instance, lam=None, **kw):
        self.f, self.inst, self.lam, self.kw = f, inst, lam, kw

    def __call__(self, X) -> frozenset:
        if self.lam is None:
            r = diversity_choice(X, self.f, self.inst, **self.kw)
        else:
            r = diversity_choice_lambda(X, self.f, self.lam, self.inst, **self.kw)
        return frozenset(r.chosen)
