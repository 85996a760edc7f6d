"""Exchange-closed sets of distributions: M-convexity, M♮-convexity and
maximal elements.

The checkers are exhaustive over ordered pairs and meant for verification
scale (a few thousand members at most).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInputError


@dataclass(frozen=True)
class ConvexityReport:
    holds: bool
    witness: tuple | None = None  # (xi, xi_tilde, cell)

    def __bool__(self):
        return self.holds


def _members(S: Iterable) -> list:
    ms = sorted({tuple(x) for x in S})
    if not ms:
        raise InvalidInputError("set of distributions is empty")
    if len({len(m) for m in ms}) != 1:
        raise InvalidInputError("distributions do not share one grid")
    return ms


def _swap(xi, eta, a, b):
    p, q = list(xi), list(eta)
    p[a] -= 1
    q[a] += 1
    if b is not None:
        p[b] += 1
        q[b] -= 1
    return tuple(p), tuple(q)


def _scan(ms, allow_empty):
    S = set(ms)
    d = len(ms[0])
    for xi in ms:
        for eta in ms:
            lower = [b for b in range(d) if xi[b] < eta[b]]
            opts = ([None] if allow_empty else []) + lower
            for a in range(d):
                if xi[a] <= eta[a]:
                    continue
                if not any(all(m in S for m in _swap(xi, eta, a, b)) for b in opts):
                    return xi, eta, a
    return None


def is_m_convex(S: Iterable) -> ConvexityReport:
    hit = _scan(_members(S), allow_empty=False)
    return ConvexityReport(hit is None, hit)


def m_natural_norm_split(S: Iterable) -> ConvexityReport:
    """The norm-split characterisation of M♮-convexity.

    Pairs with a larger norm need one coordinate to hand over; pairs of equal
    norm need the ordinary two-sided exchange at every excess coordinate.
    """
    ms = _members(S)
    S = set(ms)
    d = len(ms[0])
    for xi in ms:
        for eta in ms:
            nx, ny = sum(xi), sum(eta)
            if nx > ny:
                excess = [a for a in range(d) if xi[a] > eta[a]]
                if not any(all(m in S for m in _swap(xi, eta, a, None)) for a in excess):
                    return ConvexityReport(False, (xi, eta, excess[0]))
            elif nx == ny:
                lower = [b for b in range(d) if xi[b] < eta[b]]
                for a in range(d):
                    if xi[a] > eta[a] and not any(
                            all(m in S for m in _swap(xi, eta, a, b)) for b in lower):
                        return ConvexityReport(False, (xi, eta, a))
    return ConvexityReport(True)


def is_m_natural_convex(S: Iterable, cross_check: bool = True) -> ConvexityReport:
    ms = _members(S)
    hit = _scan(ms, allow_empty=True)
    report = ConvexityReport(hit is None, hit)
    if cross_check and m_natural_norm_split(ms).holds != report.holds:
        raise AssertionError("M♮-convexity criteria disagree; checker bug")
    return report


def maximal_distributions(S: Iterable) -> list:
    """Members with no strictly larger member, in lexicographic order."""
    ms = _members(S)

    def dominated(x):
        return any(y != x and all(a <= b for a, b in zip(x, y)) for y in ms)

    return [x for x in ms if not dominated(x)]
