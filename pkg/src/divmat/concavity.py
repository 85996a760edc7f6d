"""Diversity indices as exact-valued oracles and verifiers for their
exchange-type concavity conditions.

All verifiers enumerate the index's domain, walk ordered pairs
``(xi, xi_tilde)`` in lexicographic order together with each coordinate
``a`` where ``xi`` exceeds ``xi_tilde``, and report the first triple for which
no admissible direction works.  A direction is either empty or a coordinate
``b`` where ``xi`` is below ``xi_tilde``; the two moved points are
``xi - e_a + e_b`` and ``xi_tilde + e_a - e_b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Callable

import numpy as np

from . import kernels
from .errors import BudgetExceededError, InvalidInputError, UnsupportedDomainError
from .feasible import DEFAULT_ENUM_LIMIT, FeasibleSet, Restricted

CHECK_LIMIT = 4096
_BOX_LIMIT = 50_000_000


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool) or isinstance(v, float):
        raise InvalidInputError(f"index values must be exact, got {v!r}")
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            raise InvalidInputError(f"not a rational: {v!r}") from None
    try:
        return Fraction(v)
    except TypeError:
        raise InvalidInputError(f"not a rational: {v!r}") from None


class DiversityIndex:
    """Evaluation oracle ``f`` on a feasible set, returning exact rationals."""

    kind = "function"
    integer_valued = None  # True/False when known without enumeration

    def __init__(self, domain: FeasibleSet):
        self.domain = domain

    @property
    def grid(self):
        return self.domain.grid

    def value(self, xi) -> Fraction:
        raise NotImplementedError

    def __call__(self, xi) -> Fraction:
        xi = tuple(xi)
        if not self.domain.contains(xi):
            raise InvalidInputError(f"{xi} is outside the index's domain")
        return self.value(xi)

    def restrict(self, cap) -> "DiversityIndex":
        """The same index on the members of the domain below ``cap``."""
        return _Reindexed(self, Restricted(self.domain, cap))

    def table(self, limit: int = DEFAULT_ENUM_LIMIT) -> dict:
        return {xi: self.value(xi) for xi in self.domain.enumerate(limit=limit)}

    def to_json(self) -> dict:
        raise InvalidInputError(f"{self.kind} index has no JSON form")


class FunctionIndex(DiversityIndex):
    """Wrap any callable returning ints or Fractions."""

    def __init__(self, domain: FeasibleSet, fn: Callable):
        super().__init__(domain)
        self.fn = fn

    def value(self, xi):
        return as_fraction(self.fn(tuple(xi)))


class _Reindexed(DiversityIndex):
    def __init__(self, base: DiversityIndex, domain: FeasibleSet):
        super().__init__(domain)
        self.base = base
        self.kind = base.kind
        self.integer_valued = base.integer_valued

    def value(self, xi):
        return self.base.value(xi)


class TruncatedIndex(DiversityIndex):
    kind = "truncated"

    def __init__(self, base: DiversityIndex, lam):
        super().__init__(base.domain)
        lam = as_fraction(lam)
        if lam < 0:
            raise InvalidInputError("truncation level must be non-negative")
        self.base = base
        self.lam = lam
        if base.integer_valued and lam.denominator == 1:
            self.integer_valued = True

    def value(self, xi):
        v = self.base.value(xi)
        return v if v <= self.lam else self.lam

    def to_json(self):
        return {"kind": "truncated", "lambda": str(self.lam), "base": self.base.to_json()}


def truncate(f: DiversityIndex, lam) -> DiversityIndex:
    """``min(f, lam)`` on the same domain."""
    return TruncatedIndex(f, lam)


@dataclass(frozen=True)
class Witness:
    xi: tuple
    xi_tilde: tuple
    cell: int | None
    clause: str
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ConcavityVerdict:
    holds: bool
    property: str
    witness: Witness | None = None
    lam: Fraction | None = None

    def __bool__(self):
        return self.holds


class _Table:
    """Dense mixed-radix layout of an index over its enumerated domain."""

    def __init__(self, f: DiversityIndex, limit: int):
        try:
            pts = f.domain.enumerate(limit=limit)
        except BudgetExceededError as exc:
            raise UnsupportedDomainError(
                f"domain too large to verify exhaustively ({exc})") from None
        d = f.grid.dim
        self.points = pts
        self.values = [f.value(p) for p in pts]
        box = [max(col) for col in zip(*pts)] if pts and d else [0] * d
        size = prod(b + 1 for b in box)
        if size > _BOX_LIMIT:
            raise UnsupportedDomainError("bounding box too large for the dense layout")
        strides = [1] * d
        for k in range(d - 2, -1, -1):
            strides[k] = strides[k + 1] * (box[k + 1] + 1)
        self.strides = np.array(strides, dtype=np.int64)
        self.coords = np.array(pts, dtype=np.int64).reshape(len(pts), d)
        self.lin = self.coords @ self.strides if d else np.zeros(len(pts), dtype=np.int64)
        self.pos = np.full(size, -1, dtype=np.int64)
        self.pos[self.lin] = np.arange(len(pts), dtype=np.int64)
        self.index = {p: k for k, p in enumerate(pts)}

    def ranks(self) -> list:
        distinct = sorted(set(self.values))
        r = {v: k for k, v in enumerate(distinct)}
        return [r[v] for v in self.values]

    def scaled(self) -> list:
        den = lcm(*(v.denominator for v in self.values)) if self.values else 1
        return [int(v * den) for v in self.values]

    def value_at(self, p):
        k = self.index.get(tuple(p))
        return None if k is None else self.values[k]


_MODES = {
    "ordinal": (kernels.ORDINAL, "ranks"),
    "mnat": (kernels.MNAT, "scaled"),
    "m": (kernels.M, "scaled"),
    "pseudo": (kernels.PSEUDO, "ranks"),
    "pseudo_plus": (kernels.PSEUDO_PLUS, "ranks"),
    "semistrict": (kernels.SEMISTRICT, "ranks"),
}


def _directions(xi, eta, with_empty=True):
    opts = [b for b in range(len(xi)) if xi[b] < eta[b]]
    return ([None] if with_empty else []) + opts


def _moved(xi, eta, a, b):
    p, q = list(xi), list(eta)
    p[a] -= 1
    q[a] += 1
    if b is not None:
        p[b] += 1
        q[b] -= 1
    return tuple(p), tuple(q)


def _describe(prop, table, xi, eta, a) -> Witness:
    """Recompute, with exact values, why no direction works at a failing triple."""
    fx, fy = table.value_at(xi), table.value_at(eta)
    rows = []
    for b in _directions(xi, eta, prop != "m"):
        p, q = _moved(xi, eta, a, b)
        rows.append((b, table.value_at(p), table.value_at(q)))
    detail = {"f_xi": fx, "f_xi_tilde": fy}
    clause = prop
    if prop in ("mnat", "m"):
        sums = [vp + vq for _, vp, vq in rows if vp is not None and vq is not None]
        detail["best_sum"] = max(sums) if sums else None
        detail["required"] = fx + fy
        clause = "summed exchange inequality"
    elif prop == "ordinal":
        clause = "none of (i) improve xi, (ii) improve xi_tilde, (iii) both unchanged"
    elif prop == "pseudo":
        clause = "min exchange inequality"
    elif prop == "semistrict":
        clause = "strict min exchange inequality"
    elif prop == "pseudo_plus":
        low = min(fx, fy)
        ok_min = [(b, vp, vq) for b, vp, vq in rows
                  if vp is not None and vq is not None and min(vp, vq) >= low]
        if not ok_min:
            clause = "min exchange inequality"
        else:
            _, vp, vq = ok_min[0]
            clause = "side condition (A)" if fx > vp and fy == vq else "side condition (B)"
    detail["directions"] = [
        {"direction": b, "f_moved_xi": vp, "f_moved_xi_tilde": vq} for b, vp, vq in rows]
    return Witness(xi, eta, a, clause, detail)


def _check(prop: str, f: DiversityIndex, limit: int) -> ConcavityVerdict:
    mode, enc = _MODES[prop]
    table = _Table(f, limit)
    vals = table.ranks() if enc == "ranks" else table.scaled()
    hit = kernels.scan(mode, table.coords, table.lin, table.pos, vals, table.strides)
    if hit is None:
        return ConcavityVerdict(True, prop)
    i, j, a = hit
    xi, eta = table.points[i], table.points[j]
    return ConcavityVerdict(False, prop, _describe(prop, table, xi, eta, a))


def check_ordinal_concavity(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    return _check("ordinal", f, limit)


def check_m_natural_concavity(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    return _check("mnat", f, limit)


def check_m_concavity(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    return _check("m", f, limit)


def check_pseudo_mnat(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    return _check("pseudo", f, limit)


def check_pseudo_mnat_plus(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    return _check("pseudo_plus", f, limit)


def check_semistrict_pseudo_mnat(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    return _check("semistrict", f, limit)


def check_monotone(f: DiversityIndex, limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    """First ``(xi, xi_tilde)`` with ``xi >= xi_tilde`` but ``f(xi) < f(xi_tilde)``."""
    table = _Table(f, limit)
    ranks = np.array(table.ranks(), dtype=np.int64)
    c = table.coords
    n = len(ranks)
    step = max(1, 2_000_000 // max(n, 1))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        above = (c[lo:hi, None, :] >= c[None, :, :]).all(axis=2)
        bad = above & (ranks[lo:hi, None] < ranks[None, :])
        if bad.any():
            i, j = np.argwhere(bad)[0]
            xi, eta = table.points[lo + int(i)], table.points[int(j)]
            detail = {"f_xi": table.value_at(xi), "f_xi_tilde": table.value_at(eta)}
            return ConcavityVerdict(False, "monotone",
                                    Witness(xi, eta, None, "monotonicity", detail))
    return ConcavityVerdict(True, "monotone")


def truncation_grid(f: DiversityIndex, limit: int = CHECK_LIMIT) -> list:
    """Truncation levels that exhaust every distinct ``min(f, lam)``.

    For integer-valued ``f`` this is ``0, 1, ..., max f``; otherwise it is
    zero together with the distinct values of ``f``.
    """
    try:
        values = set(f.table(limit).values())
    except BudgetExceededError as exc:
        raise UnsupportedDomainError(str(exc)) from None
    if all(v.denominator == 1 for v in values):
        return [Fraction(k) for k in range(int(max(values)) + 1)]
    return sorted(values | {Fraction(0)})


def check_truncations_ordinal(f: DiversityIndex, grid=None,
                              limit: int = CHECK_LIMIT) -> ConcavityVerdict:
    """Ordinal concavity of every truncation on ``grid`` (default: :func:`truncation_grid`)."""
    levels = truncation_grid(f, limit) if grid is None else [as_fraction(g) for g in grid]
    for lam in levels:
        v = check_ordinal_concavity(truncate(f, lam), limit)
        if not v.holds:
            return ConcavityVerdict(False, "ordinal_all_truncations", v.witness, lam)
    return ConcavityVerdict(True, "ordinal_all_truncations")


CHECKERS = {
    "ordinal": check_ordinal_concavity,
    "mnat": check_m_natural_concavity,
    "m": check_m_concavity,
    "pseudo": check_pseudo_mnat,
    "pseudo_plus": check_pseudo_mnat_plus,
    "semistrict": check_semistrict_pseudo_mnat,
    "monotone": check_monotone,
}


def exchange_holds(prop: str, f: DiversityIndex, xi, xi_tilde, cell) -> bool:
    """Evaluate one exchange condition at a single triple, directly from ``f``.

    Independent of the dense table and the kernels; used to confirm reported
    witnesses and to test stated counterexample triples.
    """
    xi, eta = tuple(xi), tuple(xi_tilde)
    if xi[cell] <= eta[cell]:
        raise InvalidInputError("cell must be a coordinate where xi exceeds xi_tilde")

    def val(p):
        return f.value(p) if f.domain.contains(p) else None

    fx, fy = val(xi), val(eta)
    if fx is None or fy is None:
        raise InvalidInputError("both distributions must lie in the domain")
    rows = []
    for b in _directions(xi, eta, prop != "m"):
        p, q = _moved(xi, eta, cell, b)
        rows.append((p, val(p), val(q)))
    low = min(fx, fy)
    if prop == "ordinal":
        return any((vp is not None and vp > fx) or (vq is not None and vq > fy)
                   or (vp == fx and vq == fy) for _, vp, vq in rows)
    full = [(p, vp, vq) for p, vp, vq in rows if vp is not None and vq is not None]
    if prop in ("mnat", "m"):
        return any(vp + vq >= fx + fy for _, vp, vq in full)
    if prop == "pseudo":
        return any(min(vp, vq) >= low for _, vp, vq in full)
    if prop == "semistrict":
        return any(min(vp, vq) > low or (min(vp, vq) == low and (fx == fy or p == eta))
                   for p, vp, vq in full)
    if prop == "pseudo_plus":
        up_p = any(vp is not None and vp > fx for _, vp, _ in rows)
        up_q = any(vq is not None and vq > fy for _, _, vq in rows)
        for _, vp, vq in full:
            if min(vp, vq) < low:
                continue
            if fx > vp and fy == vq and not up_q:
                continue
            if fy > vq and fx == vp and not up_p:
                continue
            return True
        return False
    raise InvalidInputError(f"unknown property {prop!r}")
