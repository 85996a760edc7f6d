"""Small worked instances used throughout the tests, docs and bundled files."""
from __future__ import annotations

from .core import Grid, make_instance
from .errors import InvalidInputError
from .feasible import Box, PerSchoolCaps, Restricted, TotalCap
from .indices import SaturatedIndex, TabularIndex


def example1_index(n, domain) -> TabularIndex:
    """Three single-contract types at one school, capacity two.

    ``f`` is 0 on the empty set, 1 on each of x, y and {x, y}, ``n`` on z
    and 5 on {x, z} and {y, z}; ``n >= 5``.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 5:
        raise InvalidInputError("the three-contract index needs an integer n >= 5")
    if domain.grid.dim != 3:
        raise InvalidInputError("the three-contract index lives on a three-cell grid")
    values = {
        (0, 0, 0): 0, (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): n,
        (1, 1, 0): 1, (1, 0, 1): 5, (0, 1, 1): 5,
    }
    return TabularIndex(values, domain)


def example1(n: int = 5, merit=("x", "y", "z")):
    """Instance and index; the domain is the capacity-2 set inside ``{0,1}^3``."""
    inst = make_instance(
        ["c"], ["tx", "ty", "tz"],
        [("x", "c", "sx", "tx"), ("y", "c", "sy", "ty"), ("z", "c", "sz", "tz")],
        list(merit))
    domain = Restricted(TotalCap(inst.grid, 2), (1, 1, 1))
    return inst, example1_index(n, domain)


def example5(merit=("x", "y")):
    """Ordinally concave on ``{0,1}^2`` but its truncation at 1 is not."""
    inst = make_instance(["c"], ["t", "t2"],
                         [("x", "c", "sx", "t"), ("y", "c", "sy", "t2")], list(merit))
    domain = Box(inst.grid, (1, 1))
    f = TabularIndex({(0, 0): 1, (1, 0): 0, (0, 1): 2, (1, 1): 1}, domain)
    return inst, f


def _one_cell(values, ids):
    inst = make_instance(["c"], ["t"], [(i, "c", "s" + i, "t") for i in ids], list(ids))
    domain = Box(inst.grid, (len(values) - 1,))
    return inst, TabularIndex({(k,): v for k, v in enumerate(values)}, domain)


def example6():
    """``f = 0, 0, 1`` on ``{0, 1, 2}``."""
    return _one_cell([0, 0, 1], ["u", "v"])


def strictly_increasing_example():
    """``f = 0, 3, 10`` on ``{0, 1, 2}``: ordinally but not M♮-concave."""
    return _one_cell([0, 3, 10], ["u", "v"])


def semistrict_gap_example():
    """Passes the ⁺ condition yet fails its semistrict strengthening."""
    inst = make_instance(["c"], ["t", "t2"],
                         [("x", "c", "sx", "t"), ("y", "c", "sy", "t2")], ["x", "y"])
    domain = Box(inst.grid, (1, 1))
    f = TabularIndex({(0, 0): 0, (1, 0): 0, (0, 1): 1, (1, 1): 1}, domain)
    return inst, f


CLAIM2_XI = (2, 0, 1, 0)
CLAIM2_XI_TILDE = (1, 1, 0, 0)
CLAIM2_CELL = 0


def claim2_counterexample():
    """Saturated index under per-school capacities 2 and 1, reserves (1,1,1,0).

    Cells are ordered (c,t), (c,t2), (c2,t), (c2,t2).  The triple
    ``(CLAIM2_XI, CLAIM2_XI_TILDE, CLAIM2_CELL)`` has no min-exchange.
    """
    inst = make_instance(
        ["c", "c2"], ["t", "t2"],
        [("a1", "c", "s1", "t"), ("a2", "c", "s2", "t"), ("b1", "c", "s3", "t2"),
         ("d1", "c2", "s4", "t"), ("e1", "c2", "s5", "t2")],
        ["a1", "a2", "b1", "d1", "e1"])
    domain = PerSchoolCaps(inst.grid, (2, 1))
    return inst, SaturatedIndex((1, 1, 1, 0), domain)


def saturated_total_cap(grid: Grid, q: int, reserves):
    return SaturatedIndex(reserves, TotalCap(grid, q))
