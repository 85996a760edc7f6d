from itertools import product
from math import comb

import pytest

from divmat import BudgetExceededError, InvalidInputError
from divmat.catalog import example1
from divmat.convexity import is_m_natural_convex
from divmat.core import Grid
from divmat.feasible import (Box, Explicit, PerSchoolCaps, Predicate, Restricted, TotalCap,
                             from_json)

G22 = Grid(["c0", "c1"], ["a", "b"])
G13 = Grid(["c"], ["x", "y", "z"])


def kinds():
    return [TotalCap(G22, 3), PerSchoolCaps(G22, (2, 1)), Box(G22, (1, 2, 0, 1)),
            Explicit(G22, [(0, 0, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0)]),
            Predicate(G22, lambda v: sum(v) % 2 == 0, (2, 2, 2, 2))]


@pytest.mark.parametrize("fs", kinds(), ids=lambda f: f.kind)
def test_zero_is_member(fs):
    assert fs.contains(G22.zero())


def test_example1_total_cap_excludes_full_vector():
    assert not TotalCap(G13, 2).contains((1, 1, 1))
    assert TotalCap(G13, 2).contains((1, 0, 1))


def test_grid_mismatch_raises():
    with pytest.raises(InvalidInputError):
        TotalCap(G22, 2).contains((0, 0))


def test_explicit_agrees_with_predicate():
    members = [(0, 0, 0, 0), (1, 0, 0, 0), (0, 2, 1, 0), (1, 1, 1, 1)]
    ex = Explicit(G22, members)
    pr = Predicate(G22, lambda v: v in set(members), (2, 2, 2, 2))
    for v in product(range(3), repeat=4):
        assert ex.contains(v) == pr.contains(v)
    assert ex.enumerate() == pr.enumerate()


def test_enumerate_zero_cap():
    for fs in kinds():
        assert fs.enumerate(G22.zero()) == [G22.zero()]


def test_example1_enumeration_has_seven_points():
    _, f = example1()
    pts = f.domain.enumerate((1, 1, 1))
    expected = [v for v in product(range(2), repeat=3) if sum(v) <= 2]
    assert pts == expected and len(pts) == 7


@pytest.mark.parametrize("q", range(5))
@pytest.mark.parametrize("grid", [G22, G13, Grid(["c"], ["t"])], ids=["2x2", "1x3", "1x1"])
def test_total_cap_stars_and_bars(grid, q):
    fs = TotalCap(grid, q)
    n = len(fs.enumerate())
    assert n == sum(comb(grid.dim + k - 1, k) for k in range(q + 1)) == fs.count()


@pytest.mark.parametrize("fs", kinds(), ids=lambda f: f.kind)
def test_enumeration_is_sorted_and_matches_box_scan(fs):
    pts = fs.enumerate()
    assert pts == sorted(pts)
    scan = [v for v in product(*[range(b + 1) for b in fs.box]) if fs.contains(v)]
    assert pts == scan


def test_enumeration_limit():
    with pytest.raises(BudgetExceededError):
        TotalCap(G22, 10).enumerate(limit=50)


def test_structured_kinds_are_mnat_convex():
    for fs in [TotalCap(G22, 3), PerSchoolCaps(G22, (2, 1)), Box(G22, (1, 2, 0, 1)),
               TotalCap(G13, 2), PerSchoolCaps(Grid(["a", "b", "c"], ["t"]), (1, 2, 0))]:
        assert is_m_natural_convex(fs.enumerate()).holds


def test_restricted_and_json_round_trip():
    base = TotalCap(G22, 3)
    r = Restricted(base, (1, 1, 1, 1))
    assert not r.contains((2, 0, 0, 0))
    assert r.enumerate() == base.enumerate((1, 1, 1, 1))
    for fs in kinds()[:4] + [r]:
        again = from_json(G22, fs.to_json())
        assert again.enumerate() == fs.enumerate()


def test_bad_specs():
    with pytest.raises(InvalidInputError):
        Explicit(G22, [(1, 0, 0, 0)])
    with pytest.raises(InvalidInputError):
        TotalCap(G22, -1)
    with pytest.raises(InvalidInputError):
        PerSchoolCaps(G22, (1,))
    with pytest.raises(InvalidInputError):
        from_json(G22, {"kind": "ellipsoid"})
