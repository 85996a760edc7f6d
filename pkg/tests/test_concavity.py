from fractions import Fraction
from itertools import product

import pytest

from divmat import InvalidInputError, UnsupportedDomainError
from divmat import catalog, generate
from divmat.concavity import (CHECKERS, FunctionIndex, check_m_concavity,
                              check_m_natural_concavity, check_monotone,
                              check_ordinal_concavity, check_pseudo_mnat,
                              check_pseudo_mnat_plus, check_semistrict_pseudo_mnat,
                              check_truncations_ordinal, exchange_holds, truncate,
                              truncation_grid)
from divmat.core import Grid
from divmat.feasible import Box, Predicate, TotalCap
from divmat.indices import ConstantIndex, SaturatedIndex, TabularIndex

G2 = Grid(["c"], ["t", "u"])


def constant_on_box():
    return ConstantIndex(3, Box(Grid(["c0", "c1"], ["a", "b"]), (1, 2, 1, 1)))


def test_example1_ordinal_for_several_n():
    for n in (5, 6, 9):
        _, f = catalog.example1(n)
        assert check_ordinal_concavity(f).holds


def test_example5_ordinal_but_truncation_fails_at_stated_pair():
    _, f = catalog.example5()
    assert check_ordinal_concavity(f).holds
    v = check_ordinal_concavity(truncate(f, 1))
    assert not v.holds
    assert (v.witness.xi, v.witness.xi_tilde) == ((1, 1), (0, 0))


def test_example5_truncated_table():
    _, f = catalog.example5()
    f1 = truncate(f, 1)
    assert [f1((0, 0)), f1((1, 0)), f1((0, 1)), f1((1, 1))] == [1, 0, 1, 1]


def test_strictly_increasing_is_ordinal_not_mnat():
    _, f = catalog.strictly_increasing_example()
    assert check_ordinal_concavity(f).holds
    v = check_m_natural_concavity(f)
    assert not v.holds
    assert (v.witness.xi, v.witness.xi_tilde) == ((2,), (0,))
    assert v.witness.detail["best_sum"] == 6 and v.witness.detail["required"] == 10


def test_saturated_on_box_is_mnat_concave():
    grid = Grid(["c0", "c1"], ["a", "b"])
    f = SaturatedIndex((1, 2, 0, 1), Box(grid, (2, 2, 1, 2)))
    assert check_m_natural_concavity(f).holds


def test_constant_passes_everything_except_m_on_a_box():
    f = constant_on_box()
    for name, chk in CHECKERS.items():
        assert chk(f).holds == (name != "m"), name
    # a box mixes sizes, so the M exchange without a swap partner must fail
    v = check_m_concavity(f)
    assert v.witness.detail["directions"] == []


def test_example6_pseudo_and_truncation_failure():
    _, f = catalog.example6()
    assert check_pseudo_mnat(f).holds
    v = check_ordinal_concavity(truncate(f, 1))
    assert not v.holds and (v.witness.xi, v.witness.xi_tilde) == ((2,), (0,))


def test_example5_not_pseudo():
    _, f = catalog.example5()
    assert not check_pseudo_mnat(f).holds


def test_plus_condition_examples():
    _, f = catalog.example1(5)
    assert check_pseudo_mnat_plus(f).holds
    f = SaturatedIndex((1, 1, 2), TotalCap(Grid(["c"], ["a", "b", "d"]), 3))
    assert check_pseudo_mnat_plus(f).holds
    _, f = catalog.claim2_counterexample()
    assert not check_pseudo_mnat_plus(f).holds


def test_claim2_stated_triple_fails_min_exchange():
    _, f = catalog.claim2_counterexample()
    xi, eta = catalog.CLAIM2_XI, catalog.CLAIM2_XI_TILDE
    assert f(xi) == f(eta) == 2
    assert f((2, 0, 0, 0)) == 1
    assert not exchange_holds("pseudo", f, xi, eta, catalog.CLAIM2_CELL)
    assert not check_pseudo_mnat(f).holds


def test_semistrict_gap_example():
    _, f = catalog.semistrict_gap_example()
    v = check_semistrict_pseudo_mnat(f)
    assert not v.holds
    assert not exchange_holds("semistrict", f, (1, 1), (0, 0), 0)
    assert check_pseudo_mnat_plus(f).holds


def test_monotone_examples():
    _, f = catalog.example1(5)
    assert check_monotone(f).holds
    _, f = catalog.example1(6)
    v = check_monotone(f)
    assert not v.holds
    # xi({x,z}) >= xi({z}) with 5 < 6 is one of the violations
    assert f((1, 0, 1)) < f((0, 0, 1))
    assert v.witness.xi_tilde == (0, 0, 1)
    grid = Grid(["c"], ["a", "b"])
    assert check_monotone(SaturatedIndex((1, 2), TotalCap(grid, 3))).holds
    assert check_monotone(ConstantIndex(0, TotalCap(grid, 3))).holds


def test_truncate_edges():
    _, f = catalog.example1(6)
    big = truncate(f, 100)
    small = truncate(f, 0)
    for xi in f.domain.enumerate():
        assert big(xi) == f(xi)
        assert small(xi) == 0
    with pytest.raises(InvalidInputError):
        truncate(f, -1)


def test_truncation_grid():
    _, f = catalog.example1(6)
    assert truncation_grid(f) == [Fraction(k) for k in range(7)]
    f = TabularIndex({(0,): "1/2", (1,): 2}, Box(Grid(["c"], ["t"]), (1,)))
    assert truncation_grid(f) == [0, Fraction(1, 2), 2]


def test_unenumerable_domain():
    grid = Grid(["c0", "c1"], ["a", "b"])
    f = FunctionIndex(Predicate(grid, lambda v: True, (60, 60, 60, 60)), lambda v: 0)
    with pytest.raises(UnsupportedDomainError):
        check_ordinal_concavity(f)


def test_exchange_holds_rejects_bad_cell():
    _, f = catalog.example5()
    with pytest.raises(InvalidInputError):
        exchange_holds("ordinal", f, (0, 1), (1, 0), 0)


@pytest.mark.parametrize("seed", range(120))
def test_implication_chain_and_witness_confirmation(seed):
    f = generate.random_tabular(seed, max_value=4)
    verdicts = {name: chk(f) for name, chk in CHECKERS.items()}
    if verdicts["mnat"].holds:
        assert verdicts["ordinal"].holds
    if verdicts["m"].holds:
        assert verdicts["mnat"].holds
    if verdicts["semistrict"].holds:
        assert verdicts["pseudo_plus"].holds
    if verdicts["pseudo_plus"].holds:
        assert verdicts["pseudo"].holds
    for name, v in verdicts.items():
        if name == "monotone":
            continue
        if not v.holds:
            w = v.witness
            assert not exchange_holds(name, f, w.xi, w.xi_tilde, w.cell)


def _triples(f):
    pts = f.domain.enumerate()
    for xi in pts:
        for eta in pts:
            for a in range(len(xi)):
                if xi[a] > eta[a]:
                    yield xi, eta, a


@pytest.mark.parametrize("seed", range(60))
def test_table_scan_matches_direct_evaluation(seed):
    f = generate.random_tabular(500 + seed, max_value=3)
    for name, chk in CHECKERS.items():
        if name == "monotone":
            continue
        direct = all(exchange_holds(name, f, *t) for t in _triples(f))
        assert chk(f).holds == direct, name


@pytest.mark.parametrize("seed", range(40))
def test_ordinal_invariant_under_increasing_transform(seed):
    f = generate.random_tabular(900 + seed, max_value=5)
    g = TabularIndex({xi: 3 * v * v + 7 for xi, v in f.table().items()}, f.domain)
    assert check_ordinal_concavity(f).holds == check_ordinal_concavity(g).holds
    assert check_pseudo_mnat_plus(f).holds == check_pseudo_mnat_plus(g).holds


@pytest.mark.parametrize("seed", range(60))
def test_truncation_family_implies_pseudo(seed):
    f = generate.random_tabular(2000 + seed, max_value=3)
    if check_truncations_ordinal(f).holds:
        assert check_pseudo_mnat(f).holds


def test_truncation_sweep_reports_level():
    _, f = catalog.example5()
    v = check_truncations_ordinal(f)
    assert not v.holds and v.lam == 1
