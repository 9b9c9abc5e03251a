from __future__ import annotations

import time
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrpos.ehrhart import count_points_uniform, ehr_sparse
from ehrpos.errors import BudgetExceededError
from ehrpos.matroid import (
    SparsePavingMatroid,
    circuit_hyperplane_bound,
    mask_from_elements,
    validate,
)
from ehrpos.oracle import (
    ORACLE_MAX_N,
    ORACLE_MAX_T,
    enumerate_small_matroids,
    oracle_count,
    oracle_ehrhart,
    oracle_interior_count,
    point_in_dilate,
)


def uniform(k: int, n: int) -> SparsePavingMatroid:
    return validate(n, k, [])


def test_oracle_count_examples() -> None:
    assert oracle_count(uniform(2, 3), 1) == 3
    m = validate(4, 2, [0b0011, 0b1100])
    assert oracle_count(m, 1) == 4
    for any_m in (uniform(2, 5), m, validate(6, 3, [0b000111])):
        assert oracle_count(any_m, 0) == 1


def test_oracle_interior_examples() -> None:
    assert oracle_interior_count(uniform(2, 3), 1) == 0
    p = ehr_sparse(3, 2, 0)
    assert oracle_interior_count(uniform(2, 3), 3) == (-1) ** 2 * p(-3)
    for any_m in (uniform(2, 4), validate(5, 2, [0b00011])):
        assert oracle_interior_count(any_m, 1) == 0


def test_oracle_against_brute_force_box() -> None:
    m = validate(4, 2, [0b0011])
    for t in range(4):
        pts = [
            x
            for x in product(range(t + 1), repeat=4)
            if sum(x) == 2 * t and x[0] + x[1] <= t
        ]
        assert oracle_count(m, t) == len(pts)


def test_oracle_uniform_cross_check() -> None:
    for n in range(2, 8):
        for k in range(1, n):
            for t in range(5):
                assert oracle_count(uniform(k, n), t) == count_points_uniform(k, n, t)


def test_oracle_uniform_cross_check_n8() -> None:
    for k in (1, 4):
        for t in (3, 5):
            assert oracle_count(uniform(k, 8), t) == count_points_uniform(k, 8, t)


def test_oracle_matches_formula_on_sparse_families() -> None:
    cases = [
        validate(6, 3, [0b000111, 0b111000]),
        validate(5, 2, [0b00011, 0b01100]),
        validate(6, 2, [0b000011, 0b001100, 0b110000]),
        validate(7, 3, [mask_from_elements([1, 2, 3], 7)]),
    ]
    for m in cases:
        p = ehr_sparse(m.n, m.k, m.lam)
        for t in range(4):
            assert oracle_count(m, t) == p(t)


def test_oracle_ehrhart_reconstructs_formula() -> None:
    m = validate(6, 3, [0b000111, 0b111000])
    assert oracle_ehrhart(m) == ehr_sparse(6, 3, 2)
    assert oracle_ehrhart(uniform(2, 5)) == ehr_sparse(5, 2, 0)


def test_oracle_budgets() -> None:
    with pytest.raises(BudgetExceededError, match="oracle instance too large"):
        oracle_count(uniform(2, 3), ORACLE_MAX_T + 1)
    with pytest.raises(BudgetExceededError, match="oracle instance too large"):
        oracle_count(uniform(5, ORACLE_MAX_N + 1), 1)
    with pytest.raises(BudgetExceededError):
        oracle_ehrhart(uniform(4, 9))
    with pytest.raises(ValueError):
        oracle_count(uniform(2, 3), -1)
    with pytest.raises(ValueError, match="degenerate"):
        oracle_count(validate(4, 0, []), 2)


def test_point_in_dilate() -> None:
    m = uniform(2, 4)
    assert point_in_dilate(m, (1, 1, 0, 0), 1)
    assert not point_in_dilate(m, (1, 1, 0, 0), 1, interior=True)
    assert point_in_dilate(m, (1, 1, 1, 1), 2)
    assert point_in_dilate(m, (1, 1, 1, 1), 2, interior=True)
    assert not point_in_dilate(m, (2, 0, 0, 0), 1)
    with pytest.raises(ValueError, match="wrong dimension"):
        point_in_dilate(m, (1, 1, 0), 1)


def test_point_in_dilate_respects_circuit_hyperplanes() -> None:
    m = validate(4, 2, [0b0011])
    # x1 + x2 = 2 > t * (k - 1) = 1 excludes the relaxed vertex
    assert not point_in_dilate(m, (1, 1, 0, 0), 1)
    assert point_in_dilate(m, (1, 0, 1, 0), 1)


def test_enumerate_4_2_contents() -> None:
    ms = list(enumerate_small_matroids(4, 2, 2))
    assert len(ms) == 10
    lams = sorted(m.lam for m in ms)
    assert lams == [0] + [1] * 6 + [2] * 3
    # the three two-element families pair complementary subsets
    for m in ms:
        if m.lam == 2:
            a, b = m.circuit_hyperplanes
            assert a ^ b == 0b1111


def test_enumerate_5_2_disjoint_pairs() -> None:
    ms = list(enumerate_small_matroids(5, 2, 2))
    assert len(ms) == 1 + 10 + 15
    for m in ms:
        if m.lam == 2:
            a, b = m.circuit_hyperplanes
            assert a & b == 0


def test_enumerate_respects_bound_and_order() -> None:
    ms = list(enumerate_small_matroids(6, 3, 99))
    assert all(m.lam <= circuit_hyperplane_bound(6, 3) for m in ms)
    chs = [m.circuit_hyperplanes for m in ms]
    assert chs == sorted(chs)
    assert chs[0] == ()
    with pytest.raises(BudgetExceededError, match="enumeration too large"):
        list(enumerate_small_matroids(8, 4, 1))


def test_enumerate_all_validate() -> None:
    for m in enumerate_small_matroids(6, 3, 2):
        assert validate(m.n, m.k, m.circuit_hyperplanes) == m


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_count_monotone_in_relaxation(data: st.DataObject) -> None:
    # dropping a circuit-hyperplane can only add points
    n = data.draw(st.integers(4, 6))
    k = data.draw(st.integers(2, n - 2))
    pool = [m for m in enumerate_small_matroids(n, k, 2) if m.lam]
    m = data.draw(st.sampled_from(pool))
    relaxed = SparsePavingMatroid(n, k, m.circuit_hyperplanes[1:])
    t = data.draw(st.integers(0, 3))
    assert oracle_count(relaxed, t) >= oracle_count(m, t)


def test_oracle_runtime_smoke() -> None:
    t0 = time.time()
    oracle_count(uniform(5, 10), 3)
    assert time.time() - t0 < 30
