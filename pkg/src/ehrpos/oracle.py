"""Brute-force lattice-point oracle for desk-scale certification.

Counts integer points of dilated basis polytopes by depth-first search
over coordinates with remaining-sum pruning, independently of every
formula in `ehrpos.ehrhart`; the test suite plays the two against each
other.  Budgets keep instances small: this module is a certifier, not a
production counter.
"""

from __future__ import annotations

from typing import Iterator

from .codes import weight_k_masks
from .errors import BudgetExceededError
from .matroid import (
    SparsePavingMatroid,
    circuit_hyperplane_bound,
    facet_description,
)
from .ratpoly import Polynomial, interpolate_at_naturals

ORACLE_MAX_N = 10
ORACLE_MAX_T = 6
ORACLE_POLY_MAX_N = 8


def point_in_dilate(m: SparsePavingMatroid, x: tuple[int, ...], t: int, *, interior: bool = False) -> bool:
    """Membership of x in t * P(M) (or its relative interior), evaluated
    directly from the facet description."""
    if len(x) != m.n:
        raise ValueError("point has wrong dimension")
    constraints = facet_description(m)
    if interior:
        return all(c.holds_strict(x, t) for c in constraints)
    return all(c.holds(x, t) for c in constraints)


def _count_points(m: SparsePavingMatroid, t: int, *, interior: bool) -> int:
    n, k = m.n, m.k
    lo, hi = (1, t - 1) if interior else (0, t)
    cap = (k - 1) * t - (1 if interior else 0)
    target = k * t
    if hi < lo:
        return 0
    chs = m.circuit_hyperplanes
    per_coord = [[j for j, h in enumerate(chs) if h >> i & 1] for i in range(n)]
    sums = [0] * len(chs)

    def rec(i: int, rem: int) -> int:
        if i == n:
            return 1 if rem == 0 else 0
        left = n - i - 1
        total = 0
        for x in range(max(lo, rem - hi * left), min(hi, rem - lo * left) + 1):
            blocked = False
            for j in per_coord[i]:
                if sums[j] + x > cap:
                    blocked = True
                    break
            if blocked:
                break  # prefix sums grow with x, so larger x stay blocked
            for j in per_coord[i]:
                sums[j] += x
            total += rec(i + 1, rem - x)
            for j in per_coord[i]:
                sums[j] -= x
        return total

    return rec(0, target)


def _check_instance(m: SparsePavingMatroid, t: int, t_cap: int) -> None:
    if not 0 < m.k < m.n:
        raise ValueError("degenerate polytope (a point)")
    if m.n > ORACLE_MAX_N or t > t_cap:
        raise BudgetExceededError(
            f"oracle instance too large: n = {m.n} (max {ORACLE_MAX_N}), "
            f"t = {t} (max {t_cap})"
        )
    if t < 0:
        raise ValueError("dilation must be nonnegative")


def oracle_count(m: SparsePavingMatroid, t: int) -> int:
    """#(t P(M) cap Z^n): integer x with 0 <= x_i <= t, sum x_i = k t, and
    sum over each circuit-hyperplane <= (k-1) t."""
    _check_instance(m, t, ORACLE_MAX_T)
    return _count_points(m, t, interior=False)


def oracle_interior_count(m: SparsePavingMatroid, t: int) -> int:
    """Relative-interior count: all facet inequalities strict, the
    hyperplane sum x_i = k t kept as an equality."""
    _check_instance(m, t, ORACLE_MAX_T)
    return _count_points(m, t, interior=True)


def oracle_ehrhart(m: SparsePavingMatroid) -> Polynomial:
    """Ehrhart polynomial by interpolating oracle counts at t = 0..n-1.

    Budgeted at n <= 8, which needs dilations up to t = 7; the counting
    core is shared with oracle_count but this entry point carries its own
    (slightly larger) dilation allowance.
    """
    if not 0 < m.k < m.n:
        raise ValueError("degenerate polytope (a point)")
    if m.n > ORACLE_POLY_MAX_N:
        raise BudgetExceededError(
            f"oracle instance too large: n = {m.n} (max {ORACLE_POLY_MAX_N})"
        )
    return interpolate_at_naturals([_count_points(m, t, interior=False) for t in range(m.n)])


def enumerate_small_matroids(n: int, k: int, lambda_max: int) -> Iterator[SparsePavingMatroid]:
    """Every sparse paving matroid on {1..n} of rank k with at most
    lambda_max circuit-hyperplanes, in depth-first lexicographic order of
    the sorted mask tuples (the uniform matroid comes first).  No symmetry
    reduction is applied.
    """
    if n > 7:
        raise BudgetExceededError(f"enumeration too large: n = {n} (max 7)")
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"need 0 <= k <= n with n >= 1, got (n, k) = ({n}, {k})")
    masks = list(weight_k_masks(n, k))
    depth_cap = min(lambda_max, circuit_hyperplane_bound(n, k))

    def rec(start: int, chosen: list[int]) -> Iterator[SparsePavingMatroid]:
        yield SparsePavingMatroid(n, k, tuple(chosen))
        if len(chosen) == depth_cap:
            return
        for i in range(start, len(masks)):
            w = masks[i]
            if all((w ^ c).bit_count() >= 4 for c in chosen):
                chosen.append(w)
                yield from rec(i + 1, chosen)
                chosen.pop()

    yield from rec(0, [])
