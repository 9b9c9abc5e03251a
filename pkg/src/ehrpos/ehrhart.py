"""Ehrhart polynomials of sparse paving matroid polytopes.

The basis polytope of the uniform matroid U_{k,n} is the hypersimplex,
whose Ehrhart polynomial is recovered here by exact interpolation of a
bounded-composition count.  The minimal matroid T_{k,n} (the connected
rank-k matroid on n elements with the fewest bases) has a closed product
formula.  Relaxing one circuit-hyperplane adds one copy of the shifted
minimal-matroid polynomial, and the relaxations telescope down to the
uniform matroid, giving the master formula for a sparse paving matroid
with lambda circuit-hyperplanes:

    ehr(M, t) = ehr(U_{k,n}, t) - lambda * ehr(T_{k,n}, t - 1).

Around that formula the module provides quadratic-coefficient bounds, the
harmonic-number inequality certifying negative quadratic coefficients for
large ground sets, a single-coefficient Newton-difference path that skips
building the full polynomial, the rank-2 positivity suite, and the report
type used by the counterexample search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .codes import gs_lower_bound, max_ch_upper_bound
from .ratpoly import (
    Polynomial,
    binom_poly,
    binomial,
    harmonic,
    harmonic2,
    interpolate_at_naturals,
    poly_shift,
    stirling1_unsigned,
)

PROVENANCES = ("gs-bound", "external-table", "user")


def count_points_uniform(k: int, n: int, t: int) -> int:
    """Number of integer vectors with 0 <= x_i <= t and x_1 + ... + x_n = k*t.

    Inclusion-exclusion over coordinates pushed above t:
    sum_j (-1)^j C(n, j) C(kt - j(t+1) + n - 1, n - 1); the series breaks
    off after at most min(n, kt/(t+1)) + 1 terms.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got (k, n) = ({k}, {n})")
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    if n == 0:
        return 1
    total = 0
    sign = 1
    for j in range(n + 1):
        arg = k * t - j * (t + 1) + n - 1
        if arg < n - 1:
            break
        total += sign * binomial(n, j) * binomial(arg, n - 1)
        sign = -sign
    return total


@lru_cache(maxsize=None)
def ehr_uniform(k: int, n: int) -> Polynomial:
    """Ehrhart polynomial of the hypersimplex, by exact interpolation.

    Degree n - 1, constant term 1, and symmetric in k and n - k.  For
    k in {0, n} the polytope is a single point and the constant
    polynomial 1 is returned.
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n with n >= 1, got (k, n) = ({k}, {n})")
    if k in (0, n):
        return Polynomial([1])
    return interpolate_at_naturals([count_points_uniform(k, n, t) for t in range(n)])


@lru_cache(maxsize=None)
def ehr_minimal(k: int, n: int) -> Polynomial:
    """Ehrhart polynomial of the minimal matroid T_{k,n}:

        (1 / C(n-1, k-1)) C(t+n-k, n-k) sum_{j=0}^{k-1} C(n-k-1+j, j) C(t+j, j).

    Degree n - 1, constant term 1.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n - 1, got (k, n) = ({k}, {n})")
    series = Polynomial()
    for j in range(k):
        series = series + binomial(n - k - 1 + j, j) * binom_poly(j, j)
    return binom_poly(n - k, n - k) * series * Fraction(1, binomial(n - 1, k - 1))


@lru_cache(maxsize=None)
def ehr_minimal_shifted(k: int, n: int) -> Polynomial:
    """ehr_minimal(k, n) with t replaced by t - 1: the relaxation increment.

    All coefficients of degree >= 1 are strictly positive.  The constant
    term is zero: it equals ehr(T_{k,n}, -1), which by reciprocity counts
    interior lattice points of the undilated polytope, and there are none.
    Both facts are asserted because the monotonicity and positivity
    arguments downstream lean on them.
    """
    p = poly_shift(ehr_minimal(k, n), -1)
    assert all(c > 0 for c in p.coeffs[1:]) and p.coeff(0) >= 0
    return p


def ehr_sparse(n: int, k: int, lam: int) -> Polynomial:
    """Master formula: ehr(U_{k,n}, t) - lam * ehr(T_{k,n}, t - 1).

    The Ehrhart polynomial of any sparse paving matroid of rank k on n
    elements with lam circuit-hyperplanes; p(0) = 1, p(1) = C(n,k) - lam,
    p(-1) = 0.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got (n, k) = ({n}, {k})")
    bound = max_ch_upper_bound(n, k)
    if not 0 <= lam <= bound:
        raise ValueError(
            f"no sparse paving matroid with lambda = {lam} exists for "
            f"(n, k) = ({n}, {k}): the circuit-hyperplane count is capped at {bound}"
        )
    if lam == 0:
        return ehr_uniform(k, n)
    return ehr_uniform(k, n) - lam * ehr_minimal_shifted(k, n)


def ehr_uniform_coeff(k: int, n: int, m: int) -> Fraction:
    """Single coefficient [t^m] ehr_uniform(k, n) without the full polynomial.

    Newton forward differences: with b_j the j-th difference of the point
    counts at 0, the polynomial is sum_j b_j C(t, j), and
    [t^m] C(t, j) = (-1)^(j-m) [j over m] / j!.  The factors are carried
    by the Stirling recurrence, so memory stays linear in n while the
    difference table is consumed level by level.
    """
    if n < 1 or not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got (k, n) = ({k}, {n})")
    if not 0 <= m <= n - 1:
        raise ValueError(f"coefficient index {m} outside 0..{n - 1}")
    arr = [count_points_uniform(k, n, t) for t in range(n)]
    # factors[i] = [j over i] / j! for the current j; advance j by
    # [j over i] = (j-1)[j-1 over i] + [j-1 over i-1], divided through by j!
    factors = [Fraction(0)] * (m + 1)
    factors[0] = Fraction(1)
    coeff = Fraction(0)
    for j in range(n):
        if j >= m:
            b = arr[0]
            f = factors[m]
            if b and f:
                coeff += b * f if (j - m) % 2 == 0 else -b * f
        if j == n - 1:
            break
        arr = [y - x for x, y in zip(arr, arr[1:])]
        nxt = [Fraction(0)] * (m + 1)
        for i in range(m + 1):
            acc = j * factors[i]
            if i:
                acc += factors[i - 1]
            if acc:
                nxt[i] = acc / (j + 1)
        factors = nxt
    return coeff


def quad_coeff_minimal_shifted(k: int, n: int) -> Fraction:
    """[t^2] ehr_minimal_shifted(k, n) in closed form:

        (1/C(n-1,k-1)) ([n-k over 2]/(n-k)!
                        + (1/(n-k)) sum_{j=1}^{k-1} (1/j) C(n-k-1+j, j)).

    The Stirling term is [m over 2] = (m-1)! H_{m-1}, so it reduces to
    H_{m-1}/m; the triangular Stirling table would be cubic in n here.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2, got (k, n) = ({k}, {n})")
    inner = harmonic(n - k - 1) / (n - k)
    acc = Fraction(0)
    for j in range(1, k):
        acc += Fraction(binomial(n - k - 1 + j, j), j)
    inner += acc / (n - k)
    return inner / binomial(n - 1, k - 1)


def lower_bound_quad(k: int, n: int) -> Fraction:
    """Lower bound 1/(k(n-1)) on [t^2] ehr_minimal_shifted(k, n)."""
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2, got (k, n) = ({k}, {n})")
    return Fraction(1, k * (n - 1))


def upper_bound_quad_uniform(k: int, n: int) -> Fraction:
    """Upper bound C(k+1, 2) H_{n-1}^2 on [t^2] ehr_uniform(k, n)."""
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2, got (k, n) = ({k}, {n})")
    return binomial(k + 1, 2) * harmonic(n - 1) ** 2


def intermediate_bound_quad(k: int, n: int) -> Fraction:
    """The bound (C(k+1,2) + C(k,2)) [n over 3] / (n-1)! sitting between
    [t^2] ehr_uniform(k, n) and upper_bound_quad_uniform(k, n).

    [n over 3] = (n-1)! (H_{n-1}^2 - H^(2)_{n-1}) / 2 keeps this free of
    the triangular Stirling table.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2, got (k, n) = ({k}, {n})")
    w = binomial(k + 1, 2) + binomial(k, 2)
    return w * (harmonic(n - 1) ** 2 - harmonic2(n - 1)) / 2


def counterexample_inequality(k: int, n: int) -> bool:
    """Exact test of C(k+1,2) H_{n-1}^2 < C(n,k) / (n k (n-1)).

    Comparing the uniform-part upper bound against the relaxation-part
    lower bound scaled by C(n,k)/n: once this holds, a sparse paving
    matroid with the largest residue-class lambda at (n, k) has negative
    quadratic Ehrhart coefficient.
    """
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n - 2, got (k, n) = ({k}, {n})")
    lhs = binomial(k + 1, 2) * harmonic(n - 1) ** 2
    rhs = Fraction(binomial(n, k), n * k * (n - 1))
    return lhs < rhs


def _floor_nth_root(x: int, s: int) -> int:
    """Largest integer r with r**s <= x (integer Newton, exact fixups)."""
    if x < 0 or s < 1:
        raise ValueError("need x >= 0 and s >= 1")
    if s == 1 or x in (0, 1):
        return x
    r = 1 << ((x.bit_length() + s - 1) // s)
    while True:
        nr = ((s - 1) * r + x // r ** (s - 1)) // s
        if nr >= r:
            break
        r = nr
    while r**s > x:
        r -= 1
    while (r + 1) ** s <= x:
        r += 1
    return r


def _log_bounds(n: int, s: int, prec_bits: int = 32) -> tuple[Fraction, Fraction]:
    """Rational lo <= log(n) <= hi via the s-th root: with u = n**(1/s)
    sandwiched to prec_bits bits, (u-1)/u <= log(u) <= u - 1 scales by s."""
    d = 1 << prec_bits
    a = _floor_nth_root(n * d**s, s)
    q_lo = Fraction(a, d)
    q_hi = Fraction(a + 1, d)
    return s * (q_lo - 1) / q_lo, s * (q_hi - 1)


def counterexample_inequality_strong9(n: int) -> bool:
    """Strengthened rank >= 9 variant of counterexample_inequality:

        C(n+1, 2) (log(n) + 1)^2 < C(n, 9) / (n^2 (n-1)),

    using H_m <= log(m) + 1 and k(n-1) <= n(n-1) so a single inequality
    covers every rank from 9 up to n/2.  Decided exactly by sandwiching
    log(n) between rationals of increasing precision; log(n) is
    irrational for n >= 2, so the loop always terminates.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rhs = Fraction(binomial(n, 9), n * n * (n - 1))
    half = binomial(n + 1, 2)
    s = 256
    while s <= 1 << 22:
        lo, hi = _log_bounds(n, s)
        if half * (hi + 1) ** 2 < rhs:
            return True
        if half * (lo + 1) ** 2 >= rhs:
            return False
        s *= 4
    raise RuntimeError("log precision cap reached without a decision")


@dataclass(frozen=True)
class CounterexampleReport:
    """Outcome of one Ehrhart-positivity check, ready for serialization."""

    n: int
    k: int
    lam: int
    provenance: str
    ehrhart: Polynomial
    negative_coefficient_indices: tuple[int, ...]
    is_ehrhart_positive: bool

    @classmethod
    def build(cls, n: int, k: int, lam: int, provenance: str) -> CounterexampleReport:
        if provenance not in PROVENANCES:
            raise ValueError(f"provenance must be one of {PROVENANCES}")
        p = ehr_sparse(n, k, lam)
        neg = tuple(m for m, c in enumerate(p.coeffs) if c < 0)
        return cls(n, k, lam, provenance, p, neg, not neg)

    def coefficient_strings(self) -> list[str]:
        """Coefficients as exact "p/q" strings, index = degree, q kept even when 1."""
        return [f"{c.numerator}/{c.denominator}" for c in self.ehrhart.coeffs]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lambda": self.lam,
            "provenance": self.provenance,
            "coefficients": self.coefficient_strings(),
            "negative_indices": list(self.negative_coefficient_indices),
            "ehrhart_positive": self.is_ehrhart_positive,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CounterexampleReport:
        return cls(
            n=d["n"],
            k=d["k"],
            lam=d["lambda"],
            provenance=d["provenance"],
            ehrhart=Polynomial(Fraction(s) for s in d["coefficients"]),
            negative_coefficient_indices=tuple(d["negative_indices"]),
            is_ehrhart_positive=bool(d["ehrhart_positive"]),
        )


def search_counterexamples(
    n_min: int, n_max: int, k_min: int, k_max: int
) -> list[CounterexampleReport]:
    """Check Ehrhart positivity at lambda = gs_lower_bound over a grid.

    For each n in [n_min, n_max] and each feasible rank k in
    [max(k_min, 1), min(k_max, n - 1)], in increasing (n, k) order.
    """
    reports = []
    for n in range(n_min, n_max + 1):
        for k in range(max(k_min, 1), min(k_max, n - 1) + 1):
            reports.append(CounterexampleReport.build(n, k, gs_lower_bound(n, k), "gs-bound"))
    return reports


def rank2_poly(n: int) -> Polynomial:
    """ehr_uniform(2, n) - floor(n/2) * ehr_minimal_shifted(2, n): the
    Ehrhart polynomial of the rank-2 sparse paving matroid with the most
    circuit-hyperplanes ({1,2}, {3,4}, ... is such a family)."""
    if n < 3:
        raise ValueError("need n >= 3")
    return ehr_uniform(2, n) - (n // 2) * ehr_minimal_shifted(2, n)


def coeff_minimal_shifted_rank2(n: int, m: int) -> Fraction:
    """[t^m] ehr_minimal_shifted(2, n) in closed form:
    (1/(n-1)!) ([n-2 over m] + (n-2) [n-2 over m-1])."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 0 <= m <= n - 1:
        raise ValueError(f"coefficient index {m} outside 0..{n - 1}")
    num = stirling1_unsigned(n - 2, m) + (n - 2) * stirling1_unsigned(n - 2, m - 1)
    return Fraction(num, math.factorial(n - 1))


def verify_rank2_inequalities(n_max: int) -> bool:
    """Exact check of the Stirling inequalities behind rank-2 positivity,
    each over the range where it genuinely holds.

    (target)    [n over m+1] (2^m - m - 1) + (n-1) [n-1 over m+1]
                    >= (n/2) ([n-2 over m] + (n-2) [n-2 over m-1])
                for 4 <= n and 2 <= m <= n - 1.  The m = 2 instance fails
                at n = 3, where floor(n/2) = 1 is strictly below the n/2
                used here while P_3 = t + 1 itself stays positive, so
                n = 3 is not an applicable case.
    (reduced)   [n over m-1] <= [n over m+1] (2^m - m - 2)
                for 3 <= m <= 12 and n >= 13; small ground sets genuinely
                violate it (the largest failure is n = 11 at m = 10).
    (ratio)     m^2 (m+1)(m-1) <= 4 (2^m - m - 2) for 13 <= m <= n_max,
                which settles (reduced) for every m >= 13 through the
                log-concavity bound [n over m+1]/[n over m] >= 2(1/m - 1/n).
    (reduced12) [n over 11] <= 4082 [n over 13] for 13 <= n <= n_max.
    (target2)   the m = 2 instance of (target) for 4 <= n <= n_max,
                checked on its own as the binding case.

    All comparisons are integer arithmetic (the n/2 factors are cleared).
    Rows are rolled three at a time instead of memoizing the triangular
    table, which would be cubic in n_max.
    """
    if n_max > 2000:
        raise ValueError("n_max budget is 2000")
    for m in range(13, n_max + 1):
        if m * m * (m + 1) * (m - 1) > 4 * (2**m - m - 2):
            return False

    def get(row: list[int], i: int) -> int:
        return row[i] if 0 <= i < len(row) else 0

    row_n2, row_n1, row = [1], [0, 1], [0, 1, 1]
    for n in range(3, n_max + 1):
        nxt = [0] * (n + 1)
        for i in range(1, n + 1):
            nxt[i] = (n - 1) * get(row, i) + row[i - 1]
        row_n2, row_n1, row = row_n1, row, nxt
        if n < 4:
            continue
        for m in range(2, n):
            lhs = row[m + 1] * (2**m - m - 1) + (n - 1) * get(row_n1, m + 1)
            rhs = get(row_n2, m) + (n - 2) * get(row_n2, m - 1)
            if 2 * lhs < n * rhs:
                return False
        lhs = row[3] + (n - 1) * get(row_n1, 3)
        rhs = get(row_n2, 2) + (n - 2) * get(row_n2, 1)
        if 2 * lhs < n * rhs:
            return False
        if n >= 13:
            for m in range(3, 13):
                if row[m - 1] > row[m + 1] * (2**m - m - 2):
                    return False
            if row[11] > 4082 * get(row, 13):
                return False
    return True
