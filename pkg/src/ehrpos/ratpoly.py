"""Exact rational arithmetic: dense polynomials and combinatorial numbers.

Every coefficient in this package is a `fractions.Fraction`; nothing here
touches floating point.  A `Polynomial` stores its coefficients densely,
index m holding the coefficient of t**m, with trailing zeros stripped so
that the zero polynomial has an empty coefficient tuple and degree equal
to the NEG_INFINITY sentinel.

Besides polynomial arithmetic the module provides the combinatorial
numbers the Ehrhart formulas consume: binomial coefficients (as a total
function), unsigned Stirling numbers of the first kind, and exact harmonic
numbers.  The Stirling and harmonic values are memoized in growing tables
because coefficient bounds re-read the same rows heavily; table growth is
lock-guarded so concurrent readers only ever see fully built rows.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence, Union

RatLike = Union[int, Fraction]

NEG_INFINITY = float("-inf")


def _as_fraction(x: RatLike) -> Fraction:
    # floats are rejected rather than converted: exactness is a hard invariant
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in exact arithmetic")
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Polynomial:
    """Dense univariate polynomial over Fraction, immutable by convention.

    coeffs[m] is the coefficient of t**m.  Construction strips trailing
    zeros, so equality of coefficient tuples is equality of polynomials.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | float:
        """Highest nonzero index; NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def coeff(self, m: int) -> Fraction:
        """Coefficient of t**m (zero beyond the degree)."""
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: RatLike) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other: Polynomial | RatLike) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Exact polynomial long division: self = q * other + r, deg r < deg other."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        nb = len(other.coeffs)
        rem = list(self.coeffs)
        if len(rem) < nb:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - nb + 1)
        lead = other.coeffs[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + nb - 1] / lead
            if c:
                quot[i] = c
                for j, b in enumerate(other.coeffs):
                    if b:
                        rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem)

    def derivative(self) -> Polynomial:
        return Polynomial([m * c for m, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        return "Polynomial([" + ", ".join(str(c) for c in self.coeffs) + "])"


def binomial(n: int, k: int) -> int:
    """C(n, k) as a total function: 0 whenever k < 0, k > n, or n < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# Triangular table of unsigned Stirling numbers of the first kind; row n
# holds [n over 0] .. [n over n].  Rows are append-only, so readers outside
# the lock only ever observe completed rows.
_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling1_unsigned(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind [n over m].

    Counts permutations of n elements with exactly m cycles; satisfies
    [n over m] = (n-1) [n-1 over m] + [n-1 over m-1].
    """
    if n < 0 or m < 0 or m > n:
        return 0
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                j = len(_stirling_rows)
                prev = _stirling_rows[j - 1]
                row = [0] * (j + 1)
                for i in range(1, j + 1):
                    above = prev[i] if i < j else 0
                    row[i] = (j - 1) * above + prev[i - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][m]


_harmonic_vals: list[Fraction] = [Fraction(0)]
_harmonic2_vals: list[Fraction] = [Fraction(0)]
_harmonic_lock = threading.Lock()


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n exactly; H_0 = 0."""
    if n <= 0:
        return Fraction(0)
    if n >= len(_harmonic_vals):
        with _harmonic_lock:
            while len(_harmonic_vals) <= n:
                j = len(_harmonic_vals)
                _harmonic_vals.append(_harmonic_vals[j - 1] + Fraction(1, j))
    return _harmonic_vals[n]


def harmonic2(n: int) -> Fraction:
    """Second-order harmonic number H_n^(2) = sum of 1/i**2 for i <= n."""
    if n <= 0:
        return Fraction(0)
    if n >= len(_harmonic2_vals):
        with _harmonic_lock:
            while len(_harmonic2_vals) <= n:
                j = len(_harmonic2_vals)
                _harmonic2_vals.append(_harmonic2_vals[j - 1] + Fraction(1, j * j))
    return _harmonic2_vals[n]


def binom_poly(a: int, b: int) -> Polynomial:
    """The polynomial C(t + a, b) in t: degree b, leading coefficient 1/b!."""
    if b < 0:
        raise ValueError("binom_poly needs b >= 0")
    p = Polynomial([1])
    for i in range(b):
        p = p * Polynomial([a - i, 1])
    return p * Fraction(1, math.factorial(b))


def poly_shift(p: Polynomial, c: RatLike) -> Polynomial:
    """Return q with q(t) = p(t + c), by exact binomial expansion."""
    c = _as_fraction(c)
    if not p or c == 0:
        return p
    out = [Fraction(0)] * len(p.coeffs)
    for m, pm in enumerate(p.coeffs):
        if pm == 0:
            continue
        power = Fraction(1)
        for i in range(m, -1, -1):
            out[i] += pm * math.comb(m, i) * power
            power *= c
    return Polynomial(out)


def interpolate(points: Sequence[tuple[RatLike, RatLike]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton divided differences over exact rationals.  Abscissae must be
    pairwise distinct and the list nonempty.
    """
    if not points:
        raise ValueError("degenerate interpolation input")
    xs = [_as_fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("degenerate interpolation input")
    coef = [_as_fraction(y) for _, y in points]
    d = len(points) - 1
    for j in range(1, d + 1):
        for i in range(d, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = Polynomial([coef[0]])
    basis = Polynomial([1])
    for j in range(1, d + 1):
        basis = basis * Polynomial([-xs[j - 1], 1])
        if coef[j]:
            result = result + coef[j] * basis
    return result


def interpolate_at_naturals(values: Sequence[RatLike]) -> Polynomial:
    """Interpolate at the nodes t = 0, 1, ..., len(values) - 1.

    Forward differences in the binomial basis: p = sum_j b_j * C(t, j)
    with b_j the j-th forward difference at 0.  For integer-valued input
    the b_j stay integral, which keeps this path much cheaper than the
    general divided-difference one; both must agree where they overlap.
    """
    if not values:
        raise ValueError("degenerate interpolation input")
    arr = [_as_fraction(v) for v in values]
    result = Polynomial()
    basis = Polynomial([1])
    d = len(arr) - 1
    for j in range(d + 1):
        b = arr[0]
        if b:
            result = result + b * basis
        if j < d:
            arr = [y - x for x, y in zip(arr, arr[1:])]
            basis = basis * Polynomial([-j, 1]) * Fraction(1, j + 1)
    return result
