"""h*-vectors and exact real-rootedness tests.

For a lattice polytope of dimension d with Ehrhart polynomial p, the
h*-vector (h*_0, ..., h*_d) is defined by the series identity
sum_{t>=0} p(t) z^t = h*(z) / (1-z)^(d+1), equivalently the basis change
p = sum_i h*_i C(t + d - i, d).  Evaluating against p(0), ..., p(d) and
inverting gives the closed form

    h*_i = sum_{j=0}^{i} (-1)^j C(d+1, j) p(i - j),

exact over Fractions.  For genuine Ehrhart polynomials every h*_i is a
nonnegative integer and h*_0 = 1.

Real-rootedness of a rational polynomial is decided exactly with Sturm
sequences: divide out gcd(p, p') to get the squarefree part q, build the
chain of negated remainders, and count sign variations at -infinity and
+infinity; q (hence p) has all roots real iff the variation difference
equals deg q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .ratpoly import Polynomial, RatLike, binomial


def hstar(p: Polynomial, dim: int) -> list[Fraction]:
    """h*-vector of a degree-dim Ehrhart polynomial, length dim + 1."""
    if p.degree != dim:
        raise ValueError("dimension mismatch")
    values = [p(i) for i in range(dim + 1)]
    out = []
    for i in range(dim + 1):
        acc = Fraction(0)
        for j in range(i + 1):
            term = binomial(dim + 1, j) * values[i - j]
            acc += term if j % 2 == 0 else -term
        out.append(acc)
    return out


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while b:
        _, r = divmod(a, b)
        if r:
            # monic normalization keeps the coefficient growth in check
            r = r * Fraction(1, r.coeffs[-1])
        a, b = b, r
    return a


def _squarefree_part(p: Polynomial) -> Polynomial:
    g = _poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    q, r = divmod(p, g)
    assert not r
    return q


def _sturm_chain(q: Polynomial) -> list[Polynomial]:
    chain = [q, q.derivative()]
    while chain[-1]:
        _, r = divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(-r)
    return [c for c in chain if c]


def _sign_variations(signs: Sequence[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def is_real_rooted(coeffs: Sequence[RatLike]) -> bool:
    """True iff all complex roots of the given polynomial are real.

    Exact Sturm-sequence decision; multiple roots are allowed (the test
    runs on the squarefree part, which has the same root set).
    """
    p = Polynomial(coeffs)
    if not p:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    q = _squarefree_part(p)
    chain = _sturm_chain(q)
    at_pos = [1 if c.coeffs[-1] > 0 else -1 for c in chain]
    at_neg = [
        s if len(c.coeffs) % 2 else -s  # odd degree flips sign at -infinity
        for s, c in zip(at_pos, chain)
    ]
    real_roots = _sign_variations(at_neg) - _sign_variations(at_pos)
    return real_roots == q.degree
