"""Constant-weight codes and the residue-partition construction.

Weight-k words of length n (equivalently k-subsets of {1..n}) are split
into n classes by the residue T(a) = sum of (i - 1) over the set bits i,
taken mod n.  Any two words of equal weight at Hamming distance 2 differ
by moving a single set bit, which changes T; hence each class is a code
of minimum distance >= 4 and so a valid circuit-hyperplane family.  By
pigeonhole the largest class has at least binomial(n, k) / n words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError
from .matroid import SparsePavingMatroid, circuit_hyperplane_bound, validate
from .ratpoly import binomial

DEFAULT_WORD_BUDGET = 2_000_000


@dataclass(frozen=True)
class ConstantWeightCode:
    """A set of weight-k words of length n with pairwise distance >= 4.

    class_index records which residue class the code came from, when it
    was produced by the residue partition; None for externally built codes.
    """

    n: int
    k: int
    words: tuple[int, ...]
    class_index: int | None = None

    def to_matroid(self, *, check_pairwise: bool = True) -> SparsePavingMatroid:
        """The sparse paving matroid whose circuit-hyperplanes are the words."""
        return validate(self.n, self.k, self.words, check_pairwise=check_pairwise)


def weight_k_masks(n: int, k: int) -> Iterator[int]:
    """All weight-k masks of width n in ascending numeric order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    v = (1 << k) - 1
    top = 1 << n
    while v < top:
        yield v
        low = v & -v
        ripple = v + low
        v = (((ripple ^ v) >> 2) // low) | ripple


def gs_residue(word: int, n: int) -> int:
    """Residue of a word: sum of (i - 1) over its elements i, mod n."""
    if word >> n:
        raise ValueError(f"word has elements outside {{1..{n}}}")
    acc = 0
    pos = 0
    while word:
        if word & 1:
            acc += pos
        word >>= 1
        pos += 1
    return acc % n


def _gs_partition(n: int, k: int, max_words: int) -> list[list[int]]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got (n, k) = ({n}, {k})")
    if n < 1:
        raise ValueError("need n >= 1")
    total = binomial(n, k)
    if total > max_words:
        raise BudgetExceededError(
            f"class enumeration too large: binomial({n},{k}) = {total} > {max_words}"
        )
    classes: list[list[int]] = [[] for _ in range(n)]
    for w in weight_k_masks(n, k):
        classes[gs_residue(w, n)].append(w)
    return classes


def gs_classes(n: int, k: int, *, max_words: int = DEFAULT_WORD_BUDGET) -> list[int]:
    """Sizes of the n residue classes, index = residue.

    The sizes sum to binomial(n, k) and the largest is at least
    ceil(binomial(n, k) / n).
    """
    return [len(c) for c in _gs_partition(n, k, max_words)]


def gs_best_class(n: int, k: int, *, max_words: int = DEFAULT_WORD_BUDGET) -> ConstantWeightCode:
    """A residue class of maximum size; ties broken by smallest residue."""
    classes = _gs_partition(n, k, max_words)
    best = max(range(n), key=lambda i: (len(classes[i]), -i))
    return ConstantWeightCode(n=n, k=k, words=tuple(classes[best]), class_index=best)


def gs_lower_bound(n: int, k: int) -> int:
    """floor(binomial(n, k) / n): a class of at least this size always exists."""
    if n <= 0:
        return 0
    return binomial(n, k) // n


def max_ch_upper_bound(n: int, k: int) -> int:
    """floor of binomial(n, k) * min(1/(k+1), 1/(n-k+1)), the packing bound
    on the number of circuit-hyperplanes of any rank-k matroid on n elements."""
    return circuit_hyperplane_bound(n, k)
