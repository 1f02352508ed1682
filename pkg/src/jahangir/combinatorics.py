"""Spanning-tree counting for J(n, m) by spoke combinations and rim gaps.

Every spanning tree keeps a nonempty subset of the m spokes.  Fixing the k
kept spokes splits the rim into k arcs; a tree deletes exactly one rim edge
per arc, and an arc spanning a gap of g skipped spokes offers (g + 1) * n
choices.  Summing n^k * prod(gap_j + 1) over all k-subsets and all k gives
the count.  Subsets are grouped by their sorted gap vector (the signature)
since the product depends on nothing else.

Signatures are multisets of gaps, not rotation classes: from m >= 6, k >= 3
two subsets that are not rotations of one another can share a signature
(m=6, {1,2,4} and {1,2,5} both give (0,1,2)).  Multiplicities count
combinations, so the totals are unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, prod

from .errors import ParameterDomainError


@dataclass(frozen=True)
class SpokeCombination:
    """A choice of k of the m spokes, indices strictly increasing in 1..m."""

    m: int
    k: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= self.m:
            raise ParameterDomainError(f"k must be in 1..m (got k={self.k}, m={self.m})")
        if len(self.indices) != self.k:
            raise ParameterDomainError("index count does not match k")
        if list(self.indices) != sorted(set(self.indices)):
            raise ParameterDomainError("indices must be strictly increasing")
        if self.indices[0] < 1 or self.indices[-1] > self.m:
            raise ParameterDomainError("indices must lie in 1..m")


@dataclass(frozen=True)
class GapSignature:
    """Sorted vector of skipped-spoke counts between consecutive kept spokes."""

    k: int
    gaps: tuple[int, ...]

    def __post_init__(self):
        if len(self.gaps) != self.k:
            raise ParameterDomainError("gap count does not match k")
        if any(g < 0 for g in self.gaps):
            raise ParameterDomainError("gaps must be nonnegative")
        if list(self.gaps) != sorted(self.gaps):
            raise ParameterDomainError("gaps must be sorted ascending")


@dataclass(frozen=True)
class TreeCountBreakdown:
    """sigma split by number of kept spokes: per_k[i] counts trees keeping i+1."""

    n: int
    m: int
    per_k: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.per_k) != self.m:
            raise ParameterDomainError("per_k must have one entry per k = 1..m")
        if self.total != sum(self.per_k):
            raise ParameterDomainError("total does not equal the sum of per_k")


def _check_params(n: int, m: int):
    if n < 2:
        raise ParameterDomainError(f"n must be >= 2 (got {n})")
    if m < 3:
        raise ParameterDomainError(f"m must be >= 3 (got {m})")


def _gaps(indices: tuple[int, ...], m: int) -> tuple[int, ...]:
    # raw gap vector in cyclic order, wrap gap last
    k = len(indices)
    out = [indices[j + 1] - indices[j] - 1 for j in range(k - 1)]
    out.append(indices[0] - indices[k - 1] + m - 1)
    return tuple(out)


def gap_transform(b: SpokeCombination) -> GapSignature:
    """Sorted gaps between cyclically consecutive chosen spokes.

    Gap j is the count of unchosen spokes strictly between chosen spoke j
    and the next chosen one going around the cycle; the k gaps sum to m - k.
    Rotating the combination leaves the result unchanged.
    """
    return GapSignature(b.k, tuple(sorted(_gaps(b.indices, b.m))))


@lru_cache(maxsize=None)
def _census_map(m: int, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: dict[tuple[int, ...], int] = {}
    for combo in combinations(range(1, m + 1), k):
        sig = tuple(sorted(_gaps(combo, m)))
        counts[sig] = counts.get(sig, 0) + 1
    return tuple(sorted(counts.items()))


def class_census(m: int, k: int) -> list[tuple[GapSignature, int]]:
    """Distinct gap signatures over all C(m, k) spoke combinations, with
    multiplicities, sorted by gap vector.  Multiplicities sum to C(m, k).
    The census streams through the combinations; nothing of size C(m, k)
    is ever materialized.
    """
    if m < 3:
        raise ParameterDomainError(f"m must be >= 3 (got {m})")
    if not 1 <= k <= m:
        raise ParameterDomainError(f"k must be in 1..m (got k={k}, m={m})")
    return [(GapSignature(k, gaps), mult) for gaps, mult in _census_map(m, k)]


def class_contribution(n: int, sig: GapSignature) -> int:
    """Trees per combination in the class: n^k * prod(gap + 1)."""
    if n < 2:
        raise ParameterDomainError(f"n must be >= 2 (got {n})")
    return n ** sig.k * prod(g + 1 for g in sig.gaps)


def sigma_k(n: int, m: int, k: int) -> int:
    """Number of spanning trees of J(n, m) that keep exactly k spokes."""
    _check_params(n, m)
    if not 1 <= k <= m:
        raise ParameterDomainError(f"k must be in 1..m (got k={k}, m={m})")
    nk = n ** k
    return nk * sum(mult * prod(g + 1 for g in gaps) for gaps, mult in _census_map(m, k))


def sigma(n: int, m: int) -> TreeCountBreakdown:
    """Spanning-tree count of J(n, m) with its per-k breakdown."""
    _check_params(n, m)
    per_k = tuple(sigma_k(n, m, k) for k in range(1, m + 1))
    return TreeCountBreakdown(n, m, per_k, sum(per_k))


def polynomial_coefficients(m: int) -> tuple[int, ...]:
    """Coefficients (A_1, ..., A_m) with sigma(n, m) == sum A_k * n^k.

    A_k is the census sum of multiplicity * prod(gap + 1); the leading
    coefficient is 1 and A_1 is m squared.
    """
    if m < 3:
        raise ParameterDomainError(f"m must be >= 3 (got {m})")
    coeffs = []
    for k in range(1, m + 1):
        coeffs.append(sum(mult * prod(g + 1 for g in gaps) for gaps, mult in _census_map(m, k)))
    return tuple(coeffs)


def combination_count(m: int, k: int) -> int:
    """C(m, k); handy for census sanity checks."""
    return comb(m, k)
