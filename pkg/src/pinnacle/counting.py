"""Closed-form counts: how many pinnacle sets, and how many labelings.

The number of size-``k`` pinnacle sets of a graph with a unique minimal
size-``k`` pinnacle set ``b`` is the number of strictly increasing tuples
squeezed between ``b`` and its fixed top element, a lattice-path count
evaluated here by dynamic programming.  Specializing to the known bottoms
of cycles and paths yields ballot-number formulas

    cycles: C(n-2, k-1) - C(n-2, k-2)      paths: C(n-1, k-1) - C(n-1, k-2)

whose row sums give the totals.  Separately, the number of *labelings* of
the ``n``-cycle whose pinnacle set is the top block ``[n-k+1, n]`` is

    (k-1)! * n * 2^(n-2k) * sum over compositions (a_1..a_k) of n-k
                                 of multinomial(n-k; a_1, ..., a_k).

All arithmetic is exact arbitrary-precision integers.
"""

from __future__ import annotations

import math
from collections.abc import Iterable

from .graphs import PinnacleSet

__all__ = [
    "Composition",
    "compositions",
    "count_from_bottom",
    "count_labelings_cycle_max_set",
    "cycle_table",
    "multinomial",
    "path_table",
    "pinn_closed_form",
    "pinn_complete_bipartite",
]

Composition = tuple[int, ...]


def binom(a: int, b: int) -> int:
    """C(a, b) with the convention that a negative or oversized ``b`` gives 0."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def compositions(s: int, t: int) -> list[Composition]:
    """All ordered tuples of ``t`` positive integers summing to ``s``, in
    lexicographic order.  ``s = t = 0`` yields the single empty composition."""
    if s < 0 or t < 0:
        raise ValueError("arguments must be non-negative")
    if t == 0:
        return [()] if s == 0 else []
    if t > s:
        return []
    out: list[Composition] = []

    def extend(prefix: tuple[int, ...], left: int, parts: int) -> None:
        if parts == 1:
            out.append(prefix + (left,))
            return
        for first in range(1, left - parts + 2):
            extend(prefix + (first,), left - first, parts - 1)

    extend((), s, t)
    return out


def multinomial(parts: Iterable[int]) -> int:
    """Multinomial coefficient (sum of parts)! / prod(part!)."""
    parts = list(parts)
    total = sum(parts)
    out = 1
    acc = 0
    for p in parts:
        acc += p
        out *= math.comb(acc, p)
    assert acc == total
    return out


def count_from_bottom(b: PinnacleSet | Iterable[int]) -> int:
    """Number of pinnacle sets above a unique bottom ``b`` (same size, same top).

    Counts strictly increasing tuples ``(i_1, ..., i_{k-1}, b_k)`` with
    ``b_j <= i_j``; evaluated as a running-prefix-sum DP rather than the
    literal nested summation.
    """
    b = PinnacleSet(b)
    if not b:
        raise ValueError("bottom set must be nonempty")
    k = len(b)
    if k == 1:
        return 1
    top = b[-1]
    # ways[v] = number of admissible prefixes ending with value v.
    ways = [0] * top
    for v in range(b[0], top):
        ways[v] = 1
    for j in range(2, k):
        prefix = 0
        nxt = [0] * top
        for v in range(top):
            if v >= b[j - 1]:
                nxt[v] = prefix
            prefix += ways[v]
        ways = nxt
    return sum(ways[b[k - 2] :])


def pinn_closed_form(family: str, n: int, k: int | None = None) -> int:
    """Number of (size-``k``, or all) pinnacle sets of the ``n``-cycle or path."""
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        if k is None:
            return binom(n - 2, n // 2 - 1)
        if k < 1:
            raise ValueError("k must be positive")
        if k > n // 2:
            return 0
        return binom(n - 2, k - 1) - binom(n - 2, k - 2)
    if family == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        if k is None:
            return binom(n - 1, (n + 1) // 2 - 1)
        if k < 1:
            raise ValueError("k must be positive")
        if k > (n + 1) // 2:
            return 0
        return binom(n - 1, k - 1) - binom(n - 1, k - 2)
    raise ValueError(f"unknown family {family!r}")


def pinn_complete_bipartite(m: int, n: int) -> int:
    """K_{m,n} has exactly ``m`` pinnacle sets (the intervals [a, m+n])."""
    if not m >= n >= 1:
        raise ValueError("need m >= n >= 1")
    return m


def count_labelings_cycle_max_set(n: int, k: int) -> int:
    """Number of labelings of the ``n``-cycle whose pinnacle set is the top
    block ``{n-k+1, ..., n}``.

    Pinnacle positions are fixed by the gap sizes between consecutive
    pinnacles around the cycle (a composition of ``n - k`` into ``k``
    parts); non-pinnacle values drop into the gaps via a multinomial, each
    gap admits ``2^(size-1)`` valley-shaped arrangements, and rotations
    and pinnacle permutations contribute ``n * (k-1)!``.
    """
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n//2, got k={k}, n={n}")
    gap_sum = sum(multinomial(c) for c in compositions(n - k, k))
    return math.factorial(k - 1) * n * 2 ** (n - 2 * k) * gap_sum


def cycle_table(max_n: int = 11, max_k: int = 5) -> list[list[int]]:
    """Rows n = 3..max_n of size-k pinnacle-set counts for cycles, k = 1..max_k."""
    return [
        [pinn_closed_form("cycle", n, k) for k in range(1, max_k + 1)]
        for n in range(3, max_n + 1)
    ]


def path_table(max_n: int = 10, max_k: int = 5) -> list[list[int]]:
    """Rows n = 2..max_n of size-k pinnacle-set counts for paths, k = 1..max_k."""
    return [
        [pinn_closed_form("path", n, k) for k in range(1, max_k + 1)]
        for n in range(2, max_n + 1)
    ]
