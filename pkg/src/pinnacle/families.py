"""Closed-form membership tests for the solved graph families.

For complete graphs, complete bipartite graphs, cycles and paths, whether
a candidate set is a pinnacle set can be decided from the set alone.
Cycles and paths are governed by gap inequalities on the sorted elements:
writing the candidate as ``s_1 < ... < s_k`` with ``s_k = n``, a cycle
needs ``s_i >= 2i + 1`` and a path needs ``s_i >= 2i`` for ``i < k``.

This module also hosts the size-feasibility test for arbitrary graphs
(find an independent set of size ``k`` that reaches every vertex), which
is NP-complete in general, so it runs an exact exponential backtracking
behind a size guard.
"""

from __future__ import annotations

from collections.abc import Iterable

from .graphs import (
    Graph,
    PinnacleSet,
    VertexSet,
    connected_components,
    is_connected,
)
from .oracle import GuardExceeded

__all__ = [
    "Family",
    "ell",
    "has_size_k_pinnacle_set",
    "is_complete_bipartite_pinnacle_set",
    "is_complete_pinnacle_set",
    "is_cycle_pinnacle_set",
    "is_path_pinnacle_set",
    "is_pinnacle_set_of_family",
    "matches_family",
    "min_pinnacle_set_size",
    "parse_family",
]

# A family descriptor is a tagged tuple:
#   ("complete", n) | ("complete_bipartite", m, n) | ("cycle", n) | ("path", n)
Family = tuple

WITNESS_GUARD = 24


def ell(s: PinnacleSet | Iterable[int]) -> tuple[int, ...]:
    """Per element, how many smaller labels are *not* in the set.

    For a strictly increasing ``s`` this count at ``s_i`` is just
    ``s_i - i`` (1-based ``i``), independent of the ambient label range.
    """
    s = PinnacleSet(s)
    return tuple(x - i for i, x in enumerate(s, start=1))


def is_complete_pinnacle_set(n: int, s: PinnacleSet | Iterable[int]) -> bool:
    """On a complete graph only the top label ever sticks out: s must be {n}."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return PinnacleSet(s) == (n,)


def is_complete_bipartite_pinnacle_set(
    m: int, n: int, s: PinnacleSet | Iterable[int]
) -> bool:
    """Pinnacle sets of K_{m,n} (sides of size m >= n >= 1) are the intervals
    [a, m+n] with n+1 <= a <= m+n."""
    if not m >= n >= 1:
        raise ValueError("complete bipartite family needs m >= n >= 1")
    s = PinnacleSet(s)
    if not s:
        return False
    lo, hi = s[0], s[-1]
    if s != PinnacleSet.interval(lo, hi):
        return False
    return hi == m + n and n + 1 <= lo <= m + n


def is_cycle_pinnacle_set(n: int, s: PinnacleSet | Iterable[int]) -> bool:
    if n < 3:
        raise ValueError("cycle family needs n >= 3")
    s = PinnacleSet(s)
    k = len(s)
    if k == 0 or k > n // 2 or s[-1] != n:
        return False
    return all(s[i - 1] >= 2 * i + 1 for i in range(1, k))


def is_path_pinnacle_set(n: int, s: PinnacleSet | Iterable[int]) -> bool:
    """Gap test for paths; ``n = 1`` is an explicit extension with {1} only.

    The characterization proper assumes two or more vertices; a single
    vertex has one labeling, pinning the label 1 vacuously.
    """
    if n < 1:
        raise ValueError("path family needs n >= 1")
    s = PinnacleSet(s)
    if n == 1:
        return s == (1,)
    k = len(s)
    if k == 0 or k > (n + 1) // 2 or s[-1] != n:
        return False
    return all(s[i - 1] >= 2 * i for i in range(1, k))


def is_pinnacle_set_of_family(family: Family, s: PinnacleSet | Iterable[int]) -> bool:
    """Dispatch on a family descriptor tuple; see the per-family predicates."""
    kind = family[0]
    if kind == "complete":
        return is_complete_pinnacle_set(family[1], s)
    if kind == "complete_bipartite":
        return is_complete_bipartite_pinnacle_set(family[1], family[2], s)
    if kind == "cycle":
        return is_cycle_pinnacle_set(family[1], s)
    if kind == "path":
        return is_path_pinnacle_set(family[1], s)
    raise ValueError(f"unknown family {family!r}")


def family_graph(family: Family) -> Graph:
    """The concrete graph a family descriptor names."""
    kind = family[0]
    if kind == "complete":
        return Graph.complete(family[1])
    if kind == "complete_bipartite":
        return Graph.complete_bipartite(family[1], family[2])
    if kind == "cycle":
        return Graph.cycle(family[1])
    if kind == "path":
        return Graph.path(family[1])
    raise ValueError(f"unknown family {family!r}")


def matches_family(g: Graph, family: Family) -> bool:
    """Structural check that ``g`` is the named family member (up to vertex order)."""
    kind = family[0]
    if kind == "complete":
        n = family[1]
        return g.n == n and g.m == n * (n - 1) // 2
    if kind == "cycle":
        n = family[1]
        return (
            g.n == n >= 3
            and g.m == n
            and all(g.degree(v) == 2 for v in range(n))
            and is_connected(g)
        )
    if kind == "path":
        n = family[1]
        if g.n != n or g.m != n - 1 or not is_connected(g):
            return False
        degs = sorted(g.degree(v) for v in range(n))
        if n == 1:
            return degs == [0]
        if n == 2:
            return degs == [1, 1]
        return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])
    if kind == "complete_bipartite":
        m, n = family[1], family[2]
        if g.n != m + n or g.m != m * n:
            return False
        sides = _bipartition(g)
        if sides is None:
            return False
        return sorted(map(len, sides)) == sorted((m, n))
    raise ValueError(f"unknown family {family!r}")


def _bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return (
        {v for v, c in color.items() if c == 0},
        {v for v, c in color.items() if c == 1},
    )


def parse_family(text: str) -> Family:
    """Parse specs like ``cycle:8``, ``path:9``, ``complete:5``,
    ``complete_bipartite:3,2``."""
    kind, _, params = text.partition(":")
    kind = kind.strip()
    try:
        nums = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise ValueError(f"bad family parameters in {text!r}") from None
    if kind in ("complete", "cycle", "path") and len(nums) == 1:
        return (kind, nums[0])
    if kind == "complete_bipartite" and len(nums) == 2:
        return (kind, nums[0], nums[1])
    raise ValueError(f"cannot parse family {text!r}")


def min_pinnacle_set_size(g: Graph) -> int:
    """Smallest achievable pinnacle-set size: one per connected component."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    return len(connected_components(g))


def covering_independent_set(g: Graph, k: int) -> VertexSet | None:
    """An independent set of size ``k`` from which every vertex is reachable.

    Exact backtracking; such a set exists iff the graph has a size-``k``
    pinnacle set.  Vertices are tried in descending-degree order, which
    only affects speed, never the answer.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    comps = connected_components(g)
    if k < len(comps):
        return None
    comp_of = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    nbr_mask = [0] * g.n
    for v in range(g.n):
        for u in g.neighbors[v]:
            nbr_mask[v] |= 1 << u

    ncomp = len(comps)
    chosen: list[int] = []

    def feasible(idx: int, banned: int, comp_hits: list[int]) -> bool:
        # Prune on remaining supply, globally and per untouched component.
        supply = [0] * ncomp
        remaining = 0
        for j in range(idx, g.n):
            v = order[j]
            if not (banned >> v) & 1:
                remaining += 1
                supply[comp_of[v]] += 1
        if len(chosen) + remaining < k:
            return False
        return all(comp_hits[c] or supply[c] for c in range(ncomp))

    def search(idx: int, banned: int, comp_hits: list[int]) -> bool:
        if len(chosen) == k:
            return all(comp_hits)
        if idx == g.n or not feasible(idx, banned, comp_hits):
            return False
        v = order[idx]
        if not (banned >> v) & 1:
            chosen.append(v)
            comp_hits[comp_of[v]] += 1
            if search(idx + 1, banned | (1 << v) | nbr_mask[v], comp_hits):
                return True
            comp_hits[comp_of[v]] -= 1
            chosen.pop()
        return search(idx + 1, banned, comp_hits)

    if search(0, 0, [0] * ncomp):
        return frozenset(chosen)
    return None


def has_size_k_pinnacle_set(
    g: Graph, k: int, max_n_guard: int = WITNESS_GUARD
) -> VertexSet | None:
    """Witness independent set certifying a size-``k`` pinnacle set, or ``None``.

    The underlying decision problem is NP-complete, so the exact search is
    gated by a guard (default 24 vertices).
    """
    if g.n > max_n_guard:
        raise GuardExceeded(
            f"n={g.n} exceeds the witness-search guard {max_n_guard}; "
            "pass a larger max_n_guard explicitly to proceed"
        )
    return covering_independent_set(g, k)
