"""Constructive labelings (and graphs) realizing target pinnacle sets.

Every routine here mirrors an explicit construction: layered labelings
seeded at an independent set, disjoint-path and double-star graphs for
arbitrary target sets, and the interleaved labelings of cycles, paths and
complete bipartite graphs.  Each result is checked against
:func:`pinnacles` before it is returned, so a successful call is its own
certificate.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .families import (
    covering_independent_set,
    is_cycle_pinnacle_set,
    is_path_pinnacle_set,
)
from .graphs import (
    Graph,
    Labeling,
    PinnacleSet,
    bfs_layers,
    is_independent,
    pinnacles,
)

__all__ = [
    "RealizedInstance",
    "basic_labeling",
    "complete_bipartite_labeling",
    "cycle_labeling",
    "path_labeling",
    "realize_any_set",
    "realize_max_set",
]


@dataclass(frozen=True)
class RealizedInstance:
    """A graph, a labeling of it, and the pinnacle set they achieve."""

    graph: Graph
    labeling: Labeling
    claimed: PinnacleSet

    def __post_init__(self) -> None:
        got = pinnacles(self.graph, self.labeling)
        if got != self.claimed:
            raise ValueError(f"labeling realizes {got}, not the claimed {self.claimed}")


def basic_labeling(
    g: Graph, label_pool: Iterable[int], seeds: Iterable[int]
) -> Labeling:
    """Layered labeling: each BFS layer from the seeds takes the largest
    unused labels of the pool, seeds first.

    Within a layer, ascending vertex index receives ascending labels.  The
    seeds must be independent and must reach every vertex; the resulting
    pinnacle set is then the top ``len(seeds)`` labels among those used.
    """
    pool = sorted(label_pool)
    if len(set(pool)) != len(pool):
        raise ValueError("label pool must have distinct labels")
    if len(pool) < g.n:
        raise ValueError(f"pool of {len(pool)} labels cannot cover {g.n} vertices")
    seed_set = frozenset(seeds)
    if not is_independent(g, seed_set):
        raise ValueError("seeds must form an independent set")
    layers = bfs_layers(g, seed_set)
    out = [0] * g.n
    top = len(pool)
    for layer in layers:
        block = pool[top - len(layer) : top]
        top -= len(layer)
        for v, lab in zip(sorted(layer), block):
            out[v] = lab
    return Labeling(out)


def realize_any_set(
    s: PinnacleSet | Iterable[int], shape: str = "forest"
) -> RealizedInstance:
    """A graph on ``max(s)`` vertices whose pinnacle set is exactly ``s``.

    ``shape="forest"`` gives disjoint paths, one per element, with labels
    running consecutively along each path.  ``shape="tree"`` gives a
    double star (or a single vertex for ``s = {1}``); a tree is possible
    exactly when ``1 not in s`` or ``len(s) == 1``.
    """
    s = PinnacleSet(s)
    if not s:
        raise ValueError("target set must be nonempty")
    n = s[-1]
    k = len(s)
    if shape == "forest":
        edges = []
        labels = list(range(1, n + 1))
        prev = 0
        for hi in s:
            # One path per element, spanning labels prev+1 .. hi in order.
            edges.extend((v, v + 1) for v in range(prev, hi - 1))
            prev = hi
        return RealizedInstance(Graph(n, edges), Labeling(labels), s)
    if shape == "tree":
        if 1 in s and k >= 2:
            raise ValueError(
                "no connected graph has a pinnacle set of size >= 2 containing 1"
            )
        if n == 1:
            return RealizedInstance(Graph(1), Labeling([1]), s)
        # Two adjacent centers: x (label 1) carries the small pinnacles as
        # leaves, y (label n) carries every remaining label.
        x, y = 0, 1
        edges = [(x, y)]
        labels = [1, n]
        for lab in s[:-1]:
            edges.append((x, len(labels)))
            labels.append(lab)
        rest = sorted(set(range(2, n)) - set(s))
        for lab in rest:
            edges.append((y, len(labels)))
            labels.append(lab)
        return RealizedInstance(Graph(n, edges), Labeling(labels), s)
    raise ValueError(f"unknown shape {shape!r}")


def realize_max_set(g: Graph, k: int) -> Labeling | None:
    """A labeling whose pinnacle set is the top-``k`` block ``{n-k+1, ..., n}``.

    Exists iff ``g`` has an independent set of size ``k`` reaching every
    vertex; in that case a layered labeling seeded there does the job.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    seeds = covering_independent_set(g, k)
    if seeds is None:
        return None
    lam = basic_labeling(g, range(1, g.n + 1), seeds)
    assert pinnacles(g, lam) == PinnacleSet.max_set(g.n, k)
    return lam


def _pop_below(pool: list[int], limit: int) -> int:
    # The gap inequalities guarantee supply; the front of the sorted pool
    # is always small enough.
    assert pool and pool[0] < limit
    return pool.pop(0)


def cycle_labeling(n: int, s: PinnacleSet | Iterable[int]) -> Labeling:
    """Labeling of the ``n``-cycle with pinnacle set ``s``.

    Walking the cycle from the vertex labeled ``n``: pinnacles sit on
    every second vertex, each followed by a fresh small filler, and the
    leftover labels close the cycle in increasing order.  Valid exactly
    when ``s_k = n``, ``k <= n // 2`` and ``s_i >= 2i + 1`` for ``i < k``.
    """
    s = PinnacleSet(s)
    if not is_cycle_pinnacle_set(n, s):
        raise ValueError(f"{s} is not a pinnacle set of the {n}-cycle")
    k = len(s)
    out = [0] * n
    out[n - 1] = n
    pool = sorted(set(range(1, n + 1)) - set(s))
    if k >= 2:
        # Two fillers flank the first pinnacle; each later pinnacle needs one.
        fillers = [_pop_below(pool, s[0]), _pop_below(pool, s[0])]
        fillers += [_pop_below(pool, s[j - 1]) for j in range(2, k)]
        for j in range(1, k):
            out[2 * j - 1] = s[j - 1]
        for i, x in enumerate(fillers):
            out[2 * i] = x
    for v in range(n):
        if out[v] == 0:
            out[v] = pool.pop(0)
    lam = Labeling(out)
    assert pinnacles(Graph.cycle(n), lam) == s
    return lam


def path_labeling(n: int, s: PinnacleSet | Iterable[int]) -> Labeling:
    """Labeling of the ``n``-path with pinnacle set ``s``.

    Same interleaving as on the cycle, anchored at the left end; the path
    admits ``s`` exactly when ``s_k = n``, ``k <= ceil(n / 2)`` and
    ``s_i >= 2i`` for ``i < k`` (with the single-vertex path pinned at 1).
    """
    s = PinnacleSet(s)
    if not is_path_pinnacle_set(n, s):
        raise ValueError(f"{s} is not a pinnacle set of the {n}-path")
    if n == 1:
        return Labeling([1])
    k = len(s)
    out = [0] * n
    out[n - 1] = n
    pool = sorted(set(range(1, n + 1)) - set(s))
    for j in range(1, k):
        out[2 * j - 2] = s[j - 1]
    for i in range(1, k):
        out[2 * i - 1] = _pop_below(pool, s[i - 1])
    for v in range(n):
        if out[v] == 0:
            out[v] = pool.pop(0)
    lam = Labeling(out)
    assert pinnacles(Graph.path(n), lam) == s
    return lam


def complete_bipartite_labeling(m: int, n: int, k_start: int) -> Labeling:
    """Labeling of K_{m,n} whose pinnacle set is the interval [k_start, m+n].

    Side of size ``m`` on vertices ``0..m-1``, side of size ``n`` on
    ``m..m+n-1``.  The first ``k_start - n - 1`` large-side vertices take
    the smallest labels, the other side takes the middle band, and the
    remaining large-side vertices take the top interval, which is exactly
    the pinnacle set.
    """
    if not m >= n >= 1:
        raise ValueError("need m >= n >= 1")
    if not n + 1 <= k_start <= m + n:
        raise ValueError(f"need n+1 <= k_start <= m+n, got {k_start}")
    shift = k_start - n  # how many large-side vertices keep small labels, plus one
    out = [0] * (m + n)
    for j in range(1, shift):
        out[j - 1] = j
    for j in range(shift, m + 1):
        out[j - 1] = n + j
    for i, lab in enumerate(range(shift, n + shift)):
        out[m + i] = lab
    lam = Labeling(out)
    assert pinnacles(Graph.complete_bipartite(m, n), lam) == PinnacleSet.interval(
        k_start, m + n
    )
    return lam
