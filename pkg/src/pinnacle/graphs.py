"""Simple undirected graphs, vertex labelings, and pinnacle computation.

Vertices are the integers ``0 .. n-1``.  Labels are distinct positive
integers; a *canonical* labeling of an ``n``-vertex graph uses each label
in ``1 .. n`` exactly once.  A vertex's label is a **pinnacle** of the
labeled graph when it is strictly larger than the labels of all of the
vertex's neighbours; labels of isolated vertices qualify vacuously, so
the largest label in use is always a pinnacle.
"""

from __future__ import annotations

from collections.abc import Iterable

__all__ = [
    "Edge",
    "Graph",
    "Labeling",
    "PinnacleSet",
    "VertexSet",
    "bfs_layers",
    "connected_components",
    "delete_edge",
    "is_connected",
    "is_independent",
    "pinnacles",
]

Edge = tuple[int, int]
VertexSet = frozenset[int]


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    Both the edge set and per-vertex neighbour lists are stored; neighbour
    lists are sorted by ascending vertex index so that every traversal in
    this package is deterministic.
    """

    __slots__ = ("n", "edges", "neighbors")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[e[0]].append(e[1])
            nbrs[e[1]].append(e[0])
        self.n = n
        self.edges = frozenset(seen)
        self.neighbors = tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def adj(self, u: int, v: int) -> bool:
        """Whether ``u`` and ``v`` are adjacent (symmetric)."""
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    # Named constructors for the families studied here.

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> Graph:
        """K_{m,n} with one side on ``0..m-1`` and the other on ``m..m+n-1``."""
        return cls(m + n, [(u, v) for u in range(m) for v in range(m, m + n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])


class Labeling:
    """Distinct positive labels assigned to vertices, indexed by vertex.

    ``lam[v]`` is the label of vertex ``v``.  Canonical labelings use the
    labels ``1 .. n`` exactly once; a few constructions label subgraphs
    from larger pools, which is why arbitrary distinct labels are allowed.
    """

    __slots__ = ("labels",)

    def __init__(self, labels: Iterable[int]) -> None:
        t = tuple(labels)
        for x in t:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"labels must be positive integers, got {x!r}")
        if len(set(t)) != len(t):
            raise ValueError("labels must be distinct")
        self.labels = t

    @classmethod
    def identity(cls, n: int) -> Labeling:
        """Vertex ``v`` gets label ``v + 1``."""
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Labeling({list(self.labels)})"

    @property
    def is_canonical(self) -> bool:
        """True when the labels are exactly ``1 .. n``."""
        return sorted(self.labels) == list(range(1, len(self.labels) + 1))

    def vertex_of(self, label: int) -> int:
        """Vertex carrying ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"label {label} not used by this labeling") from None

    def swapped(self, a: int, b: int) -> Labeling:
        """New labeling with labels ``a`` and ``b`` exchanged between their vertices."""
        va, vb = self.vertex_of(a), self.vertex_of(b)
        out = list(self.labels)
        out[va], out[vb] = b, a
        return Labeling(out)


class PinnacleSet(tuple):
    """A set of labels, kept as a strictly increasing tuple of positive ints.

    Being a tuple subclass, instances sort, hash and compare like plain
    tuples, which keeps catalogs and poset element lists deterministic.
    """

    __slots__ = ()

    def __new__(cls, labels: Iterable[int] = ()) -> PinnacleSet:
        items = sorted(labels)
        for x in items:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"labels must be positive integers, got {x!r}")
        for a, b in zip(items, items[1:]):
            if a == b:
                raise ValueError(f"duplicate label {a}")
        return super().__new__(cls, items)

    @classmethod
    def interval(cls, lo: int, hi: int) -> PinnacleSet:
        """The contiguous block ``{lo, lo+1, ..., hi}`` (requires ``lo <= hi``)."""
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        return cls(range(lo, hi + 1))

    @classmethod
    def max_set(cls, n: int, k: int) -> PinnacleSet:
        """The top size-``k`` set ``{n-k+1, ..., n}`` over labels ``1 .. n``."""
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        return cls(range(n - k + 1, n + 1))

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(map(str, self))


def _as_labeling(lam: Labeling | Iterable[int]) -> Labeling:
    return lam if isinstance(lam, Labeling) else Labeling(lam)


def _check_labeling(g: Graph, lam: Labeling | Iterable[int]) -> Labeling:
    lam = _as_labeling(lam)
    if g.n == 0:
        raise ValueError("labeling operations require at least one vertex")
    if len(lam) != g.n:
        raise ValueError(f"labeling has {len(lam)} entries for a {g.n}-vertex graph")
    return lam


def _check_vertices(g: Graph, vertices: Iterable[int]) -> VertexSet:
    s = frozenset(vertices)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"vertex {v!r} out of range for n={g.n}")
    return s


def pinnacles(g: Graph, lam: Labeling | Iterable[int]) -> PinnacleSet:
    """Labels strictly greater than every neighbour's label, sorted ascending.

    Isolated vertices' labels always qualify, so the result is nonempty and
    contains the largest label in use.
    """
    lam = _check_labeling(g, lam)
    labels = lam.labels
    out = [
        labels[v]
        for v in range(g.n)
        if all(labels[u] < labels[v] for u in g.neighbors[v])
    ]
    return PinnacleSet(out)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """Whether no two of the given vertices are adjacent in ``g``."""
    s = _check_vertices(g, vertices)
    return all(u not in s for v in s for u in g.neighbors[v] if u > v)


def connected_components(g: Graph) -> list[VertexSet]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out: list[VertexSet] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for u in g.neighbors[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bfs_layers(g: Graph, seeds: Iterable[int]) -> list[VertexSet]:
    """Partition of the vertices by distance from the seed set.

    Layer 0 is the seed set itself; layer ``i`` holds the neighbours of
    layer ``i-1`` not seen earlier.  Raises if a vertex is unreachable
    from every seed, or if the seed set is empty.
    """
    seed_set = _check_vertices(g, seeds)
    if not seed_set:
        raise ValueError("seed set must be nonempty")
    layers = [seed_set]
    reached = set(seed_set)
    frontier = seed_set
    while frontier:
        nxt = {
            u for v in frontier for u in g.neighbors[v] if u not in reached
        }
        if not nxt:
            break
        reached |= nxt
        layers.append(frozenset(nxt))
        frontier = nxt
    if len(reached) != g.n:
        missing = sorted(set(range(g.n)) - reached)
        raise ValueError(f"vertices unreachable from the seeds: {missing}")
    return layers


def delete_edge(g: Graph, e: Edge) -> Graph:
    """The same graph with edge ``e`` removed."""
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in g.edges:
        raise ValueError(f"edge {e} not present")
    return Graph(g.n, g.edges - {key})
