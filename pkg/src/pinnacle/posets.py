"""The dominance order on same-size pinnacle sets.

Sorted size-``k`` pinnacle sets are compared componentwise; under this
order they always form a join semilattice with the top block
``{n-k+1, ..., n}`` as maximum, and whenever the minimal element is
unique the whole poset is a distributive lattice.  This module builds the
poset explicitly (elements plus cover relation), evaluates joins and
meets, reports the lattice diagnostics, and computes the known minimum
elements.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .families import Family, is_pinnacle_set_of_family, matches_family
from .graphs import Graph, PinnacleSet, connected_components, is_connected
from .oracle import DEFAULT_GUARD, enumerate_pinnacle_sets

__all__ = [
    "DominancePoset",
    "LatticeReport",
    "bottom_elements",
    "build_poset",
    "dominates",
    "family_bottom",
    "join",
    "lattice_report",
    "meet",
    "min_by_components",
    "min_size2",
    "remnant_sizes",
]


def dominates(p: PinnacleSet | Iterable[int], q: PinnacleSet | Iterable[int]) -> bool:
    """Whether ``p <= q`` componentwise on the sorted elements (same size)."""
    p, q = PinnacleSet(p), PinnacleSet(q)
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return all(a <= b for a, b in zip(p, q))


@dataclass(frozen=True)
class DominancePoset:
    """All size-``k`` pinnacle sets of a graph under componentwise order.

    ``elements`` is sorted lexicographically; ``covers`` is the transitive
    reduction of the order, as index pairs ``(lower, upper)``.
    """

    n: int
    k: int
    elements: tuple[PinnacleSet, ...]
    covers: tuple[tuple[int, int], ...]

    def __contains__(self, s) -> bool:
        return PinnacleSet(s) in self.elements


def _reduce(elements: tuple[PinnacleSet, ...]) -> tuple[tuple[int, int], ...]:
    m = len(elements)
    le = [
        [i != j and dominates(elements[i], elements[j]) for j in range(m)]
        for i in range(m)
    ]
    covers = []
    for i in range(m):
        for j in range(m):
            if le[i][j] and not any(le[i][z] and le[z][j] for z in range(m)):
                covers.append((i, j))
    return tuple(covers)


def build_poset(
    g: Graph,
    k: int,
    source: str | Family = "oracle",
    max_n_guard: int = DEFAULT_GUARD,
) -> DominancePoset:
    """Assemble the poset of size-``k`` pinnacle sets of ``g``.

    ``source="oracle"`` enumerates labelings exhaustively (guarded).  A
    family descriptor instead generates elements from that family's
    closed-form characterization, after checking that ``g`` really is the
    named graph.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    if source == "oracle":
        elements = tuple(
            sorted(enumerate_pinnacle_sets(g, max_n_guard).sets_of_size(k))
        )
    else:
        if not matches_family(g, source):
            raise ValueError(f"graph does not match the family {source!r}")
        n = g.n
        elements = tuple(
            sorted(
                s
                for tail in combinations(range(1, n), k - 1)
                for s in (PinnacleSet(tail + (n,)),)
                if is_pinnacle_set_of_family(source, s)
            )
        )
    if elements:
        # The componentwise-maximal block is always present and on top.
        assert elements[-1] == PinnacleSet.max_set(g.n, k)
    return DominancePoset(n=g.n, k=k, elements=elements, covers=_reduce(elements))


def join(p: PinnacleSet | Iterable[int], q: PinnacleSet | Iterable[int]) -> PinnacleSet:
    """Componentwise maximum; for two pinnacle sets of a graph this is
    their least upper bound and is again a pinnacle set."""
    p, q = PinnacleSet(p), PinnacleSet(q)
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    return PinnacleSet(max(a, b) for a, b in zip(p, q))


def meet(
    poset: DominancePoset,
    p: PinnacleSet | Iterable[int],
    q: PinnacleSet | Iterable[int],
) -> PinnacleSet | None:
    """Greatest lower bound of ``p`` and ``q`` among the poset elements.

    When the componentwise minimum is itself an element it is returned
    (that happens throughout any poset with a unique bottom); otherwise
    the unique greatest element below both is returned if one exists, and
    ``None`` certifies the failure of the meet at this pair.
    """
    p, q = PinnacleSet(p), PinnacleSet(q)
    for s in (p, q):
        if s not in poset.elements:
            raise ValueError(f"{s} is not an element of this poset")
    lower = [e for e in poset.elements if dominates(e, p) and dominates(e, q)]
    greatest = [e for e in lower if all(dominates(o, e) for o in lower)]
    return greatest[0] if greatest else None


def bottom_elements(poset: DominancePoset) -> list[PinnacleSet]:
    """All minimal elements, sorted."""
    elems = poset.elements
    return [
        e
        for e in elems
        if not any(o != e and dominates(o, e) for o in elems)
    ]


@dataclass(frozen=True)
class LatticeReport:
    is_join_semilattice: bool
    has_minimum: bool
    is_lattice: bool
    is_distributive: bool


def lattice_report(poset: DominancePoset) -> LatticeReport:
    """Diagnostics computed exhaustively from the element list.

    Joins and meets are searched among the elements (no closed form is
    assumed); distributivity checks the median identity over all triples.
    """
    elems = poset.elements
    m = len(elems)
    le = [[dominates(elems[i], elems[j]) for j in range(m)] for i in range(m)]

    def lub(i: int, j: int) -> int | None:
        ups = [z for z in range(m) if le[i][z] and le[j][z]]
        least = [z for z in ups if all(le[z][o] for o in ups)]
        return least[0] if least else None

    def glb(i: int, j: int) -> int | None:
        downs = [z for z in range(m) if le[z][i] and le[z][j]]
        greatest = [z for z in downs if all(le[o][z] for o in downs)]
        return greatest[0] if greatest else None

    joins = [[lub(i, j) for j in range(m)] for i in range(m)]
    meets = [[glb(i, j) for j in range(m)] for i in range(m)]
    is_join = all(joins[i][j] is not None for i in range(m) for j in range(i, m))
    is_meet = all(meets[i][j] is not None for i in range(m) for j in range(i, m))
    has_minimum = len(bottom_elements(poset)) == 1
    is_lattice = is_join and is_meet
    distributive = is_lattice
    if is_lattice:
        for i in range(m):
            for j in range(m):
                for z in range(m):
                    if meets[i][joins[j][z]] != joins[meets[i][j]][meets[i][z]]:
                        distributive = False
                        break
                if not distributive:
                    break
            if not distributive:
                break
    return LatticeReport(
        is_join_semilattice=is_join,
        has_minimum=has_minimum,
        is_lattice=is_lattice,
        is_distributive=distributive,
    )


def min_by_components(g: Graph) -> PinnacleSet:
    """Minimum pinnacle set when the size equals the component count.

    Sorting the component sizes ascending, the running totals form the
    componentwise-least pinnacle set of that size.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    sizes = sorted(len(c) for c in connected_components(g))
    totals = []
    acc = 0
    for h in sizes:
        acc += h
        totals.append(acc)
    return PinnacleSet(totals)


def remnant_sizes(g: Graph) -> tuple[int, ...]:
    """Per vertex: the largest component size left after removing the vertex
    and all its neighbours (0 when nothing remains)."""
    out = []
    for v in range(g.n):
        banned = set(g.neighbors[v]) | {v}
        alive = [u for u in range(g.n) if u not in banned]
        best = 0
        seen: set[int] = set()
        for start in alive:
            if start in seen:
                continue
            comp = 0
            stack = [start]
            seen.add(start)
            while stack:
                w = stack.pop()
                comp += 1
                for u in g.neighbors[w]:
                    if u not in banned and u not in seen:
                        seen.add(u)
                        stack.append(u)
            best = max(best, comp)
        out.append(best)
    return tuple(out)


def min_size2(g: Graph) -> PinnacleSet | None:
    """Minimum size-2 pinnacle set of a connected graph, or ``None`` for
    complete graphs (which admit none).

    The second-largest achievable low pinnacle is governed by how much of
    the graph survives deleting a closed neighbourhood: the minimum is
    ``{n - r, n}`` where ``r`` is the largest remnant over all vertices.
    """
    if not is_connected(g):
        raise ValueError("minimum size-2 computation requires a connected graph")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if g.m == g.n * (g.n - 1) // 2:
        return None
    r = max(remnant_sizes(g))
    return PinnacleSet((g.n - r, g.n))


def family_bottom(family: str, n: int, k: int) -> PinnacleSet:
    """Minimum size-``k`` pinnacle set of the ``n``-cycle or ``n``-path.

    Cycles bottom out at ``{3, 5, ..., 2k-1, n}`` (needs ``n >= 2k``),
    paths at ``{2, 4, ..., 2k-2, n}`` (needs ``n >= 2k-1``); for ``k = 1``
    both are ``{n}``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        if n < 2 * k:
            raise ValueError(f"the {n}-cycle has no size-{k} pinnacle set")
        if k == 1:
            return PinnacleSet((n,))
        return PinnacleSet(tuple(range(3, 2 * k, 2)) + (n,))
    if family == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        if n < 2 * k - 1:
            raise ValueError(f"the {n}-path has no size-{k} pinnacle set")
        if k == 1:
            return PinnacleSet((n,))
        return PinnacleSet(tuple(range(2, 2 * k - 1, 2)) + (n,))
    raise ValueError(f"unknown family {family!r}")
