"""Rewriting labelings to move between pinnacle sets.

Two mechanisms are implemented.  Swapping the labels ``p`` and ``p + 1``
when ``p`` is a pinnacle and ``p + 1`` is not replaces ``p`` by ``p + 1``
in the pinnacle set and changes nothing else; iterating such swaps walks
from any pinnacle set up to any componentwise-larger one.  The second
mechanism partitions the graph into ordered rooted trees (one per
pinnacle, in label order) and relabels tree blocks wholesale, which is
what allows the smallest pinnacle of a connected graph to be dropped.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .graphs import (
    Graph,
    Labeling,
    PinnacleSet,
    VertexSet,
    is_connected,
    pinnacles,
)

__all__ = [
    "OrderedTreePartition",
    "RootedTree",
    "dominance_steps",
    "dominance_transform",
    "drop_min_pinnacle",
    "labeling_from_otp",
    "otp_from_labeling",
    "otp_violations",
    "swap_down",
    "swap_up",
    "validate_otp",
]


def _check_canonical(g: Graph, lam: Labeling | Iterable[int]) -> Labeling:
    lam = lam if isinstance(lam, Labeling) else Labeling(lam)
    if len(lam) != g.n:
        raise ValueError(f"labeling has {len(lam)} entries for a {g.n}-vertex graph")
    if not lam.is_canonical:
        raise ValueError("label transforms require a labeling using exactly 1..n")
    return lam


def swap_up(
    g: Graph, lam: Labeling | Iterable[int], p: int
) -> tuple[Labeling, PinnacleSet]:
    """Exchange labels ``p`` and ``p + 1``; the pinnacle set gains ``p + 1`` for ``p``.

    Requires ``p`` to be a pinnacle, ``p + 1`` not to be one, and ``p < n``.
    No other label changes pinnacle status.
    """
    lam = _check_canonical(g, lam)
    pins = pinnacles(g, lam)
    if p not in pins:
        raise ValueError(f"{p} is not a pinnacle of this labeling")
    if p >= g.n:
        raise ValueError(f"label {p} has no successor among 1..{g.n}")
    if p + 1 in pins:
        raise ValueError(f"{p + 1} is already a pinnacle")
    new_lam = lam.swapped(p, p + 1)
    return new_lam, pinnacles(g, new_lam)


def swap_down(
    g: Graph, lam: Labeling | Iterable[int], p: int
) -> tuple[Labeling, PinnacleSet] | None:
    """Exchange labels ``p`` and ``p - 1`` when their vertices are non-adjacent.

    Requires ``p`` to be a pinnacle, ``p - 1`` not to be one, and
    ``p - 1 >= 2``.  Unlike the upward move this is conditional on the
    labeling: if the two vertices are adjacent the move is impossible for
    this labeling and ``None`` is returned.
    """
    lam = _check_canonical(g, lam)
    pins = pinnacles(g, lam)
    if p not in pins:
        raise ValueError(f"{p} is not a pinnacle of this labeling")
    if p - 1 < 2:
        raise ValueError("cannot swap below label 2")
    if p - 1 in pins:
        raise ValueError(f"{p - 1} is already a pinnacle")
    if g.adj(lam.vertex_of(p), lam.vertex_of(p - 1)):
        return None
    new_lam = lam.swapped(p, p - 1)
    return new_lam, pinnacles(g, new_lam)


def dominance_steps(
    g: Graph, lam: Labeling | Iterable[int], target: PinnacleSet | Iterable[int]
) -> list[tuple[Labeling, PinnacleSet]]:
    """The swap-by-swap walk from the current pinnacle set up to ``target``.

    ``target`` must have the same size, dominate the current set
    componentwise, and top out at ``n``.  Each step raises the pinnacle at
    the largest position still below its target by one; the returned list
    holds the state after every swap, so its length is the total label
    deficit.
    """
    lam = _check_canonical(g, lam)
    target = PinnacleSet(target)
    current = pinnacles(g, lam)
    if len(target) != len(current):
        raise ValueError(
            f"target size {len(target)} != current pinnacle count {len(current)}"
        )
    if not all(p <= q for p, q in zip(current, target)):
        raise ValueError(f"target {target} does not dominate {current}")
    if target[-1] != g.n:
        raise ValueError(f"target must contain n={g.n}")
    steps: list[tuple[Labeling, PinnacleSet]] = []
    while current != target:
        j = max(i for i in range(len(target)) if current[i] < target[i])
        lam, current = swap_up(g, lam, current[j])
        steps.append((lam, current))
    return steps


def dominance_transform(
    g: Graph, lam: Labeling | Iterable[int], target: PinnacleSet | Iterable[int]
) -> Labeling:
    """Final labeling of the walk performed by :func:`dominance_steps`."""
    steps = dominance_steps(g, lam, target)
    if not steps:
        return lam if isinstance(lam, Labeling) else Labeling(lam)
    return steps[-1][0]


@dataclass(frozen=True)
class RootedTree:
    """A rooted spanning tree of part of the graph, as a child-to-parent map."""

    root: int
    parent: Mapping[int, int] = field(default_factory=dict)

    @property
    def vertices(self) -> VertexSet:
        return frozenset(self.parent) | {self.root}

    @property
    def size(self) -> int:
        return len(self.parent) + 1

    def layers(self) -> list[list[int]]:
        """Vertices by tree distance from the root, each layer sorted."""
        children: dict[int, list[int]] = {v: [] for v in self.vertices}
        for child, par in self.parent.items():
            children[par].append(child)
        out = [[self.root]]
        while True:
            nxt = sorted(u for v in out[-1] for u in children[v])
            if not nxt:
                return out
            out.append(nxt)

    def rerooted(self, new_root: int) -> RootedTree:
        """The same tree hung from a different vertex."""
        if new_root not in self.vertices:
            raise ValueError(f"vertex {new_root} is not in this tree")
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for child, par in self.parent.items():
            adj[child].append(par)
            adj[par].append(child)
        parent: dict[int, int] = {}
        stack = [new_root]
        seen = {new_root}
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    parent[u] = v
                    stack.append(u)
        return RootedTree(new_root, parent)


@dataclass(frozen=True)
class OrderedTreePartition:
    """A sequence of rooted trees partitioning the vertices of a graph.

    The order matters: any vertex adjacent to a root must hang under the
    least-indexed such root, and the running totals of the tree sizes are
    what become pinnacles after relabeling.
    """

    trees: tuple[RootedTree, ...]

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(t.root for t in self.trees)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(t.size for t in self.trees)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        out: list[int] = []
        total = 0
        for t in self.trees:
            total += t.size
            out.append(total)
        return tuple(out)


def otp_from_labeling(
    g: Graph, lam: Labeling | Iterable[int]
) -> OrderedTreePartition:
    """Carve the graph into each pinnacle's region of influence.

    Roots are the pinnacle vertices in ascending label order.  A vertex
    adjacent to some root hangs under the least-indexed such root; every
    other vertex hangs under its smallest strictly-larger neighbour.  The
    running size totals never exceed the pinnacle labels.  Taking the
    *smallest* larger neighbour keeps the derivation idempotent: after
    relabeling the partition block by block, re-deriving it recovers the
    same tree sizes, because a vertex's in-tree parent always carries a
    smaller label than anything in a later block.
    """
    lam = _check_canonical(g, lam)
    pins = pinnacles(g, lam)
    roots = [lam.vertex_of(p) for p in pins]
    root_index = {r: i for i, r in enumerate(roots)}
    parent_of: dict[int, int] = {}
    tree_of: dict[int, int] = {}
    for r in roots:
        tree_of[r] = root_index[r]
    # Assign parents to non-roots; vertices adjacent to roots resolve
    # immediately, the rest climb toward larger labels.
    pending = [v for v in range(g.n) if v not in root_index]
    for v in pending:
        adjacent_roots = [root_index[u] for u in g.neighbors[v] if u in root_index]
        if adjacent_roots:
            parent_of[v] = roots[min(adjacent_roots)]
        else:
            bigger = [u for u in g.neighbors[v] if lam[u] > lam[v]]
            parent_of[v] = min(bigger, key=lambda u: lam[u])
    # Follow parent chains to find each vertex's tree.
    for v in pending:
        chain = [v]
        u = v
        while u not in tree_of:
            u = parent_of[u]
            chain.append(u)
        for w in chain:
            tree_of[w] = tree_of[u]
    trees = []
    for i, r in enumerate(roots):
        members = {v for v, t in tree_of.items() if t == i}
        trees.append(RootedTree(r, {v: parent_of[v] for v in members if v != r}))
    otp = OrderedTreePartition(tuple(trees))
    assert all(p <= q for p, q in zip(otp.prefix_sums, pins))
    return otp


def otp_violations(g: Graph, otp: OrderedTreePartition) -> list[str]:
    """Reasons the candidate fails to be an ordered tree partition (empty if valid)."""
    problems: list[str] = []
    trees = otp.trees
    if not trees and g.n > 0:
        return ["no trees in the partition"]
    seen: dict[int, int] = {}
    for i, t in enumerate(trees):
        for v in t.vertices:
            if not 0 <= v < g.n:
                problems.append(f"tree {i}: vertex {v} out of range")
            elif v in seen:
                problems.append(f"vertex {v} appears in trees {seen[v]} and {i}")
            else:
                seen[v] = i
        if t.root in t.parent:
            problems.append(f"tree {i}: root {t.root} has a parent")
        for child, par in t.parent.items():
            if par not in t.vertices:
                problems.append(f"tree {i}: parent of {child} lies outside the tree")
            elif not g.adj(child, par):
                problems.append(f"tree {i}: ({child}, {par}) is not a graph edge")
        # Connectivity and acyclicity: every vertex must reach the root.
        for v in t.vertices:
            trail = set()
            u = v
            while u != t.root and u in t.parent and u not in trail:
                trail.add(u)
                u = t.parent[u]
            if u != t.root:
                problems.append(f"tree {i}: vertex {v} does not reach root {t.root}")
                break
    if len(seen) != g.n:
        missing = sorted(set(range(g.n)) - set(seen))
        problems.append(f"vertices not covered by any tree: {missing}")
    roots = otp.roots
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if g.adj(roots[i], roots[j]):
                problems.append(f"roots {roots[i]} and {roots[j]} are adjacent")
    root_index = {r: i for i, r in enumerate(roots)}
    for v in range(g.n):
        if v in root_index:
            continue
        adjacent = [root_index[u] for u in g.neighbors[v] if u in root_index]
        if not adjacent:
            continue
        h = min(adjacent)
        if seen.get(v) != h or trees[h].parent.get(v) != roots[h]:
            problems.append(
                f"vertex {v} is adjacent to root {roots[h]} but is not its child"
            )
    return problems


def validate_otp(g: Graph, otp: OrderedTreePartition) -> bool:
    """Whether the candidate satisfies every ordered-tree-partition condition."""
    return not otp_violations(g, otp)


def _layered_block_labels(tree: RootedTree, block: list[int]) -> dict[int, int]:
    """Assign a label block to a tree: largest labels to the shallowest layer,
    ascending vertex index within a layer."""
    assert len(block) == tree.size
    out: dict[int, int] = {}
    top = len(block)
    for layer in tree.layers():
        chunk = block[top - len(layer) : top]
        top -= len(layer)
        for v, lab in zip(layer, chunk):
            out[v] = lab
    return out


def labeling_from_otp(g: Graph, otp: OrderedTreePartition) -> Labeling:
    """Label each tree with its block of the running totals.

    Tree ``i`` takes the labels ``p_{i-1}+1 .. p_i`` (``p`` the prefix
    sums), decreasing away from its root; the pinnacle set of the result
    is exactly the set of prefix sums.
    """
    problems = otp_violations(g, otp)
    if problems:
        raise ValueError("invalid ordered tree partition: " + "; ".join(problems))
    out = [0] * g.n
    lo = 0
    for t, hi in zip(otp.trees, otp.prefix_sums):
        for v, lab in _layered_block_labels(t, list(range(lo + 1, hi + 1))).items():
            out[v] = lab
        lo = hi
    lam = Labeling(out)
    assert pinnacles(g, lam) == PinnacleSet(otp.prefix_sums)
    return lam


def drop_min_pinnacle(g: Graph, lam: Labeling | Iterable[int]) -> Labeling:
    """On a connected graph, realize the current pinnacle set minus its minimum.

    The first tree of the ordered tree partition is re-hung from a vertex
    with an edge into a later tree, which demotes the smallest pinnacle;
    upward swaps then restore the remaining pinnacles to their original
    values.
    """
    lam = _check_canonical(g, lam)
    if not is_connected(g):
        raise ValueError("dropping a pinnacle requires a connected graph")
    pins = pinnacles(g, lam)
    if len(pins) < 2:
        raise ValueError("need at least two pinnacles to drop one")
    otp = otp_from_labeling(g, lam)
    base = labeling_from_otp(g, otp)
    first = otp.trees[0]
    rest = set(range(g.n)) - first.vertices
    boundary = sorted(
        v for v in first.vertices if any(u in rest for u in g.neighbors[v])
    )
    pivot = boundary[0]  # exists: g is connected
    rehung = first.rerooted(pivot)
    out = list(base.labels)
    for v, lab in _layered_block_labels(rehung, list(range(1, first.size + 1))).items():
        out[v] = lab
    demoted = Labeling(out)
    assert pinnacles(g, demoted) == PinnacleSet(otp.prefix_sums[1:])
    return dominance_transform(g, demoted, PinnacleSet(pins[1:]))
